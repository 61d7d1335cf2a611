#pragma once

#include <optional>
#include <vector>

#include "dgaut/errors.hpp"
#include "dgaut/group_table.hpp"

namespace dgaut {

inline constexpr int kDefaultIsoCap = 16;

struct IsoResult {
    bool isomorphic = false;
    // When isomorphic: image[i] in b for each element i of a.
    std::optional<std::vector<int>> witness;
};

namespace detail {

/// Greedy generating set for g: repeatedly adjoin an element outside the
/// current closure. For a group of order n this yields <= log2(n) generators.
inline std::vector<int> generating_set(const GroupTable& g) {
    std::vector<char> in_closure(g.n, 0);
    in_closure[0] = 1;
    int closure_size = 1;
    std::vector<int> gens;
    while (closure_size < g.n) {
        int pick = -1;
        for (int i = 1; i < g.n; ++i)
            if (!in_closure[i]) {
                pick = i;
                break;
            }
        gens.push_back(pick);
        // close under products with the new generator
        std::vector<int> frontier{pick};
        in_closure[pick] = 1;
        ++closure_size;
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int y = 0; y < g.n; ++y) {
                if (!in_closure[y]) continue;
                for (int p : {g.at(x, y), g.at(y, x)}) {
                    if (!in_closure[p]) {
                        in_closure[p] = 1;
                        ++closure_size;
                        frontier.push_back(p);
                    }
                }
            }
        }
    }
    return gens;
}

/// Given images of the generators, extend to the full group by closing
/// under multiplication; returns the map or nullopt if it is inconsistent.
inline std::optional<std::vector<int>> extend_by_closure(const GroupTable& a,
                                                         const GroupTable& b,
                                                         const std::vector<int>& gens,
                                                         const std::vector<int>& gen_images) {
    std::vector<int> image(a.n, -1);
    std::vector<char> hit(b.n, 0);
    image[0] = 0;
    hit[0] = 1;
    std::vector<int> known{0}, worklist;
    auto assign = [&](int x, int y) -> bool {
        if (image[x] == -1) {
            if (hit[y]) return false;  // not injective
            image[x] = y;
            hit[y] = 1;
            known.push_back(x);
            worklist.push_back(x);
            return true;
        }
        return image[x] == y;
    };
    for (size_t k = 0; k < gens.size(); ++k)
        if (!assign(gens[k], gen_images[k])) return std::nullopt;
    // Each popped element is paired with everything known at pop time;
    // later additions pair with it when they are popped themselves.
    while (!worklist.empty()) {
        int x = worklist.back();
        worklist.pop_back();
        for (size_t i = 0; i < known.size(); ++i) {
            int y = known[i];
            if (!assign(a.at(x, y), b.at(image[x], image[y]))) return std::nullopt;
            if (!assign(a.at(y, x), b.at(image[y], image[x]))) return std::nullopt;
        }
    }
    if (static_cast<int>(known.size()) != a.n) return std::nullopt;
    // full homomorphism check
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (image[a.at(i, j)] != b.at(image[i], image[j])) return std::nullopt;
    return image;
}

}  // namespace detail

/// Decides whether two multiplication tables present isomorphic groups.
/// Backtracks over images of a greedy generating set, restricted to
/// elements of equal order. `cap` bounds the group order.
inline IsoResult is_isomorphic(const GroupTable& a, const GroupTable& b,
                               int cap = kDefaultIsoCap) {
    if (a.n > cap || b.n > cap)
        throw ResourceError("group order exceeds isomorphism cap " + std::to_string(cap));
    if (a.n != b.n) return {};
    if (order_profile(a) != order_profile(b)) return {};
    if (a.n == 1) return {true, std::vector<int>{0}};

    std::vector<int> gens = detail::generating_set(a);
    std::vector<int> orders_b(b.n);
    for (int i = 0; i < b.n; ++i) orders_b[i] = order_of(b, i);

    std::vector<int> gen_images(gens.size(), -1);
    IsoResult result;
    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == gens.size()) {
            auto image = detail::extend_by_closure(a, b, gens, gen_images);
            if (image) {
                result = {true, std::move(*image)};
                return true;
            }
            return false;
        }
        int want = order_of(a, gens[k]);
        for (int cand = 1; cand < b.n; ++cand) {
            if (orders_b[cand] != want) continue;
            gen_images[k] = cand;
            if (self(self, k + 1)) return true;
        }
        gen_images[k] = -1;
        return false;
    };
    rec(rec, 0);
    return result;
}

}  // namespace dgaut
