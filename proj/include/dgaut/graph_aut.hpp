#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "dgaut/graph.hpp"

namespace dgaut {

inline constexpr int kDefaultAutCap = 64;

namespace detail {

/// Iterated neighborhood coloring: vertices start colored by degree and are
/// split further by the multiset of neighbor colors until stable. Any
/// automorphism preserves the final colors.
inline std::vector<int> refine_colors(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> color(n, 0);
    {
        std::map<int, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(g.degree(v), 0);
        int next = 0;
        for (auto& [deg, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) color[v] = rank[g.degree(v)];
    }
    int n_colors = 0;
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> rank;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            around.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            sig[v] = {color[v], std::move(around)};
            rank.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
        if (next == n_colors) break;
        n_colors = next;
    }
    return color;
}

}  // namespace detail

/// All automorphisms of g, sorted by image vector (identity first), found by
/// backtracking over color-respecting assignments with adjacency pruning.
/// `cap` bounds both the vertex count and the number of automorphisms.
inline std::vector<VertexPermutation> automorphisms(const Graph& g, int cap = kDefaultAutCap) {
    const int n = g.n_vertices();
    if (n > cap)
        throw ResourceError("automorphisms: " + std::to_string(n) +
                            " vertices exceeds cap " + std::to_string(cap));
    if (n == 0) return {VertexPermutation{}};

    std::vector<int> color = detail::refine_colors(g);

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

    // Vertices grouped by color, for candidate enumeration.
    std::vector<std::vector<int>> by_color;
    {
        int n_colors = *std::max_element(color.begin(), color.end()) + 1;
        by_color.resize(n_colors);
        for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    }

    // Assignment order: start in the smallest color class, then greedily pick
    // vertices with the most already-ordered neighbors so adjacency pruning
    // bites early.
    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        auto class_size = [&](int v) { return by_color[color[v]].size(); };
        int first = 0;
        for (int v = 1; v < n; ++v)
            if (class_size(v) < class_size(first)) first = v;
        order.push_back(first);
        placed[first] = 1;
        std::vector<int> anchored(n, 0);
        for (int step = 1; step < n; ++step) {
            for (int w : g.neighbors(order.back())) ++anchored[w];
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || anchored[v] > anchored[best] ||
                    (anchored[v] == anchored[best] && class_size(v) < class_size(best)))
                    best = v;
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }

    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::vector<VertexPermutation> found;

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (found.size() >= static_cast<size_t>(cap))
                throw ResourceError("automorphisms: more than " + std::to_string(cap) +
                                    " automorphisms");
            found.push_back(VertexPermutation{img});
            return;
        }
        int v = order[k];
        for (int w : by_color[color[v]]) {
            if (used[w]) continue;
            bool ok = true;
            for (int t = 0; t < k && ok; ++t) {
                int u = order[t];
                if (adj[v][u] != adj[w][img[u]]) ok = false;
            }
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            self(self, k + 1);
            img[v] = -1;
            used[w] = 0;
        }
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace dgaut
