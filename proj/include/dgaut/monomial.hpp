#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgaut/generators.hpp"

namespace dgaut {

/// A normalized monomial: factors (generator index, exponent) with strictly
/// increasing generator indices, positive exponents, and exponent one on
/// odd-degree generators. The empty factor list is the unit monomial.
class Monomial {
  public:
    using Factor = std::pair<int, int>;

    Monomial() = default;

    /// Builds from an already normalized factor list (internal fast path).
    static Monomial from_sorted(std::vector<Factor> factors) {
        Monomial m;
        m.factors_ = std::move(factors);
        return m;
    }

    static Monomial unit() { return Monomial{}; }

    static Monomial generator(int g) { return from_sorted({{g, 1}}); }

    static Monomial power(int g, int e) {
        if (e == 0) return unit();
        return from_sorted({{g, e}});
    }

    bool is_unit() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }
    size_t n_factors() const { return factors_.size(); }

    int exponent_of(int g) const {
        for (const auto& [gen, e] : factors_)
            if (gen == g) return e;
        return 0;
    }

    int degree(const GeneratorTable& table) const {
        int d = 0;
        for (const auto& [g, e] : factors_) d += table.degree(g) * e;
        return d;
    }

    bool is_odd(const GeneratorTable& table) const { return degree(table) % 2 != 0; }

    /// Leibniz split: the leading factor and the remaining tail monomial.
    Factor first_factor() const { return factors_.front(); }
    Monomial tail() const {
        return from_sorted({factors_.begin() + 1, factors_.end()});
    }

    std::string str(const GeneratorTable& table) const {
        if (is_unit()) return "1";
        std::string out;
        for (const auto& [g, e] : factors_) {
            if (!out.empty()) out += ' ';
            out += table.name(g);
            if (e != 1) out += '^' + std::to_string(e);
        }
        return out;
    }

    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<Factor> factors_;
};

/// Result of normalizing a product of generator powers: sign in {-1, 0, +1}
/// and the sorted monomial (unit when sign is zero).
struct SignedMonomial {
    int sign = 1;
    Monomial mono;
};

/// Sorts an arbitrary factor list into canonical order, tracking the sign
/// produced by transposing odd-degree factors. A repeated odd generator
/// yields sign zero. Zero exponents are dropped.
inline SignedMonomial normalize_product(const GeneratorTable& table,
                                        std::span<const Monomial::Factor> factors) {
    std::vector<Monomial::Factor> fs;
    fs.reserve(factors.size());
    for (const auto& [g, e] : factors) {
        if (g < 0 || g >= table.size())
            throw ValidationError("normalize_product: generator index out of range");
        if (e < 0) throw ValidationError("normalize_product: negative exponent");
        if (e == 0) continue;
        if (table.is_odd(g) && e > 1) return {0, Monomial::unit()};
        fs.emplace_back(g, e);
    }

    // Count transpositions of odd-degree factors needed by the sort. Only
    // odd-odd swaps contribute a sign; a repeated odd generator kills the
    // product outright.
    long flips = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (!table.is_odd(fs[i].first)) continue;
        for (size_t j = i + 1; j < fs.size(); ++j) {
            if (!table.is_odd(fs[j].first)) continue;
            if (fs[i].first == fs[j].first) return {0, Monomial::unit()};
            if (fs[i].first > fs[j].first) ++flips;
        }
    }

    std::stable_sort(fs.begin(), fs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Monomial::Factor> merged;
    for (const auto& [g, e] : fs) {
        if (!merged.empty() && merged.back().first == g) {
            if (table.is_odd(g)) return {0, Monomial::unit()};
            merged.back().second += e;
        } else {
            merged.emplace_back(g, e);
        }
    }
    return {flips % 2 == 0 ? 1 : -1, Monomial::from_sorted(std::move(merged))};
}

/// Merges two normalized monomials, returning the Koszul sign and the
/// combined monomial. Sign zero means an odd generator squared.
inline SignedMonomial merge_monomials(const GeneratorTable& table, const Monomial& a,
                                      const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();

    // odd_suffix[i] = number of odd-degree factors of a at positions >= i.
    std::vector<int> odd_suffix(fa.size() + 1, 0);
    for (size_t i = fa.size(); i-- > 0;)
        odd_suffix[i] = odd_suffix[i + 1] + (table.is_odd(fa[i].first) ? 1 : 0);

    std::vector<Monomial::Factor> out;
    out.reserve(fa.size() + fb.size());
    size_t i = 0, j = 0;
    long flips = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first < fb[j].first) {
            out.push_back(fa[i++]);
        } else if (fa[i].first > fb[j].first) {
            if (table.is_odd(fb[j].first)) flips += odd_suffix[i];
            out.push_back(fb[j++]);
        } else {
            if (table.is_odd(fa[i].first)) return {0, Monomial::unit()};
            out.emplace_back(fa[i].first, fa[i].second + fb[j].second);
            ++i;
            ++j;
        }
    }
    while (i < fa.size()) out.push_back(fa[i++]);
    while (j < fb.size()) out.push_back(fb[j++]);
    return {flips % 2 == 0 ? 1 : -1, Monomial::from_sorted(std::move(out))};
}

}  // namespace dgaut
