#pragma once

#include <vector>

#include "dgaut/monomial.hpp"

namespace dgaut {

inline constexpr size_t kDefaultBasisCap = 1'000'000;

/// Enumerates every monomial of total degree n over the table, in canonical
/// order (lexicographic by exponent vector, generators in table order).
/// Throws ResourceError when the result would exceed the cap.
inline std::vector<Monomial> monomial_basis(const TablePtr& table, int n,
                                            size_t cap = kDefaultBasisCap) {
    if (n < 0) throw ValidationError("monomial_basis: negative degree");
    std::vector<Monomial> out;
    const int size = table->size();

    // Smallest generator degree at or past each index, for pruning.
    std::vector<int> min_deg(size + 1, n + 1);
    for (int i = size; i-- > 0;)
        min_deg[i] = std::min(min_deg[i + 1], table->degree(i));

    std::vector<Monomial::Factor> current;
    auto emit = [&]() {
        if (out.size() >= cap)
            throw ResourceError("monomial_basis: more than " + std::to_string(cap) +
                                " monomials in degree " + std::to_string(n));
        out.push_back(Monomial::from_sorted(current));
    };

    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        if (idx >= size || remaining < min_deg[idx]) return;
        const int d = table->degree(idx);
        const int max_e = table->is_odd(idx) ? (d <= remaining ? 1 : 0) : remaining / d;
        for (int e = max_e; e >= 1; --e) {
            current.emplace_back(idx, e);
            self(self, idx + 1, remaining - e * d);
            current.pop_back();
        }
        self(self, idx + 1, remaining);
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace dgaut
