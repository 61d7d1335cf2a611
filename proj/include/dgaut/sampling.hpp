#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dgaut/basis.hpp"
#include "dgaut/element.hpp"
#include "dgaut/graph.hpp"

namespace dgaut {

// Deterministic sampling for property checks. mt19937_64 output is fixed by
// the standard; modulo reduction keeps draws identical across platforms
// (std::uniform_int_distribution is not portable).

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool flip() { return next() & 1; }

    /// Nonzero rational with small numerator and denominator.
    Rational coefficient(int max_abs = 9) {
        int num = 1 + below(max_abs);
        if (flip()) num = -num;
        int den = 1 + below(max_abs);
        return Rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

/// Random monomial built from `n_factors` generator draws; odd generators are
/// clamped to exponent 1 so the result is never degenerate.
inline Monomial random_monomial(Rng& rng, const GeneratorTable& t, int n_factors) {
    std::vector<int> exp(t.size(), 0);
    for (int i = 0; i < n_factors; ++i) ++exp[rng.below(t.size())];
    std::vector<Monomial::Factor> factors;
    for (int g = 0; g < t.size(); ++g) {
        if (exp[g] == 0) continue;
        factors.push_back({g, t.is_odd(g) ? 1 : exp[g]});
    }
    return Monomial::from_sorted(std::move(factors));
}

/// Random element with up to `n_terms` monomials (coincident draws collapse).
inline Element<Rational> random_element(Rng& rng, const TablePtr& t, int n_terms,
                                        int max_factors = 4) {
    auto e = Element<Rational>::zero(t);
    for (int i = 0; i < n_terms; ++i)
        e.add_term(random_monomial(rng, *t, 1 + rng.below(max_factors)), rng.coefficient());
    return e;
}

/// Random homogeneous element: ≤ `support` distinct monomials of the given
/// degree with nonzero coefficients. Returns zero when the degree is empty.
inline Element<Rational> random_homogeneous(Rng& rng, const TablePtr& t, int degree, int support,
                                            std::size_t basis_cap = kDefaultBasisCap) {
    auto basis = monomial_basis(t, degree, basis_cap);
    auto e = Element<Rational>::zero(t);
    if (basis.empty()) return e;
    for (int i = 0; i < support; ++i)
        e.add_term(basis[rng.below(static_cast<int>(basis.size()))], rng.coefficient());
    return e;
}

/// Connected graph on `n` vertices: a random spanning tree plus `extra`
/// random edges (duplicates collapse, loops skipped).
inline Graph random_connected_graph(Rng& rng, int n, int extra) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("r" + std::to_string(i));
    for (int i = 1; i < n; ++i) g.add_edge(rng.below(i), i);
    for (int i = 0; i < extra; ++i) {
        int u = rng.below(n), v = rng.below(n);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

}  // namespace dgaut
