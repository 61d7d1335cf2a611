#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written with a different algorithm than
// the production code: exhaustive search instead of pruning, dynamic
// programming instead of enumeration, letter-by-letter sign counting instead
// of merge bookkeeping.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "dgaut/generators.hpp"
#include "dgaut/graph.hpp"
#include "dgaut/group_table.hpp"
#include "dgaut/monomial.hpp"

namespace oracles {

using namespace dgaut;

/// Number of monomials of the given degree, by dynamic programming over
/// generators (never materializes the basis).
inline std::uint64_t count_monomials(const GeneratorTable& t, int degree) {
    std::vector<std::uint64_t> ways(degree + 1, 0);
    ways[0] = 1;
    for (int g = 0; g < t.size(); ++g) {
        int d = t.degree(g);
        if (t.is_odd(g)) {
            for (int n = degree; n >= d; --n) ways[n] += ways[n - d];
        } else {
            for (int n = d; n <= degree; ++n) ways[n] += ways[n - d];  // unbounded exponent
        }
    }
    return ways[degree];
}

/// Koszul sign of sorting the concatenation of two monomials, counted one
/// transposition at a time on the flattened generator word. Returns 0 when
/// an odd generator repeats.
inline int product_sign(const GeneratorTable& t, const Monomial& a, const Monomial& b) {
    std::vector<int> word;
    for (const auto& [g, e] : a.factors())
        for (int i = 0; i < e; ++i) word.push_back(g);
    for (const auto& [g, e] : b.factors())
        for (int i = 0; i < e; ++i) word.push_back(g);
    int sign = 1;
    for (size_t i = 0; i + 1 < word.size(); ++i)  // bubble sort, counting odd-odd swaps
        for (size_t j = 0; j + 1 < word.size() - i; ++j) {
            if (word[j] <= word[j + 1]) continue;
            if (t.is_odd(word[j]) && t.is_odd(word[j + 1])) sign = -sign;
            std::swap(word[j], word[j + 1]);
        }
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == word[i + 1] && t.is_odd(word[i])) return 0;
    return sign;
}

/// All graph automorphisms by filtering every permutation. Factorial cost;
/// keep n small.
inline std::vector<VertexPermutation> brute_automorphisms(const Graph& g) {
    std::vector<int> perm(g.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexPermutation> out;
    do {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) out.push_back(VertexPermutation{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Group isomorphism by trying every bijection. Factorial cost; keep n tiny.
inline bool brute_isomorphic(const GroupTable& a, const GroupTable& b) {
    if (a.n != b.n) return false;
    std::vector<int> f(a.n);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = f[0] == 0;  // identity must map to identity
        for (int i = 0; i < a.n && ok; ++i)
            for (int j = 0; j < a.n && ok; ++j) ok = f[a.at(i, j)] == b.at(f[i], f[j]);
        if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

}  // namespace oracles
