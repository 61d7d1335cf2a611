#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgaut/basis.hpp"
#include "dgaut/constraint_poly.hpp"
#include "dgaut/encoder.hpp"
#include "dgaut/graph_aut.hpp"
#include "dgaut/lift.hpp"

namespace dgaut {

// ---------------------------------------------------------------------------
// Recovering the graph automorphisms from the algebra alone.
//
// A degree-preserving algebra map is written with unknown scalars on every
// admissible basis monomial (x1 -> l1 x1, ..., xv -> av x1^5 + bv x2^4 +
// sum_w gvw xw, and a full matrix on the degree-119 span of z and the zv).
// Commutation with d is imposed coefficientwise; for the degree-119
// generators the comparison happens modulo d(decomposables), since shifting
// an image by an exact element never changes whether the map commutes. The
// resulting polynomial constraints are discharged by a small propagation
// engine; a stuck constraint yields an explicit "inconclusive" status
// rather than a guess. Large graphs fall back to a graph-automorphism
// search whose candidates are verified one by one through lift().
// ---------------------------------------------------------------------------

struct RigiditySolution {
    VertexPermutation sigma;
    Rational lambda1 = 1;
    Rational lambda2 = 1;
    std::vector<std::vector<Rational>> gamma;  // row v: coefficients of f(xv) on each xw
    bool from_family = false;  // a free parameter was pinned to 1 (isolated vertices)

    bool admissible() const {
        if (lambda1 != 1 || lambda2 != 1) return false;
        for (size_t v = 0; v < gamma.size(); ++v)
            for (size_t w = 0; w < gamma[v].size(); ++w)
                if (gamma[v][w] != (sigma(static_cast<int>(v)) == static_cast<int>(w) ? 1 : 0))
                    return false;
        return true;
    }
};

enum class RigidityStatus { Ok, Inconclusive };

struct RigidityResult {
    RigidityStatus status = RigidityStatus::Ok;
    std::vector<RigiditySolution> solutions;
    std::string mode;  // "symbolic" or "search"
    std::vector<std::string> notes;
};

struct RigidityOptions {
    int symbolic_cap = 6;   // full constraint analysis up to this many vertices
    int search_cap = 4096;  // search fallback up to this many vertices
    int aut_cap = 4096;     // automorphism count cap in search mode
};

namespace rigidity_detail {

// --- unknown layout ---------------------------------------------------------

struct VarLayout {
    int nv;
    explicit VarLayout(int n) : nv(n) {}
    int l1() const { return 0; }
    int l2() const { return 1; }
    int mu(int i) const { return 2 + i; }  // images of y1, y2, y3
    int alpha(int v) const { return 5 + v; }
    int beta(int v) const { return 5 + nv + v; }
    int gamma(int v, int w) const { return 5 + 2 * nv + v * nv + w; }
    int cz() const { return 5 + 2 * nv + nv * nv; }
    int z_to_zv(int v) const { return cz() + 1 + v; }       // coeff of zv in f(z)
    int zv_to_z(int v) const { return cz() + 1 + nv + v; }  // coeff of z in f(zv)
    int cmat(int v, int w) const { return cz() + 1 + 2 * nv + v * nv + w; }
    int total() const { return cz() + 1 + 2 * nv + nv * nv; }

    std::string name(int var) const {
        if (var == l1()) return "l1";
        if (var == l2()) return "l2";
        if (var < 5) return "m" + std::to_string(var - 1);
        if (var < 5 + nv) return "a[" + std::to_string(var - 5) + "]";
        if (var < 5 + 2 * nv) return "b[" + std::to_string(var - 5 - nv) + "]";
        if (var < cz()) {
            int k = var - 5 - 2 * nv;
            return "g[" + std::to_string(k / nv) + "][" + std::to_string(k % nv) + "]";
        }
        if (var == cz()) return "cz";
        if (var < cz() + 1 + nv) return "z2zv[" + std::to_string(var - cz() - 1) + "]";
        if (var < cz() + 1 + 2 * nv) return "zv2z[" + std::to_string(var - cz() - 1 - nv) + "]";
        int k = var - cz() - 1 - 2 * nv;
        return "C[" + std::to_string(k / nv) + "][" + std::to_string(k % nv) + "]";
    }
};

// --- quotient by exact corrections -----------------------------------------

/// Row-reduced basis of d(decomposable degree-119 monomials) inside the
/// degree-120 monomial coordinate space.
struct ExactSpace {
    std::vector<Monomial> basis120;
    std::map<Monomial, int> index;
    std::vector<std::vector<Rational>> rows;  // reduced, rows[i][pivots[i]] == 1
    std::vector<int> pivots;

    /// Kills the pivot coordinates of a symbolic vector; the surviving
    /// entries are the constraints "residual lies in the exact space".
    template <class C>
    std::vector<C> reduce(std::vector<C> vec) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            C factor = vec[pivots[r]];
            if (coeff_traits<C>::is_zero(factor)) continue;
            for (size_t j = 0; j < vec.size(); ++j) {
                if (rows[r][j] == 0) continue;
                vec[j] = vec[j] - coeff_traits<C>::from_rational(rows[r][j]) * factor;
            }
        }
        return vec;
    }

    template <class C>
    std::vector<C> coordinates(const Element<C>& e) const {
        std::vector<C> vec(basis120.size(), coeff_traits<C>::zero());
        for (const auto& [m, c] : e.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw StructureError("degree-120 monomial outside the enumerated basis");
            vec[it->second] = c;
        }
        return vec;
    }
};

inline ExactSpace build_exact_space(const Presentation& p) {
    ExactSpace es;
    es.basis120 = monomial_basis(p.table, 120);
    for (size_t i = 0; i < es.basis120.size(); ++i)
        es.index.emplace(es.basis120[i], static_cast<int>(i));

    std::vector<std::vector<Rational>> raw;
    for (const auto& m : monomial_basis(p.table, 119)) {
        const auto& f = m.factors();
        bool decomposable = f.size() > 1 || (f.size() == 1 && f[0].second > 1);
        if (!decomposable) continue;
        auto dm = p.d.apply(Element<Rational>::term(p.table, m, 1));
        if (dm.is_zero()) continue;
        std::vector<Rational> row(es.basis120.size(), Rational(0));
        for (const auto& [mono, c] : dm.terms()) row[es.index.at(mono)] = c;
        raw.push_back(std::move(row));
    }
    // Gaussian elimination to reduced row-echelon form.
    size_t cols = es.basis120.size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < raw.size(); ++col) {
        size_t pivot = rank;
        while (pivot < raw.size() && raw[pivot][col] == 0) ++pivot;
        if (pivot == raw.size()) continue;
        std::swap(raw[rank], raw[pivot]);
        Rational inv = raw[rank][col];
        for (auto& x : raw[rank]) x /= inv;
        for (size_t r = 0; r < raw.size(); ++r) {
            if (r == rank || raw[r][col] == 0) continue;
            Rational f = raw[r][col];
            for (size_t j = 0; j < cols; ++j) raw[r][j] -= f * raw[rank][j];
        }
        es.pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    raw.resize(rank);
    es.rows = std::move(raw);
    return es;
}

// --- the constraint engine ---------------------------------------------------

struct EngineState {
    std::vector<Poly> cons;
    std::vector<std::pair<int, Poly>> solved;  // in elimination order, kept current
    std::set<int> nonzero;
    bool family = false;

    void substitute_everywhere(int var, const Poly& value) {
        for (auto& c : cons) c = c.substituted(var, value);
        for (auto& [v, val] : solved) val = val.substituted(var, value);
    }

    /// Records var := value; returns false on a contradiction with a
    /// known-nonzero fact.
    bool assign(int var, const Poly& value) {
        substitute_everywhere(var, value);
        solved.emplace_back(var, value);
        if (nonzero.count(var) && value.is_constant() && value.constant_value() == 0)
            return false;
        return true;
    }
};

enum class StepKind { Progress, Solved, Dead, Stuck, Branch };

struct StepResult {
    StepKind kind = StepKind::Progress;
    std::vector<EngineState> branches;
    std::string detail;
};

// Multiplicative relations prod var^e = q among known-nonzero unknowns,
// solved through prime valuations (a rational linear system per prime) and
// a GF(2) system for the signs.
struct LatticeOutcome {
    bool solvable = true;  // false: no solution at all
    bool gave_up = false;  // true: could not decide (treated as stuck)
    bool family = false;   // solution set has free multiplicative directions
    std::vector<std::map<int, Rational>> candidates;
};

inline std::optional<std::map<BigInt, int>> factor_small(BigInt n) {
    std::map<BigInt, int> out;
    if (n < 0) n = -n;
    if (n == 0 || n > 1000000) return std::nullopt;
    for (BigInt p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

inline LatticeOutcome solve_lattice(const std::vector<std::pair<std::map<int, int>, Rational>>& relations) {
    LatticeOutcome out;
    std::set<int> var_set;
    for (const auto& [e, q] : relations)
        for (const auto& [v, k] : e) var_set.insert(v);
    std::vector<int> vars(var_set.begin(), var_set.end());
    size_t n = vars.size(), m = relations.size();
    auto col_of = [&](int v) {
        return std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
    };
    std::vector<std::vector<Rational>> E(m, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> q(m);
    std::set<BigInt> primes;
    for (size_t r = 0; r < m; ++r) {
        for (const auto& [v, k] : relations[r].first) E[r][col_of(v)] = k;
        q[r] = relations[r].second;
        auto fn = factor_small(numerator(q[r])), fd = factor_small(denominator(q[r]));
        if (!fn || !fd) {
            out.gave_up = true;
            return out;
        }
        for (const auto& [p, e] : *fn) primes.insert(p);
        for (const auto& [p, e] : *fd) primes.insert(p);
    }

    // Gaussian elimination on E once; reuse the transform for every prime.
    std::vector<std::vector<Rational>> A = E;
    std::vector<int> pivot_col;
    std::vector<std::vector<Rational>> ops;  // row operations applied to rhs too
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && A[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(A[rank], A[piv]);
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rational f = A[r][col] / A[rank][col];
            for (size_t j = 0; j < n; ++j) A[r][j] -= f * A[rank][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    bool free_directions = rank < n;

    auto solve_rational = [&](const std::vector<Rational>& rhs) -> std::optional<std::vector<Rational>> {
        // re-run elimination on (E | rhs)
        auto M = E;
        auto b = rhs;
        size_t rk = 0;
        for (size_t col = 0; col < n && rk < m; ++col) {
            size_t piv = rk;
            while (piv < m && M[piv][col] == 0) ++piv;
            if (piv == m) continue;
            std::swap(M[rk], M[piv]);
            std::swap(b[rk], b[piv]);
            for (size_t r = 0; r < m; ++r) {
                if (r == rk || M[r][col] == 0) continue;
                Rational f = M[r][col] / M[rk][col];
                for (size_t j = 0; j < n; ++j) M[r][j] -= f * M[rk][j];
                b[r] -= f * b[rk];
            }
            ++rk;
        }
        for (size_t r = rk; r < m; ++r)
            if (b[r] != 0) return std::nullopt;
        std::vector<Rational> x(n, Rational(0));
        for (size_t r = 0; r < rk; ++r) {
            size_t col = 0;
            while (col < n && M[r][col] == 0) ++col;
            x[col] = b[r] / M[r][col];
        }
        return x;
    };

    // magnitudes: one linear system per prime
    std::vector<Rational> magnitude(n, Rational(1));
    for (const BigInt& p : primes) {
        std::vector<Rational> rhs(m);
        for (size_t r = 0; r < m; ++r) {
            auto fn = *factor_small(numerator(q[r]));
            auto fd = *factor_small(denominator(q[r]));
            int e = 0;
            if (auto it = fn.find(p); it != fn.end()) e += it->second;
            if (auto it = fd.find(p); it != fd.end()) e -= it->second;
            rhs[r] = e;
        }
        auto x = solve_rational(rhs);
        if (!x) {
            out.solvable = false;
            return out;
        }
        for (size_t i = 0; i < n; ++i) {
            if (denominator((*x)[i]) != 1) {
                if (free_directions) {
                    out.gave_up = true;  // a lattice point may still exist off this solution
                    return out;
                }
                out.solvable = false;
                return out;
            }
            BigInt e = numerator((*x)[i]);
            magnitude[i] *= e >= 0 ? Rational(boost::multiprecision::pow(p, static_cast<unsigned>(e)))
                                   : Rational(1, boost::multiprecision::pow(p, static_cast<unsigned>(-e)));
        }
    }

    // signs over GF(2)
    std::vector<std::vector<char>> S(m, std::vector<char>(n + 1, 0));
    for (size_t r = 0; r < m; ++r) {
        for (size_t j = 0; j < n; ++j) S[r][j] = static_cast<char>(numerator(E[r][j]) % 2 != 0);
        S[r][n] = static_cast<char>(q[r] < 0);
    }
    size_t rk2 = 0;
    std::vector<int> piv2;
    for (size_t col = 0; col < n && rk2 < m; ++col) {
        size_t piv = rk2;
        while (piv < m && !S[piv][col]) ++piv;
        if (piv == m) continue;
        std::swap(S[rk2], S[piv]);
        for (size_t r = 0; r < m; ++r)
            if (r != rk2 && S[r][col])
                for (size_t j = 0; j <= n; ++j) S[r][j] ^= S[rk2][j];
        piv2.push_back(static_cast<int>(col));
        ++rk2;
    }
    for (size_t r = rk2; r < m; ++r)
        if (S[r][n]) {
            out.solvable = false;
            return out;
        }
    std::vector<int> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (std::find(piv2.begin(), piv2.end(), static_cast<int>(c)) == piv2.end())
            free_cols.push_back(static_cast<int>(c));
    if (free_cols.size() > 10) {
        out.gave_up = true;
        return out;
    }
    out.family = free_directions;
    for (size_t mask = 0; mask < (size_t{1} << free_cols.size()); ++mask) {
        std::vector<char> s(n, 0);
        for (size_t k = 0; k < free_cols.size(); ++k) s[free_cols[k]] = (mask >> k) & 1;
        for (size_t r = 0; r < rk2; ++r) {
            char val = S[r][n];
            for (size_t j = 0; j < n; ++j)
                if (S[r][j] && static_cast<int>(j) != piv2[r]) val ^= s[j];
            s[piv2[r]] = val;
        }
        std::map<int, Rational> cand;
        for (size_t i = 0; i < n; ++i) cand[vars[i]] = s[i] ? -magnitude[i] : magnitude[i];
        // verify against every relation exactly
        bool good = true;
        for (size_t r = 0; r < m && good; ++r) {
            Rational prod = 1;
            for (const auto& [v, k] : relations[r].first)
                prod *= k >= 0 ? rational_pow(cand[v], k) : 1 / rational_pow(cand[v], -k);
            good = prod == q[r];
        }
        if (good) out.candidates.push_back(std::move(cand));
    }
    if (out.candidates.empty()) out.solvable = false;
    return out;
}

/// One propagation pass. `deterministic_only` restricts to rules that never
/// branch (used before the permutation split, where some constraints are
/// expected to wait).
inline StepResult step(EngineState& st, bool deterministic_only) {
    // normalize: drop zeros, detect constant contradictions, cancel nonzero factors
    for (size_t i = 0; i < st.cons.size();) {
        Poly& c = st.cons[i];
        for (int v : st.nonzero) {
            int k = c.min_exponent(v);
            if (k > 0) c = c.shift_down(v, k);
        }
        if (c.is_zero()) {
            st.cons.erase(st.cons.begin() + i);
            continue;
        }
        if (c.is_constant()) return {StepKind::Dead, {}, "constant residual"};
        ++i;
    }
    if (st.cons.empty()) return {StepKind::Solved, {}, ""};

    // linear elimination with a constant coefficient
    for (size_t i = 0; i < st.cons.size(); ++i) {
        for (int v : st.cons[i].variables()) {
            if (st.cons[i].degree_in(v) != 1) continue;
            Poly a, b;
            for (const auto& [m, c] : st.cons[i].terms()) {
                bool has = false;
                Poly::Mono rest;
                for (const auto& [mv, e] : m)
                    if (mv == v)
                        has = true;
                    else
                        rest.push_back({mv, e});
                if (has)
                    a.add_term(std::move(rest), c);
                else
                    b.add_term(m, c);
            }
            if (!a.is_constant()) continue;
            Poly value = (Rational(-1) / a.constant_value()) * b;
            st.cons.erase(st.cons.begin() + i);
            if (!st.assign(v, value)) return {StepKind::Dead, {}, "zero forced on a unit"};
            return {StepKind::Progress, {}, ""};
        }
    }

    // univariate constraints: rational roots
    for (size_t i = 0; i < st.cons.size(); ++i) {
        auto vs = st.cons[i].variables();
        if (vs.size() != 1) continue;
        int v = *vs.begin();
        auto coeffs = univariate_coeffs(st.cons[i], v);
        if (!coeffs) continue;
        auto roots = rational_roots(*coeffs);
        if (!roots) continue;
        if (st.nonzero.count(v))
            roots->erase(std::remove(roots->begin(), roots->end(), Rational(0)), roots->end());
        if (roots->empty()) return {StepKind::Dead, {}, "univariate constraint with no admissible root"};
        if (roots->size() == 1) {
            Poly value = Poly::constant((*roots)[0]);
            st.cons.erase(st.cons.begin() + i);
            if (!st.assign(v, value)) return {StepKind::Dead, {}, "zero forced on a unit"};
            return {StepKind::Progress, {}, ""};
        }
        if (deterministic_only) continue;
        StepResult res{StepKind::Branch, {}, ""};
        for (const auto& r : *roots) {
            EngineState next = st;
            next.cons.erase(next.cons.begin() + i);
            if (next.assign(v, Poly::constant(r))) res.branches.push_back(std::move(next));
        }
        return res;
    }

    // single-monomial constraints: some factor vanishes
    if (!deterministic_only) {
        for (size_t i = 0; i < st.cons.size(); ++i) {
            if (st.cons[i].terms().size() != 1) continue;
            const auto& mono = st.cons[i].terms().begin()->first;
            std::vector<int> cand;
            for (const auto& [v, e] : mono)
                if (!st.nonzero.count(v)) cand.push_back(v);
            if (cand.empty()) return {StepKind::Dead, {}, "nonvanishing monomial forced to zero"};
            StepResult res{cand.size() == 1 ? StepKind::Progress : StepKind::Branch, {}, ""};
            if (cand.size() == 1) {
                st.cons.erase(st.cons.begin() + i);
                if (!st.assign(cand[0], Poly())) return {StepKind::Dead, {}, "zero forced on a unit"};
                return res;
            }
            for (int v : cand) {
                EngineState next = st;
                next.cons.erase(next.cons.begin() + i);
                if (next.assign(v, Poly())) res.branches.push_back(std::move(next));
            }
            return res;
        }
    }

    // multiplicative relations among known-nonzero unknowns
    std::vector<std::pair<std::map<int, int>, Rational>> relations;
    std::vector<size_t> relation_idx;
    for (size_t i = 0; i < st.cons.size(); ++i) {
        const auto& terms = st.cons[i].terms();
        if (terms.size() != 2) continue;
        bool all_nonzero = true;
        for (int v : st.cons[i].variables()) all_nonzero &= st.nonzero.count(v) > 0;
        if (!all_nonzero) continue;
        // c1 m1 + c2 m2 = 0  ->  m1 / m2 = -c2/c1
        auto it = terms.begin();
        const auto& [m1, c1] = *it;
        ++it;
        const auto& [m2, c2] = *it;
        std::map<int, int> expo;
        for (const auto& [v, e] : m2) expo[v] += e;
        for (const auto& [v, e] : m1) expo[v] -= e;  // m2/m1 = -c1/c2
        for (auto itv = expo.begin(); itv != expo.end();)
            itv = itv->second == 0 ? expo.erase(itv) : std::next(itv);
        if (expo.empty()) {
            if (c1 != -c2) return {StepKind::Dead, {}, "inconsistent scalar relation"};
            st.cons.erase(st.cons.begin() + i);
            return {StepKind::Progress, {}, ""};
        }
        relations.emplace_back(std::move(expo), -c1 / c2);
        relation_idx.push_back(i);
    }
    if (!relations.empty()) {
        auto lat = solve_lattice(relations);
        if (lat.gave_up) return {StepKind::Stuck, {}, "multiplicative relation system too hard"};
        if (!lat.solvable) return {StepKind::Dead, {}, "multiplicative relations unsatisfiable"};
        if (lat.candidates.size() > 1 && deterministic_only)
            return {StepKind::Stuck, {}, ""};  // wait for the branching phase
        StepResult res{lat.candidates.size() == 1 ? StepKind::Progress : StepKind::Branch, {}, ""};
        for (const auto& cand : lat.candidates) {
            EngineState next = st;
            for (auto it = relation_idx.rbegin(); it != relation_idx.rend(); ++it)
                next.cons.erase(next.cons.begin() + static_cast<long>(*it));
            next.family |= lat.family;
            bool alive = true;
            for (const auto& [v, val] : cand)
                if (!next.assign(v, Poly::constant(val))) {
                    alive = false;
                    break;
                }
            if (!alive) continue;
            if (res.kind == StepKind::Progress) {
                st = std::move(next);
                return res;
            }
            res.branches.push_back(std::move(next));
        }
        if (res.kind == StepKind::Branch) return res;
        return {StepKind::Dead, {}, "multiplicative relations unsatisfiable"};
    }

    return {StepKind::Stuck, {}, st.cons.front().str()};
}

}  // namespace rigidity_detail

RigidityResult solve_rigidity(const Presentation& p, const Graph& g,
                              const RigidityOptions& opt = {});

namespace rigidity_detail {

/// Exhausts the branchy rules; collects fully solved states.
inline void search(EngineState st, std::vector<EngineState>& out_solved,
                   std::vector<std::string>& out_stuck, int depth = 0) {
    if (depth > 64) {
        out_stuck.push_back("branching depth limit");
        return;
    }
    for (;;) {
        StepResult r = step(st, /*deterministic_only=*/false);
        switch (r.kind) {
            case StepKind::Progress: continue;
            case StepKind::Solved: out_solved.push_back(std::move(st)); return;
            case StepKind::Dead: return;
            case StepKind::Stuck: out_stuck.push_back(r.detail); return;
            case StepKind::Branch:
                for (auto& b : r.branches) search(std::move(b), out_solved, out_stuck, depth + 1);
                return;
        }
    }
}

inline RigidityResult solve_symbolic(const Presentation& p, const Graph& g,
                                     const EncodingShape& shape) {
    const int nv = g.n_vertices();
    const auto& t = p.table;
    VarLayout L(nv);
    RigidityResult result;
    result.mode = "symbolic";

    // symbolic generator map
    std::vector<Element<Poly>> images(t->size(), Element<Poly>::zero(t));
    auto term = [&](int gen, int var) {
        return Element<Poly>::term(t, Monomial::generator(gen), Poly::var(var));
    };
    images[shape.x1] = term(shape.x1, L.l1());
    images[shape.x2] = term(shape.x2, L.l2());
    images[shape.y1] = term(shape.y1, L.mu(0));
    images[shape.y2] = term(shape.y2, L.mu(1));
    images[shape.y3] = term(shape.y3, L.mu(2));
    for (int v = 0; v < nv; ++v) {
        auto img = Element<Poly>::term(t, Monomial::power(shape.x1, 5), Poly::var(L.alpha(v)));
        img = img + Element<Poly>::term(t, Monomial::power(shape.x2, 4), Poly::var(L.beta(v)));
        for (int w = 0; w < nv; ++w) img = img + term(shape.xv[w], L.gamma(v, w));
        images[shape.xv[v]] = std::move(img);
    }
    images[shape.z] = term(shape.z, L.cz());
    for (int v = 0; v < nv; ++v)
        images[shape.z] = images[shape.z] + term(shape.zv[v], L.z_to_zv(v));
    for (int v = 0; v < nv; ++v) {
        auto img = term(shape.z, L.zv_to_z(v));
        for (int w = 0; w < nv; ++w) img = img + term(shape.zv[w], L.cmat(v, w));
        images[shape.zv[v]] = std::move(img);
    }
    GeneratorMap<Poly> f(t, std::move(images));

    // constraints: coefficientwise commutation, modulo exact corrections on
    // the degree-119 generators
    ExactSpace es = build_exact_space(p);
    EngineState root;
    root.nonzero = {L.l1(), L.l2()};  // 1x1 blocks of an invertible map
    for (auto& [gen, res] : commutation_residuals(p.d, f)) {
        if (t->degree(gen) == 119) {
            for (auto& c : es.reduce(es.coordinates(res)))
                if (!c.is_zero()) root.cons.push_back(std::move(c));
        } else {
            for (const auto& [m, c] : res.terms()) root.cons.push_back(c);
        }
    }

    // deterministic propagation first (scalar layer)
    for (;;) {
        StepResult r = step(root, /*deterministic_only=*/true);
        if (r.kind == StepKind::Progress) continue;
        if (r.kind == StepKind::Dead) {
            // the identity always commutes, so a dead end here is an engine failure
            result.status = RigidityStatus::Inconclusive;
            result.notes.push_back("contradiction before the support split: " + r.detail);
            return result;
        }
        break;
    }

    // The remaining analysis splits over the support pattern of the gamma
    // matrix. That split is complete only because each row can have at most
    // one nonzero entry: for every pair of columns the constraint set must
    // contain the witness monomial g[v][u]^i g[v][w]^j, and invertibility
    // rules out empty rows and repeated columns.
    for (int v = 0; v < nv; ++v)
        for (int u = 0; u < nv; ++u)
            for (int w = u + 1; w < nv; ++w) {
                bool found = false;
                for (const auto& c : root.cons) {
                    if (c.terms().size() != 1) continue;
                    const auto& mono = c.terms().begin()->first;
                    if (mono.size() == 2 && mono[0].first == std::min(L.gamma(v, u), L.gamma(v, w)) &&
                        mono[1].first == std::max(L.gamma(v, u), L.gamma(v, w)))
                        found = true;
                }
                if (!found) {
                    result.status = RigidityStatus::Inconclusive;
                    result.notes.push_back("missing row-support witness for vertex " +
                                           std::to_string(v) + " columns " + std::to_string(u) +
                                           "," + std::to_string(w));
                    return result;
                }
            }

    // enumerate support bijections
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    std::set<std::string> seen;
    do {
        EngineState st = root;
        bool alive = true;
        for (int v = 0; v < nv && alive; ++v) {
            st.nonzero.insert(L.gamma(v, perm[v]));
            for (int w = 0; w < nv; ++w)
                if (w != perm[v] && !st.assign(L.gamma(v, w), Poly())) alive = false;
        }
        if (!alive) continue;
        std::vector<EngineState> solved;
        std::vector<std::string> stuck;
        search(std::move(st), solved, stuck);
        for (const auto& s : stuck) {
            result.status = RigidityStatus::Inconclusive;
            result.notes.push_back("stuck constraint: " + s);
        }
        for (auto& s : solved) {
            // concretize: pin free unknowns (units to 1, the rest to 0)
            std::map<int, Rational> value;
            bool fam = s.family;
            std::set<int> assigned;
            for (const auto& [v, val] : s.solved) assigned.insert(v);
            auto pin = [&](int v) {
                if (assigned.count(v)) return;
                bool unit = s.nonzero.count(v) > 0;
                s.substitute_everywhere(v, Poly::constant(unit ? 1 : 0));
                s.solved.emplace_back(v, Poly::constant(unit ? 1 : 0));
                assigned.insert(v);
                if (unit) fam = true;  // genuinely free direction, e.g. isolated vertices
            };
            pin(L.l1());
            pin(L.l2());
            for (int i = 0; i < L.total(); ++i) pin(i);
            bool concrete = true;
            for (const auto& [v, val] : s.solved) {
                if (!val.is_constant()) {
                    concrete = false;
                    break;
                }
                value[v] = val.constant_value();
            }
            if (!concrete) {
                result.status = RigidityStatus::Inconclusive;
                result.notes.push_back("solution with non-constant back-substitution");
                continue;
            }

            RigiditySolution sol;
            sol.sigma = VertexPermutation{perm};
            sol.lambda1 = value[L.l1()];
            sol.lambda2 = value[L.l2()];
            sol.gamma.assign(nv, std::vector<Rational>(nv, Rational(0)));
            for (int v = 0; v < nv; ++v)
                for (int w = 0; w < nv; ++w) sol.gamma[v][w] = value[L.gamma(v, w)];
            sol.from_family = fam;

            // verification: rebuild the concrete map and re-check commutation
            std::vector<Element<Rational>> conc(t->size(), Element<Rational>::zero(t));
            conc[shape.x1] = Element<Rational>::term(t, Monomial::generator(shape.x1), sol.lambda1);
            conc[shape.x2] = Element<Rational>::term(t, Monomial::generator(shape.x2), sol.lambda2);
            int ys[3] = {shape.y1, shape.y2, shape.y3};
            for (int i = 0; i < 3; ++i)
                conc[ys[i]] = Element<Rational>::term(t, Monomial::generator(ys[i]), value[L.mu(i)]);
            for (int v = 0; v < nv; ++v) {
                auto img = Element<Rational>::term(t, Monomial::power(shape.x1, 5), value[L.alpha(v)]);
                img = img + Element<Rational>::term(t, Monomial::power(shape.x2, 4), value[L.beta(v)]);
                for (int w = 0; w < nv; ++w)
                    img = img + Element<Rational>::term(t, Monomial::generator(shape.xv[w]),
                                                        sol.gamma[v][w]);
                conc[shape.xv[v]] = std::move(img);
            }
            conc[shape.z] = Element<Rational>::term(t, Monomial::generator(shape.z), value[L.cz()]);
            for (int v = 0; v < nv; ++v)
                conc[shape.z] = conc[shape.z] + Element<Rational>::term(
                                                    t, Monomial::generator(shape.zv[v]),
                                                    value[L.z_to_zv(v)]);
            for (int v = 0; v < nv; ++v) {
                auto img = Element<Rational>::term(t, Monomial::generator(shape.z),
                                                   value[L.zv_to_z(v)]);
                for (int w = 0; w < nv; ++w)
                    img = img + Element<Rational>::term(t, Monomial::generator(shape.zv[w]),
                                                        value[L.cmat(v, w)]);
                conc[shape.zv[v]] = std::move(img);
            }
            bool verified = true;
            GeneratorMap<Rational> cf(t, std::move(conc));
            for (auto& [gen, res] : commutation_residuals(p.d, cf)) {
                if (t->degree(gen) != 119) {
                    verified = false;
                    break;
                }
                for (const auto& c : es.reduce(es.coordinates(res)))
                    if (!coeff_traits<Rational>::is_zero(c)) verified = false;
                if (!verified) break;
            }
            if (!verified) {
                result.status = RigidityStatus::Inconclusive;
                result.notes.push_back("candidate solution failed re-verification");
                continue;
            }
            std::string key;
            for (int i : perm) key += std::to_string(i) + ",";
            key += rational_to_string(sol.lambda1) + ";" + rational_to_string(sol.lambda2);
            for (const auto& row : sol.gamma)
                for (const auto& x : row) key += ";" + rational_to_string(x);
            if (seen.insert(key).second) {
                if (sol.from_family)
                    result.notes.push_back("free scaling direction pinned to 1 (permutation " +
                                           key.substr(0, key.find(';')) + ")");
                result.solutions.push_back(std::move(sol));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const RigiditySolution& a, const RigiditySolution& b) {
                  return a.sigma.image < b.sigma.image;
              });
    return result;
}

inline RigidityResult solve_search(const Presentation& p, const Graph& g,
                                   const EncodingShape& shape, const RigidityOptions& opt) {
    RigidityResult result;
    result.mode = "search";
    result.notes.push_back(
        "search mode: candidates come from the graph layer and are verified via lift; "
        "completeness of the candidate set is established symbolically at small scale");
    auto auts = automorphisms(g, opt.aut_cap);
    int nv = g.n_vertices();
    for (const auto& sigma : auts) {
        lift(p, shape, sigma);  // throws on a non-commuting candidate
        RigiditySolution sol;
        sol.sigma = sigma;
        sol.gamma.assign(nv, std::vector<Rational>(nv, Rational(0)));
        for (int v = 0; v < nv; ++v) sol.gamma[v][sigma(v)] = 1;
        result.solutions.push_back(std::move(sol));
    }
    return result;
}

}  // namespace rigidity_detail

inline RigidityResult solve_rigidity(const Presentation& p, const Graph& g,
                                     const RigidityOptions& opt) {
    EncodingShape shape = recover_shape(p);
    if (!(shape.graph == g))
        throw StructureError("presentation does not encode the given graph");
    int nv = g.n_vertices();
    if (nv <= opt.symbolic_cap) return rigidity_detail::solve_symbolic(p, g, shape);
    if (nv <= opt.search_cap) return rigidity_detail::solve_search(p, g, shape, opt);
    throw ResourceError("solve_rigidity: vertex count " + std::to_string(nv) +
                        " exceeds cap " + std::to_string(opt.search_cap));
}

}  // namespace dgaut
