#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgaut/element.hpp"
#include "dgaut/rational.hpp"

namespace dgaut {

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over the rationals, used as the
// coefficient ring when an algebra map is written with unknown scalars.
// Variables are plain integer indices; callers keep their own name table.
// ---------------------------------------------------------------------------

class Poly {
  public:
    using Mono = std::vector<std::pair<int, int>>;  // sorted by variable, exponents > 0
    using Terms = std::map<Mono, Rational>;

    Poly() = default;

    static Poly constant(Rational c) {
        Poly p;
        if (c != 0) p.terms_.emplace(Mono{}, std::move(c));
        return p;
    }
    static Poly var(int v) { return var_pow(v, 1); }
    static Poly var_pow(int v, int e) {
        Poly p;
        if (e == 0) return constant(1);
        p.terms_.emplace(Mono{{v, e}}, 1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (is_zero()) return 0;
        if (!is_constant()) throw ValidationError("Poly: not a constant");
        return terms_.begin()->second;
    }

    void add_term(Mono m, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::set<int> variables() const {
        std::set<int> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    int degree_in(int v) const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& [mv, e] : m)
                if (mv == v) d = std::max(d, e);
        return d;
    }

    /// Smallest exponent of v across all terms (0 if any term lacks v).
    int min_exponent(int v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int e = 0;
            for (const auto& [mv, me] : m)
                if (mv == v) e = me;
            d = d < 0 ? e : std::min(d, e);
            if (d == 0) break;
        }
        return std::max(d, 0);
    }

    /// Divides every term by v^k; requires min_exponent(v) >= k.
    Poly shift_down(int v, int k) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Mono nm;
            bool seen = false;
            for (const auto& [mv, e] : m) {
                if (mv == v) {
                    seen = true;
                    if (e < k) throw ValidationError("Poly: exponent underflow in shift_down");
                    if (e > k) nm.emplace_back(mv, e - k);
                } else {
                    nm.push_back({mv, e});
                }
            }
            if (!seen && k > 0) throw ValidationError("Poly: exponent underflow in shift_down");
            out.add_term(std::move(nm), c);
        }
        return out;
    }

    /// Replaces v by a polynomial value everywhere.
    Poly substituted(int v, const Poly& value) const;

    bool operator==(const Poly&) const = default;

    std::string str(const std::function<std::string(int)>& name) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = rational_to_string(c);
            bool neg = cs.size() > 1 && cs.front() == '-';
            if (out.empty()) {
                if (neg) out += "-", cs.erase(0, 1);
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs.erase(0, 1);
            }
            out += cs;
            for (const auto& [v, e] : m) {
                out += " " + name(v);
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }
    std::string str() const {
        return str([](int v) { return "v" + std::to_string(v); });
    }

  private:
    Terms terms_;
};

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

inline Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
    return out;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly::Mono mono_mul(const Poly::Mono& a, const Poly::Mono& b) {
    Poly::Mono out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return out;
}

inline Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

inline Poly operator*(const Rational& c, const Poly& a) {
    Poly out;
    for (const auto& [m, pc] : a.terms()) out.add_term(m, c * pc);
    return out;
}

inline Poly poly_pow(const Poly& a, int e) {
    Poly out = Poly::constant(1);
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}

inline Poly Poly::substituted(int v, const Poly& value) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Mono rest;
        int e = 0;
        for (const auto& [mv, me] : m) {
            if (mv == v)
                e = me;
            else
                rest.push_back({mv, me});
        }
        Poly t;
        t.add_term(std::move(rest), c);
        out = out + (e ? t * poly_pow(value, e) : t);
    }
    return out;
}

/// Dense coefficient list c[0..d] when the polynomial involves no variable
/// other than v (constants count as univariate in anything).
inline std::optional<std::vector<Rational>> univariate_coeffs(const Poly& p, int v) {
    std::vector<Rational> coeffs(p.degree_in(v) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.empty())
            coeffs[0] += c;
        else if (m.size() == 1 && m[0].first == v)
            coeffs[m[0].second] += c;
        else
            return std::nullopt;
    }
    return coeffs;
}

/// All divisors of |n| for small n; nullopt when n is too large to factor
/// by trial division comfortably.
inline std::optional<std::vector<BigInt>> small_divisors(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0 || n > 1000000) return std::nullopt;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

/// Every rational root of the dense-coefficient polynomial, by the rational
/// root theorem after clearing denominators. nullopt when the coefficients
/// are too large to enumerate divisors — never a wrong answer.
inline std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) return std::nullopt;  // zero polynomial: every value is a root
    std::vector<Rational> roots;
    size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    if (low + 1 == coeffs.size()) return roots;  // c * v^k

    // integer coefficients a_low .. a_deg
    BigInt lcm = 1;
    for (size_t i = low; i < coeffs.size(); ++i) {
        BigInt den = denominator(coeffs[i]);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<BigInt> a;
    for (size_t i = low; i < coeffs.size(); ++i)
        a.push_back(numerator(coeffs[i] * Rational(lcm)));
    auto ps = small_divisors(a.front());
    auto qs = small_divisors(a.back());
    if (!ps || !qs) return std::nullopt;
    auto value_at = [&](const Rational& x) {
        Rational acc = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    };
    for (const BigInt& p : *ps)
        for (const BigInt& q : *qs)
            for (int sign : {1, -1}) {
                Rational cand = Rational(sign * p, q);
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (value_at(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

template <>
struct coeff_traits<Poly> {
    static Poly zero() { return Poly(); }
    static bool is_zero(const Poly& p) { return p.is_zero(); }
    static Poly from_rational(const Rational& r) { return Poly::constant(r); }
    static std::string str(const Poly& p) { return "(" + p.str() + ")"; }
};

}  // namespace dgaut
