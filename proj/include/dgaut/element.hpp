#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgaut/monomial.hpp"
#include "dgaut/rational.hpp"

namespace dgaut {

/// Coefficient-ring operations. The default works for any type with ring
/// operators and construction from Rational; Poly coefficients specialize it.
template <class C>
struct coeff_traits {
    static C zero() { return C(0); }
    static bool is_zero(const C& c) { return c == C(0); }
    static C from_rational(const Rational& r) { return C(r); }
    static std::string str(const C& c) { return rational_to_string(c); }
};

/// A finite sum of monomials with coefficients in C, tied to a generator
/// table. Terms are kept in canonical monomial order with no zero
/// coefficients stored.
template <class C = Rational>
class Element {
  public:
    using Terms = std::map<Monomial, C>;

    explicit Element(TablePtr table) : table_(std::move(table)) {
        if (!table_) throw ValidationError("Element requires a generator table");
    }

    static Element zero(TablePtr table) { return Element(std::move(table)); }

    static Element term(TablePtr table, Monomial m, C coeff) {
        Element e(std::move(table));
        e.add_term(std::move(m), std::move(coeff));
        return e;
    }

    static Element unit(TablePtr table, C coeff = coeff_traits<C>::from_rational(1)) {
        return term(std::move(table), Monomial::unit(), std::move(coeff));
    }

    static Element generator(TablePtr table, int g) {
        if (g < 0 || g >= table->size())
            throw ValidationError("Element::generator: index out of range");
        return term(std::move(table), Monomial::generator(g), coeff_traits<C>::from_rational(1));
    }

    const TablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t n_terms() const { return terms_.size(); }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return coeff_traits<C>::zero();
        return it->second;
    }

    void add_term(Monomial m, C coeff) {
        if (coeff_traits<C>::is_zero(coeff)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (coeff_traits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Degree when all terms agree on it; nullopt for zero or mixed degrees.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            int d = m.degree(*table_);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    /// Zero counts as homogeneous of every degree.
    bool is_homogeneous_of(int n) const {
        for (const auto& [m, c] : terms_)
            if (m.degree(*table_) != n) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = coeff_traits<C>::str(c);
            bool negated = cs.size() > 1 && cs.front() == '-';
            if (out.empty()) {
                if (negated) out += "-", cs.erase(0, 1);
            } else {
                out += negated ? " - " : " + ";
                if (negated) cs.erase(0, 1);
            }
            out += cs;
            if (!m.is_unit()) out += " * " + m.str(*table_);
        }
        return out;
    }

    bool operator==(const Element& other) const {
        return same_table(table_, other.table_) && terms_ == other.terms_;
    }

  private:
    TablePtr table_;
    Terms terms_;
};

template <class C>
Element<C> add(const Element<C>& a, const Element<C>& b) {
    require_same_table(a.table(), b.table(), "add");
    Element<C> out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

template <class C>
Element<C> scale(const C& c, const Element<C>& a) {
    Element<C> out(a.table());
    if (coeff_traits<C>::is_zero(c)) return out;
    for (const auto& [m, coeff] : a.terms()) out.add_term(m, c * coeff);
    return out;
}

template <class C>
Element<C> negate(const Element<C>& a) {
    return scale<C>(coeff_traits<C>::from_rational(-1), a);
}

template <class C>
Element<C> sub(const Element<C>& a, const Element<C>& b) {
    return add(a, negate(b));
}

/// Graded-commutative product with Koszul signs.
template <class C>
Element<C> multiply(const Element<C>& a, const Element<C>& b) {
    require_same_table(a.table(), b.table(), "multiply");
    Element<C> out(a.table());
    const GeneratorTable& table = *a.table();
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [sign, m] = merge_monomials(table, ma, mb);
            if (sign == 0) continue;
            C c = ca * cb;
            if (sign < 0) c = coeff_traits<C>::from_rational(-1) * c;
            out.add_term(std::move(m), std::move(c));
        }
    }
    return out;
}

template <class C>
Element<C> element_pow(const Element<C>& a, int e) {
    if (e < 0) throw ValidationError("element_pow: negative exponent");
    Element<C> acc = Element<C>::unit(a.table());
    Element<C> base = a;
    while (e != 0) {
        if (e & 1) acc = multiply(acc, base);
        if ((e >>= 1) != 0) base = multiply(base, base);
    }
    return acc;
}

/// Reinterprets a rational element in a (possibly richer) coefficient ring.
template <class C>
Element<C> embed(const Element<Rational>& a) {
    Element<C> out(a.table());
    for (const auto& [m, c] : a.terms()) out.add_term(m, coeff_traits<C>::from_rational(c));
    return out;
}

template <>
inline Element<Rational> embed<Rational>(const Element<Rational>& a) {
    return a;
}

template <class C>
Element<C> operator+(const Element<C>& a, const Element<C>& b) { return add(a, b); }
template <class C>
Element<C> operator-(const Element<C>& a, const Element<C>& b) { return sub(a, b); }
template <class C>
Element<C> operator*(const Element<C>& a, const Element<C>& b) { return multiply(a, b); }
template <class C>
Element<C> operator-(const Element<C>& a) { return negate(a); }

/// A degree-preserving algebra endomorphism described by generator images.
template <class C = Rational>
class GeneratorMap {
  public:
    GeneratorMap(TablePtr table, std::vector<Element<C>> images)
        : table_(std::move(table)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != table_->size())
            throw ValidationError("GeneratorMap: one image per generator required");
        for (int g = 0; g < table_->size(); ++g) {
            require_same_table(table_, images_[g].table(), "GeneratorMap");
            if (!images_[g].is_homogeneous_of(table_->degree(g)))
                throw DegreeError("image of generator '" + table_->name(g) +
                                  "' is not homogeneous of degree " +
                                  std::to_string(table_->degree(g)));
        }
    }

    static GeneratorMap identity(TablePtr table) {
        std::vector<Element<C>> images;
        images.reserve(table->size());
        for (int g = 0; g < table->size(); ++g) images.push_back(Element<C>::generator(table, g));
        return GeneratorMap(table, std::move(images));
    }

    const TablePtr& table() const { return table_; }
    const Element<C>& image(int g) const { return images_.at(g); }
    const std::vector<Element<C>>& images() const { return images_; }

    bool operator==(const GeneratorMap& other) const {
        return same_table(table_, other.table_) && images_ == other.images_;
    }

  private:
    TablePtr table_;
    std::vector<Element<C>> images_;
};

/// Applies the algebra-map extension of f to an element.
template <class C>
Element<C> substitute(const GeneratorMap<C>& f, const Element<C>& a) {
    require_same_table(f.table(), a.table(), "substitute");
    Element<C> out(a.table());
    for (const auto& [m, c] : a.terms()) {
        Element<C> prod = Element<C>::unit(a.table(), c);
        for (const auto& [g, e] : m.factors()) prod = multiply(prod, element_pow(f.image(g), e));
        out = add(out, prod);
    }
    return out;
}

/// compose(f, g) applies g first: the result maps a to f(g(a)).
template <class C>
GeneratorMap<C> compose(const GeneratorMap<C>& f, const GeneratorMap<C>& g) {
    require_same_table(f.table(), g.table(), "compose");
    std::vector<Element<C>> images;
    images.reserve(f.table()->size());
    for (int i = 0; i < f.table()->size(); ++i) images.push_back(substitute(f, g.image(i)));
    return GeneratorMap<C>(f.table(), std::move(images));
}

template <class C>
GeneratorMap<C> power(const GeneratorMap<C>& f, int n) {
    if (n < 0) throw ValidationError("power: negative exponent");
    GeneratorMap<C> acc = GeneratorMap<C>::identity(f.table());
    for (int i = 0; i < n; ++i) acc = compose(f, acc);
    return acc;
}

}  // namespace dgaut
