#pragma once

#include <utility>
#include <vector>

#include "dgaut/element.hpp"

namespace dgaut {

/// A degree +1 derivation, described by its value on each generator and
/// extended to products by the graded Leibniz rule.
class Derivation {
  public:
    Derivation(TablePtr table, std::vector<Element<Rational>> images)
        : table_(std::move(table)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != table_->size())
            throw ValidationError("Derivation: one image per generator required");
        for (const auto& img : images_)
            require_same_table(table_, img.table(), "Derivation");
    }

    static Derivation zero(TablePtr table) {
        std::vector<Element<Rational>> images(table->size(), Element<Rational>::zero(table));
        return Derivation(std::move(table), std::move(images));
    }

    const TablePtr& table() const { return table_; }
    const Element<Rational>& image(int g) const { return images_.at(g); }

    /// True when every generator image is zero or homogeneous of degree
    /// deg(g) + 1.
    bool degree_ok(int g) const {
        return images_.at(g).is_homogeneous_of(table_->degree(g) + 1);
    }

    /// d(m) for a single monomial, by the Leibniz split on the first factor:
    /// d(g^e rest) = e g^(e-1) d(g) rest + (-1)^(e deg g) g^e d(rest).
    template <class C>
    Element<C> apply_monomial(const Monomial& m) const {
        if (m.is_unit()) return Element<C>::zero(table_);
        auto [g, e] = m.first_factor();
        Monomial rest = m.tail();

        Element<C> head = Element<C>::zero(table_);
        if (!images_[g].is_zero()) {
            Element<C> dg = embed<C>(images_[g]);
            Element<C> prefix =
                Element<C>::term(table_, Monomial::power(g, e - 1),
                                 coeff_traits<C>::from_rational(Rational(e)));
            head = multiply(multiply(prefix, dg),
                            Element<C>::term(table_, rest, coeff_traits<C>::from_rational(1)));
        }

        Element<C> tail_part = apply_monomial<C>(rest);
        if (!tail_part.is_zero()) {
            bool flip = (static_cast<long>(e) * table_->degree(g)) % 2 != 0;
            Element<C> ge = Element<C>::term(
                table_, Monomial::power(g, e),
                coeff_traits<C>::from_rational(flip ? Rational(-1) : Rational(1)));
            tail_part = multiply(ge, tail_part);
        }
        return add(head, tail_part);
    }

    template <class C>
    Element<C> apply(const Element<C>& a) const {
        require_same_table(table_, a.table(), "Derivation::apply");
        Element<C> out = Element<C>::zero(table_);
        for (const auto& [m, c] : a.terms())
            out = add(out, scale(c, apply_monomial<C>(m)));
        return out;
    }

  private:
    TablePtr table_;
    std::vector<Element<Rational>> images_;
};

template <class C>
Element<C> apply(const Derivation& d, const Element<C>& a) {
    return d.apply(a);
}

/// d(d(g)) for every generator; a square-zero differential has all residuals
/// zero.
inline std::vector<std::pair<int, Element<Rational>>> check_d_squared(const Derivation& d) {
    std::vector<std::pair<int, Element<Rational>>> out;
    for (int g = 0; g < d.table()->size(); ++g)
        out.emplace_back(g, d.apply(d.image(g)));
    return out;
}

}  // namespace dgaut
