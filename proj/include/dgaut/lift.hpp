#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgaut/element.hpp"
#include "dgaut/encoder.hpp"
#include "dgaut/errors.hpp"
#include "dgaut/graph.hpp"

namespace dgaut {

// ---------------------------------------------------------------------------
// Lifting graph automorphisms to algebra automorphisms, and the kernel of
// the reverse direction: maps that fix the graph layer and shift the
// degree-119 generators by exact elements. Together these exhibit
// Aut(A,d) = K ⋊ Aut(G) with the canonical (m = 0) splitting.
// ---------------------------------------------------------------------------

/// Residuals substitute(f, d(g)) - d(f(g)) for every generator; empty result
/// means f commutes with the differential.
template <class C>
std::vector<std::pair<int, Element<C>>> commutation_residuals(const Derivation& d,
                                                              const GeneratorMap<C>& f) {
    require_same_table(d.table(), f.table(), "commutation_residuals");
    std::vector<std::pair<int, Element<C>>> out;
    for (int g = 0; g < d.table()->size(); ++g) {
        auto lhs = substitute(f, embed<C>(d.image(g)));
        auto rhs = d.apply(f.image(g));
        auto r = sub(lhs, rhs);
        if (!r.is_zero()) out.emplace_back(g, std::move(r));
    }
    return out;
}

template <class C>
void require_commutes(const Derivation& d, const GeneratorMap<C>& f) {
    auto residuals = commutation_residuals(d, f);
    if (!residuals.empty())
        throw LiftError(d.table()->name(residuals.front().first),
                        residuals.front().second.str());
}

/// The canonical lift of a vertex permutation: fixes x1, x2, y1, y2, y3 and
/// z, sends xv -> x_{sigma(v)} and zv -> z_{sigma(v)}. Commutation with d is
/// checked on every generator, so a permutation that is not a graph
/// automorphism is rejected with the offending residual.
inline GeneratorMap<Rational> lift(const Presentation& p, const EncodingShape& shape,
                                   const VertexPermutation& sigma) {
    int nv = static_cast<int>(shape.xv.size());
    if (static_cast<int>(sigma.size()) != nv)
        throw ValidationError("permutation size does not match vertex count");
    if (!is_valid_permutation(sigma)) throw ValidationError("not a permutation");
    const auto& t = p.table;
    std::vector<Element<Rational>> images;
    images.reserve(t->size());
    for (int g = 0; g < t->size(); ++g) images.push_back(Element<Rational>::generator(t, g));
    for (int v = 0; v < nv; ++v) {
        images[shape.xv[v]] = Element<Rational>::generator(t, shape.xv[sigma(v)]);
        images[shape.zv[v]] = Element<Rational>::generator(t, shape.zv[sigma(v)]);
    }
    GeneratorMap<Rational> f(t, std::move(images));
    require_commutes(p.d, f);
    return f;
}

inline GeneratorMap<Rational> lift(const Presentation& p, const VertexPermutation& sigma) {
    return lift(p, recover_shape(p), sigma);
}

/// The kernel map fixing everything except z -> z + d(m_z) and
/// zv -> zv + d(m_zv). Each m must be homogeneous of degree 118 (the zero
/// element qualifies); m_zv is keyed by vertex position.
inline GeneratorMap<Rational> kernel_element(const Presentation& p, const EncodingShape& shape,
                                             const Element<Rational>& m_z,
                                             const std::map<int, Element<Rational>>& m_zv = {}) {
    const auto& t = p.table;
    auto check_degree = [&](const Element<Rational>& m, const std::string& which) {
        require_same_table(t, m.table(), "kernel_element");
        if (!m.is_homogeneous_of(118))
            throw DegreeError(which + " must be homogeneous of degree 118");
    };
    check_degree(m_z, "m_z");
    std::vector<Element<Rational>> images;
    images.reserve(t->size());
    for (int g = 0; g < t->size(); ++g) images.push_back(Element<Rational>::generator(t, g));
    images[shape.z] = images[shape.z] + p.d.apply(m_z);
    for (const auto& [v, m] : m_zv) {
        if (v < 0 || v >= static_cast<int>(shape.zv.size()))
            throw ValidationError("m_zv key " + std::to_string(v) + " is not a vertex");
        check_degree(m, "m_zv[" + std::to_string(v) + "]");
        images[shape.zv[v]] = images[shape.zv[v]] + p.d.apply(m);
    }
    GeneratorMap<Rational> f(t, std::move(images));
    require_commutes(p.d, f);
    return f;
}

inline GeneratorMap<Rational> kernel_element(const Presentation& p,
                                             const Element<Rational>& m_z,
                                             const std::map<int, Element<Rational>>& m_zv = {}) {
    return kernel_element(p, recover_shape(p), m_z, m_zv);
}

struct KernelPropertyReport {
    bool kernel_shaped = true;  // fixes the graph layer, shifts are closed
    bool power_law = true;      // f^n(w) = w + n (f(w) - w) for 1 <= n <= nmax
    bool torsion_free = true;   // f != id implies f^n != id for 1 <= n <= nmax
    bool commuting = true;      // compose(f,g) = compose(g,f) on every generator
    std::string detail;

    bool ok() const { return kernel_shaped && power_law && torsion_free && commuting; }
};

/// Checks the advertised kernel behaviour of two maps: the linear power law
/// on every generator (which rules out torsion), and commutativity.
inline KernelPropertyReport check_kernel_properties(const Presentation& p,
                                                    const GeneratorMap<Rational>& f,
                                                    const GeneratorMap<Rational>& g,
                                                    int nmax = 5) {
    KernelPropertyReport rep;
    const auto& t = p.table;
    auto note = [&](bool& flag, const std::string& what) {
        flag = false;
        if (rep.detail.empty()) rep.detail = what;
    };

    for (const auto* h : {&f, &g}) {
        for (int i = 0; i < t->size(); ++i) {
            auto shift = h->image(i) - Element<Rational>::generator(t, i);
            if (shift.is_zero()) continue;
            if (t->degree(i) != 119)
                note(rep.kernel_shaped, "map moves generator '" + t->name(i) + "'");
            else if (!p.d.apply(shift).is_zero())
                note(rep.kernel_shaped, "shift of '" + t->name(i) + "' is not closed");
        }
    }

    for (const auto* h : {&f, &g}) {
        bool is_id = *h == GeneratorMap<Rational>::identity(t);
        auto fn = GeneratorMap<Rational>::identity(t);
        for (int n = 1; n <= nmax; ++n) {
            fn = compose(fn, *h);
            bool fn_is_id = true;
            for (int i = 0; i < t->size(); ++i) {
                auto base = Element<Rational>::generator(t, i);
                auto want = base + scale(Rational(n), h->image(i) - base);
                if (!(fn.image(i) == want))
                    note(rep.power_law, "power " + std::to_string(n) + " deviates from the "
                                        "linear law on '" + t->name(i) + "'");
                if (!(fn.image(i) == base)) fn_is_id = false;
            }
            if (!is_id && fn_is_id)
                note(rep.torsion_free, "power " + std::to_string(n) + " collapses to the identity");
        }
    }

    auto fg = compose(f, g), gf = compose(g, f);
    for (int i = 0; i < t->size(); ++i)
        if (!(fg.image(i) == gf.image(i)))
            note(rep.commuting, "maps do not commute on '" + t->name(i) + "'");
    return rep;
}

}  // namespace dgaut
