#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dgaut/element.hpp"
#include "dgaut/errors.hpp"
#include "dgaut/graph.hpp"
#include "dgaut/presentation.hpp"

namespace dgaut {

// ---------------------------------------------------------------------------
// The graph encoding. A graph G = (V, E) is turned into a differential
// graded algebra with generators
//
//   x1 (8), x2 (10), y1 (33), y2 (35), y3 (37),
//   one xv:<v> (40) per vertex, z (119), one zv:<v> (119) per vertex,
//
// and differential
//
//   d x1 = d x2 = d xv = 0
//   d y1 = x1^3 x2,  d y2 = x1^2 x2^2,  d y3 = x1 x2^3
//   d z  = y1 y2 x1^4 x2^2 - y1 y3 x1^5 x2 + y2 y3 x1^6 + x1^15 + x2^12
//   d zv = xv^3 + sum over edges [v,w] of xv xw x2^4
//
// The adjacency terms of d(zv) carry the whole graph, so the graph (and
// with it the automorphism group) can be read back off the presentation.
// ---------------------------------------------------------------------------

/// Where each role sits in the generator table of an encoded graph.
struct EncodingShape {
    int x1 = -1, x2 = -1, y1 = -1, y2 = -1, y3 = -1, z = -1;
    std::vector<int> xv;  // degree-40 generators, one per vertex, table order
    std::vector<int> zv;  // zv[i] is the partner of xv[i]
    Graph graph;          // vertices in xv order
};

namespace detail {

inline Element<Rational> y_differential(const TablePtr& t, int x1, int x2, int e1) {
    return Element<Rational>::term(t, Monomial::from_sorted({{x1, e1}, {x2, 4 - e1}}), 1);
}

inline Element<Rational> z_differential(const TablePtr& t, int x1, int x2, int y1, int y2,
                                        int y3) {
    auto term = [&](Rational c, std::vector<Monomial::Factor> f) {
        return Element<Rational>::term(t, Monomial::from_sorted(std::move(f)), c);
    };
    return term(1, {{x1, 4}, {x2, 2}, {y1, 1}, {y2, 1}}) +
           term(-1, {{x1, 5}, {x2, 1}, {y1, 1}, {y3, 1}}) +
           term(1, {{x1, 6}, {y2, 1}, {y3, 1}}) + term(1, {{x1, 15}}) + term(1, {{x2, 12}});
}

inline Element<Rational> zv_differential(const TablePtr& t, int x2, int xv,
                                         const std::vector<int>& neighbor_xv) {
    auto out = Element<Rational>::term(t, Monomial::power(xv, 3), 1);
    for (int xw : neighbor_xv) {
        int lo = std::min(xv, xw), hi = std::max(xv, xw);
        out = out + Element<Rational>::term(
                        t, Monomial::from_sorted({{x2, 4}, {lo, 1}, {hi, 1}}), 1);
    }
    return out;
}

}  // namespace detail

inline Presentation encode_graph(const Graph& g) {
    const int nv = g.n_vertices();
    std::vector<GeneratorInfo> gens;
    gens.reserve(2 * nv + 6);
    gens.push_back({"x1", 8});
    gens.push_back({"x2", 10});
    gens.push_back({"y1", 33});
    gens.push_back({"y2", 35});
    gens.push_back({"y3", 37});
    for (const auto& tok : g.tokens()) {
        if (!detail::valid_generator_name("xv:" + tok))
            throw ValidationError("vertex token '" + tok + "' cannot name a generator");
        gens.push_back({"xv:" + tok, 40});
    }
    gens.push_back({"z", 119});
    for (const auto& tok : g.tokens()) gens.push_back({"zv:" + tok, 119});
    auto t = make_table(std::move(gens));

    const int x1 = 0, x2 = 1, y1 = 2, y2 = 3, y3 = 4, xv0 = 5, z = 5 + nv, zv0 = 6 + nv;
    std::vector<Element<Rational>> images(t->size(), Element<Rational>::zero(t));
    images[y1] = detail::y_differential(t, x1, x2, 3);
    images[y2] = detail::y_differential(t, x1, x2, 2);
    images[y3] = detail::y_differential(t, x1, x2, 1);
    images[z] = detail::z_differential(t, x1, x2, y1, y2, y3);
    for (int v = 0; v < nv; ++v) {
        std::vector<int> nbr;
        for (int w : g.neighbors(v)) nbr.push_back(xv0 + w);
        images[zv0 + v] = detail::zv_differential(t, x2, xv0 + v, nbr);
    }
    return Presentation(t, Derivation(t, std::move(images)));
}

/// Identifies the encoding roles in a presentation and rebuilds the graph.
/// Throws StructureError when the presentation is not an encoded graph.
inline EncodingShape recover_shape(const Presentation& p) {
    const auto& t = p.table;
    EncodingShape shape;
    std::vector<int> deg119;
    auto claim = [&](int& slot, int g, const char* what) {
        if (slot != -1)
            throw StructureError(std::string("more than one generator of the ") + what +
                                 " kind");
        slot = g;
    };
    for (int g = 0; g < t->size(); ++g) {
        switch (t->degree(g)) {
            case 8: claim(shape.x1, g, "degree-8"); break;
            case 10: claim(shape.x2, g, "degree-10"); break;
            case 33: claim(shape.y1, g, "degree-33"); break;
            case 35: claim(shape.y2, g, "degree-35"); break;
            case 37: claim(shape.y3, g, "degree-37"); break;
            case 40: shape.xv.push_back(g); break;
            case 119: deg119.push_back(g); break;
            default:
                throw StructureError("unexpected generator degree " +
                                     std::to_string(t->degree(g)) + " for '" + t->name(g) +
                                     "'");
        }
    }
    for (auto [slot, what] : {std::pair{shape.x1, "degree-8"},
                              {shape.x2, "degree-10"},
                              {shape.y1, "degree-33"},
                              {shape.y2, "degree-35"},
                              {shape.y3, "degree-37"}})
        if (slot == -1) throw StructureError(std::string("missing the ") + what + " generator");
    if (deg119.size() != shape.xv.size() + 1)
        throw StructureError("degree-119 generator count must exceed degree-40 count by one");

    // z is the degree-119 generator whose differential contains x1^15
    const Monomial x1_15 = Monomial::power(shape.x1, 15);
    std::vector<int> zv_unordered;
    for (int g : deg119) {
        if (p.d.image(g).coefficient(x1_15) != 0)
            claim(shape.z, g, "top-cocycle");
        else
            zv_unordered.push_back(g);
    }
    if (shape.z == -1) throw StructureError("no degree-119 generator with an x1^15 term");

    auto expect = [&](int g, const Element<Rational>& want) {
        if (!(p.d.image(g) == want))
            throw StructureError("differential of '" + t->name(g) +
                                 "' does not have the encoded form");
    };
    expect(shape.x1, Element<Rational>::zero(t));
    expect(shape.x2, Element<Rational>::zero(t));
    for (int g : shape.xv) expect(g, Element<Rational>::zero(t));
    expect(shape.y1, detail::y_differential(t, shape.x1, shape.x2, 3));
    expect(shape.y2, detail::y_differential(t, shape.x1, shape.x2, 2));
    expect(shape.y3, detail::y_differential(t, shape.x1, shape.x2, 1));
    expect(shape.z, detail::z_differential(t, shape.x1, shape.x2, shape.y1, shape.y2, shape.y3));

    // Pair each remaining degree-119 generator with a vertex via its cube
    // term, and read the edges off the adjacency terms.
    std::map<int, int> xv_pos;
    for (size_t i = 0; i < shape.xv.size(); ++i) xv_pos[shape.xv[i]] = static_cast<int>(i);
    shape.zv.assign(shape.xv.size(), -1);
    std::set<std::pair<int, int>> edges;  // positions, lo < hi
    for (int g : zv_unordered) {
        int vertex = -1;
        std::set<std::pair<int, int>> local;
        for (const auto& [m, c] : p.d.image(g).terms()) {
            if (c != 1)
                throw StructureError("coefficient of a term of d('" + t->name(g) +
                                     "') is not 1");
            const auto& f = m.factors();
            if (f.size() == 1 && f[0].second == 3 && xv_pos.count(f[0].first)) {
                if (vertex != -1)
                    throw StructureError("two cube terms in d('" + t->name(g) + "')");
                vertex = xv_pos[f[0].first];
            } else if (f.size() == 3 && f[0] == Monomial::Factor{shape.x2, 4} &&
                       f[1].second == 1 && f[2].second == 1 && xv_pos.count(f[1].first) &&
                       xv_pos.count(f[2].first)) {
                local.emplace(xv_pos[f[1].first], xv_pos[f[2].first]);
            } else {
                throw StructureError("unexpected term " + m.str(*t) + " in d('" + t->name(g) +
                                     "')");
            }
        }
        if (vertex == -1) throw StructureError("no cube term in d('" + t->name(g) + "')");
        if (shape.zv[vertex] != -1)
            throw StructureError("two degree-119 partners for '" + t->name(shape.xv[vertex]) +
                                 "'");
        shape.zv[vertex] = g;
        for (auto [a, b] : local) {
            if (a != vertex && b != vertex)
                throw StructureError("adjacency term of d('" + t->name(g) +
                                     "') does not involve its own vertex");
            edges.emplace(a, b);
        }
    }

    // Every edge must be recorded from both endpoints.
    for (auto [a, b] : edges) {
        int other = -1;
        for (int side : {a, b}) {
            other = a + b - side;
            const auto& img = p.d.image(shape.zv[side]);
            int lo = std::min(shape.xv[a], shape.xv[b]), hi = std::max(shape.xv[a], shape.xv[b]);
            if (img.coefficient(Monomial::from_sorted({{shape.x2, 4}, {lo, 1}, {hi, 1}})) != 1)
                throw StructureError("edge between '" + t->name(shape.xv[a]) + "' and '" +
                                     t->name(shape.xv[other]) +
                                     "' is missing from one of the two differentials");
        }
    }

    // Vertex tokens: strip the conventional prefix when present.
    for (int g : shape.xv) {
        std::string name = t->name(g);
        std::string tok = name.rfind("xv:", 0) == 0 ? name.substr(3) : name;
        if (shape.graph.has_vertex(tok))
            throw StructureError("vertex token '" + tok + "' appears twice");
        shape.graph.add_vertex(tok);
    }
    for (auto [a, b] : edges)
        shape.graph.add_edge(shape.graph.token(a), shape.graph.token(b));
    return shape;
}

inline Graph recover_graph(const Presentation& p) { return recover_shape(p).graph; }

}  // namespace dgaut
