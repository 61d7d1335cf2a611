#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgaut/errors.hpp"
#include "dgaut/graph.hpp"
#include "dgaut/graph_aut.hpp"
#include "dgaut/group_iso.hpp"
#include "dgaut/group_table.hpp"

namespace dgaut {

// ---------------------------------------------------------------------------
// Realizing a finite group as the automorphism group of a connected graph.
//
// For |G| >= 3 we take the Cayley graph of G with connection set all of
// G \ {e}, and replace each directed edge u -> u*s of color c (the index of
// s in 1..n-1) by an undirected gadget
//
//        u --- p --- q --- u*s
//              |     |
//             tail  tail          (pendant paths, lengths 2c and 2c+1)
//
// Tail lengths encode both the color and the direction, so every graph
// automorphism preserves the colored digraph; with the full connection set
// those are exactly the left translations. Base vertices have degree
// 2(n-1) >= 4, gadget vertices degree <= 3, so the two layers never mix.
// ---------------------------------------------------------------------------

/// Smallest graph with trivial automorphism group that is connected and
/// has more than one vertex; used for the order-1 group.
inline Graph asymmetric_graph() {
    Graph g;
    for (const char* t : {"a", "b", "c", "d", "e", "f"}) g.add_vertex(t);
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "a");
    g.add_edge("a", "d");
    g.add_edge("b", "e");
    g.add_edge("e", "f");
    return g;
}

/// Number of vertices realize() will produce, without building the graph.
inline long long realize_vertex_count(int group_order) {
    if (group_order == 1) return 6;
    if (group_order == 2) return 2;
    long long n = group_order;
    long long total = n;
    for (long long c = 1; c < n; ++c) total += n * (4 * c + 3);
    return total;
}

inline Graph realize(const GroupTable& g) {
    auto check = validate(g);
    if (!check.ok) throw ValidationError("not a group table: " + check.detail);
    if (g.n == 1) return asymmetric_graph();
    if (g.n == 2) {
        Graph out;
        out.add_edge("g0", "g1");
        return out;
    }
    Graph out;
    for (int k = 0; k < g.n; ++k) out.add_vertex("g" + std::to_string(k));
    for (int c = 1; c < g.n; ++c) {
        for (int u = 0; u < g.n; ++u) {
            int v = g.at(u, c);
            std::string prefix = "c" + std::to_string(c) + "u" + std::to_string(u);
            std::string p = prefix + "p", q = prefix + "q";
            out.add_edge("g" + std::to_string(u), p);
            out.add_edge(p, q);
            out.add_edge(q, "g" + std::to_string(v));
            std::string prev = p;
            for (int j = 1; j <= 2 * c; ++j) {
                std::string t = prefix + "a" + std::to_string(j);
                out.add_edge(prev, t);
                prev = t;
            }
            prev = q;
            for (int j = 1; j <= 2 * c + 1; ++j) {
                std::string t = prefix + "b" + std::to_string(j);
                out.add_edge(prev, t);
                prev = t;
            }
        }
    }
    return out;
}

struct RealizationCheck {
    bool ok = false;
    std::string detail;
    int n_automorphisms = 0;
    // When ok: group element -> index into the sorted automorphism list.
    std::optional<std::vector<int>> witness;
};

/// Multiplication table of a set of permutations closed under composition,
/// with perms[0] the identity. Throws if the set is not closed.
inline GroupTable automorphism_group_table(const std::vector<VertexPermutation>& perms) {
    std::map<VertexPermutation, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<int>(i));
    int n = static_cast<int>(perms.size());
    std::vector<int> entries(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index.find(compose(perms[i], perms[j]));
            if (it == index.end())
                throw StructureError("automorphism set is not closed under composition");
            entries[i * n + j] = it->second;
        }
    return GroupTable(n, std::move(entries));
}

/// Checks that the automorphism group of `graph` is isomorphic to `g`.
inline RealizationCheck verify_realization(const GroupTable& g, const Graph& graph,
                                           int aut_cap = 2048) {
    if (!is_connected(graph)) return {false, "graph is not connected", 0, std::nullopt};
    auto auts = automorphisms(graph, aut_cap);
    RealizationCheck result;
    result.n_automorphisms = static_cast<int>(auts.size());
    if (static_cast<int>(auts.size()) != g.n) {
        result.detail = "automorphism count " + std::to_string(auts.size()) +
                        " differs from group order " + std::to_string(g.n);
        return result;
    }
    auto table = automorphism_group_table(auts);
    auto iso = is_isomorphic(g, table, std::max(g.n, kDefaultIsoCap));
    if (!iso.isomorphic) {
        result.detail = "automorphism group is a different group of the same order";
        return result;
    }
    result.ok = true;
    result.witness = std::move(iso.witness);
    return result;
}

}  // namespace dgaut
