#pragma once

#include <string>
#include <vector>

#include "dgaut/group_iso.hpp"
#include "dgaut/realize.hpp"
#include "dgaut/rigidity.hpp"

namespace dgaut {

// ---------------------------------------------------------------------------
// Comparing two finite groups through the algebras they determine: each group
// is realized as the automorphism group of a graph, the graph is encoded as a
// differential graded algebra, and the group is recovered from that algebra's
// automorphisms alone. The verdict compares the two recovered groups; the
// direct table-isomorphism oracle runs alongside, and any disagreement is a
// hard failure rather than a judgement call.
// ---------------------------------------------------------------------------

struct DistinguishOptions {
    bool oracle_only = false;
    RigidityOptions rigidity{};
    int iso_cap = 64;                // table-isomorphism backtracking cap
    int realization_aut_cap = 4096;  // automorphism cap while verifying the realized graph
};

struct ChainOutcome {
    int group_order = 0;
    int n_vertices = 0;
    bool realization_verified = false;
    bool certified = false;
    std::string rigidity_mode;
    int n_solutions = 0;
    bool rigidity_ok = false;
    bool recovered_matches_input = false;
    GroupTable recovered = GroupTable::trivial();
    std::vector<std::string> notes;

    bool ok() const {
        return realization_verified && certified && rigidity_ok && recovered_matches_input;
    }
};

struct DistinguishReport {
    bool oracle_isomorphic = false;
    bool chain_ran = false;
    bool chain_isomorphic = false;
    bool agreement = true;  // chain verdict equals the oracle verdict
    ChainOutcome a, b;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

namespace distinguish_detail {

inline ChainOutcome run_chain(const GroupTable& g, const DistinguishOptions& opt) {
    ChainOutcome out;
    out.group_order = g.n;

    // Cheap precheck: the realized graph's size is known in closed form, so a
    // doomed run fails before any expensive construction.
    long long nv = realize_vertex_count(g.n);
    if (nv > opt.rigidity.search_cap)
        throw ResourceError("solve_rigidity: realized graph for a group of order " +
                            std::to_string(g.n) + " would have " + std::to_string(nv) +
                            " vertices, exceeding cap " +
                            std::to_string(opt.rigidity.search_cap));

    Graph graph = realize(g);
    out.n_vertices = graph.n_vertices();
    RealizationCheck check = verify_realization(g, graph, opt.realization_aut_cap);
    out.realization_verified = check.ok;
    if (!check.ok) {
        out.notes.push_back("realization: " + check.detail);
        return out;
    }

    Presentation p = encode_graph(graph);
    CertifyReport cert = certify(p);
    out.certified = cert.ok();
    if (!out.certified) {
        out.notes.push_back("certification: " + cert.first_failure());
        return out;
    }

    RigidityResult rig = solve_rigidity(p, graph, opt.rigidity);
    out.rigidity_mode = rig.mode;
    out.n_solutions = static_cast<int>(rig.solutions.size());
    out.rigidity_ok = rig.status == RigidityStatus::Ok;
    for (const auto& n : rig.notes) out.notes.push_back("rigidity: " + n);
    if (!out.rigidity_ok) return out;

    std::vector<VertexPermutation> sigmas;
    sigmas.reserve(rig.solutions.size());
    for (const auto& s : rig.solutions) sigmas.push_back(s.sigma);
    out.recovered = automorphism_group_table(sigmas);
    out.recovered_matches_input =
        is_isomorphic(g, out.recovered, opt.iso_cap).isomorphic;
    if (!out.recovered_matches_input)
        out.notes.push_back("recovered automorphism group is not isomorphic to the input group");
    return out;
}

}  // namespace distinguish_detail

inline DistinguishReport distinguish(const GroupTable& a, const GroupTable& b,
                                     const DistinguishOptions& opt = {}) {
    for (const GroupTable* t : {&a, &b}) {
        GroupValidation v = validate(*t);
        if (!v.ok) throw ValidationError("not a group table: " + v.detail);
    }

    DistinguishReport rep;
    rep.oracle_isomorphic = is_isomorphic(a, b, opt.iso_cap).isomorphic;
    if (opt.oracle_only) return rep;

    rep.chain_ran = true;
    rep.a = distinguish_detail::run_chain(a, opt);
    rep.b = distinguish_detail::run_chain(b, opt);
    for (auto [label, outcome] : {std::pair{"first", &rep.a}, std::pair{"second", &rep.b}}) {
        const ChainOutcome& c = *outcome;
        if (!c.realization_verified)
            rep.failures.push_back(std::string("realization not verified for the ") +
                                   std::string(label) + " group");
        else if (!c.certified)
            rep.failures.push_back(std::string("encoded algebra failed certification for the ") +
                                   std::string(label) + " group");
        else if (!c.rigidity_ok)
            rep.failures.push_back(std::string("rigidity analysis inconclusive for the ") +
                                   std::string(label) + " group");
        else if (!c.recovered_matches_input)
            rep.failures.push_back(std::string("recovered group mismatch for the ") +
                                   std::string(label) + " group");
    }
    if (!rep.failures.empty()) return rep;

    rep.chain_isomorphic =
        is_isomorphic(rep.a.recovered, rep.b.recovered, opt.iso_cap).isomorphic;
    rep.agreement = rep.chain_isomorphic == rep.oracle_isomorphic;
    if (!rep.agreement)
        rep.failures.push_back("chain verdict disagrees with the direct oracle");
    return rep;
}

}  // namespace dgaut
