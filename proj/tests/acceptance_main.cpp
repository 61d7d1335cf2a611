// Acceptance run: one line per criterion, nonzero exit if any fails.
// Budgets are wall-clock and deliberately generous; correctness checks are
// exact. Pass the fixture directory as argv[1] (default: ./data).
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "dgaut/distinguish.hpp"
#include "dgaut/graph_aut.hpp"
#include "dgaut/io.hpp"
#include "dgaut/lift.hpp"
#include "dgaut/rigidity.hpp"
#include "dgaut/sampling.hpp"

using namespace dgaut;

namespace {

std::string g_data = "data";
bool g_all_ok = true;

struct Outcome {
    bool ok = true;
    std::string why;

    void fail(const std::string& reason) {
        if (ok) why = reason;
        ok = false;
    }
};

void criterion(int n, const std::string& what, std::optional<double> budget_s,
               const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s && dt > *budget_s)
        out.fail("took " + std::to_string(dt) + "s, budget " + std::to_string(*budget_s) + "s");
    if (out.ok)
        std::printf("[PASS] criterion %d: %s (%.2fs)\n", n, what.c_str(), dt);
    else
        std::printf("[FAIL] criterion %d: %s (%.2fs) -- %s\n", n, what.c_str(), dt,
                    out.why.c_str());
    std::fflush(stdout);
    g_all_ok = g_all_ok && out.ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_data = argv[1];
    const auto graphs = corpus::corpus_graphs();
    const auto groups = corpus::realization_groups();

    criterion(1, "d^2 = 0 on every corpus encoding", 10.0, [&](Outcome& out) {
        for (const auto& [name, g] : graphs) {
            auto cert = certify(encode_graph(g));
            if (!cert.ok()) out.fail(name + ": " + cert.first_failure());
        }
    });

    criterion(2, "encodings use exactly 2|V|+6 generators", std::nullopt, [&](Outcome& out) {
        for (const auto& [name, g] : graphs) {
            int want = 2 * g.n_vertices() + 6;
            int got = encode_graph(g).table->size();
            if (got != want)
                out.fail(name + ": " + std::to_string(got) + " generators, expected " +
                         std::to_string(want));
        }
    });

    criterion(3, "ten standard groups realize as graph automorphism groups", 300.0,
              [&](Outcome& out) {
                  for (const auto& [name, g] : groups) {
                      auto check = verify_realization(g, realize(g));
                      if (!check.ok) out.fail(name + ": " + check.detail);
                  }
              });

    criterion(4, "lifting is an injective homomorphism on every corpus graph", std::nullopt,
              [&](Outcome& out) {
                  for (const auto& [name, g] : graphs) {
                      auto p = encode_graph(g);
                      auto shape = recover_shape(p);
                      auto auts = automorphisms(g, 4096);
                      std::vector<GeneratorMap<Rational>> lifts;
                      for (const auto& s : auts) lifts.push_back(lift(p, shape, s));
                      for (size_t i = 0; i < auts.size() && out.ok; ++i)
                          for (size_t j = 0; j < auts.size() && out.ok; ++j) {
                              auto both = lift(p, shape, compose(auts[i], auts[j]));
                              if (!(both == compose(lifts[i], lifts[j])))
                                  out.fail(name + ": lift(s*t) != lift(s) o lift(t)");
                          }
                      for (size_t i = 0; i < lifts.size() && out.ok; ++i)
                          for (size_t j = i + 1; j < lifts.size() && out.ok; ++j)
                              if (lifts[i] == lifts[j]) out.fail(name + ": lift is not injective");
                  }
              });

    criterion(5, "sampled kernel maps obey the linear power and commutator laws", std::nullopt,
              [&](Outcome& out) {
                  Rng rng(corpus::kCorpusSeed);
                  for (const auto& [name, g] : graphs) {
                      auto p = encode_graph(g);
                      auto shape = recover_shape(p);
                      std::vector<GeneratorMap<Rational>> maps;
                      while (maps.size() < 20) {
                          auto m = random_homogeneous(rng, p.table, 118, 3);
                          if (maps.size() % 2 == 0) {
                              maps.push_back(kernel_element(p, shape, m));
                          } else {
                              int v = static_cast<int>(rng.below(shape.zv.size()));
                              auto mv = random_homogeneous(rng, p.table, 118, 3);
                              maps.push_back(kernel_element(p, shape, m, {{v, mv}}));
                          }
                      }
                      for (size_t i = 0; i + 1 < maps.size() && out.ok; i += 2) {
                          auto rep = check_kernel_properties(p, maps[i], maps[i + 1], 5);
                          if (!rep.ok()) out.fail(name + ": " + rep.detail);
                      }
                  }
              });

    criterion(6, "constraint solving recovers exactly the graph automorphisms (small graphs)",
              std::nullopt, [&](Outcome& out) {
                  for (const auto& [name, g] : graphs) {
                      if (g.n_vertices() > 5) continue;
                      auto t0 = std::chrono::steady_clock::now();
                      auto p = encode_graph(g);
                      auto res = solve_rigidity(p, g, RigidityOptions{});
                      double dt = std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() - t0).count();
                      if (dt > 120.0) {
                          out.fail(name + ": took " + std::to_string(dt) + "s, budget 120s");
                          continue;
                      }
                      if (res.status != RigidityStatus::Ok) {
                          out.fail(name + ": inconclusive");
                          continue;
                      }
                      auto auts = automorphisms(g);
                      if (res.solutions.size() != auts.size()) {
                          out.fail(name + ": " + std::to_string(res.solutions.size()) +
                                   " solutions vs " + std::to_string(auts.size()) +
                                   " automorphisms");
                          continue;
                      }
                      std::set<std::vector<int>> want, got;
                      for (const auto& s : auts) want.insert(s.image);
                      for (const auto& s : res.solutions) {
                          got.insert(s.sigma.image);
                          if (!s.admissible())
                              out.fail(name + ": non-admissible solution (scaling or "
                                       "non-permutation vertex action)");
                      }
                      if (got != want) out.fail(name + ": solution set differs from Aut");
                  }
              });

    criterion(7, "group comparison through the algebra agrees with the direct oracle", 600.0,
              [&](Outcome& out) {
                  auto by_name = [&](const std::string& n) {
                      for (const auto& [name, g] : groups)
                          if (name == n) return g;
                      throw std::runtime_error("no corpus group named " + n);
                  };
                  std::vector<std::pair<std::string, std::string>> pairs{
                      {"Z4", "Z2xZ2"}, {"Z6", "z2z3"}, {"S3", "Z6"}, {"D4", "Q8"}};
                  auto z2z3 = GroupTable::direct_product(GroupTable::cyclic(2),
                                                         GroupTable::cyclic(3));
                  auto resolve = [&](const std::string& n) {
                      return n == "z2z3" ? z2z3 : by_name(n);
                  };
                  for (const auto& [na, nb] : pairs) {
                      auto rep = distinguish(resolve(na), resolve(nb));
                      if (!rep.ok())
                          out.fail(na + " vs " + nb + ": " +
                                   (rep.failures.empty() ? "?" : rep.failures.front()));
                      else if (rep.chain_isomorphic != rep.oracle_isomorphic)
                          out.fail(na + " vs " + nb + ": verdicts disagree");
                  }
                  for (const auto& [name, g] : groups) {
                      auto rep = distinguish(g, g);
                      if (!rep.ok() || !rep.chain_isomorphic)
                          out.fail(name + " vs itself: " +
                                   (rep.failures.empty() ? "not isomorphic" : rep.failures.front()));
                  }
              });

    criterion(8, "canonical files survive a parse/serialize round trip byte for byte",
              std::nullopt, [&](Outcome& out) {
                  for (const char* rel : {"graphs/single.edges", "graphs/p2.edges",
                                          "graphs/p3.edges", "graphs/p4.edges", "graphs/k3.edges",
                                          "graphs/k4.edges", "graphs/c5.edges",
                                          "graphs/petersen.edges", "graphs/disconnected.edges"}) {
                      auto text = read_file(g_data + "/" + rel);
                      if (serialize_graph(parse_graph(text)) != text)
                          out.fail(std::string(rel) + ": bytes changed");
                  }
                  for (const char* rel :
                       {"groups/trivial.gtab", "groups/z2.gtab", "groups/z3.gtab",
                        "groups/z4.gtab", "groups/z5.gtab", "groups/z6.gtab", "groups/z2z2.gtab",
                        "groups/z2z3.gtab", "groups/s3.gtab", "groups/d4.gtab", "groups/q8.gtab",
                        "groups/z4z4.gtab"}) {
                      auto text = read_file(g_data + "/" + rel);
                      if (serialize_group(parse_group(text)) != text)
                          out.fail(std::string(rel) + ": bytes changed");
                  }
                  for (const char* rel : {"p3.dga", "k3.dga"}) {
                      auto text = read_file(g_data + "/" + rel);
                      if (serialize_presentation(parse_presentation(text)) != text)
                          out.fail(std::string(rel) + ": bytes changed");
                  }
              });

    criterion(9, "1000 randomized algebra law checks per law", 30.0, [&](Outcome& out) {
        Rng rng(corpus::kCorpusSeed + 9);
        auto t = make_table({{"a", 3}, {"b", 4}, {"c", 5}, {"e", 2}, {"f", 7}});
        for (int i = 0; i < 1000 && out.ok; ++i) {
            auto xm = random_monomial(rng, *t, 1 + rng.below(3));
            auto ym = random_monomial(rng, *t, 1 + rng.below(3));
            auto ex = Element<Rational>::term(t, xm, rng.coefficient());
            auto ey = Element<Rational>::term(t, ym, rng.coefficient());
            int sign = (xm.degree(*t) % 2) * (ym.degree(*t) % 2) ? -1 : 1;
            if (!sub(multiply(ex, ey), scale(Rational(sign), multiply(ey, ex))).is_zero())
                out.fail("graded commutativity violated");
        }
        for (int i = 0; i < 1000 && out.ok; ++i) {
            auto x = random_element(rng, t, 3), y = random_element(rng, t, 3),
                 z = random_element(rng, t, 2);
            if (!sub(multiply(multiply(x, y), z), multiply(x, multiply(y, z))).is_zero())
                out.fail("associativity violated");
        }
        auto p = encode_graph(corpus::path_graph(3));
        for (int i = 0; i < 1000 && out.ok; ++i) {
            auto xm = random_monomial(rng, *p.table, 1 + rng.below(3));
            auto x = Element<Rational>::term(p.table, xm, rng.coefficient());
            auto y = random_element(rng, p.table, 2, 3);
            int sign = xm.degree(*p.table) % 2 ? -1 : 1;
            auto want =
                add(multiply(p.d.apply(x), y), scale(Rational(sign), multiply(x, p.d.apply(y))));
            if (!sub(p.d.apply(multiply(x, y)), want).is_zero()) out.fail("Leibniz violated");
        }
        // substitution along a degree-preserving generator map is a ring map
        auto q = encode_graph(corpus::complete_graph(3));
        auto shape = recover_shape(q);
        VertexPermutation rot;
        rot.image = {1, 2, 0};
        auto f = lift(q, shape, rot);
        for (int i = 0; i < 1000 && out.ok; ++i) {
            auto x = random_element(rng, q.table, 2, 3);
            auto y = random_element(rng, q.table, 2, 3);
            if (!sub(substitute(f, multiply(x, y)), multiply(substitute(f, x), substitute(f, y)))
                     .is_zero())
                out.fail("substitution is not multiplicative");
            if (!sub(substitute(f, add(x, y)), add(substitute(f, x), substitute(f, y))).is_zero())
                out.fail("substitution is not additive");
        }
    });

    std::printf("%s\n", g_all_ok ? "acceptance: all criteria satisfied"
                                 : "acceptance: at least one criterion FAILED");
    return g_all_ok ? 0 : 1;
}
