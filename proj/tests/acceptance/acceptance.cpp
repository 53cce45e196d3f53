// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ccsub/common_index.hpp"
#include "ccsub/detect.hpp"
#include "ccsub/edge_list.hpp"
#include "ccsub/enumerate.hpp"
#include "ccsub/generators.hpp"
#include "ccsub/registry.hpp"
#include "cli.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

namespace {

using namespace ccsub;
using testing::census;
using testing::Collector;
using testing::Matrix;
using testing::NamedGraph;
using testing::Tuple;
using testing::TupleSet;

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
    else if (failures.size() == 20) failures.push_back("...");
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const std::vector<NamedGraph>& corpus() {
  static const std::vector<NamedGraph> all = testing::full_corpus(40);
  return all;
}

const TupleSet& occurrences(const std::map<Pattern, TupleSet>& truth, Pattern p) {
  static const TupleSet none;
  const auto it = truth.find(p);
  return it == truth.end() ? none : it->second;
}

Tuple tuple_of(const VertexTuple& t) { return Tuple(t.begin(), t.end()); }

// Largest independent set inside N(v), stopping once `cap` is reached.
std::size_t max_star(const Matrix& m, Vertex v, std::size_t cap) {
  std::vector<Vertex> nb;
  for (Vertex u = 0; u < m.size(); ++u) {
    if (m(u, v)) nb.push_back(u);
  }
  std::size_t best = 0;
  std::vector<Vertex> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, chosen.size());
    if (best >= cap) return;
    for (std::size_t i = from; i < nb.size() && best < cap; ++i) {
      if (chosen.size() + (nb.size() - i) <= best) return;
      if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex w) { return m(w, nb[i]); })) {
        continue;
      }
      chosen.push_back(nb[i]);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

// ---- 1 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t gnp = 0, checks = 0, skipped = 0;
  for (const auto& [name, g] : corpus()) {
    if (name.rfind("gnp", 0) == 0) ++gnp;
    const auto truth = census(g, true);
    const bool gem_free = occurrences(truth, Pattern::kGem).empty();

    for (const EnumeratorEntry& e : enumerators()) {
      ++checks;
      const std::string who = name + " enumerate " + std::string(pattern_name(e.pattern)) +
                              ":" + std::string(e.algo);
      Collector col(e.pattern);
      std::size_t count = 0;
      try {
        count = e.run(g, std::ref(col), nullptr);
      } catch (const std::exception& ex) {
        out.fail(who + " threw " + ex.what());
        continue;
      }
      const TupleSet& want = occurrences(truth, e.pattern);
      out.expect(col.duplicates == 0 && col.mislabeled == 0, who + " duplicate/mislabel");
      out.expect(count == col.seen.size(), who + " count differs from stream");
      out.expect(col.seen == want, who + " emitted " + std::to_string(col.seen.size()) +
                                       ", oracle " + std::to_string(want.size()));
    }

    for (const DetectorEntry& d : detectors()) {
      const std::string who = name + " detect " + std::string(pattern_name(d.pattern)) +
                              ":" + std::string(d.algo);
      const TupleSet& want = occurrences(truth, d.pattern);
      DetectionResult r;
      try {
        r = d.run(g, nullptr);
      } catch (const std::exception& ex) {
        out.fail(who + " threw " + ex.what());
        continue;
      }
      const bool witness_ok =
          !r.found() || (r.witness->pattern == d.pattern && want.count(tuple_of(r.witness->vertices)));
      if (d.requires_gem_free && !gem_free) {
        // Outside its precondition only soundness is required.
        ++skipped;
        out.expect(witness_ok, who + " returned a false witness");
        continue;
      }
      ++checks;
      out.expect(r.found() == !want.empty(), who + (r.found() ? " found" : " missed"));
      out.expect(witness_ok, who + " witness not an occurrence");
    }

    // Parametric K_{1,k} and K_k searches.
    const Matrix m(g);
    std::size_t star = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) star = std::max(star, max_star(m, v, 7));
    std::size_t omega = g.num_vertices() > 0 ? 1 : 0;
    for (const auto& c : testing::maximal_cliques(g)) omega = std::max(omega, c.size());
    for (int k = 2; k <= 7; ++k) {
      ++checks;
      const DetectionResult r = detect_star(g, k);
      out.expect(r.found() == (star >= static_cast<std::size_t>(k)),
                 name + " star k=" + std::to_string(k));
      if (r.found()) {
        out.expect(induces(g, r.witness->vertices.span(), Pattern::kStar),
                   name + " star witness k=" + std::to_string(k));
      }
    }
    for (int k = 3; k <= 8; ++k) {
      ++checks;
      const DetectionResult r = detect_clique(g, k);
      out.expect(r.found() == (omega >= static_cast<std::size_t>(k)),
                 name + " clique k=" + std::to_string(k));
      if (r.found()) {
        out.expect(induces(g, r.witness->vertices.span(), Pattern::kClique) &&
                       r.witness->vertices.size() == static_cast<std::size_t>(k),
                   name + " clique witness k=" + std::to_string(k));
      }
    }
  }
  out.expect(gnp >= 200, "only " + std::to_string(gnp) + " gnp graphs");
  out.summary = std::to_string(corpus().size()) + " graphs (" + std::to_string(gnp) +
                " gnp), " + std::to_string(checks) + " comparisons, " +
                std::to_string(skipped) + " gem-free-only runs held to soundness";
  return out;
}

// ---- 2 ---------------------------------------------------------------------

Outcome i2_catalog() {
  Outcome out;
  const std::map<Pattern, int> known{{Pattern::kSquare, 2},
                                     {Pattern::kClaw, 3},
                                     {Pattern::kK4, 4},
                                     {Pattern::kEmpty4, 4}};
  for (const auto& [p, want] : known) {
    out.expect(compute_i2(pattern_info(p)) == want,
               "i2(" + std::string(pattern_name(p)) + ") != " + std::to_string(want));
  }
  for (const PatternInfo& info : catalog()) {
    const int computed = compute_i2(info);
    const int ref = testing::reference_i2(testing::reference(info.id));
    const std::string name(info.name);
    out.expect(info.i2 == computed, name + " stored i2 " + std::to_string(info.i2) +
                                        " vs computed " + std::to_string(computed));
    out.expect(ref == computed, name + " reference i2 " + std::to_string(ref));
    out.expect(static_cast<int>(std::popcount(info.anchor_mask)) == computed,
               name + " anchor set size");
    out.expect(info.anchor_mask == optimal_anchor_mask(info), name + " anchor mask");
    out.expect(info.nu == testing::reference_nu(testing::reference(info.id)), name + " nu");
  }
  out.summary = std::to_string(catalog().size()) + " catalog entries";
  return out;
}

// ---- 3 ---------------------------------------------------------------------

Outcome closure_values() {
  Outcome out;
  auto expect_c = [&](const std::string& what, const Graph& g, std::size_t want) {
    const std::size_t c = compute_closure(g).c;
    out.expect(c == want, what + ": c = " + std::to_string(c) + ", want " + std::to_string(want));
  };
  for (std::size_t n = 1; n <= 12; ++n) expect_c("K" + std::to_string(n), gen_complete(n), 1);
  for (std::size_t n = 4; n <= 14; ++n) {
    expect_c("K_{2," + std::to_string(n - 2) + "}", gen_complete_bipartite(2, n - 2), n - 1);
  }
  for (std::size_t t = 2; t <= 20; ++t) expect_c("star(" + std::to_string(t) + ")", gen_star(t), 2);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    expect_c("projective(" + std::to_string(p) + ")", gen_projective(p), 3);
  }
  std::size_t blowups = 0;
  for (const PatternInfo& info : catalog()) {
    if (!occurrences(census(gen_blowup(info.id, info.order)), Pattern::kP3).empty()) continue;
    for (std::size_t b : {1u, 2u, 3u, 5u, 8u}) {
      ++blowups;
      expect_c("blowup(" + std::string(info.name) + "," + std::to_string(b * info.order) + ")",
               gen_blowup(info.id, b * info.order), 1);
    }
  }
  for (const auto& [name, g] : corpus()) {
    const ClosureReport fast = compute_closure(g);
    out.expect(fast == compute_closure_naive(g), name + ": fast != naive");
    out.expect(fast.c == testing::reference_closure(g), name + ": fast != reference");
  }
  out.summary = std::to_string(blowups) + " P3-free blowups, fast = naive = reference on " +
                std::to_string(corpus().size()) + " graphs";
  return out;
}

// ---- 4 ---------------------------------------------------------------------

Outcome structural_counts() {
  Outcome out;
  std::size_t cases = 0;
  auto check = [&](const std::string& what, const Graph& g, Pattern p, std::size_t want) {
    ++cases;
    const std::size_t oracle = occurrences(census(g, p == Pattern::kGem), p).size();
    out.expect(oracle == want, what + " oracle " + std::to_string(oracle) + " vs formula " +
                                   std::to_string(want));
    for (const EnumeratorEntry* e : enumerators_for(p)) {
      const std::size_t got =
          e->run(g, [](const Occurrence&) { return Visit::kContinue; }, nullptr);
      out.expect(got == want, what + " " + std::string(e->algo) + " " + std::to_string(got) +
                                  " vs " + std::to_string(want));
    }
  };
  using testing::choose;
  for (std::size_t t = 3; t <= 8; ++t) {
    const Graph g = gen_star(t);
    check("star(" + std::to_string(t) + ") P3", g, Pattern::kP3, choose(t, 2));
    check("star(" + std::to_string(t) + ") claw", g, Pattern::kClaw, choose(t, 3));
  }
  for (std::size_t t = 2; t <= 6; ++t) {
    check("double_star(" + std::to_string(t) + ") P4", gen_double_star(t), Pattern::kP4, t * t);
  }
  for (std::size_t n = 5; n <= 10; ++n) {
    check("k2_bipartite_plus_edge(" + std::to_string(n) + ") diamond",
          gen_k2_bipartite_plus_edge(n), Pattern::kDiamond, choose(n - 2, 2));
  }
  for (std::size_t k = 3; k <= 6; ++k) {
    for (std::size_t t = 1; t <= 4; ++t) {
      check("clique_pendants(" + std::to_string(k) + "," + std::to_string(t) + ") paw",
            gen_clique_pendants(k, t), Pattern::kPaw, t * choose(k - 1, 2));
    }
  }
  out.summary = std::to_string(cases) + " family instances, every enumerator";
  return out;
}

// ---- 5 ---------------------------------------------------------------------

Outcome lemma_properties() {
  Outcome out;
  std::size_t cosquare_premise = 0, codiamond_premise = 0;
  std::vector<NamedGraph> graphs = corpus();
  // Instances that are guaranteed to meet the premises.
  for (std::size_t k = 4; k <= 8; ++k) {
    graphs.push_back({"clique_pendants(" + std::to_string(k) + ",3)", gen_clique_pendants(k, 3)});
  }
  for (const auto& [name, g] : graphs) {
    const std::size_t n = g.num_vertices();
    const std::size_t c = testing::reference_closure(g);
    const auto truth = census(g);

    if (n >= 2) {
      const std::size_t p3 = occurrences(truth, Pattern::kP3).size();
      out.expect(p3 < c * testing::choose(n, 2),
                 name + ": #P3 = " + std::to_string(p3) + " >= c*C(n,2)");
    }

    const Matrix m(g);
    bool premise = false;
    for (Vertex u = 0; u < n && !premise; ++u) {
      for (Vertex v = 0; v < n && !premise; ++v) {
        premise = u != v && !m(u, v) && m.degree(u) >= c && m.degree(v) + 1 >= 2 * c;
      }
    }
    if (premise) {
      ++cosquare_premise;
      out.expect(!occurrences(truth, Pattern::kCoSquare).empty(), name + ": co-square lemma");
    }

    premise = false;
    for (const Tuple& clique : testing::maximal_cliques(g)) {
      if (clique.size() < 2 * c) continue;
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v) {
        if (!std::binary_search(clique.begin(), clique.end(), v)) rest.push_back(v);
      }
      bool rest_clique = true;
      for (std::size_t i = 0; i < rest.size() && rest_clique; ++i) {
        for (std::size_t j = i + 1; j < rest.size() && rest_clique; ++j) {
          rest_clique = m(rest[i], rest[j]);
        }
      }
      if (!rest_clique) {
        premise = true;
        break;
      }
    }
    if (premise) {
      ++codiamond_premise;
      out.expect(!occurrences(truth, Pattern::kCoDiamond).empty(), name + ": co-diamond lemma");
    }
  }
  out.expect(cosquare_premise > 0 && codiamond_premise > 0, "a lemma premise never occurred");
  out.summary = std::to_string(graphs.size()) + " graphs; co-square premise on " +
                std::to_string(cosquare_premise) + ", co-diamond premise on " +
                std::to_string(codiamond_premise);
  return out;
}

// ---- 6 ---------------------------------------------------------------------

Outcome characterization_regression() {
  Outcome out;
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}});  // K3 plus two isolated vertices
  const Graph h = complement(g);
  const auto none = [](const Occurrence&) { return Visit::kContinue; };

  // The global reading would predict a paw here.
  out.expect(detect_triangle_dense(g).found() && detect_co_p3(g).found(),
             "K3+2K1 should have a triangle and a co-P3");
  out.expect(!detect_paw(g).found(), "detect_paw(K3+2K1) found a paw");
  out.expect(enumerate_subsets_oracle(g, Pattern::kPaw, none) == 0, "oracle paw count");
  out.expect(occurrences(census(g), Pattern::kPaw).empty(), "reference paw count");

  out.expect(detect_independent_set(h, 3).found() && detect_p3(h).found(),
             "complement should have an independent triple and a P3");
  out.expect(!detect_co_paw(h).found(), "detect_co_paw(complement) found a co-paw");
  out.expect(enumerate_subsets_oracle(h, Pattern::kCoPaw, none) == 0, "oracle co-paw count");
  out.expect(occurrences(census(h), Pattern::kCoPaw).empty(), "reference co-paw count");
  out.summary = "paw and co-paw absent, oracle agrees";
  return out;
}

// ---- 7 ---------------------------------------------------------------------

struct Sweep {
  std::string family;
  tools::FamilyParams params;
  std::vector<std::size_t> sizes;
};

Outcome step_scaling() {
  Outcome out;
  tools::FamilyParams gnp;
  gnp.p = 0.1;
  gnp.seed = 2024;
  const std::vector<Sweep> sweeps{
      {"star", {}, {64, 128, 256, 512, 1024}},
      {"projective", {}, {2, 3, 5}},
      {"gnp", gnp, {50, 100, 200, 400}},
  };

  using Bound = std::function<double(const Graph&, const tools::BenchRow&)>;
  const auto none = [](const Occurrence&) { return Visit::kContinue; };
  const std::vector<std::pair<std::string, Bound>> algos{
      {"squares",
       [](const Graph&, const tools::BenchRow& r) {
         return static_cast<double>(r.c) * std::pow(static_cast<double>(r.m), 1.5);
       }},
      {"p3",
       [&](const Graph& g, const tools::BenchRow& r) {
         const double triangles = static_cast<double>(enumerate_triangles(g, none));
         const double m = static_cast<double>(r.m);
         return std::pow(m, 1.5) + static_cast<double>(r.count) + triangles + m;
       }},
      {"triangle-dense",
       [](const Graph&, const tools::BenchRow& r) {
         return static_cast<double>(r.c) * static_cast<double>(r.n) * static_cast<double>(r.n);
       }},
      {"triangle-sparse",
       [](const Graph&, const tools::BenchRow& r) {
         return std::cbrt(static_cast<double>(r.c)) * std::pow(static_cast<double>(r.m), 4.0 / 3.0);
       }},
  };

  double worst = 0;
  std::string worst_at;
  std::size_t pairs = 0;
  for (const auto& [algo, bound] : algos) {
    for (const Sweep& s : sweeps) {
      const auto rows = tools::run_bench(s.family, s.params, s.sizes, algo);
      std::vector<double> bounds;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Graph g = gen_family(tools::sized_family(s.family, s.params, s.sizes[i]));
        bounds.push_back(std::max(bound(g, rows[i]), 1.0));
      }
      for (std::size_t i = 1; i < rows.size(); ++i) {
        ++pairs;
        const double step_ratio = static_cast<double>(std::max<std::uint64_t>(rows[i].steps, 1)) /
                                  static_cast<double>(std::max<std::uint64_t>(rows[i - 1].steps, 1));
        const double bound_ratio = bounds[i] / bounds[i - 1];
        const double slack = step_ratio / bound_ratio;
        const std::string at = algo + " on " + s.family + " " + std::to_string(s.sizes[i - 1]) +
                               "->" + std::to_string(s.sizes[i]);
        if (slack > worst) {
          worst = slack;
          worst_at = at;
        }
        out.expect(slack <= 4.0, at + ": steps x" + fmt("%.2f", step_ratio) + " vs bound x" +
                                     fmt("%.2f", bound_ratio));
      }
    }
  }
  out.summary = std::to_string(pairs) + " doubling steps, worst steps/bound ratio " +
                fmt("%.2f", worst) + " (" + worst_at + ")";
  return out;
}

// ---- 8 ---------------------------------------------------------------------

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cli_round_trip() {
  namespace fs = std::filesystem;
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "ccsub_acceptance";
  fs::create_directories(dir);

  std::size_t verified = 0;
  for (const auto& [name, g] : corpus()) {
    const std::string text = serialize_graph(g);
    const Graph back = parse_edge_list(text);
    out.expect(back == g && serialize_graph(back) == text, name + ": round trip");

    const fs::path path = dir / "graph.txt";
    write_edge_list_file(path, g);
    std::ostringstream sout, serr;
    const int code = tools::run_cli({"verify", path.string()}, sout, serr);
    ++verified;
    out.expect(code == tools::kExitOk, name + ": verify exit " + std::to_string(code) + "\n" +
                                           sout.str() + serr.str());
  }

  const fs::path golden = CCSUB_GOLDEN_DIR;
  const std::vector<std::tuple<std::size_t, std::string, std::uint64_t, std::string>> files{
      {20, "0.3", 42, "gnp_20_0.3_42.txt"}, {30, "0.2", 7, "gnp_30_0.2_7.txt"}};
  for (const auto& [n, p, seed, file] : files) {
    const std::string want = slurp(golden / file);
    out.expect(!want.empty(), file + " missing");
    for (int run = 0; run < 2; ++run) {
      const fs::path path = dir / ("run" + std::to_string(run) + "_" + file);
      std::ostringstream sout, serr;
      const int code = tools::run_cli({"generate", "gnp", "--n", std::to_string(n), "--p", p,
                                       "--seed", std::to_string(seed), "-o", path.string()},
                                      sout, serr);
      out.expect(code == tools::kExitOk, file + ": generate failed: " + serr.str());
      out.expect(slurp(path) == want, file + ": run " + std::to_string(run) + " differs");
    }
  }
  fs::remove_all(dir);
  out.summary = std::to_string(corpus().size()) + " round trips, " + std::to_string(verified) +
                " verify runs, 2 golden files x 2 runs";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence of every detector and enumerator", oracle_equivalence},
      {"i2 catalog", i2_catalog},
      {"closure values", closure_values},
      {"exact structural counts", structural_counts},
      {"counting and implication lemmas as properties", lemma_properties},
      {"component-wise paw / co-paw characterization", characterization_regression},
      {"step-count scaling within 4x of the bound ratio", step_scaling},
      {"CLI round trip, verify and golden files", cli_round_trip},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [title, run] = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures.empty();
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << title << " -- "
              << o.summary << " [" << fmt("%.1f", secs) << "s]\n";
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
