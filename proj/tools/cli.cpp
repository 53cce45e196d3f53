#include "cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsub/edge_list.hpp"
#include "ccsub/registry.hpp"
#include "verify.hpp"

namespace ccsub::tools {
namespace {

using nlohmann::json;

json steps_json(const StepCounter& s) {
  return {{"edge_probes", s.edge_probes},
          {"neighbor_scans", s.neighbor_scans},
          {"index_touches", s.index_touches},
          {"setup", s.setup},
          {"total", s.total()}};
}

json tuple_json(const VertexTuple& t) { return json(std::vector<Vertex>(t.begin(), t.end())); }

struct Options {
  // generate / bench
  std::string family;
  std::optional<std::size_t> t, k, n, seed;
  std::optional<double> p;
  std::string pattern_flag;
  std::string output;
  std::vector<std::size_t> sizes;
  // detect / enumerate / closure / verify
  std::string pattern;
  std::string graph;
  std::string algo;
  bool count_only = false;
  bool json = false;
  bool show_steps = false;
  std::vector<std::string> patterns{"all"};
};

void add_family_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--t", o.t, "Leaf / pendant count");
  cmd->add_option("--k", o.k, "Clique size or left side");
  cmd->add_option("--n", o.n, "Vertex count");
  cmd->add_option("--p", o.p, "Edge probability (gnp) or prime order (projective)");
  cmd->add_option("--seed", o.seed, "Seed for gnp");
  cmd->add_option("--pattern", o.pattern_flag, "Pattern for blowup");
}

FamilyParams family_params(const Options& o) {
  FamilyParams fp;
  fp.t = o.t;
  fp.k = o.k;
  fp.n = o.n;
  fp.p = o.p;
  fp.seed = o.seed.value_or(0);
  if (!o.pattern_flag.empty()) fp.pattern = o.pattern_flag;
  return fp;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const Graph g = gen_family(make_family(o.family, family_params(o)));
  if (o.output.empty() || o.output == "-") {
    out << serialize_graph(g);
  } else {
    write_edge_list_file(o.output, g);
  }
  return kExitOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Graph g = read_edge_list_file(o.graph);
  StepCounter steps;
  const ClosureReport r = compute_closure(g, &steps);
  if (o.json) {
    json j = {{"closure", r.c}, {"steps", steps_json(steps)}};
    j["argmax"] = r.argmax ? json{r.argmax->first, r.argmax->second} : json(nullptr);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "c\t" << r.c << '\n';
  if (r.argmax) out << "argmax\t" << r.argmax->first << ' ' << r.argmax->second << '\n';
  if (o.show_steps) out << "steps\t" << steps.total() << '\n';
  return kExitOk;
}

DetectionResult run_detector(const Options& o, Pattern p, const Graph& g,
                             StepCounter* steps) {
  if (p == Pattern::kStar || p == Pattern::kClique) {
    if (!o.k) throw InputError(std::string(pattern_name(p)) + " requires --k");
    const int k = static_cast<int>(*o.k);
    return p == Pattern::kStar ? detect_star(g, k, steps) : detect_clique(g, k, steps);
  }
  return find_detector(p, o.algo).run(g, steps);
}

int cmd_detect(const Options& o, std::ostream& out) {
  const Pattern p = parse_pattern(o.pattern);
  const Graph g = read_edge_list_file(o.graph);
  StepCounter steps;
  const DetectionResult r = run_detector(o, p, g, &steps);
  if (r.found() && !induces(g, r.witness->vertices.span(), r.witness->pattern)) {
    throw std::logic_error("detector returned a witness that does not induce " +
                           std::string(pattern_name(p)));
  }
  if (o.json) {
    json j = {{"pattern", pattern_name(p)},
              {"count", r.found() ? 1 : 0},
              {"steps", steps_json(steps)},
              {"closure", compute_closure(g).c}};
    if (r.found()) j["witnesses"] = json::array({tuple_json(r.witness->vertices)});
    if (!r.certificate.empty()) j["certificate"] = r.certificate;
    if (!r.certificate_parts.empty()) j["certificate_parts"] = r.certificate_parts;
    out << j.dump() << '\n';
  } else {
    if (r.found()) {
      out << "found\t" << format_tuple(r.witness->vertices) << '\n';
    } else {
      out << "none\n";
      if (!r.certificate.empty()) out << "certificate\t" << r.certificate << '\n';
      for (const auto& part : r.certificate_parts) {
        out << "part";
        for (std::size_t i = 0; i < part.size(); ++i) out << (i ? ' ' : '\t') << part[i];
        out << '\n';
      }
    }
    if (o.show_steps) out << "steps\t" << steps.total() << '\n';
  }
  return r.found() ? kExitOk : kExitNotFound;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Pattern p = parse_pattern(o.pattern);
  const Graph g = read_edge_list_file(o.graph);
  StepCounter steps;
  std::vector<VertexTuple> found;
  const bool keep = !o.count_only;
  OccurrenceVisitor visit = [&](const Occurrence& occ) {
    if (keep) {
      if (o.json) {
        found.push_back(occ.vertices);
      } else {
        out << format_tuple(occ.vertices) << '\n';
      }
    }
    return Visit::kContinue;
  };
  std::size_t count = 0;
  if (o.algo == "oracle") {
    count = enumerate_subsets_oracle(g, p, visit, oracle_cap_from_env());
  } else {
    count = find_enumerator(p, o.algo).run(g, visit, &steps);
  }
  if (o.json) {
    json j = {{"pattern", pattern_name(p)},
              {"count", count},
              {"steps", steps_json(steps)},
              {"closure", compute_closure(g).c}};
    if (keep) {
      json w = json::array();
      for (const auto& t : found) w.push_back(tuple_json(t));
      j["witnesses"] = std::move(w);
    }
    out << j.dump() << '\n';
  } else if (o.count_only) {
    out << count << '\n';
  }
  if (!o.json && o.show_steps) out << "steps\t" << steps.total() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(o.graph);
  std::vector<Pattern> patterns;
  for (const auto& name : o.patterns) {
    if (name == "all") {
      for (Pattern p : all_patterns()) patterns.push_back(p);
    } else {
      patterns.push_back(parse_pattern(name));
    }
  }
  VerifyReport report;
  try {
    report = verify_graph(g, patterns, oracle_cap_from_env());
  } catch (const OracleCapExceeded& e) {
    err << "ccsub: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& pr : report.patterns) {
    out << pattern_name(pr.pattern) << '\t' << pr.oracle_count << '\t' << pr.checks
        << '\t' << (pr.mismatches.empty() ? "agree" : "MISMATCH") << '\n';
    for (const auto& m : pr.mismatches) out << "  " << m << '\n';
  }
  if (report.all_agree()) {
    out << "all agree\n";
    return kExitOk;
  }
  out << "mismatch\n";
  return kExitInvariant;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const std::vector<BenchRow> rows =
      run_bench(o.family, family_params(o), o.sizes, o.algo);
  out << "n\tm\tc\tcount\tsteps\twall_ms\n";
  for (const auto& r : rows) {
    out << r.n << '\t' << r.m << '\t' << r.c << '\t' << r.count << '\t' << r.steps
        << '\t' << r.wall_ms << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Induced-subgraph detection and enumeration on c-closed graphs", "ccsub"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->add_option("family", o.family, "Family name")->required();
  add_family_flags(generate, o);
  generate->add_option("-o,--output", o.output, "Output path (default stdout)");

  auto* closure = app.add_subcommand("closure", "Report the c-closure and a maximizing pair");
  closure->add_option("graph", o.graph, "Edge-list file")->required();

  auto* detect = app.add_subcommand("detect", "Find one induced occurrence");
  detect->add_option("pattern", o.pattern, "Pattern name")->required();
  detect->add_option("graph", o.graph, "Edge-list file")->required();
  detect->add_option("--algo", o.algo, "Algorithm (default: the pattern's first)");
  detect->add_option("--k", o.k, "Size parameter for star / clique");

  auto* enumerate = app.add_subcommand("enumerate", "List all induced occurrences");
  enumerate->add_option("pattern", o.pattern, "Pattern name")->required();
  enumerate->add_option("graph", o.graph, "Edge-list file")->required();
  enumerate->add_option("--algo", o.algo, "Algorithm (default: the pattern's first)");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of occurrences");

  auto* verify = app.add_subcommand("verify", "Check every algorithm against the subset oracle");
  verify->add_option("graph", o.graph, "Edge-list file")->required();
  verify->add_option("--patterns", o.patterns, "Pattern names or 'all'")->delimiter(',');

  auto* bench = app.add_subcommand("bench", "Step counts and timings over a size sweep");
  bench->add_option("--family", o.family, "Family name")->required();
  bench->add_option("--sizes", o.sizes, "Comma-separated size parameters")
      ->required()
      ->delimiter(',');
  bench->add_option("--algo", o.algo,
                    "squares | p3 | triangle-dense | triangle-sparse | "
                    "detect:<pattern>[:<algo>] | enumerate:<pattern>[:<algo>]")
      ->required();
  add_family_flags(bench, o);

  for (auto* cmd : {closure, detect, enumerate}) {
    cmd->add_flag("--json", o.json, "Structured output");
    cmd->add_flag("--steps", o.show_steps, "Print the step count");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ccsub: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out);
    if (closure->parsed()) return cmd_closure(o, out);
    if (detect->parsed()) return cmd_detect(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const OracleCapExceeded& e) {
    err << "ccsub: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "ccsub: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "ccsub: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace ccsub::tools
