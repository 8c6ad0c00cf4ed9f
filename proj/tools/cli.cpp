#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepenum/classc.hpp"
#include "sepenum/config_detect.hpp"
#include "sepenum/errors.hpp"
#include "sepenum/generators.hpp"
#include "sepenum/graph_io.hpp"
#include "sepenum/hole_analysis.hpp"
#include "sepenum/holes.hpp"
#include "sepenum/mwis.hpp"
#include "sepenum/semi_matching.hpp"
#include "sepenum/separators.hpp"

namespace sepenum::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Exit code 1 with a JSON payload describing the rejection.
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json one_based(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}
json one_based(const VertexSet& s) { return one_based(s.to_vector()); }

json weight_json(const Weight& w) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(w) == 1 && numerator(w) <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(numerator(w));
  return format_weight(w);
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Shared per-run state: the report wrapper and phase timings.
struct Run {
  std::string command;
  std::vector<std::string> args;
  bool report = false;
  bool timings = true;
  std::string input_hash;
  json phases = json::object();
  json counts = json::object();
  std::ostream* err = nullptr;

  template <typename F>
  auto phase(const std::string& name, F&& f) {
    auto t0 = Clock::now();
    auto r = f();
    phases[name] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
  }

  Graph load(const std::string& path) {
    std::string text = read_file(path);
    input_hash = fnv1a(text);
    Graph g = phase("load", [&] { return load_graph_text(text); });
    if (g.order() > 0 && !is_connected(g))
      *err << "warning: input graph is disconnected; separator routines assume connected input\n";
    return g;
  }

  json wrap(json result) const {
    if (!report) return result;
    json r;
    r["command"] = command;
    r["args"] = args;
    r["input_hash"] = input_hash.empty() ? json(nullptr) : json(input_hash);
    if (timings) r["timings_ms"] = phases;
    r["counts"] = counts;
    r["result"] = std::move(result);
    return r;
  }
};

json separators_json(const SeparatorSet& seps) {
  json list = json::array();
  for (const auto& r : seps) {
    json item;
    item["set"] = one_based(r.set);
    item["witness"] = json::array({r.witness.first + 1, r.witness.second + 1});
    list.push_back(std::move(item));
  }
  return list;
}

json witness_json(const ConfigurationWitness& w) {
  json parts = json::object();
  for (const auto& [name, vs] : w.parts) parts[name] = one_based(vs);
  return json{{"kind", to_string(w.kind)}, {"parts", parts}};
}

json stats_json(const ClasscStats& s) {
  return json{{"pairs", s.pairs},       {"tuples", s.tuples}, {"discard_hole", s.discard_hole},
              {"discard_cliques", s.discard_cliques}, {"leaves", s.leaves},
              {"rejected", s.rejected}, {"emitted", s.emitted}};
}

// Reads a separator list as written by `seps`: either the object with a
// "separators" member or a bare array; sets may be plain arrays or
// {"set": [...]} objects. 1-indexed.
std::vector<VertexSet> read_separator_sets(const std::string& path, int n) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Usage("--seps: " + std::string(e.what()));
  }
  const json& list = j.is_object() ? j.at("separators") : j;
  if (!list.is_array()) throw Usage("--seps: expected an array of separators");
  std::vector<VertexSet> out;
  for (const auto& item : list) {
    const json& s = item.is_object() ? item.at("set") : item;
    VertexSet vs(n);
    for (const auto& v : s) {
      int x = v.get<int>();
      if (x < 1 || x > n) throw Usage("--seps: vertex " + std::to_string(x) + " out of range");
      vs.insert(x - 1);
    }
    out.push_back(vs);
  }
  return out;
}

SeparatorSet checked_separators(const Graph& g, const std::vector<VertexSet>& sets) {
  for (const auto& s : sets)
    if (!is_minimal_separator(g, s)) throw Rejected("--seps lists a set that is not a minimal separator");
  return records_for(g, sets);
}

}  // namespace

int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal separators and MWIS for (square, prism, pyramid, theta, even wheel)-free graphs",
               "sepenum"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Run run;
  run.err = &err;
  run.args = argv_in;
  std::string format = "json";
  bool no_timings = false;
  int jobs = 1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    sub->add_flag("--no-timings", no_timings, "Leave timings out of the report");
    sub->add_flag("--report", run.report, "Wrap the result with command, input hash, timings and counts");
  };

  // gen
  std::string family, gen_out;
  int gen_k = 3, gen_n = 10;
  std::uint64_t seed = 1;
  double density = 0.3;
  auto* gen = app.add_subcommand("gen", "Write a generated graph (and a .meta.json sidecar)");
  gen->add_option("--family", family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"cycle", "kprism", "ktheta", "kpyramid", "kturtle", "kladder", "gk", "chordal"}));
  gen->add_option("--k", gen_k, "Family parameter k");
  gen->add_option("--n", gen_n, "Vertex count (cycle, chordal)");
  gen->add_option("--seed", seed, "Seed (chordal)");
  gen->add_option("--density", density, "Edge density (chordal)");
  gen->add_option("-o,--output", gen_out, "Graph file to write; stdout when absent");
  common(gen);

  std::string file;
  auto* check = app.add_subcommand("check-class", "Look for a square, prism, pyramid, theta or even wheel");
  check->add_option("file", file)->required();
  common(check);

  std::string method = "classc";
  int k = 2;
  bool stats = false;
  auto* seps = app.add_subcommand("seps", "Enumerate minimal separators");
  seps->add_option("file", file)->required();
  seps->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "expansion", "cliquesep", "semimatching", "classc"}));
  seps->add_option("--k", k, "Matching size for --method semimatching")->check(CLI::Range(2, 64));
  seps->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  seps->add_flag("--stats", stats, "Add classc step counters");
  common(seps);

  std::string seps_file;
  auto* pmc = app.add_subcommand("pmc", "Enumerate potential maximal cliques");
  pmc->add_option("file", file)->required();
  pmc->add_option("--seps", seps_file, "Separator list (JSON from `seps`); computed when absent");
  common(pmc);

  std::string weights_file, mwis_method = "pmc";
  auto* mwis = app.add_subcommand("mwis", "Maximum weight independent set");
  mwis->add_option("file", file)->required();
  mwis->add_option("--weights", weights_file, "Lines '<vertex> <weight>', 1-indexed");
  mwis->add_option("--method", mwis_method)->check(CLI::IsMember({"brute", "pmc", "classc"}));
  mwis->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  common(mwis);

  int max_len = 12;
  auto* verify = app.add_subcommand("verify-decomposition",
                                    "Check the sector decomposition for every (hole, major vertex) pair");
  verify->add_option("file", file)->required();
  verify->add_option("--max-len", max_len, "Longest hole to scan")->check(CLI::Range(4, 64));
  common(verify);

  std::vector<std::string> rev(argv_in.rbegin(), argv_in.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  run.timings = !no_timings;

  auto emit = [&](json result, int code) {
    out << run.wrap(std::move(result)).dump(2) << "\n";
    return code;
  };

  try {
    if (*gen) {
      run.command = "gen";
      auto gg = run.phase("generate", [&] { return generate(family, gen_k, gen_n, seed, density); });
      json meta;
      meta["family"] = family;
      meta["k"] = gen_k;
      meta["n"] = gg.graph.order();
      meta["m"] = gg.graph.size();
      meta["seed"] = seed;
      json groups = json::object();
      for (const auto& [name, vs] : gg.groups) groups[name] = one_based(vs);
      meta["groups"] = groups;
      std::string comment = "sepenum gen --family " + family + " --k " + std::to_string(gen_k);
      if (gen_out.empty()) {
        write_graph(out, gg.graph, comment);
        return 0;
      }
      std::ofstream g(gen_out);
      if (!g) throw Usage("cannot write '" + gen_out + "'");
      write_graph(g, gg.graph, comment);
      std::ofstream m(gen_out + ".meta.json");
      if (!m) throw Usage("cannot write '" + gen_out + ".meta.json'");
      m << meta.dump(2) << "\n";
      meta["file"] = gen_out;
      return emit(meta, 0);
    }

    if (*check) {
      run.command = "check-class";
      Graph g = run.load(file);
      auto r = run.phase("detect", [&] { return is_in_class_C(g); });
      json res;
      if (r.in_class == Membership::inconclusive) res["in_class"] = "inconclusive";
      else res["in_class"] = r.in_class == Membership::yes;
      res["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
      return emit(res, r.in_class == Membership::yes ? 0 : 1);
    }

    if (*seps) {
      run.command = "seps";
      Graph g = run.load(file);
      SeparatorSet s;
      std::optional<ClasscStats> st;
      if (method == "brute") {
        s = run.phase("enumerate", [&] { return oracle_separators_exhaustive(g, jobs); });
      } else if (method == "expansion") {
        s = run.phase("enumerate", [&] { return oracle_separators_expansion(g); });
      } else if (method == "cliquesep") {
        s = run.phase("enumerate", [&] { return clique_minimal_separators(g); });
      } else if (method == "semimatching") {
        s = run.phase("enumerate", [&] { return enumerate_separators_semimatching(g, k, jobs); });
      } else {
        ClasscOptions opts;
        opts.jobs = jobs;
        auto r = run.phase("enumerate", [&] { return enumerate_all_minimal_separators_classC(g, opts); });
        s = std::move(r.separators);
        st = r.stats;
        run.counts["tuples"] = r.stats.tuples;
      }
      run.counts["separators"] = s.size();
      json res;
      res["count"] = s.size();
      res["separators"] = separators_json(s);
      if (stats) {
        if (!st) throw Usage("--stats applies to --method classc only");
        json sj = stats_json(*st);
        // emitted leaves per distinct separator
        sj["dedup_ratio"] = s.empty() ? 0.0 : static_cast<double>(st->emitted) / static_cast<double>(s.size());
        res["stats"] = sj;
      }
      return emit(res, 0);
    }

    if (*pmc) {
      run.command = "pmc";
      Graph g = run.load(file);
      SeparatorSet s = seps_file.empty()
                           ? run.phase("separators", [&] { return oracle_minimal_separators(g); })
                           : checked_separators(g, read_separator_sets(seps_file, g.order()));
      auto list = run.phase("pmc", [&] { return enumerate_pmcs(g, s); });
      run.counts["separators"] = s.size();
      run.counts["pmcs"] = list.size();
      json arr = json::array();
      for (const auto& p : list) arr.push_back(one_based(p));
      return emit(json{{"count", list.size()}, {"pmcs", arr}}, 0);
    }

    if (*mwis) {
      run.command = "mwis";
      Graph g = run.load(file);
      std::vector<Weight> w =
          weights_file.empty() ? std::vector<Weight>(static_cast<std::size_t>(g.order()), Weight(1))
                               : load_weights_file(weights_file, g.order());
      WeightedGraph wg(g, w);
      MwisResult r;
      if (mwis_method == "brute") {
        r = run.phase("solve", [&] { return brute_force_mwis(wg); });
      } else if (mwis_method == "pmc") {
        auto s = run.phase("separators", [&] { return oracle_minimal_separators(g); });
        auto p = run.phase("pmc", [&] { return enumerate_pmcs(g, s); });
        run.counts["separators"] = s.size();
        run.counts["pmcs"] = p.size();
        r = run.phase("solve", [&] { return mwis_via_pmc(wg, p, s); });
      } else {
        r = run.phase("solve", [&] { return mwis_classC(wg, jobs); });
      }
      return emit(json{{"weight", weight_json(r.weight)}, {"set", one_based(r.set)}}, 0);
    }

    if (*verify) {
      run.command = "verify-decomposition";
      Graph g = run.load(file);
      auto holes = run.phase("holes", [&] { return enumerate_holes(g, max_len); });
      std::size_t checked = 0;
      json failures = json::array();
      run.phase("check", [&] {
        for (const auto& h : holes.holes)
          for (Vertex w = 0; w < g.order(); ++w) {
            if (h.index_of(w) >= 0 || !is_major(g, h, w)) continue;
            ++checked;
            auto d = check_decomposition(g, h, w);
            if (d.ok) continue;
            failures.push_back(json{{"hole", one_based(h.cycle)},
                                    {"vertex", w + 1},
                                    {"component", one_based(d.failing_component)}});
          }
        return 0;
      });
      run.counts["holes"] = holes.holes.size();
      json res{{"checked", checked}, {"complete", holes.complete}, {"failures", failures}};
      return emit(res, failures.empty() && holes.complete ? 0 : 1);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // IntegrityError, the n^8 guard and similar: the input was rejected
    err << "error: " << e.what() << "\n";
    return emit(json{{"error", e.what()}}, 1);
  }
  return 2;
}

}  // namespace sepenum::cli
