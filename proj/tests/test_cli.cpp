#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "sepenum/generators.hpp"
#include "sepenum/graph_io.hpp"

using namespace sepenum;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed at scope exit.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("sepenum-cli-" + std::to_string(std::rand()) + "-" +
                                       std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string put(const std::string& name, const std::string& text) const {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string graph(const std::string& name, const Graph& g) const {
    std::ostringstream s;
    write_graph(s, g);
    return put(name, s.str());
  }
};

std::set<std::vector<int>> sets_of_json(const json& seps) {
  std::set<std::vector<int>> out;
  for (const auto& item : seps) {
    std::vector<int> v;
    for (int x : item["set"]) v.push_back(x - 1);
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("seps on C5 with every method") {
  Scratch tmp;
  auto c5 = tmp.graph("c5.col", gen_cycle(5));
  auto ref = oracle::minimal_separators(oracle::Mat(gen_cycle(5)));
  for (const char* m : {"brute", "expansion", "classc"}) {
    CAPTURE(m);
    auto r = call({"seps", c5, "--method", m});
    REQUIRE(r.code == 0);
    auto j = r.j();
    CHECK(j["count"] == 5);
    CHECK(sets_of_json(j["separators"]) == ref);
    for (const auto& item : j["separators"]) {
      // witness pair lies outside the set, 1-indexed
      for (int w : item["witness"]) {
        CHECK(w >= 1);
        CHECK(w <= 5);
      }
    }
  }
  auto sm = call({"seps", c5, "--method", "semimatching", "--k", "3"});
  CHECK(sm.code == 0);
  CHECK(sets_of_json(sm.j()["separators"]) == ref);
  CHECK(call({"seps", c5, "--method", "cliquesep"}).j()["count"] == 0);

  auto st = call({"seps", c5, "--method", "classc", "--stats", "--jobs", "2"});
  REQUIRE(st.code == 0);
  auto s = st.j()["stats"];
  CHECK(s["pairs"] == 10);
  CHECK(s["emitted"].get<int>() >= 5);
  CHECK(call({"seps", c5, "--method", "expansion", "--stats"}).code == 2);
}

TEST_CASE("output is 1-indexed") {
  Scratch tmp;
  auto p3 = tmp.put("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
  auto j = call({"seps", p3, "--method", "brute"}).j();
  REQUIRE(j["separators"].size() == 1);
  CHECK(j["separators"][0]["set"] == json::array({2}));
  CHECK(j["separators"][0]["witness"] == json::array({1, 3}));
  auto m = call({"mwis", p3, "--method", "brute"}).j();
  CHECK(m["set"] == json::array({1, 3}));
}

TEST_CASE("mwis methods and weights") {
  Scratch tmp;
  auto c5 = tmp.graph("c5.col", gen_cycle(5));
  for (const char* m : {"brute", "pmc", "classc"}) {
    auto r = call({"mwis", c5, "--method", m});
    REQUIRE(r.code == 0);
    CHECK(r.j()["weight"] == 2);
  }
  auto w = tmp.put("c5.w", "c weights\n1 5/2\n3 1.5\n");
  auto r = call({"mwis", c5, "--weights", w, "--method", "pmc"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["weight"] == 4);
  auto w2 = tmp.put("c5b.w", "1 5/2\n");
  auto r2 = call({"mwis", c5, "--weights", w2, "--method", "brute"}).j();
  CHECK(r2["weight"] == "7/2");
  CHECK(r2["set"] == json::array({1, 3}));
  auto bad = tmp.put("bad.w", "9 1\n");
  CHECK(call({"mwis", c5, "--weights", bad}).code == 2);
}

TEST_CASE("check-class") {
  Scratch tmp;
  auto c4 = tmp.graph("c4.col", gen_cycle(4));
  auto r = call({"check-class", c4});
  CHECK(r.code == 1);
  CHECK(r.j()["in_class"] == false);
  CHECK(r.j()["witness"]["kind"] == "square");
  CHECK(r.j()["witness"]["parts"]["hole"].size() == 4);
  auto ok = call({"check-class", tmp.graph("g2.col", gen_Gk(2))});
  CHECK(ok.code == 0);
  CHECK(ok.j()["in_class"] == true);
  CHECK(ok.j()["witness"].is_null());
}

TEST_CASE("report wrapper is deterministic without timings") {
  Scratch tmp;
  auto g = tmp.graph("g3.col", gen_Gk(3));
  std::vector<std::string> args{"seps", g, "--method", "classc", "--report", "--no-timings"};
  auto a = call(args), b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = a.j();
  CHECK(j["command"] == "seps");
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK(j["input_hash"].get<std::string>().size() == 16);
  CHECK(j["counts"]["separators"] == j["result"]["count"]);
  CHECK(j["counts"].contains("tuples"));
  auto timed = call({"seps", g, "--report"}).j();
  CHECK(timed["timings_ms"].contains("enumerate"));
  CHECK(call({"seps", g, "--jobs", "3"}).out == call({"seps", g}).out);
}

TEST_CASE("gen writes the graph and its sidecar") {
  Scratch tmp;
  auto path = (tmp.dir / "g2.col").string();
  auto r = call({"gen", "--family", "gk", "--k", "2", "-o", path});
  REQUIRE(r.code == 0);
  CHECK(load_graph_file(path).edges() == gen_Gk(2).edges());
  std::ifstream meta(path + ".meta.json");
  REQUIRE(meta);
  json m = json::parse(meta);
  CHECK(m["family"] == "gk");
  CHECK(m["groups"]["z"] == json::array({9}));
  CHECK(m["groups"]["Y"] == json::array({3, 4}));

  auto stdout_gen = call({"gen", "--family", "chordal", "--n", "9", "--seed", "4"});
  REQUIRE(stdout_gen.code == 0);
  CHECK(load_graph_text(stdout_gen.out).edges() == gen_random_chordal(9, 0.3, 4).edges());
  CHECK(call({"gen", "--family", "moebius"}).code == 2);
  CHECK(call({"gen", "--family", "ktheta", "--k", "1"}).code == 2);
}

TEST_CASE("pmc with and without a separator file") {
  Scratch tmp;
  auto g = tmp.graph("g2.col", gen_Gk(2));
  auto seps = call({"seps", g, "--method", "classc"});
  REQUIRE(seps.code == 0);
  auto sf = tmp.put("seps.json", seps.out);
  auto a = call({"pmc", g, "--seps", sf}), b = call({"pmc", g});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.j()["count"] == oracle::pmcs(oracle::Mat(gen_Gk(2))).size());
  auto bare = tmp.put("bare.json", "[[1, 3]]");
  CHECK(call({"pmc", g, "--seps", bare}).code == 1);
  auto broken = tmp.put("broken.json", "{");
  CHECK(call({"pmc", g, "--seps", broken}).code == 2);
}

TEST_CASE("verify-decomposition") {
  Scratch tmp;
  // C6 with a centre on 0, 2, 4: a major vertex, odd wheel
  auto w = tmp.put("w.col", "p edge 7 9\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\ne 7 1\ne 7 3\ne 7 5\n");
  auto r = call({"verify-decomposition", w});
  REQUIRE(r.code == 0);
  CHECK(r.j()["checked"].get<int>() >= 1);
  CHECK(r.j()["failures"].empty());
  // same wheel plus a path 8-9 from vertex 2 to vertex 4, across two sectors
  auto bad = tmp.put("bad.col",
                     "p edge 9 12\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\ne 7 1\ne 7 3\ne 7 5\n"
                     "e 8 2\ne 9 4\ne 8 9\n");
  auto rb = call({"verify-decomposition", bad, "--max-len", "6"});
  CHECK(rb.code == 1);
  CHECK_FALSE(rb.j()["failures"].empty());
}

TEST_CASE("errors and warnings") {
  Scratch tmp;
  auto broken = tmp.put("broken.col", "p edge 3 1\ne 1 9\n");
  auto r = call({"seps", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(call({"seps", (tmp.dir / "missing.col").string()}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"seps"}).code == 2);
  CHECK(call({"seps", broken, "--method", "magic"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"seps", broken, "--format", "xml"}).code == 2);

  auto big = tmp.graph("c21.col", gen_cycle(21));
  CHECK(call({"seps", big, "--method", "brute"}).code == 2);

  auto two = tmp.put("two.col", "p edge 4 2\ne 1 2\ne 3 4\n");
  auto d = call({"seps", two, "--method", "expansion"});
  CHECK(d.code == 0);
  CHECK(d.err.find("disconnected") != std::string::npos);
}
