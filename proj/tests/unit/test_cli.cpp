#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "morphdet/error.hpp"
#include "morphdet/io.hpp"

using namespace morphdet;
namespace fs = std::filesystem;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("morphdet_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write("a2.json", R"({"p":5,"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],"relations":[]})");
    write("s1.json", R"({"dims":{"1":1,"2":0},"maps":{}})");
    write("s2.json", R"({"dims":{"1":0,"2":1},"maps":{}})");
    write("cover.json", R"({"source":{"dims":{"1":1,"2":1},"maps":{"a":[[1]]}},"target":{"dims":{"1":1,"2":0}},)"
                        R"("vertexMaps":{"1":[[1]],"2":[[]]}})");
    write("chain.json", R"({"elements":["0","1","2"],"le":[["0","1"],["1","2"]]})");
    write("bad.json", R"({"p":5,"vertices":["1"],)");
  }
  ~Workdir() { fs::remove_all(dir); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("json round trips") {
  auto alg = fx::random_quiver(3, 7, true);
  auto back = algebra_from_json(to_json(*alg));
  CHECK(same_algebra(alg, back));
  auto m = indec_projective(alg, 0);
  CHECK(representation_from_json(to_json(m), alg) == m);
  auto f = RepMorphism::identity(m);
  CHECK(morphism_from_json(to_json(f), alg) == f);
  auto p = FinitePoset({"x", "y", "z"}, {{0, 2}, {1, 2}});
  auto q = poset_from_json(to_json(p));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.le(i, j) == q.le(i, j));
}

TEST_CASE("malformed json is an input error") {
  auto a2 = fx::linear_quiver(2);
  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"dims":{"9":1}})"), a2), InputError);
  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"dims":{"1":1,"2":1},"maps":{"a":[[1,2]]}})"), a2),
                  InputError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"p":4,"vertices":["1"],"arrows":[]})")), InputError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("cli check, mindet, claim") {
  Workdir w;
  auto yes = run({"check", "--algebra", w.at("a2.json"), "--morphism", w.at("cover.json"), "--c", w.at("s1.json")});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("yes") != std::string::npos);
  auto no = run({"check", "--algebra", w.at("a2.json"), "--morphism", w.at("cover.json"), "--c", w.at("s2.json"),
                 "--json"});
  CHECK(no.code == 0);
  auto j = Json::parse(no.out);
  CHECK(j["verdict"] == false);
  CHECK_FALSE(j["witness"].is_null());
  auto md = run({"mindet", "--algebra", w.at("a2.json"), "--morphism", w.at("cover.json"), "--json"});
  CHECK(md.code == 0);
  CHECK(Json::parse(md.out)["minimalSummands"].size() == 1);
  auto claim = run({"claim", "--algebra", w.at("a2.json"), "--morphism", w.at("cover.json")});
  CHECK(claim.code == 0);
  CHECK(claim.out.find("claim sufficient: yes") != std::string::npos);
}

TEST_CASE("cli construct, ar, oracle, poset") {
  Workdir w;
  auto c = run({"construct", "--algebra", w.at("a2.json"), "--c", w.at("s1.json"), "--y", w.at("s1.json"), "--json"});
  CHECK(c.code == 0);
  auto j = Json::parse(c.out);
  CHECK(j["sourceDims"] == Json::array({1, 1}));
  CHECK(j["imageEqualsH"] == true);
  auto ar = run({"ar", "--algebra", w.at("a2.json"), "--z", w.at("s1.json"), "--dot"});
  CHECK(ar.code == 0);
  CHECK(ar.out.find("digraph") != std::string::npos);
  auto o = run({"oracle", "--algebra", w.at("a2.json"), "--morphism", w.at("cover.json"), "--c", w.at("s2.json"),
                "--max-dim", "1:2,2:2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("searched 14 modules: counterexample") != std::string::npos);
  auto p = run({"poset", "--poset", w.at("chain.json"), "--x", "0", "--y", "2", "--c", "1"});
  CHECK(p.code == 0);
  CHECK(p.out.find("yes") != std::string::npos);
  auto out_file = w.at("result.json");
  CHECK(run({"mindet", "--algebra", w.at("a2.json"), "--morphism", w.at("cover.json"), "--out", out_file}).code == 0);
  CHECK(fs::exists(out_file));
}

TEST_CASE("cli exit codes") {
  Workdir w;
  CHECK(run({"check", "--algebra", w.at("missing.json"), "--morphism", w.at("cover.json"), "--c", w.at("s1.json")})
            .code == 1);
  CHECK(run({"check", "--algebra", w.at("bad.json"), "--morphism", w.at("cover.json"), "--c", w.at("s1.json")}).code ==
        1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"poset", "--poset", w.at("chain.json"), "--x", "2", "--y", "0", "--c", "1"}).code == 2);
  // Z decomposable
  w.write("sum.json", R"({"dims":{"1":1,"2":1},"maps":{"a":[[0]]}})");
  auto r = run({"ar", "--algebra", w.at("a2.json"), "--z", w.at("sum.json")});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli output is reproducible and re-loadable") {
  Workdir w;
  std::vector<std::string> args{"construct", "--algebra", w.at("a2.json"), "--c", w.at("s1.json"), "--y",
                                w.at("s1.json"), "--json", "--out", w.at("alpha.json")};
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  auto alg = algebra_from_json(load_json_file(w.at("a2.json")));
  auto saved = load_json_file(w.at("alpha.json"));
  auto alpha = morphism_from_json(saved.contains("morphism") ? saved["morphism"] : saved, alg);
  CHECK(alpha.source().dims() == std::vector<std::size_t>{1, 1});
  CHECK(alpha.is_epimorphism());
  CHECK(to_json(alpha) == (saved.contains("morphism") ? saved["morphism"] : saved));

  // H = Hom(S1, S1) gives the identity
  w.write("full.json", R"({"generators":[{"vertexMaps":{"1":[[1]],"2":[]}}]})");
  auto full = run({"construct", "--algebra", w.at("a2.json"), "--c", w.at("s1.json"), "--y", w.at("s1.json"), "--h",
                   w.at("full.json"), "--json"});
  REQUIRE(full.code == 0);
  auto id = morphism_from_json(Json::parse(full.out)["morphism"], alg);
  CHECK(id.is_isomorphism());
  CHECK(full.err.empty());

  // generators that are not closed are closed with a notice: C = S2 ⊕ P1, Y = P1
  w.write("c2.json", R"({"dims":{"1":1,"2":2},"maps":{"a":[[1],[0]]}})");
  w.write("p1.json", R"({"dims":{"1":1,"2":1},"maps":{"a":[[1]]}})");
  w.write("g2.json", R"([{"vertexMaps":{"1":[[1]],"2":[[1,0]]}}])");
  auto closed = run({"construct", "--algebra", w.at("a2.json"), "--c", w.at("c2.json"), "--y", w.at("p1.json"), "--h",
                     w.at("g2.json"), "--json"});
  CHECK(closed.code == 0);
  CHECK_FALSE(closed.err.empty());
  CHECK(Json::parse(closed.out)["imageEqualsH"] == true);
}
