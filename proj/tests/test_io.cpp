#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvl/errors.hpp"
#include "mvl/io.hpp"

#include <functional>

using namespace mvl;
using io::Json;

namespace {
std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("lattice names") {
  CHECK(io::lattice_from_name("luk11").size() == 11);
  CHECK(io::lattice_from_name("L11").size() == 11);
  CHECK(io::lattice_from_name("lukasiewicz:5").size() == 5);
  CHECK(io::lattice_from_name("godel5").kind() == TruthLattice::Kind::Godel);
  CHECK(io::lattice_from_name("G3").size() == 3);
  CHECK(io::lattice_from_name("bool").size() == 2);
  CHECK_THROWS_AS(io::lattice_from_name("fuzzy"), SpecError);
}

TEST_CASE("json diagnostics") {
  const std::string m = message_of([] { io::parse_json("{\n  \"a\": ,\n}", "doc.json"); });
  CHECK(m.rfind("doc.json:2:", 0) == 0);
}

TEST_CASE("lattice documents") {
  CHECK(io::parse_lattice(Json("luk3"))->size() == 3);
  CHECK(io::parse_lattice(Json{{"kind", "lukasiewicz"}, {"size", 11}})->size() == 11);
  const Json table = Json::parse(R"({"kind": "table", "labels": ["no", "yes"],
    "meet": [["no", "no"], ["no", "yes"]], "join": [["no", "yes"], ["yes", "yes"]],
    "otimes": [["no", "no"], ["no", "yes"]], "imp": [["yes", "yes"], ["no", "yes"]]})");
  const auto L = io::parse_lattice(table);
  CHECK(L->top() == 1);
  CHECK(check_residuated(*L).empty());
  CHECK_THROWS_AS(io::parse_lattice(Json{{"kind", "heyting"}}), SpecError);
}

TEST_CASE("graphs") {
  const auto L = luk_chain(11);
  const Json drawn = Json::parse(R"({"states": ["a", "b"], "arrows": [{"from": "a", "to": "b", "value": 0.3}]})");
  const AGraph g = io::parse_graph(L, drawn, "/g");
  CHECK(g.edges(0, 1) == 3);
  CHECK(g.edges(1, 0) == 0);
  CHECK(g.edges(0, 0) == 10);
  Json t = drawn;
  t["orientation"] = "transposed";
  CHECK(io::parse_graph(L, t, "/g").edges(1, 0) == 3);

  const Json bad = {{"states", {"a", "b"}}, {"matrix", {{1, 0.5}, {0.25, 1}}}};
  CHECK(message_of([&] { io::parse_graph(L, bad, "/frame/social"); }).rfind("/frame/social/matrix/1/0", 0) == 0);
  const Json short_rows = {{"states", {"a", "b"}}, {"matrix", {{1, 0.5}}}};
  CHECK_THROWS_AS(io::parse_graph(L, short_rows, "/g"), SpecError);
  const Json loopless = {{"states", {"a"}}, {"matrix", {{0.5}}}};
  CHECK_THROWS_AS(io::parse_graph(L, loopless, "/g"), SpecError);
}

TEST_CASE("model documents") {
  const Json doc = Json::parse(R"({
    "version": 1,
    "lattice": "luk3",
    "frame": {
      "social": {"states": ["s"], "matrix": [[1]]},
      "political": {"states": ["p"], "matrix": [[1]]},
      "r_dia": [[0.5]],
      "r_loz": {"rows": ["s"], "cols": ["p"], "matrix": [[0]]}
    },
    "atoms": {"SD": {"a": [0.5]}, "PP": {"a": {"descr": [1]}}}
  })");
  const Model m = io::parse_model(doc);
  CHECK(m.frame().r_dia(0, 0) == 1);
  CHECK(m.atom("a", Sort::SD).descr(0) == 1);
  CHECK(m.atom("a", Sort::PP).descr(0) == 2);

  Json v = doc;
  v.erase("version");
  CHECK_THROWS_AS(io::parse_model(v), SpecError);
  v["version"] = 2;
  CHECK_THROWS_AS(io::parse_model(v), SpecError);

  Json off = doc;
  off["frame"]["r_dia"] = Json::array({Json::array({0.3})});
  CHECK(message_of([&] { io::parse_model(off); }).find("/frame/r_dia") != std::string::npos);

  Json no_lattice = doc;
  no_lattice.erase("lattice");
  CHECK_THROWS_AS(io::parse_model(no_lattice), SpecError);
  io::LoadContext ctx;
  ctx.fallback = share(luk_chain(3));
  CHECK(io::parse_model(no_lattice, ctx).L().size() == 3);
}

TEST_CASE("context documents") {
  const Json doc = Json::parse(R"({"version": 1, "lattice": "bool", "objects": ["a", "b"], "attributes": ["x"],
                                   "incidence": [[1], [0]]})");
  const APolarity P = io::parse_context(doc);
  CHECK(P.object_count() == 2);
  CHECK(P.attributes == std::vector<std::string>{"x"});
}

TEST_CASE("files") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), SpecError);
  const Model m = io::load_model(MVL_DATA_DIR "/tiny-frame.json");
  CHECK(m.frame().social.size() == 1);
}
