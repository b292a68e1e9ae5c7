#include <sstream>

#include "doctest.h"
#include "dendro/cli.hpp"
#include "dendro/serialize.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dendro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "r(a,b)"});
  CHECK(r.code == 0);
  CHECK(r.out == "dendroidal: true; degree 1; leaves a,b\n");
}

TEST_CASE("hom") {
  auto r = run({"hom", "x", "r(a,b)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("3 maps\n", 0) == 0);
  auto j = dendro::Json::parse(run({"--output=json", "hom", "x", "r(a,b)"}).out);
  CHECK(j["count"] == 3);
  for (const auto& m : j["maps"]) CHECK_NOTHROW(dendro::monotone_map_from_json(m));
}

TEST_CASE("factor") {
  auto r = run({"factor", "r(a)", "s(p,q)", "--map", "a=>s,r=>s"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 degeneracies, 1 faces") != std::string::npos);
  CHECK(r.out.find("composite verified") != std::string::npos);
  auto j = dendro::Json::parse(run({"--output", "json", "factor", "r(a)", "s(p,q)", "--map", "a=>s,r=>s"}).out);
  CHECK(j["verified"] == true);
  CHECK(dendro::factorization_from_json(j).degeneracies.size() == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "r(a"}).code == 2);
  CHECK(run({"--flavour=round", "check", "x"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"factor", "r(a)", "s(p,q)", "--map", "a=>p,r=>q"}).code == 1);
  CHECK(run({"factor", "r(a)", "s(p,q)", "--map", "a=>p"}).code == 2);
  CHECK(run({"graft", "r(a,b)", "--at", "r", "x"}).code == 1);
  CHECK(run({"--budget=2", "hom", "r(a,b)", "s(p,q)"}).code == 3);
  CHECK(run({"--max-word-len=1", "tensor", "r(a,b)", "s(p)"}).code == 3);
  CHECK(run({"check", R"({"flavour":"commutative","carrier":["a","b"],"relation":[]})"}).code == 1);
}

TEST_CASE("subtrees, faces and degeneracies") {
  auto r = run({"subtrees", "--maximal", "r(b(e,f),c,d())"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("4 maximal subtrees\n", 0) == 0);
  CHECK(run({"faces", "r(a,b)"}).out.rfind("3 faces\n", 0) == 0);
  CHECK(run({"degeneracies", "r(a(b))"}).out.rfind("2 degeneracies\n", 0) == 0);
  auto j = dendro::Json::parse(run({"--output=json", "subtrees", "r(a,b)"}).out);
  for (const auto& s : j["subtrees"]) CHECK_NOTHROW(dendro::broad_poset_from_json(s["tree"]));
}

TEST_CASE("graft, products and pushouts") {
  auto r = run({"graft", "r(a,b)", "--at", "a", "s(p,q)"});
  CHECK(r.code == 0);
  CHECK(r.out == "r(a(p,q),b)\n");
  auto t = dendro::Json::parse(run({"--output=json", "tensor", "x", "r(a,b)"}).out);
  CHECK(dendro::broad_poset_from_json(t).size() == 3);
  auto p = dendro::Json::parse(run({"--output=json", "product", "r(a,b,c)", "s(p,q)"}).out);
  CHECK(p["carrier"].size() == 12);
  CHECK(p["relation"].empty());

  const std::string point = R"({"flavour":"commutative","carrier":["*"],"relation":[]})";
  const std::string g2 =
      R"({"flavour":"commutative","carrier":["l1","l2","r"],"relation":[{"source":["l1","l2"],"target":"r"}]})";
  auto leg = [&](const std::string& to) {
    return R"({"domain":)" + point + R"(,"codomain":)" + g2 + R"(,"assignment":{"*":")" + to + "\"}}";
  };
  auto po = run({"--output=json", "pushout", leg("l1"), leg("r")});
  CHECK(po.code == 0);
  CHECK(dendro::broad_poset_from_json(dendro::Json::parse(po.out)).size() == 5);
}

TEST_CASE("dot export") {
  auto r = run({"dot", "r(b(e,f),c,d())"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph tree {", 0) == 0);
  CHECK(r.out.find("\"v:d\" [shape=square") != std::string::npos);
  CHECK(r.out.find("\"e\" -> \"v:b\"") != std::string::npos);
}

TEST_CASE("determinism") {
  auto a = run({"--output=json", "subtrees", "r(b(e,f),c,d())"});
  auto b = run({"--output=json", "subtrees", "r(b(e,f),c,d())"});
  CHECK(a.out == b.out);
}

TEST_CASE("info and validate") {
  auto r = run({"info", "r(b(e,f),c,d())"});
  CHECK(r.out.find("root: r\n") != std::string::npos);
  CHECK(r.out.find("degree: 3\n") != std::string::npos);
  auto v = run({"validate", R"({"flavour":"commutative","carrier":["a","b"],"relation":[{"source":["a"],"target":"b"},{"source":["b"],"target":"a"}]})"});
  CHECK(v.code == 1);
}
