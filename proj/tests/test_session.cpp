#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "qclust/session.hpp"

using namespace qclust;
using nlohmann::json;

namespace {

std::string session_path(const std::string& stem) { return std::string(QCLUST_DATA_DIR) + "/sessions/" + stem + ".json"; }

json a2_json() {
  return json::parse(R"({"lambda": [[0, 1], [-1, 0]], "btilde": [[0, 1], [-1, 0]], "n": 2, "ks": [1], "lam": [1, 0]})");
}

Errc parse_error(const json& j) {
  try {
    parse_session(j);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("session accepted");
  return Errc::InvalidInput;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("session parsing") {
  const SessionSpec s = parse_session(a2_json());
  CHECK(s.n == 2);
  CHECK(s.ks == std::vector<int>{1});
  CHECK(s.lam == IntVec{1, 0});
  CHECK_FALSE(s.explicit_qp);
  CHECK(s.qp.quiver.arrows().size() == 1);
  CHECK(s.options.route == Route::Both);
  CHECK(s.options.degree_cap == 12);

  json j = a2_json();
  j["lambda"] = json::parse("[[0, 1], [1, 0]]");
  CHECK(parse_error(j) == Errc::NotSkewSymmetric);
  j = a2_json();
  j["lambda"] = json::parse("[[0, 0], [0, 0]]");
  CHECK(parse_error(j) == Errc::IncompatiblePair);
  j = a2_json();
  j["ks"] = json::parse("[3]");
  CHECK(parse_error(j) == Errc::InvalidInput);
  j = a2_json();
  j["lam"] = json::parse("[1]");
  CHECK(parse_error(j) == Errc::DimensionMismatch);
  j = a2_json();
  j.erase("n");
  CHECK_THROWS(parse_session(j));
  // a quiver that does not realize B̃
  j = a2_json();
  j["quiver"] = json::parse(R"({"vertices": 2, "arrows": [[1, 1, 2]]})");
  CHECK(parse_error(j) == Errc::InconsistentLattice);
  j["quiver"] = json::parse(R"({"vertices": 2, "arrows": [[1, 2, 1]]})");
  CHECK(parse_session(j).explicit_qp);

  j = a2_json();
  j["options"] = json::parse(R"({"route": "dt", "cone_bound": 5, "primes": [2, 3, 5, 7], "jobs": 2})");
  const SessionSpec o = parse_session(j);
  CHECK(o.options.route == Route::Dt);
  CHECK(o.options.cone_bound == IntVec{5, 5});
  CHECK(o.options.primes == std::vector<int>{2, 3, 5, 7});
  CHECK(o.options.jobs == 2);
  CHECK_THROWS(parse_route("sideways"));
  CHECK(std::string(route_name(parse_route("mutation"))) == "mutation");

  const SessionSpec tri = load_session(session_path("triangle"));
  CHECK(tri.explicit_qp);
  CHECK_FALSE(tri.qp.potential.is_zero());
  CHECK_THROWS(load_session(session_path("missing")));
  CHECK(parse_error(json::parse(std::ifstream(session_path("not_skew")))) == Errc::NotSkewSymmetric);
}

TEST_CASE("mutate") {
  const auto r = cmd_mutate(parse_session(a2_json()));
  CHECK(r.ok);
  CHECK(contains(r.text, "x1 = X[-1,0] + X[-1,1]"));
  CHECK(contains(r.text, "x2 = X[0,1]"));
}

TEST_CASE("expand") {
  SessionSpec s = parse_session(a2_json());
  auto r = cmd_expand(s);
  CHECK(r.ok);
  CHECK(contains(r.text, "AGREE"));
  CHECK(contains(r.text, "positive yes"));
  s.lam = {0, 0};
  r = cmd_expand(s);
  CHECK(contains(r.text, "element X[0,0]"));
  s = load_session(session_path("triangle"));
  s.options.route = Route::Mutation;
  r = cmd_expand(s);
  CHECK(contains(r.text, "[1,1,1] 2*q^-2 + 2*q^-1"));
  CHECK_FALSE(contains(r.text, "AGREE"));
  s.options.route = Route::Dt;
  s.options.cone_bound = IntVec{0, 0, 0};
  try {
    cmd_expand(s);
    FAIL("tail check skipped");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TailNotVanishing);
  }
}

TEST_CASE("count") {
  auto r = cmd_count(parse_session(a2_json()));
  CHECK(r.ok);
  CHECK(r.report["mode"] == "hard");
  CHECK(r.report["rows"].size() == 2);
  r = cmd_count(load_session(session_path("triangle")));
  CHECK(r.ok);
  CHECK(contains(r.text, "mode report"));
  CHECK(contains(r.text, "MISMATCH"));
  CHECK(contains(r.text, "q=2:7 q=3:10"));
}

TEST_CASE("identity-check") {
  auto r = cmd_identity_check(nullptr, 12);
  CHECK(r.ok);
  CHECK(r.report["checks"].size() == 3);
  const SessionSpec a3 = load_session(session_path("a3"));
  r = cmd_identity_check(&a3, 8);
  CHECK(r.ok);
  CHECK(r.report["checks"].size() == 4);
}
