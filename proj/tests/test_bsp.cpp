#include <catch2/catch_amalgamated.hpp>

#include <pbwelim/bsp.hpp>
#include <pbwelim/fixtures.hpp>

using namespace pbwelim;

namespace {

Rationals K;
using B = BspPresentation<Rationals>;

B make_bsp(std::size_t n, std::map<B::Pair, std::pair<Rationals::Elem, B::Pair>> rules) {
  std::vector<std::string> names;
  for (std::size_t g = 1; g <= n; ++g) names.push_back("x" + std::to_string(g));
  return B{K, n, std::move(names), std::move(rules)};
}

}  // namespace

TEST_CASE("shape extraction accepts single-term quadratic relations only") {
  auto qp = bsp_shape(*fixture_algebra("qplane"));
  REQUIRE(qp.bsp.has_value());
  CHECK(qp.bsp->rules.at({1, 0}) ==
        std::make_pair(K.from_int(2), B::Pair{0, 1}));

  auto w = bsp_shape(*fixture_algebra("weyl1"));
  CHECK_FALSE(w.bsp.has_value());
  REQUIRE(w.problems.size() == 1);
  CHECK(w.problems[0] == "relation (d,x): right side is not a single term");

  auto h = bsp_shape(*fixture_algebra("heis"));
  CHECK_FALSE(h.bsp.has_value());
}

TEST_CASE("commutative and quantum plane systems pass all four conditions") {
  for (const auto& name : {"qplane", "commutative3"}) {
    auto shape = bsp_shape(*fixture_algebra(name));
    REQUIRE(shape.bsp.has_value());
    auto res = bsp_check(*shape.bsp);
    INFO(name);
    CHECK(res.pass);
    CHECK(res.cond_a);
    CHECK(res.cond_b);
    CHECK(res.cond_c);
    CHECK(res.cond_d);
    CHECK(braid_check(*shape.bsp).pass);
  }
}

TEST_CASE("condition violations come with the offending detail line") {
  // (b): x3*x1 -> x3*x2 does not start strictly below both sides
  auto bad_b = make_bsp(3, {{{1, 0}, {K.one(), {0, 1}}},
                            {{2, 0}, {K.one(), {1, 2}}},
                            {{2, 1}, {K.one(), {2, 1}}}});
  auto res_b = bsp_check(bad_b);
  CHECK_FALSE(res_b.pass);
  CHECK_FALSE(res_b.cond_b);
  bool has_b_line = false;
  for (const auto& line : res_b.lines) {
    if (line.find("(b) violated on (x3,x2)") != std::string::npos) has_b_line = true;
  }
  CHECK(has_b_line);

  // (c): two rules with the same image, one ascending pair unreached
  auto bad_c = make_bsp(3, {{{1, 0}, {K.one(), {0, 1}}},
                            {{2, 0}, {K.one(), {0, 1}}},
                            {{2, 1}, {K.one(), {1, 2}}}});
  auto res_c = bsp_check(bad_c);
  CHECK_FALSE(res_c.pass);
  CHECK_FALSE(res_c.cond_c);
  bool has_c_line = false;
  for (const auto& line : res_c.lines) {
    if (line == "(c) violated: repeated images: x1x2 missing images: x1x3") {
      has_c_line = true;
    }
  }
  CHECK(has_c_line);

  // (a): zero coefficient
  auto bad_a = make_bsp(2, {{{1, 0}, {K.zero(), {0, 1}}}});
  auto res_a = bsp_check(bad_a);
  CHECK_FALSE(res_a.pass);
  CHECK_FALSE(res_a.cond_a);

  // missing rule
  auto partial = make_bsp(3, {{{1, 0}, {K.one(), {0, 1}}}});
  auto res_m = bsp_check(partial);
  CHECK_FALSE(res_m.pass);
  CHECK(res_m.lines[0] == "rule count 1 does not cover all descending pairs");
}

TEST_CASE("overlap failures are caught and both engines agree") {
  // bijective and (b)-conforming, but x3x2x1 chases to x1^2 x3 one way
  // and to x2 x3^2 the other
  auto cand = make_bsp(3, {{{1, 0}, {K.one(), {0, 2}}},
                           {{2, 0}, {K.one(), {1, 2}}},
                           {{2, 1}, {K.one(), {0, 1}}}});
  auto res = bsp_check(cand);
  CHECK(res.cond_a);
  CHECK(res.cond_b);
  CHECK(res.cond_c);
  CHECK_FALSE(res.cond_d);
  CHECK_FALSE(res.pass);
  bool has_d_line = false;
  for (const auto& line : res.lines) {
    if (line == "(d) violated: overlap x3x2x1 does not resolve") has_d_line = true;
  }
  CHECK(has_d_line);
}

TEST_CASE("scaled quantum-plane coefficients affect the braid map scalars") {
  auto twisted = make_bsp(2, {{{1, 0}, {K.from_int(3), {0, 1}}}});
  auto res = bsp_check(twisted);
  CHECK(res.pass);
  CHECK(braid_check(twisted).pass);
}

TEST_CASE("census of small systems is stable") {
  auto r2 = bsp_search(K, 2);
  CHECK(r2.total_passing == 1);
  CHECK(r2.classes.size() == 1);

  auto r3 = bsp_search(K, 3);
  CHECK(r3.total_passing == 3);
  REQUIRE(r3.classes.size() == 2);
  // one representative is commutative, the other twists the x3 rules
  CHECK(r3.classes[0].rules.at({1, 0}).second == B::Pair{0, 1});
  CHECK(r3.classes[0].rules.at({2, 0}).second == B::Pair{0, 2});
  CHECK(r3.classes[0].rules.at({2, 1}).second == B::Pair{1, 2});
  CHECK(r3.classes[1].rules.at({1, 0}).second == B::Pair{0, 1});
  CHECK(r3.classes[1].rules.at({2, 0}).second == B::Pair{1, 2});
  CHECK(r3.classes[1].rules.at({2, 1}).second == B::Pair{0, 2});

  auto r4 = bsp_search(K, 4);
  CHECK(r4.total_passing == 17);
  CHECK(r4.classes.size() == 5);

  // every census representative satisfies the braid relation
  for (const auto& cls : {r2.classes, r3.classes, r4.classes}) {
    for (const auto& rep : cls) {
      CHECK(bsp_check(rep).pass);
      CHECK(braid_check(rep).pass);
    }
  }

  CHECK_THROWS_AS(bsp_search(K, 5), resource_limit_error);
  CHECK_THROWS_AS(bsp_search(K, 1), resource_limit_error);
}
