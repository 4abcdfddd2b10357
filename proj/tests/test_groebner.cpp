#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <pbwelim/fixtures.hpp>
#include <pbwelim/groebner.hpp>

using namespace pbwelim;

namespace {

Rationals K;
using P = Polynomial<Rationals>;

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

ValidatedAlgebra<Rationals> validated(const std::string& name) {
  auto pres = fixture_algebra(name);
  auto choice = pick_graded_order(*pres);
  REQUIRE(choice.has_value());
  return ValidatedAlgebra<Rationals>(pres, choice->order);
}

ValidatedAlgebra<Rationals> validated(const std::string& name, MatrixOrder ord) {
  return ValidatedAlgebra<Rationals>(fixture_algebra(name), std::move(ord));
}

P rand_poly(std::mt19937_64& rng, std::size_t n, int terms, std::uint32_t emax) {
  P p = P::zero();
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = static_cast<std::uint32_t>(rng() % (emax + 1));
    std::int64_t c = static_cast<std::int64_t>(rng() % 9) - 4;
    p.add_term(K, Monomial(e), K.from_int(c));
  }
  return p;
}

}  // namespace

TEST_CASE("left normal form reduces fully and reports divisor-freeness") {
  auto A = validated("weyl1");
  std::vector<P> gens{P::term(K, m({0, 1}), K.one())};  // L = (d)
  P f = P::zero();
  f.add_term(K, m({1, 1}), K.one());  // x d
  f.add_term(K, m({0, 0}), K.one());  // + 1
  auto nf = left_normal_form(A, f, gens);
  CHECK(nf.remainder == P::term(K, m({0, 0}), K.one()));
  // no remainder monomial is divisible by a leading monomial
  for (const auto& [mm, c] : nf.remainder.terms()) {
    CHECK_FALSE(m({0, 1}).divides(mm));
  }
}

TEST_CASE("commutative degenerate mode reproduces the textbook basis") {
  auto A = validated("commutative3", lex_order(3, {0, 1, 2}));
  auto [alg_name, gens] = fixture_ideal("linear2");  // (x - y, y - z)
  REQUIRE(alg_name == "commutative3");
  auto gb = buchberger(LeftIdeal<Rationals>(A, gens));
  REQUIRE(gb.elems.size() == 2);
  P xz = P::zero();
  xz.add_term(K, m({1, 0, 0}), K.one());
  xz.add_term(K, m({0, 0, 1}), K.from_int(-1));
  P yz = P::zero();
  yz.add_term(K, m({0, 1, 0}), K.one());
  yz.add_term(K, m({0, 0, 1}), K.from_int(-1));
  CHECK(gb.elems[0] == yz);  // ascending leading monomials: y < x under this lex
  CHECK(gb.elems[1] == xz);
}

TEST_CASE("the pair (x, d) generates the whole Weyl algebra") {
  auto A = validated("weyl1");
  auto [alg_name, gens] = fixture_ideal("xd");
  auto gb = buchberger(LeftIdeal<Rationals>(A, gens));
  REQUIRE(gb.elems.size() == 1);
  CHECK(gb.elems[0] == P::term(K, m({0, 0}), K.one()));
}

TEST_CASE("reduced bases are unique, monic, and idempotent") {
  std::mt19937_64 rng(23);
  for (const auto& iname : fixture_ideal_names()) {
    auto [alg_name, gens] = fixture_ideal(iname);
    auto A = validated(alg_name);
    auto gb = buchberger(LeftIdeal<Rationals>(A, gens));
    INFO(iname);

    for (const auto& g : gb.elems) {
      CHECK(K.eq(g.leading_coefficient(A.order()), K.one()));
    }
    // ascending by leading monomial
    for (std::size_t k = 0; k + 1 < gb.elems.size(); ++k) {
      CHECK(A.order().less(gb.elems[k].leading_monomial(A.order()),
                           gb.elems[k + 1].leading_monomial(A.order())));
    }
    // rerunning on the basis changes nothing
    auto gb2 = buchberger(LeftIdeal<Rationals>(A, gb.elems));
    CHECK(gb2.elems == gb.elems);

    // permutation and scaling invariance
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) {
      g = g.scaled(K, K.from_fraction(std::to_string(1 + rng() % 5),
                                      std::to_string(1 + rng() % 3)));
    }
    auto gb3 = buchberger(LeftIdeal<Rationals>(A, shuffled));
    CHECK(gb3.elems == gb.elems);
  }
}

TEST_CASE("every S-polynomial of a basis reduces to zero") {
  for (const auto& iname : {"xd", "dd", "linear2", "prodz", "sl2h", "ex4lin"}) {
    auto [alg_name, gens] = fixture_ideal(iname);
    auto A = validated(alg_name);
    auto gb = buchberger(LeftIdeal<Rationals>(A, gens));
    INFO(iname);
    for (std::size_t a = 0; a < gb.elems.size(); ++a) {
      for (std::size_t b = a + 1; b < gb.elems.size(); ++b) {
        P s = s_polynomial(A, gb.elems[a], gb.elems[b]);
        CHECK(left_normal_form(A, s, gb.elems).remainder.is_zero());
      }
    }
  }
}

TEST_CASE("membership closes under random left combinations") {
  std::mt19937_64 rng(31);
  for (const auto& iname : {"d1", "qy", "sl2h", "prodz", "ex4lin"}) {
    auto [alg_name, gens] = fixture_ideal(iname);
    auto A = validated(alg_name);
    auto gb = buchberger(LeftIdeal<Rationals>(A, gens));
    INFO(iname);
    for (int t = 0; t < 30; ++t) {
      P combo = P::zero();
      for (const auto& g : gens) {
        combo = poly_add(K, combo, A.multiply(rand_poly(rng, A.arity(), 2, 2), g));
      }
      CHECK(is_member(gb, combo));
    }
  }

  // and does not accept outsiders
  auto A = validated("weyl1");
  auto gb = buchberger(LeftIdeal<Rationals>(A, {P::term(K, m({0, 1}), K.one())}));
  CHECK_FALSE(is_member(gb, P::term(K, m({0, 0}), K.one())));
  CHECK_FALSE(is_member(gb, P::term(K, m({1, 0}), K.one())));
  CHECK(is_member(gb, P::term(K, m({3, 2}), K.from_int(5))));
}

TEST_CASE("resource caps stop runaway computations") {
  auto A = validated("commutative3");
  auto [alg_name, gens] = fixture_ideal("prodz");
  GroebnerOptions tiny;
  tiny.max_basis = 1;
  CHECK_THROWS_AS(buchberger(LeftIdeal<Rationals>(A, gens), tiny), resource_limit_error);

  GroebnerOptions lowdeg;
  lowdeg.max_total_degree = 1;
  CHECK_THROWS_AS(buchberger(LeftIdeal<Rationals>(A, gens), lowdeg), resource_limit_error);
}

TEST_CASE("ideal construction rejects degenerate input") {
  auto A = validated("weyl1");
  CHECK_THROWS_AS(LeftIdeal<Rationals>(A, {}), std::invalid_argument);
  CHECK_THROWS_AS(LeftIdeal<Rationals>(A, {P::zero()}), std::invalid_argument);
  CHECK_THROWS_AS(LeftIdeal<Rationals>(A, {P::term(K, m({1, 0, 0}), K.one())}),
                  std::invalid_argument);
}
