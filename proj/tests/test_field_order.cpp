#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <pbwelim/field.hpp>
#include <pbwelim/linalg.hpp>
#include <pbwelim/monomial.hpp>
#include <pbwelim/order.hpp>
#include <pbwelim/polynomial.hpp>

using namespace pbwelim;

namespace {

template <class F>
void check_field_axioms(const F& K, const std::vector<typename F::Elem>& sample) {
  for (const auto& a : sample) {
    CHECK(K.eq(K.add(a, K.zero()), a));
    CHECK(K.eq(K.mul(a, K.one()), a));
    CHECK(K.is_zero(K.add(a, K.neg(a))));
    if (!K.is_zero(a)) {
      CHECK(K.eq(K.mul(a, K.inv(a)), K.one()));
    }
    for (const auto& b : sample) {
      CHECK(K.eq(K.add(a, b), K.add(b, a)));
      CHECK(K.eq(K.mul(a, b), K.mul(b, a)));
      for (const auto& c : sample) {
        CHECK(K.eq(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c))));
        CHECK(K.eq(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c))));
      }
    }
  }
}

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("rational field axioms") {
  Rationals K;
  std::vector<Rationals::Elem> sample{K.zero(), K.one(), K.from_int(-3),
                                      K.from_fraction(2, 7), K.from_fraction(-5, 2)};
  check_field_axioms(K, sample);
  CHECK(K.to_string(K.from_fraction(4, -6)) == "-2/3");
  CHECK(K.describe() == "QQ");
  CHECK_THROWS_AS(K.from_fraction(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(K.inv(K.zero()), std::domain_error);
}

TEST_CASE("prime field axioms and validation") {
  PrimeField K(7);
  std::vector<PrimeField::Elem> sample;
  for (std::uint64_t v = 0; v < 7; ++v) sample.push_back(K.from_int(static_cast<std::int64_t>(v)));
  check_field_axioms(K, sample);
  CHECK(K.eq(K.from_fraction(4, 3), K.mul(K.from_int(4), K.inv(K.from_int(3)))));
  CHECK(K.describe() == "GF 7");

  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1ULL << 31), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2147483647));  // 2^31 - 1 is prime
  PrimeField K2(5);
  CHECK_THROWS_AS(K2.from_fraction(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(K2.inv(K2.zero()), std::domain_error);
}

TEST_CASE("monomial arithmetic") {
  Monomial a = m({2, 0, 1});
  Monomial b = m({1, 3, 0});
  CHECK((a + b) == m({3, 3, 1}));
  CHECK(a.total_degree() == 3);
  CHECK(a.weighted_degree(Weights({2, 1, 4})) == 8);
  CHECK(m({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(Monomial::lcm(a, b) == m({2, 3, 1}));
  CHECK(Monomial::lcm(a, b).minus(a) == m({0, 3, 0}));
  CHECK(a.support_mask() == 0b101u);
  CHECK(a.supported_within(0b101u));
  CHECK_FALSE(a.supported_within(0b001u));
  CHECK(Monomial::generator(3, 1) == m({0, 1, 0}));
  CHECK(Monomial::unit(3).total_degree() == 0);

  Monomial big(std::vector<std::uint32_t>{4294967295u});
  CHECK_THROWS_AS(big + m({1}), std::overflow_error);
  CHECK_THROWS_AS(Weights({0, 1}), std::invalid_argument);
}

TEST_CASE("matrix order validation") {
  // second column all zero: not a total order
  CHECK_THROWS_AS(MatrixOrder(2, {{1, 0}}), std::invalid_argument);
  // first nonzero entry of a column negative: not admissible (1 not minimal)
  CHECK_THROWS_AS(MatrixOrder(2, {{1, -1}, {0, 1}}), std::invalid_argument);
  // rank deficient: ties never broken
  CHECK_THROWS_AS(MatrixOrder(3, {{1, 1, 1}, {2, 2, 2}, {0, 1, 0}}),
                  std::invalid_argument);
  CHECK_NOTHROW(MatrixOrder(2, {{1, 1}, {0, 1}}));
  // admissibility looks at the first nonzero per column, later rows may dip
  CHECK_NOTHROW(MatrixOrder(2, {{2, 1}, {1, -1}}));
  CHECK_THROWS_AS(MatrixOrder(2, {{1, 1, 1}, {0, 1}}), std::invalid_argument);

  CHECK_THROWS_AS(lex_order(3, {0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(lex_order(3, {0, 1}), std::invalid_argument);
}

TEST_CASE("named orders compare as documented") {
  MatrixOrder lex = lex_order(2, {0, 1});  // x most significant
  CHECK(lex.greater(m({1, 0}), m({0, 5})));

  MatrixOrder grlex = graded_order(Weights::unit(3));
  CHECK(grlex.less(m({1, 1, 0}), m({3, 0, 0})));
  CHECK(grlex.less(m({0, 1, 0}), m({0, 0, 1})));  // default ties: higher index wins

  // keep {x, z} below the eliminated block: y alone beats any x^a z^b
  MatrixOrder elim = elimination_order(3, {0, 2}, Weights::unit(3));
  CHECK(elim.greater(m({0, 1, 0}), m({9, 0, 9})));
  CHECK(elim.degree_compatible(Weights::unit(3)) == false);
  CHECK(graded_order(Weights({2, 1, 4})).degree_compatible(Weights({2, 1, 4})));
}

TEST_CASE("order properties on random monomials") {
  std::mt19937_64 rng(42);
  auto rand_mono = [&](std::size_t n) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = static_cast<std::uint32_t>(rng() % 5);
    return Monomial(e);
  };
  std::vector<MatrixOrder> orders{lex_order(3, {2, 0, 1}), graded_order(Weights({2, 1, 4})),
                                  elimination_order(3, {1}, Weights::unit(3)),
                                  MatrixOrder(3, {{3, 1, 2}, {0, 2, 1}, {1, 0, 0}})};
  for (const auto& ord : orders) {
    for (int t = 0; t < 300; ++t) {
      Monomial a = rand_mono(3), b = rand_mono(3), c = rand_mono(3);
      // totality
      int rel = (a == b) ? 0 : (ord.less(a, b) ? -1 : 1);
      if (rel == 1) CHECK(ord.greater(a, b));
      if (rel != 0) CHECK(ord.less(a, b) != ord.less(b, a));
      // transitivity
      if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
      // translation invariance
      if (ord.less(a, b)) CHECK(ord.less(a + c, b + c));
      // the unit monomial is minimal
      if (!(a == Monomial::unit(3))) CHECK(ord.greater(a, Monomial::unit(3)));
    }
  }
}

TEST_CASE("polynomial structure and leading data") {
  Rationals K;
  using P = Polynomial<Rationals>;
  MatrixOrder ord = graded_order(Weights::unit(2));
  P p = P::zero();
  p.add_term(K, m({1, 0}), K.one());
  p.add_term(K, m({0, 1}), K.from_int(2));
  p.add_term(K, m({1, 0}), K.from_int(-1));  // cancels
  CHECK(p.term_count() == 1);
  CHECK(p.leading_monomial(ord) == m({0, 1}));
  CHECK(K.eq(p.leading_coefficient(ord), K.from_int(2)));
  CHECK(p.monic(K, ord).leading_coefficient(ord) == K.one());

  P q = P::term(K, m({2, 1}), K.from_int(3));
  P sum = poly_add(K, p, q);
  CHECK(sum.term_count() == 2);
  CHECK(sum.leading_monomial(ord) == m({2, 1}));
  CHECK(poly_sub(K, sum, q) == p);

  CHECK_THROWS_AS(P::zero().leading_monomial(ord), std::domain_error);
  CHECK(p.supported_within(0b10u));
  CHECK_FALSE(q.supported_within(0b10u));
  CHECK(q.weighted_degree(Weights({2, 1})) == 5);
}

TEST_CASE("row echelon over the rationals") {
  Rationals K;
  std::vector<std::vector<Rationals::Elem>> rows{
      {K.from_int(2), K.from_int(4), K.from_int(0)},
      {K.from_int(1), K.from_int(2), K.from_int(1)},
      {K.from_int(3), K.from_int(6), K.from_int(1)}};
  auto ech = row_echelon(K, rows);
  CHECK(ech.rank == 2);
  CHECK(ech.pivot_col == std::vector<std::size_t>{0, 2});
}
