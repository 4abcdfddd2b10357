#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <pbwelim/algebra.hpp>
#include <pbwelim/fixtures.hpp>

using namespace pbwelim;

namespace {

Rationals K;
using P = Polynomial<Rationals>;

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

P rand_poly(std::mt19937_64& rng, std::size_t n, int terms, std::uint32_t emax) {
  P p = P::zero();
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = static_cast<std::uint32_t>(rng() % (emax + 1));
    std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
    p.add_term(K, Monomial(e), K.from_int(c));
  }
  return p;
}

}  // namespace

TEST_CASE("normal forms in the first Weyl algebra") {
  auto A = fixture_algebra("weyl1");  // names x, d; rule d*x = x*d + 1
  // d x x -> x^2 d + 2x
  P nf = normal_form_word(*A, Word{1, 0, 0}, RewriteStrategy::leftmost);
  P expect = P::zero();
  expect.add_term(K, m({2, 1}), K.one());
  expect.add_term(K, m({1, 0}), K.from_int(2));
  CHECK(nf == expect);

  // d d x -> x d^2 + 2d
  nf = normal_form_word(*A, Word{1, 1, 0}, RewriteStrategy::leftmost);
  expect = P::zero();
  expect.add_term(K, m({1, 2}), K.one());
  expect.add_term(K, m({0, 1}), K.from_int(2));
  CHECK(nf == expect);

  // already normal
  CHECK(normal_form_word(*A, Word{0, 1}, RewriteStrategy::leftmost) ==
        P::term(K, m({1, 1}), K.one()));
}

TEST_CASE("quantum plane normal forms scale by powers of q") {
  auto A = fixture_algebra("qplane");  // y*x = 2 x*y
  P nf = normal_form_word(*A, Word{1, 1, 0}, RewriteStrategy::leftmost);
  CHECK(nf == P::term(K, m({1, 2}), K.from_int(4)));
  nf = normal_form_word(*A, Word{1, 0, 1, 0}, RewriteStrategy::leftmost);
  CHECK(nf == P::term(K, m({2, 2}), K.from_int(8)));
}

TEST_CASE("overlap check passes on the library fixtures") {
  for (const auto& name :
       {"weyl1", "weyl2", "qplane", "sl2type", "commutative3", "heis", "ex4"}) {
    auto A = fixture_algebra(name);
    INFO(name);
    CHECK(pbw_check(*A).passed());
  }
}

TEST_CASE("overlap check fails with a witness when associativity breaks") {
  auto A = fixture_algebra("jacobifail");
  auto res = pbw_check(*A);
  REQUIRE_FALSE(res.passed());
  CHECK(res.triple == std::array<std::uint32_t, 3>{2, 1, 0});
  CHECK_FALSE(res.nf_left == res.nf_right);
}

TEST_CASE("normal forms are strategy independent once overlaps resolve") {
  std::mt19937_64 rng(7);
  for (const auto& name : {"weyl1", "sl2type", "qplane", "heis"}) {
    auto A = fixture_algebra(name);
    std::size_t n = A->arity();
    for (int t = 0; t < 40; ++t) {
      std::size_t len = 1 + rng() % 5;
      Word w(len);
      for (auto& c : w) c = static_cast<std::uint32_t>(rng() % n);
      INFO(name);
      CHECK(normal_form_word(*A, w, RewriteStrategy::leftmost) ==
            normal_form_word(*A, w, RewriteStrategy::rightmost));
    }
  }
}

TEST_CASE("rewrite step cap raises a resource error") {
  auto A = fixture_algebra("weyl1");
  CHECK_THROWS_AS(normal_form_word(*A, Word{1, 1, 1, 0, 0, 0}, RewriteStrategy::leftmost, 2),
                  resource_limit_error);
}

TEST_CASE("leading-shape check depends on the order") {
  auto A = fixture_algebra("ex4");  // weights (2,1,4)
  Weights w = A->weights();

  auto def = solvable_check(*A, graded_order(w));
  REQUIRE_FALSE(def.pass);
  REQUIRE(def.violations.size() == 1);
  CHECK(def.violations[0].j == 2);
  CHECK(def.violations[0].i == 0);
  CHECK(def.violations[0].reason == SolvableViolation::Reason::tail_not_lower);

  CHECK(solvable_check(*A, graded_order(w, {0, 1, 2})).pass);
  CHECK(solvable_check(*A, lex_order(3, {0, 1, 2})).pass);
  CHECK_FALSE(solvable_check(*A, graded_order(Weights::unit(3), {0, 1, 2})).pass);

  auto choice = pick_graded_order(*A);
  REQUIRE(choice.has_value());
  CHECK(choice->significance == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(choice->order.degree_compatible(w));
}

TEST_CASE("zero pair scalar is reported, not silently accepted") {
  // y*x = x*z has no x*y term: scalar zero
  std::map<AlgebraPresentation<Rationals>::RelKey, P> rels;
  rels.emplace(std::make_pair(1u, 0u), P::term(K, m({1, 0, 1}), K.one()));
  auto pres = make_presentation<Rationals>(K, std::vector<std::string>{"x", "y", "z"},
                                           Weights::unit(3), std::move(rels));
  auto res = solvable_check(*pres, graded_order(Weights::unit(3)));
  REQUIRE_FALSE(res.pass);
  bool found = false;
  for (const auto& v : res.violations) {
    if (v.j == 1 && v.i == 0 && v.reason == SolvableViolation::Reason::zero_scalar) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("products are associative and satisfy the leading-monomial law") {
  std::mt19937_64 rng(11);
  for (const auto& name : {"weyl1", "sl2type", "ex4"}) {
    auto pres = fixture_algebra(name);
    auto choice = pick_graded_order(*pres);
    REQUIRE(choice.has_value());
    ValidatedAlgebra<Rationals> A(pres, choice->order);
    std::size_t n = A.arity();
    for (int t = 0; t < 25; ++t) {
      P f = rand_poly(rng, n, 2, 2), g = rand_poly(rng, n, 2, 2),
        h = rand_poly(rng, n, 2, 2);
      INFO(name);
      CHECK(A.multiply(A.multiply(f, g), h) == A.multiply(f, A.multiply(g, h)));

      if (!f.is_zero() && !g.is_zero()) {
        Monomial lf = f.leading_monomial(A.order());
        Monomial lg = g.leading_monomial(A.order());
        P prod = A.multiply(f, g);
        REQUIRE_FALSE(prod.is_zero());
        CHECK(prod.leading_monomial(A.order()) == lf + lg);
      }
    }
    // unit laws
    P one = P::term(K, Monomial::unit(n), K.one());
    P f = rand_poly(rng, n, 3, 2);
    CHECK(A.multiply(one, f) == f);
    CHECK(A.multiply(f, one) == f);
  }
}

TEST_CASE("monomial products decompose into scalar, lead, and lower part") {
  auto pres = fixture_algebra("qplane");
  ValidatedAlgebra<Rationals> A(pres, graded_order(Weights::unit(2)));
  auto dec = A.product_decomposition(m({0, 2}), m({1, 0}));  // y^2 * x
  CHECK(K.eq(dec.scalar, K.from_int(4)));
  CHECK(dec.lead == m({1, 2}));
  CHECK(dec.lower.is_zero());

  auto presw = fixture_algebra("weyl1");
  ValidatedAlgebra<Rationals> W(presw, graded_order(Weights::unit(2)));
  auto dw = W.product_decomposition(m({0, 1}), m({1, 0}));  // d * x
  CHECK(K.eq(dw.scalar, K.one()));
  CHECK(dw.lead == m({1, 1}));
  CHECK(dw.lower == P::term(K, m({0, 0}), K.one()));
}

TEST_CASE("filtration compatibility and dimension probe") {
  auto w1 = fixture_algebra("weyl1");
  CHECK(filtration_compat_check(*w1).pass);
  CHECK(filtration_probe(*w1, 2) == 6);
  CHECK(filtration_probe(*w1, 3) == 10);

  auto e4 = fixture_algebra("ex4");
  auto res = filtration_compat_check(*e4);
  REQUIRE_FALSE(res.pass);
  CHECK(res.witness->j == 2);
  CHECK(res.witness->i == 0);
  CHECK(res.witness->offending == m({0, 2, 1}));
  CHECK(filtration_probe(*e4, 2) == 11);  // strictly above the solvable count 10

  CHECK_THROWS_AS(filtration_probe(*w1, 7), resource_limit_error);
}

TEST_CASE("product cache is shared between algebras over one presentation") {
  auto pres = fixture_algebra("sl2type");
  ValidatedAlgebra<Rationals> A(pres, graded_order(Weights::unit(3)));
  ValidatedAlgebra<Rationals> B(pres, graded_order(Weights::unit(3), {0, 1, 2}));
  P f = P::term(K, m({1, 1, 1}), K.one());
  P g = P::term(K, m({2, 1, 0}), K.one());
  // same presentation-level product, independent of the validated order
  CHECK(A.multiply(f, g) == B.multiply(f, g));
}
