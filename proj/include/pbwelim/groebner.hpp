#pragma once

// Left ideals and their Groebner bases. Division happens on the left:
// h -> h - c a^d g, so everything below assumes the ambient algebra's
// products keep their leading monomials (a validated algebra).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace pbwelim {

struct GroebnerOptions {
  std::int64_t max_total_degree = 40;  // cap on new leading monomials
  std::size_t max_basis = 5000;
  std::size_t max_pairs = 50000;            // critical pairs processed
  std::size_t max_coefficient_bits = 4096;  // rational runs only
  // On a resource failure, try to certify 1 in the ideal by a truncated
  // linear span before giving up. Callers that already know the ideal is
  // proper should turn this off; the probe exhausts its whole row budget
  // on a proper ideal.
  bool try_unit_probe = true;
  std::int64_t unit_probe_extra_degree = 12;
  std::size_t unit_probe_max_rows = 20000;
};

template <class F>
struct LeftIdeal {
  ValidatedAlgebra<F> alg;
  std::vector<Polynomial<F>> gens;

  LeftIdeal(ValidatedAlgebra<F> algebra, std::vector<Polynomial<F>> generators)
      : alg(std::move(algebra)), gens(std::move(generators)) {
    if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : gens) {
      if (g.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
      for (const auto& [m, c] : g.terms()) {
        if (m.size() != alg.arity()) throw std::invalid_argument("generator arity mismatch");
      }
    }
  }
};

template <class F>
struct NormalFormResult {
  Polynomial<F> remainder;
  std::size_t steps = 0;
};

// Left division with full tail reduction: no monomial of the remainder is
// divisible by any LM(g). Reducers are tried in list order, so the result
// is deterministic for arbitrary lists and canonical for Groebner bases.
namespace detail {

// Rational coefficients swell catastrophically if intermediate results
// stay monic, so reductions carry their polynomials in primitive integer
// form (coprime integer coefficients) and track the removed factor
// separately. Over a prime field the hook is the identity.
template <class F>
bool strip_content(const F&, Polynomial<F>&, typename F::Elem*) {
  return false;
}

inline bool strip_content(const Rationals& K, Polynomial<Rationals>& p,
                          mpq_class* removed) {
  if (p.is_zero()) return false;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (content == 1) return false;
  p = p.scaled(K, K.inv(content));
  if (removed) *removed = K.mul(*removed, content);
  return true;
}

// Worst coefficient size in bits; prime-field elements never grow, so the
// generic hook reports zero.
template <class F>
std::size_t coefficient_bits(const Polynomial<F>&) {
  return 0;
}

inline std::size_t coefficient_bits(const Polynomial<Rationals>& p) {
  std::size_t bits = 0;
  for (const auto& [m, c] : p.terms()) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
  }
  return bits;
}

}  // namespace detail

template <class F>
NormalFormResult<F> left_normal_form(const ValidatedAlgebra<F>& alg,
                                     const Polynomial<F>& f,
                                     const std::vector<Polynomial<F>>& basis) {
  const F& K = alg.field();
  const MatrixOrder& order = alg.order();
  NormalFormResult<F> res;
  Polynomial<F> h = f;
  // Invariant: f = (reductions so far) + remainder + lambda * h.
  typename F::Elem lambda = K.one();
  detail::strip_content(K, h, &lambda);
  while (!h.is_zero()) {
    const auto& [hm, hc] = h.leading_term(order);
    const Polynomial<F>* red = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial(order).divides(hm)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      res.remainder.add_term(K, hm, K.mul(lambda, hc));
      h.add_term(K, hm, K.neg(hc));
      continue;
    }
    Monomial shift = hm.minus(red->leading_monomial(order));
    Polynomial<F> prod =
        alg.multiply(Polynomial<F>::term(K, shift, K.one()), *red);
    const typename F::Elem* pc = prod.coefficient(hm);
    if (!pc || K.is_zero(*pc)) {
      throw std::logic_error("left multiple lost its leading monomial");
    }
    h.sub_in(K, prod.scaled(K, K.div(hc, *pc)));
    detail::strip_content(K, h, &lambda);
    ++res.steps;
  }
  return res;
}

// Left S-polynomial: both products are shifted to the lcm of the leading
// monomials and cross-scaled by the other product's leading coefficient,
// so the lcm terms cancel exactly.
template <class F>
Polynomial<F> s_polynomial(const ValidatedAlgebra<F>& alg, const Polynomial<F>& g1,
                           const Polynomial<F>& g2) {
  const F& K = alg.field();
  const MatrixOrder& order = alg.order();
  const Monomial& m1 = g1.leading_monomial(order);
  const Monomial& m2 = g2.leading_monomial(order);
  Monomial gamma = Monomial::lcm(m1, m2);
  Polynomial<F> p1 =
      alg.multiply(Polynomial<F>::term(K, gamma.minus(m1), K.one()), g1);
  Polynomial<F> p2 =
      alg.multiply(Polynomial<F>::term(K, gamma.minus(m2), K.one()), g2);
  const typename F::Elem& c1 = p1.leading_coefficient(order);
  const typename F::Elem& c2 = p2.leading_coefficient(order);
  return poly_sub(K, p1.scaled(K, c2), p2.scaled(K, c1));
}

template <class F>
struct GroebnerBasis {
  ValidatedAlgebra<F> alg;
  std::vector<Polynomial<F>> elems;  // monic, interreduced, ascending by LM

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lms;
    lms.reserve(elems.size());
    for (const auto& g : elems) lms.push_back(g.leading_monomial(alg.order()));
    return lms;
  }
};

namespace detail {

// Sound skip cases for a critical pair with coprime leading monomials:
// either the algebra is honestly commutative, or both elements are single
// terms and every generator pair crossing the two supports has no tail
// (then the S-polynomial is identically zero).
template <class F>
bool coprime_pair_skippable(const ValidatedAlgebra<F>& alg, const Polynomial<F>& g1,
                            const Polynomial<F>& g2) {
  if (alg.arity() > 32) return false;
  const MatrixOrder& order = alg.order();
  std::uint32_t s1 = g1.leading_monomial(order).support_mask();
  std::uint32_t s2 = g2.leading_monomial(order).support_mask();
  if ((s1 & s2) != 0) return false;
  const AlgebraPresentation<F>& A = alg.presentation();
  if (A.is_commutative()) return true;
  if (g1.term_count() != 1 || g2.term_count() != 1) return false;
  for (std::uint32_t p = 0; p < alg.arity(); ++p) {
    if (!(s1 & (std::uint32_t{1} << p))) continue;
    for (std::uint32_t q = 0; q < alg.arity(); ++q) {
      if (!(s2 & (std::uint32_t{1} << q)) || p == q) continue;
      if (!A.pair_tail(std::max(p, q), std::min(p, q)).is_zero()) return false;
    }
  }
  return true;
}

// Exact unit-ideal certificate by truncated linear algebra: the rows
// a^m f_i of weighted degree <= degree_bound span a subspace of the ideal,
// eliminated here as sparse vectors keyed by leading monomial. A surviving
// row whose leading monomial is the unit monomial is a nonzero constant in
// the ideal (the unit monomial is minimal under any admissible order, so
// such a row has no other terms). A miss proves nothing; the caller keeps
// its original failure.
template <class F>
bool unit_ideal_probe(const ValidatedAlgebra<F>& alg,
                      const std::vector<Polynomial<F>>& gens,
                      std::int64_t degree_bound, std::size_t max_rows) {
  const F& K = alg.field();
  const MatrixOrder& order = alg.order();
  const Weights& w = alg.weights();
  const Monomial unit = Monomial::unit(alg.arity());

  struct Row {
    Monomial m;
    std::size_t gen;
    std::int64_t deg;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::int64_t dg = gens[i].weighted_degree(w);
    for (auto& m : monomials_up_to_degree(alg.arity(), w, degree_bound - dg)) {
      std::int64_t d = m.weighted_degree(w) + dg;
      rows.push_back({std::move(m), i, d});
    }
  }
  if (rows.size() > max_rows) return false;
  // Low degree first keeps early pivot rows short.
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.gen != b.gen) return a.gen < b.gen;
    return order.less(a.m, b.m);
  });

  std::map<Monomial, Polynomial<F>> pivots;  // keyed by leading monomial
  for (const auto& r : rows) {
    Polynomial<F> h =
        alg.multiply(Polynomial<F>::term(K, r.m, K.one()), gens[r.gen]);
    while (!h.is_zero()) {
      auto it = pivots.find(h.leading_monomial(order));
      if (it == pivots.end()) break;
      const Polynomial<F>& piv = it->second;
      // Cross-scale so the leading terms cancel without division.
      h = poly_sub(K, h.scaled(K, piv.leading_coefficient(order)),
                   piv.scaled(K, h.leading_coefficient(order)));
      strip_content(K, h, static_cast<typename F::Elem*>(nullptr));
    }
    if (h.is_zero()) continue;
    if (h.leading_monomial(order) == unit) return true;
    Monomial lm = h.leading_monomial(order);
    pivots.emplace(std::move(lm), std::move(h));
  }
  return false;
}

}  // namespace detail

// Buchberger's procedure with the normal selection strategy: the pending
// pair with the smallest lcm is processed first, FIFO among ties. The
// output is the reduced basis (monic, minimal leading monomials, fully
// tail-reduced), which is unique for the ideal and order.
template <class F>
GroebnerBasis<F> buchberger(const LeftIdeal<F>& ideal,
                            const GroebnerOptions& opts = {}) {
  const ValidatedAlgebra<F>& alg = ideal.alg;
  const F& K = alg.field();
  const MatrixOrder& order = alg.order();

  struct Pair {
    std::size_t a, b;
    Monomial gamma;
    std::size_t idx;
  };

  std::vector<Polynomial<F>> G;
  std::vector<Pair> pending;
  std::size_t counter = 0;

  // Loop elements are kept primitive with a positive leading coefficient
  // (over the rationals) to contain coefficient growth; the reduced basis
  // returned to the caller is made monic at the end.
  auto push_elem = [&](const Polynomial<F>& h) {
    Polynomial<F> m = h;
    detail::strip_content(K, m, static_cast<typename F::Elem*>(nullptr));
    if constexpr (!F::is_prime) {
      if (m.leading_coefficient(order) < 0) m = m.negated(K);
    } else {
      m = m.monic(K, order);
    }
    if (static_cast<std::int64_t>(m.leading_monomial(order).total_degree()) >
        opts.max_total_degree) {
      throw resource_limit_error(
          "basis element exceeds the degree cap (" +
          std::to_string(opts.max_total_degree) + ")");
    }
    if (G.size() + 1 > opts.max_basis) {
      throw resource_limit_error("basis size cap exceeded (" +
                                 std::to_string(opts.max_basis) + ")");
    }
    if (detail::coefficient_bits(m) > opts.max_coefficient_bits) {
      throw resource_limit_error("coefficient size cap exceeded (" +
                                 std::to_string(opts.max_coefficient_bits) +
                                 " bits)");
    }
    const Monomial& lm = m.leading_monomial(order);
    for (std::size_t k = 0; k < G.size(); ++k) {
      pending.push_back(
          {k, G.size(), Monomial::lcm(G[k].leading_monomial(order), lm), counter++});
    }
    G.push_back(std::move(m));
  };

  try {
    for (const auto& f : ideal.gens) {
      Polynomial<F> r = left_normal_form(alg, f, G).remainder;
      if (!r.is_zero()) push_elem(r);
    }

    std::size_t processed = 0;
    while (!pending.empty()) {
      if (++processed > opts.max_pairs) {
        throw resource_limit_error("critical pair cap exceeded (" +
                                   std::to_string(opts.max_pairs) + ")");
      }
      std::size_t best = 0;
      for (std::size_t k = 1; k < pending.size(); ++k) {
        auto cmp = order.compare(pending[k].gamma, pending[best].gamma);
        if (cmp == std::strong_ordering::less ||
            (cmp == std::strong_ordering::equal && pending[k].idx < pending[best].idx)) {
          best = k;
        }
      }
      Pair pr = std::move(pending[best]);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
      if (detail::coprime_pair_skippable(alg, G[pr.a], G[pr.b])) continue;
      Polynomial<F> s = s_polynomial(alg, G[pr.a], G[pr.b]);
      if (s.is_zero()) continue;
      Polynomial<F> r = left_normal_form(alg, s, G).remainder;
      if (!r.is_zero()) push_elem(r);
    }
  } catch (const resource_limit_error&) {
    // Resource caps over the rationals usually mean the unit ideal: the
    // ladder of intermediate elements carries gigantic coprime integer
    // coefficients even though the reduced basis is just {1}. Certify that
    // case exactly before giving up; the reduced basis of the unit ideal
    // is the constant 1 under every order.
    if (!opts.try_unit_probe) throw;
    std::int64_t dmax = 0;
    for (const auto& f : ideal.gens) {
      dmax = std::max(dmax, f.weighted_degree(alg.weights()));
    }
    if (detail::unit_ideal_probe(alg, ideal.gens,
                                 dmax + opts.unit_probe_extra_degree,
                                 opts.unit_probe_max_rows)) {
      return GroebnerBasis<F>{
          alg, {Polynomial<F>::term(K, Monomial::unit(alg.arity()), K.one())}};
    }
    throw;
  }

  // Minimalize: ascending leading monomials, drop anything whose LM an
  // earlier survivor divides.
  std::sort(G.begin(), G.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
    return order.less(x.leading_monomial(order), y.leading_monomial(order));
  });
  std::vector<Polynomial<F>> minimal;
  for (const auto& g : G) {
    const Monomial& lm = g.leading_monomial(order);
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_monomial(order).divides(lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Interreduce tails against the other survivors.
  std::vector<Polynomial<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    Polynomial<F> r = left_normal_form(alg, minimal[i], others).remainder;
    if (r.is_zero()) throw std::logic_error("minimal basis element reduced to zero");
    reduced.push_back(r.monic(K, order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial<F>& x, const Polynomial<F>& y) {
              return order.less(x.leading_monomial(order), y.leading_monomial(order));
            });

  GroebnerBasis<F> gb{alg, std::move(reduced)};
  for (const auto& f : ideal.gens) {
    if (!left_normal_form(alg, f, gb.elems).remainder.is_zero()) {
      throw std::logic_error("input generator does not reduce to zero");
    }
  }
  return gb;
}

template <class F>
bool is_member(const GroebnerBasis<F>& gb, const Polynomial<F>& f) {
  return left_normal_form(gb.alg, f, gb.elems).remainder.is_zero();
}

template <class F>
bool is_member(const LeftIdeal<F>& ideal, const Polynomial<F>& f,
               const GroebnerOptions& opts = {}) {
  return is_member(buchberger(ideal, opts), f);
}

}  // namespace pbwelim
