#pragma once

// Certifying that a proper quotient forces nonzero elements into every
// "large enough" coordinate subalgebra: for each (d+1)-subset U we exhibit
// a nonzero member of L supported on U, either from a Groebner basis
// under a U-elimination order (when the relations tolerate one) or from
// an exact degree-truncated linear slice of L.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "dimension.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "order.hpp"

namespace pbwelim {

struct EliminationOptions {
  std::vector<std::int64_t> degree_schedule{2, 4, 6};
  std::int64_t degree_ceiling = 6;   // extends the schedule in steps of 2
  std::size_t lex_perm_cap = 720;    // permutations tried for lex fallbacks
  std::size_t full_enum_limit = 8;   // enumerate all subsets up to this n
  std::size_t sample_size = 50;      // subsets sampled beyond that
  std::uint64_t seed = 0x5eed5eedULL;
  std::size_t matrix_entry_cap = 4'000'000;
  GroebnerOptions gopts;
  std::int64_t hilbert_cap = 60;
  // Pair budget for the per-subset block-order bases during certification.
  // Kept deliberately small: a block order can grind through thousands of
  // slow pairs on ideals the truncated fallback certifies in milliseconds,
  // and tripping late is as expensive as finishing.
  std::size_t subset_pair_cap = 500;
};

// Searches for an admissible order making the presentation solvable while
// ranking everything outside `keep` above everything inside. Candidates,
// in order: the two-block weighted order with default ties, the same with
// the hinted tie permutation, then pure lex orders running through
// permutations of the complement block.
template <class F>
std::optional<MatrixOrder> find_elimination_order(
    const AlgebraPresentation<F>& A, const std::vector<std::uint32_t>& keep,
    const std::optional<std::vector<std::uint32_t>>& hint_sig = std::nullopt,
    std::size_t lex_perm_cap = 720) {
  std::size_t n = A.arity();
  const Weights& w = A.weights();
  std::vector<MatrixOrder> block_candidates;
  block_candidates.push_back(elimination_order(n, keep, w, default_significance(n)));
  if (hint_sig && *hint_sig != default_significance(n)) {
    block_candidates.push_back(elimination_order(n, keep, w, *hint_sig));
  }
  for (const auto& cand : block_candidates) {
    if (solvable_check(A, cand).pass) return cand;
  }

  std::vector<std::uint32_t> complement;
  std::vector<bool> in_keep(n, false);
  for (std::uint32_t g : keep) in_keep[g] = true;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (!in_keep[g]) complement.push_back(g);
  }
  // keep-block tie order: hinted significance restricted to keep, else default
  std::vector<std::uint32_t> keep_ranked;
  const std::vector<std::uint32_t> sig = hint_sig ? *hint_sig : default_significance(n);
  for (std::uint32_t g : sig) {
    if (in_keep[g]) keep_ranked.push_back(g);
  }

  std::vector<std::uint32_t> perm = complement;  // ascending start
  std::size_t tried = 0;
  do {
    if (++tried > lex_perm_cap) break;
    std::vector<std::uint32_t> ranking = perm;
    ranking.insert(ranking.end(), keep_ranked.begin(), keep_ranked.end());
    MatrixOrder cand = lex_order(n, ranking);
    if (solvable_check(A, cand).pass) return cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

template <class F>
struct EliminateOutcome {
  bool order_found = false;
  std::optional<MatrixOrder> order;
  std::optional<GroebnerBasis<F>> gb;
  std::vector<Polynomial<F>> intersection;  // basis elements supported in keep
};

// Intersection of L with the subalgebra on `keep` via a Groebner basis
// under an elimination order. Requires the ambient presentation to have
// passed pbw_check already.
template <class F>
EliminateOutcome<F> eliminate(const ValidatedAlgebra<F>& ambient,
                              const std::vector<Polynomial<F>>& gens,
                              const std::vector<std::uint32_t>& keep,
                              const std::optional<std::vector<std::uint32_t>>& hint_sig =
                                  std::nullopt,
                              const EliminationOptions& opts = {}) {
  EliminateOutcome<F> out;
  auto order = find_elimination_order(ambient.presentation(), keep, hint_sig,
                                      opts.lex_perm_cap);
  if (!order) return out;
  out.order_found = true;
  out.order = order;
  ValidatedAlgebra<F> elim_alg(ambient.presentation_ptr(), *order);
  LeftIdeal<F> ideal(elim_alg, gens);
  out.gb = buchberger(ideal, opts.gopts);
  std::uint32_t mask = 0;
  for (std::uint32_t g : keep) mask |= (std::uint32_t{1} << g);
  for (const auto& g : out.gb->elems) {
    if (g.supported_within(mask)) out.intersection.push_back(g);
  }
  return out;
}

// Exact finite slice of L: the span of { a^m g : g in gb, wdeg(a^m g) <= D }
// equals every member of L of weighted degree <= D, because division under
// a degree-compatible order never needs multipliers above the target
// degree. Columns put monomials outside U first, so an echelon row whose
// pivot lands in the U block is supported inside U entirely.
template <class F>
std::optional<Polynomial<F>> truncated_intersection(const GroebnerBasis<F>& gb,
                                                    const std::vector<std::uint32_t>& keep,
                                                    std::int64_t degree_bound,
                                                    std::size_t matrix_entry_cap =
                                                        4'000'000) {
  const ValidatedAlgebra<F>& alg = gb.alg;
  const F& K = alg.field();
  const Weights& w = alg.weights();
  if (!alg.order().degree_compatible(w)) {
    throw std::invalid_argument("truncation needs a degree-compatible order");
  }
  std::size_t n = alg.arity();
  std::uint32_t mask = 0;
  for (std::uint32_t g : keep) mask |= (std::uint32_t{1} << g);

  // all monomials of weighted degree <= bound
  std::vector<Monomial> monos = monomials_up_to_degree(n, w, degree_bound);
  std::stable_sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
    bool au = a.supported_within(mask), bu = b.supported_within(mask);
    if (au != bu) return !au;  // outside-U monomials first
    return a < b;
  });
  std::map<Monomial, std::size_t> col;
  for (std::size_t c = 0; c < monos.size(); ++c) col.emplace(monos[c], c);
  std::size_t ucol_start = monos.size();
  for (std::size_t c = 0; c < monos.size(); ++c) {
    if (monos[c].supported_within(mask)) {
      ucol_start = c;
      break;
    }
  }

  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& g : gb.elems) {
    std::int64_t dg = g.weighted_degree(w);
    for (const auto& m : monos) {
      if (m.weighted_degree(w) + dg > degree_bound) continue;
      if (rows.size() * monos.size() + monos.size() > matrix_entry_cap) {
        throw resource_limit_error("truncated slice matrix exceeds the entry cap");
      }
      Polynomial<F> prod = alg.multiply(Polynomial<F>::term(K, m, K.one()), g);
      std::vector<typename F::Elem> row(monos.size(), K.zero());
      for (const auto& [mm, c] : prod.terms()) {
        auto it = col.find(mm);
        if (it == col.end()) throw std::logic_error("product left the degree slice");
        row[it->second] = c;
      }
      rows.push_back(std::move(row));
    }
  }

  EchelonResult<F> ech = row_echelon(K, rows);
  for (std::size_t r = 0; r < ech.rank; ++r) {
    if (ech.pivot_col[r] >= ucol_start) {
      Polynomial<F> witness;
      for (std::size_t c = ech.pivot_col[r]; c < monos.size(); ++c) {
        witness.add_term(K, monos[c], rows[r][c]);
      }
      return witness.monic(K, alg.order());
    }
  }
  return std::nullopt;
}

template <class F>
struct SubsetCertificate {
  std::vector<std::uint32_t> subset;
  enum class Method { order, truncated, none } method = Method::none;
  std::optional<MatrixOrder> order;          // when method == order
  std::int64_t truncation_degree = 0;        // when method == truncated
  std::int64_t bound_reached = 0;            // when method == none
  std::optional<Polynomial<F>> witness;
  bool member_verified = false;
  bool intersection_certified_empty = false;  // would contradict the theory
};

template <class F>
struct EliminationReport {
  std::size_t n = 0;
  int d = 0;        // growth degree of A/L
  bool vacuous = false;  // L = A, nothing to certify
  bool sampled = false;  // subsets sampled rather than enumerated
  DimensionReport<F> dim;
  std::vector<SubsetCertificate<F>> subsets{};
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  bool all_certified = false;
};

namespace detail {

inline std::vector<std::vector<std::uint32_t>> all_subsets_of_size(std::size_t n,
                                                                   std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k > n) return out;
  std::vector<std::uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - (k - t) - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

inline std::vector<std::vector<std::uint32_t>> sample_subsets(std::size_t n, std::size_t k,
                                                              std::size_t count,
                                                              std::uint64_t seed) {
  std::set<std::vector<std::uint32_t>> seen;
  std::mt19937_64 rng(seed);
  std::size_t guard = 0;
  while (seen.size() < count && guard < count * 400) {
    ++guard;
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint32_t> pick;
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t at = static_cast<std::size_t>(rng() % pool.size());
      pick.push_back(pool[at]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::sort(pick.begin(), pick.end());
    seen.insert(std::move(pick));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Full certification run: compute d = growth degree of A/L, then for each
// (d+1)-subset U produce a verified nonzero element of L supported on U.
// The ambient order must be degree-compatible (needed both for the growth
// computation and for the truncation fallback).
template <class F>
EliminationReport<F> certify_elimination_property(
    const LeftIdeal<F>& ideal,
    const std::optional<std::vector<std::uint32_t>>& hint_sig = std::nullopt,
    const EliminationOptions& opts = {}) {
  const ValidatedAlgebra<F>& alg = ideal.alg;
  EliminationReport<F> rep{.n = alg.arity(),
                           .dim = gk_dim_quotient(ideal, opts.gopts, opts.hilbert_cap)};
  if (rep.dim.gk == kMinusInfinity) {
    rep.d = kMinusInfinity;
    rep.vacuous = true;
    rep.all_certified = true;
    return rep;
  }
  rep.d = rep.dim.gk;
  std::size_t k = static_cast<std::size_t>(rep.d) + 1;

  std::vector<std::vector<std::uint32_t>> subsets;
  if (rep.n <= opts.full_enum_limit) {
    subsets = detail::all_subsets_of_size(rep.n, k);
  } else {
    subsets = detail::sample_subsets(rep.n, k, opts.sample_size, opts.seed);
    rep.sampled = true;
  }

  // Schedule bounds are weighted degrees, so the ceiling scales with the
  // largest generator weight: a slice of weighted degree 6 under weight 4
  // holds far less than the same slice under unit weights.
  std::int64_t wmax = 1;
  for (std::size_t i = 0; i < alg.weights().size(); ++i) {
    wmax = std::max(wmax, alg.weights()[i]);
  }
  std::vector<std::int64_t> schedule = opts.degree_schedule;
  std::int64_t last = schedule.empty() ? 0 : schedule.back();
  for (std::int64_t d = last + 2; d <= opts.degree_ceiling * wmax; d += 2) {
    schedule.push_back(d);
  }

  // The ambient basis above already proved the ideal proper (the unit
  // ideal takes the vacuous exit), and 1 in L does not depend on the
  // order, so the per-subset bases skip the unit-ideal rescue.
  EliminationOptions sub_opts = opts;
  sub_opts.gopts.try_unit_probe = false;
  sub_opts.gopts.max_pairs = std::min(opts.gopts.max_pairs, opts.subset_pair_cap);

  for (const auto& U : subsets) {
    SubsetCertificate<F> cert;
    cert.subset = U;
    EliminateOutcome<F> out;
    try {
      out = eliminate(alg, ideal.gens, U, hint_sig, sub_opts);
    } catch (const resource_limit_error&) {
      // The block-order basis blew past a resource cap; fall back to the
      // degree-truncated slice, which only needs the ambient basis.
      out = EliminateOutcome<F>{};
    }
    if (out.order_found) {
      cert.method = SubsetCertificate<F>::Method::order;
      cert.order = out.order;
      if (!out.intersection.empty()) {
        cert.witness = out.intersection.front();
      } else {
        cert.intersection_certified_empty = true;
      }
    } else {
      for (std::int64_t D : schedule) {
        cert.bound_reached = D;
        auto wtn = truncated_intersection(rep.dim.gb, U, D, opts.matrix_entry_cap);
        if (wtn) {
          cert.method = SubsetCertificate<F>::Method::truncated;
          cert.truncation_degree = D;
          cert.witness = wtn;
          break;
        }
      }
    }
    if (cert.witness) {
      std::uint32_t mask = 0;
      for (std::uint32_t g : U) mask |= (std::uint32_t{1} << g);
      bool supported = cert.witness->supported_within(mask) && !cert.witness->is_zero();
      bool member =
          left_normal_form(alg, *cert.witness, rep.dim.gb.elems).remainder.is_zero();
      cert.member_verified = supported && member;
      if (cert.member_verified) ++rep.certified;
    } else {
      ++rep.inconclusive;
    }
    rep.subsets.push_back(std::move(cert));
  }
  rep.all_certified = rep.certified == rep.subsets.size();
  return rep;
}

}  // namespace pbwelim
