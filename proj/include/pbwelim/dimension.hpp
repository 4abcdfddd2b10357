#pragma once

// Growth of cyclic quotients A/L, measured three ways that must agree:
// a combinatorial staircase dimension, a weighted Hilbert-function probe
// with stride differencing, and (for the full algebra) the leading-word
// graph criterion.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "monomial.hpp"

namespace pbwelim {

// Growth degree of the empty module.
constexpr int kMinusInfinity = std::numeric_limits<int>::min();

// Monomial ideal spanned by the leading monomials of a basis; generators
// are kept minimal (no generator divides another).
class StaircaseIdeal {
 public:
  StaircaseIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    for (const auto& g : gens) {
      if (g.size() != n) throw std::invalid_argument("staircase arity mismatch");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
      bool redundant = false;
      for (const auto& kept : gens_) {
        if (kept.divides(g) && !(kept == g)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) gens_.push_back(g);
    }
    // A later generator can also swallow an earlier one.
    for (std::size_t i = 0; i < gens_.size();) {
      bool redundant = false;
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k != i && gens_[k].divides(gens_[i])) {
          redundant = true;
          break;
        }
      }
      if (redundant) {
        gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
  }

  std::size_t arity() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_) {
      if (g.divides(m)) return true;
    }
    return false;
  }

  bool is_unit_ideal() const { return contains(Monomial::unit(n_)); }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

template <class F>
StaircaseIdeal staircase_of(const GroebnerBasis<F>& gb) {
  return StaircaseIdeal(gb.alg.arity(), gb.leading_monomials());
}

// Largest size of a generator subset U such that no staircase generator
// lives entirely inside U; the standard monomials then contain the full
// cone on U, and conversely every standard cone sits inside such a U.
inline int combinatorial_dim(const StaircaseIdeal& s) {
  std::size_t n = s.arity();
  if (n > 16) throw resource_limit_error("combinatorial dimension capped at n <= 16");
  if (s.is_unit_ideal()) return kMinusInfinity;
  std::vector<std::uint32_t> masks;
  masks.reserve(s.generators().size());
  for (const auto& g : s.generators()) masks.push_back(g.support_mask());
  int best = 0;
  for (std::uint32_t u = 0; u < (std::uint32_t{1} << n); ++u) {
    bool free_face = true;
    for (std::uint32_t gm : masks) {
      if ((gm & ~u) == 0) {
        free_face = false;
        break;
      }
    }
    if (free_face) best = std::max(best, __builtin_popcount(u));
  }
  return best;
}

// Lexicographically first subset of the given size witnessing the
// combinatorial dimension.
inline std::vector<std::uint32_t> dimension_witness(const StaircaseIdeal& s, int d) {
  std::vector<std::uint32_t> u;
  if (d <= 0) return u;
  std::size_t n = s.arity();
  std::vector<std::uint32_t> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  auto qualifies = [&](const std::vector<std::uint32_t>& cand) {
    std::uint32_t mask = 0;
    for (std::uint32_t g : cand) mask |= (std::uint32_t{1} << g);
    for (const auto& gen : s.generators()) {
      if ((gen.support_mask() & ~mask) == 0) return false;
    }
    return true;
  };
  while (true) {
    if (qualifies(idx)) return idx;
    // next combination in lexicographic order
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                         n - static_cast<std::size_t>(d - k)) {
      --k;
    }
    if (k < 0) throw std::logic_error("no witness subset of the claimed size");
    ++idx[static_cast<std::size_t>(k)];
    for (std::size_t t = static_cast<std::size_t>(k) + 1; t < idx.size(); ++t) {
      idx[t] = idx[t - 1] + 1;
    }
  }
}

struct HilbertEstimate {
  enum class Status { stabilized, inconclusive, zero_module };
  Status status = Status::inconclusive;
  int degree = 0;  // valid when stabilized; kMinusInfinity for zero_module
  std::vector<std::int64_t> counts;  // counts[q] = #standard monomials of wdeg <= q
  std::int64_t stride = 1;
};

// Counts standard monomials by inclusion-exclusion over staircase
// generator subsets, then reads off the growth degree from iterated
// finite differences. The counting function is quasi-polynomial with
// period dividing lcm(weights), so differences are taken at that stride,
// and a window only counts once all its sample points are past the last
// inclusion-exclusion offset (which makes a detected degree exact, never
// a lucky coincidence).
inline HilbertEstimate hilbert_degree(const StaircaseIdeal& s, const Weights& w,
                                      std::int64_t q_cap = 60) {
  std::size_t n = s.arity();
  if (w.size() != n) throw std::invalid_argument("weights arity mismatch");
  const auto& gens = s.generators();
  if (gens.size() > 20) {
    throw resource_limit_error("inclusion-exclusion capped at 20 staircase generators");
  }

  HilbertEstimate est;
  if (s.is_unit_ideal()) {
    est.status = HilbertEstimate::Status::zero_module;
    est.degree = kMinusInfinity;
    est.counts.assign(static_cast<std::size_t>(q_cap) + 1, 0);
    return est;
  }

  // signed degree offsets wdeg(lcm(S)) over all generator subsets S
  std::vector<std::pair<int, std::int64_t>> offsets;
  std::int64_t q_reg = 0;
  {
    std::vector<std::pair<int, Monomial>> stack{{+1, Monomial::unit(n)}};
    for (const auto& g : gens) {
      std::size_t sz = stack.size();
      for (std::size_t k = 0; k < sz; ++k) {
        stack.emplace_back(-stack[k].first, Monomial::lcm(stack[k].second, g));
      }
    }
    offsets.reserve(stack.size());
    for (const auto& [sign, m] : stack) {
      std::int64_t d = m.weighted_degree(w);
      q_reg = std::max(q_reg, d);
      offsets.emplace_back(sign, d);
    }
  }

  // N[t] = #{m in N^n : wdeg(m) <= t}
  std::vector<std::int64_t> N(static_cast<std::size_t>(q_cap) + 1, 0);
  {
    std::vector<std::int64_t> layer(static_cast<std::size_t>(q_cap) + 1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> next(static_cast<std::size_t>(q_cap) + 1, 0);
      for (std::int64_t t = 0; t <= q_cap; ++t) {
        next[static_cast<std::size_t>(t)] =
            layer[static_cast<std::size_t>(t)] +
            (t >= w[i] ? next[static_cast<std::size_t>(t - w[i])] : 0);
      }
      layer = std::move(next);
    }
    N = std::move(layer);
  }

  est.counts.resize(static_cast<std::size_t>(q_cap) + 1);
  for (std::int64_t q = 0; q <= q_cap; ++q) {
    std::int64_t c = 0;
    for (const auto& [sign, d] : offsets) {
      if (d <= q) c += sign * N[static_cast<std::size_t>(q - d)];
    }
    est.counts[static_cast<std::size_t>(q)] = c;
  }

  std::int64_t stride = 1;
  for (std::size_t i = 0; i < n; ++i) stride = std::lcm(stride, w[i]);
  est.stride = stride;

  // samples along the residue class of q_cap, oldest first
  std::vector<std::int64_t> qs;
  for (std::int64_t q = q_cap % stride; q <= q_cap; q += stride) qs.push_back(q);
  std::vector<std::int64_t> level;
  level.reserve(qs.size());
  for (std::int64_t q : qs) level.push_back(est.counts[static_cast<std::size_t>(q)]);

  for (int k = 0; k <= static_cast<int>(n); ++k) {
    // entry t at difference level k spans original samples t .. t+k, so
    // every sample it touches is >= q_reg exactly when qs[t] is. Past
    // q_reg the counting function agrees with a single quasi-polynomial;
    // demanding constancy across that whole exact tail (>= 3 points)
    // rules out accidental matches below the true degree.
    std::size_t first_exact = 0;
    while (first_exact < level.size() && qs[first_exact] < q_reg) ++first_exact;
    std::size_t tail = level.size() - first_exact;
    // a nonconstant polynomial of degree <= n - k cannot take one value
    // at more than n - k points, so this tail length makes the test exact
    std::size_t needed = std::max<std::size_t>(3, n + 1 - static_cast<std::size_t>(k));
    if (tail >= needed) {
      bool constant = true;
      for (std::size_t t = first_exact; t + 1 < level.size(); ++t) {
        if (level[t] != level[t + 1]) {
          constant = false;
          break;
        }
      }
      if (constant) {
        if (level[first_exact] == 0) {
          // only reachable at k = 0: bigger k would have been caught below
          est.status = HilbertEstimate::Status::zero_module;
          est.degree = kMinusInfinity;
          return est;
        }
        est.status = HilbertEstimate::Status::stabilized;
        est.degree = k;
        return est;
      }
    }
    if (level.size() < 2) break;
    std::vector<std::int64_t> next(level.size() - 1);
    for (std::size_t t = 0; t + 1 < level.size(); ++t) next[t] = level[t + 1] - level[t];
    level = std::move(next);
  }
  est.status = HilbertEstimate::Status::inconclusive;
  return est;
}

// Growth read off the graph on generators with an edge i -> j whenever
// the length-2 word X_iX_j is not a leading word: polynomial growth iff
// every strongly connected component is a vertex or a single simple
// cycle, and then the degree is the largest number of cycles on a path.
struct GrowthResult {
  bool exponential = false;
  int dim = 0;  // valid when !exponential
};

inline GrowthResult ufnarovski_gk_dim(
    std::size_t n, const std::set<std::pair<std::uint32_t, std::uint32_t>>& leading_words) {
  for (const auto& [a, b] : leading_words) {
    if (a >= n || b >= n) throw std::invalid_argument("leading word letter out of range");
  }
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      edge[i][j] = leading_words.count({i, j}) == 0;
    }
  }

  // Kosaraju
  std::vector<int> comp(n, -1);
  std::vector<std::uint32_t> order_out;
  {
    std::vector<bool> seen(n, false);
    for (std::uint32_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{s, 0}};
      seen[s] = true;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        bool advanced = false;
        while (next < n) {
          std::uint32_t u = next++;
          if (edge[v][u] && !seen[u]) {
            seen[u] = true;
            stack.emplace_back(u, 0);
            advanced = true;
            break;
          }
        }
        if (!advanced && (stack.back().second >= n)) {
          order_out.push_back(stack.back().first);
          stack.pop_back();
        }
      }
    }
  }
  int ncomp = 0;
  for (auto it = order_out.rbegin(); it != order_out.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<std::uint32_t> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t u = 0; u < n; ++u) {
        if (edge[u][v] && comp[u] == -1) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }

  std::vector<std::vector<std::uint32_t>> members(static_cast<std::size_t>(ncomp));
  for (std::uint32_t v = 0; v < n; ++v) {
    members[static_cast<std::size_t>(comp[v])].push_back(v);
  }
  std::vector<bool> has_cycle(static_cast<std::size_t>(ncomp), false);
  GrowthResult res;
  for (int c = 0; c < ncomp; ++c) {
    const auto& vs = members[static_cast<std::size_t>(c)];
    if (vs.size() == 1) {
      has_cycle[static_cast<std::size_t>(c)] = edge[vs[0]][vs[0]];
      continue;
    }
    has_cycle[static_cast<std::size_t>(c)] = true;
    for (std::uint32_t v : vs) {
      std::size_t in = 0, out = 0;
      for (std::uint32_t u : vs) {
        if (edge[v][u]) ++out;
        if (edge[u][v]) ++in;
      }
      if (in != 1 || out != 1) {
        res.exponential = true;
        return res;
      }
    }
  }

  // longest path in the condensation, counting cycle components
  std::vector<int> best(static_cast<std::size_t>(ncomp), -1);
  // comp ids from Kosaraju are already in reverse topological order of the
  // condensation when visited as above; compute robustly instead.
  std::vector<std::vector<int>> cadj(static_cast<std::size_t>(ncomp));
  std::vector<int> indeg(static_cast<std::size_t>(ncomp), 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t u = 0; u < n; ++u) {
      if (edge[v][u] && comp[v] != comp[u]) {
        cadj[static_cast<std::size_t>(comp[v])].push_back(comp[u]);
      }
    }
  }
  for (auto& a : cadj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (int t : a) ++indeg[static_cast<std::size_t>(t)];
  }
  std::vector<int> topo;
  for (int c = 0; c < ncomp; ++c) {
    if (indeg[static_cast<std::size_t>(c)] == 0) topo.push_back(c);
  }
  for (std::size_t h = 0; h < topo.size(); ++h) {
    for (int t : cadj[static_cast<std::size_t>(topo[h])]) {
      if (--indeg[static_cast<std::size_t>(t)] == 0) topo.push_back(t);
    }
  }
  for (int c : topo) {
    int base = has_cycle[static_cast<std::size_t>(c)] ? 1 : 0;
    if (best[static_cast<std::size_t>(c)] < base) best[static_cast<std::size_t>(c)] = base;
    for (int t : cadj[static_cast<std::size_t>(c)]) {
      int cand = best[static_cast<std::size_t>(c)] +
                 (has_cycle[static_cast<std::size_t>(t)] ? 1 : 0);
      if (cand > best[static_cast<std::size_t>(t)]) best[static_cast<std::size_t>(t)] = cand;
    }
  }
  res.dim = 0;
  for (int c = 0; c < ncomp; ++c) res.dim = std::max(res.dim, best[static_cast<std::size_t>(c)]);
  return res;
}

template <class F>
struct DimensionReport {
  int gk = 0;  // kMinusInfinity when L is the whole algebra
  std::vector<std::uint32_t> witness;
  bool proper_drop = false;  // gk < arity of the ambient algebra
  bool weighted = false;     // non-unit weights in play
  StaircaseIdeal staircase{1, {}};
  HilbertEstimate hilbert;
  GroebnerBasis<F> gb;
};

// Growth degree of A/L from the staircase of a left Groebner basis of L.
// The ambient order must refine the weighted degree so that leading
// monomials see the filtration.
template <class F>
DimensionReport<F> gk_dim_quotient(const LeftIdeal<F>& ideal,
                                   const GroebnerOptions& opts = {},
                                   std::int64_t hilbert_cap = 60) {
  const ValidatedAlgebra<F>& alg = ideal.alg;
  if (!alg.order().degree_compatible(alg.weights())) {
    throw std::invalid_argument(
        "growth computation needs an order whose first row is the weight vector");
  }
  DimensionReport<F> rep{0,
                         {},
                         false,
                         !alg.weights().is_unit(),
                         StaircaseIdeal{alg.arity(), {}},
                         {},
                         buchberger(ideal, opts)};
  rep.staircase = staircase_of(rep.gb);
  rep.gk = combinatorial_dim(rep.staircase);
  rep.hilbert = hilbert_degree(rep.staircase, alg.weights(), hilbert_cap);
  if (rep.hilbert.status == HilbertEstimate::Status::zero_module &&
      rep.gk != kMinusInfinity) {
    throw std::logic_error("dimension methods disagree (zero module)");
  }
  if (rep.hilbert.status == HilbertEstimate::Status::stabilized &&
      rep.hilbert.degree != rep.gk) {
    throw std::logic_error("dimension methods disagree");
  }
  if (rep.gk != kMinusInfinity) {
    rep.witness = dimension_witness(rep.staircase, rep.gk);
  }
  rep.proper_drop = rep.gk < static_cast<int>(alg.arity());
  return rep;
}

}  // namespace pbwelim
