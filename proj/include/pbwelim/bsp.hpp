#pragma once

// Binomial skew rings: every relation trades one descending length-2 word
// for a scalar multiple of one ascending word. The four defining
// conditions are checked directly, the overlap condition twice (a
// single-term chase and the generic polynomial machinery must agree), and
// the induced r-map is tested against the braid relation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace pbwelim {

template <class F>
struct BspPresentation {
  using Elem = typename F::Elem;
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  F field;
  std::size_t n = 0;
  std::vector<std::string> names;
  // (j, i) with j > i  ->  (c, (i', j')) meaning X_jX_i = c X_{i'}X_{j'}
  std::map<Pair, std::pair<Elem, Pair>> rules;

  PresentationPtr<F> to_presentation() const {
    std::map<typename AlgebraPresentation<F>::RelKey, Polynomial<F>> rels;
    for (const auto& [key, rhs] : rules) {
      Monomial m = Monomial::generator(n, rhs.second.first) +
                   Monomial::generator(n, rhs.second.second);
      rels.emplace(key, Polynomial<F>::term(field, m, rhs.first));
    }
    return make_presentation<F>(field, names, Weights::unit(n), std::move(rels), true);
  }
};

template <class F>
struct BspShapeResult {
  std::optional<BspPresentation<F>> bsp;
  std::vector<std::string> problems;  // one line per offending relation
};

// Every relation must be X_jX_i = c * (a single degree-2 monomial).
template <class F>
BspShapeResult<F> bsp_shape(const AlgebraPresentation<F>& A) {
  BspShapeResult<F> out;
  BspPresentation<F> bsp{A.field(), A.arity(), A.names(), {}};
  for (const auto& [key, rhs] : A.relations()) {
    auto [j, i] = key;
    std::string prefix = "relation (" + A.names()[j] + "," + A.names()[i] + "): ";
    if (rhs.term_count() != 1) {
      out.problems.push_back(prefix + "right side is not a single term");
      continue;
    }
    const auto& [m, c] = *rhs.terms().begin();
    if (m.total_degree() != 2) {
      out.problems.push_back(prefix + "right side monomial does not have degree 2");
      continue;
    }
    std::uint32_t lo = 0, hi = 0;
    std::size_t seen = 0;
    for (std::uint32_t g = 0; g < A.arity(); ++g) {
      for (std::uint32_t r = 0; r < m[g]; ++r) {
        (seen == 0 ? lo : hi) = g;
        ++seen;
      }
    }
    bsp.rules.emplace(key, std::make_pair(c, std::make_pair(lo, hi)));
  }
  if (out.problems.empty()) out.bsp = std::move(bsp);
  return out;
}

namespace detail {

// Binomial rewriting keeps single terms, so a word chases to exactly one
// scaled normal word.
template <class F>
std::pair<typename F::Elem, Word> binomial_chase(const BspPresentation<F>& B, Word w,
                                                 typename F::Elem coeff,
                                                 std::size_t step_cap) {
  const F& K = B.field;
  std::size_t steps = 0;
  while (true) {
    auto k = find_descent(w, RewriteStrategy::leftmost);
    if (!k) return {coeff, w};
    if (++steps > step_cap) {
      throw resource_limit_error("binomial chase step cap exceeded");
    }
    auto it = B.rules.find({w[*k], w[*k + 1]});
    if (it == B.rules.end()) throw std::logic_error("missing binomial rule");
    coeff = K.mul(coeff, it->second.first);
    w[*k] = it->second.second.first;
    w[*k + 1] = it->second.second.second;
  }
}

}  // namespace detail

struct BspCheckResult {
  bool pass = false;
  bool cond_a = false;  // coefficients invertible
  bool cond_b = false;  // rules strictly lower the left letter
  bool cond_c = false;  // rule map bijective onto ascending pairs
  bool cond_d = false;  // all overlaps resolve
  std::vector<std::string> lines;  // one line per condition
};

template <class F>
BspCheckResult bsp_check(const BspPresentation<F>& B,
                         std::size_t step_cap = kDefaultStepCap) {
  const F& K = B.field;
  BspCheckResult res;
  std::size_t n = B.n;

  std::size_t expected = n * (n - 1) / 2;
  if (B.rules.size() != expected) {
    res.lines.push_back("rule count " + std::to_string(B.rules.size()) +
                        " does not cover all descending pairs");
    return res;
  }

  res.cond_a = true;
  for (const auto& [key, rhs] : B.rules) {
    if (K.is_zero(rhs.first)) {
      res.cond_a = false;
      res.lines.push_back("(a) violated: zero coefficient on (" + B.names[key.first] +
                          "," + B.names[key.second] + ")");
    }
  }
  if (res.cond_a) res.lines.push_back("(a) ok: all coefficients invertible");

  res.cond_b = true;
  for (const auto& [key, rhs] : B.rules) {
    auto [j, i] = key;
    auto [lo, hi] = rhs.second;
    if (!(lo < j && lo < hi)) {
      res.cond_b = false;
      res.lines.push_back("(b) violated on (" + B.names[j] + "," + B.names[i] +
                          "): image (" + B.names[lo] + "," + B.names[hi] +
                          ") does not start strictly below both");
    }
  }
  if (res.cond_b) res.lines.push_back("(b) ok: every rule lowers the first letter");

  {
    std::map<typename BspPresentation<F>::Pair, std::size_t> hits;
    for (const auto& [key, rhs] : B.rules) ++hits[rhs.second];
    std::vector<std::string> repeated, missing;
    for (const auto& [p, c] : hits) {
      if (c > 1) repeated.push_back(B.names[p.first] + B.names[p.second]);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        if (!hits.count({i, j})) missing.push_back(B.names[i] + B.names[j]);
      }
    }
    res.cond_c = repeated.empty() && missing.empty();
    if (res.cond_c) {
      res.lines.push_back("(c) ok: rule map is a bijection onto ascending pairs");
    } else {
      std::string line = "(c) violated:";
      if (!repeated.empty()) {
        line += " repeated images:";
        for (const auto& s : repeated) line += " " + s;
      }
      if (!missing.empty()) {
        line += " missing images:";
        for (const auto& s : missing) line += " " + s;
      }
      res.lines.push_back(line);
    }
  }

  if (!res.cond_b) {
    res.lines.push_back("(d) skipped: rewriting may diverge while (b) fails");
  } else {
    res.cond_d = true;
    PresentationPtr<F> pres = B.to_presentation();
    PbwCheckResult<F> generic = pbw_check(*pres, step_cap);
    for (std::uint32_t k = 2; k < n && res.cond_d; ++k) {
      for (std::uint32_t j = 1; j < k && res.cond_d; ++j) {
        for (std::uint32_t i = 0; i < j && res.cond_d; ++i) {
          Word w{k, j, i};
          // left branch: rewrite positions (0,1) first; right: (1,2) first
          auto lt = B.rules.at({k, j});
          Word lw{lt.second.first, lt.second.second, i};
          auto lres = detail::binomial_chase(B, lw, lt.first, step_cap);
          auto rt = B.rules.at({j, i});
          Word rw{k, rt.second.first, rt.second.second};
          auto rres = detail::binomial_chase(B, rw, rt.first, step_cap);
          if (!(lres.second == rres.second) || !K.eq(lres.first, rres.first)) {
            res.cond_d = false;
            res.lines.push_back("(d) violated: overlap " + B.names[k] + B.names[j] +
                                B.names[i] + " does not resolve");
          }
        }
      }
    }
    if (res.cond_d != generic.passed()) {
      throw std::logic_error("overlap verdicts disagree between the two engines");
    }
    if (res.cond_d) res.lines.push_back("(d) ok: all overlaps resolve");
  }

  res.pass = res.cond_a && res.cond_b && res.cond_c && res.cond_d;
  return res;
}

struct BraidCheckResult {
  bool pass = false;
  std::array<std::uint32_t, 3> witness{0, 0, 0};
};

// The rule map extends to r on all basis pairs: descending pairs map by
// the rule, ascending pairs by the inverse rule with inverted scalar,
// diagonal pairs map identically. Checks r12 r23 r12 = r23 r12 r23 on
// every triple of letters.
template <class F>
BraidCheckResult braid_check(const BspPresentation<F>& B) {
  const F& K = B.field;
  std::size_t n = B.n;
  using Pair = typename BspPresentation<F>::Pair;
  std::map<Pair, std::pair<typename F::Elem, Pair>> r;
  for (const auto& [key, rhs] : B.rules) {
    r[key] = rhs;
    auto inverse_key = rhs.second;
    if (r.count(inverse_key)) {
      throw std::invalid_argument("rule map is not injective; braid map undefined");
    }
    r[inverse_key] = {K.inv(rhs.first), key};
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        if (!r.count({i, j}) || !r.count({j, i})) {
          throw std::invalid_argument("rule map does not cover all pairs");
        }
      }
    }
    r[{a, a}] = {K.one(), {a, a}};
  }

  struct State {
    typename F::Elem c;
    std::array<std::uint32_t, 3> w;
  };
  auto apply12 = [&](State s) {
    auto& img = r.at({s.w[0], s.w[1]});
    return State{K.mul(s.c, img.first), {img.second.first, img.second.second, s.w[2]}};
  };
  auto apply23 = [&](State s) {
    auto& img = r.at({s.w[1], s.w[2]});
    return State{K.mul(s.c, img.first), {s.w[0], img.second.first, img.second.second}};
  };

  BraidCheckResult res;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        State init{K.one(), {x, y, z}};
        State lhs = apply12(apply23(apply12(init)));
        State rhs = apply23(apply12(apply23(init)));
        if (!(lhs.w == rhs.w) || !K.eq(lhs.c, rhs.c)) {
          res.pass = false;
          res.witness = {x, y, z};
          return res;
        }
      }
    }
  }
  res.pass = true;
  return res;
}

template <class F>
struct BspSearchResult {
  std::vector<BspPresentation<F>> classes;  // one representative per class
  std::size_t total_passing = 0;            // before dedup by relabeling
};

namespace detail {

// Canonical form of the defining equations as an unordered set of word
// pairs, minimized over all generator relabelings.
template <class F>
std::vector<std::uint32_t> bsp_canonical_key(const BspPresentation<F>& B) {
  std::size_t n = B.n;
  std::vector<std::uint32_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::array<std::uint32_t, 4>> eqs;
    for (const auto& [key, rhs] : B.rules) {
      std::array<std::uint32_t, 2> wa{sigma[key.first], sigma[key.second]};
      std::array<std::uint32_t, 2> wb{sigma[rhs.second.first], sigma[rhs.second.second]};
      if (wb < wa) std::swap(wa, wb);
      eqs.push_back({wa[0], wa[1], wb[0], wb[1]});
    }
    std::sort(eqs.begin(), eqs.end());
    std::vector<std::uint32_t> flat;
    flat.reserve(eqs.size() * 4);
    for (const auto& e : eqs) flat.insert(flat.end(), e.begin(), e.end());
    if (best.empty() || flat < best) best = std::move(flat);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace detail

// Exhaustive search over coefficient-1 systems: every bijection from
// descending to ascending pairs satisfying (b) is tested against the full
// check. Classes are counted modulo relabeling of the generators.
template <class F>
BspSearchResult<F> bsp_search(const F& K, std::size_t n,
                              std::size_t step_cap = kDefaultStepCap) {
  if (n < 2 || n > 4) {
    throw resource_limit_error("search supported for 2 <= n <= 4");
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));

  using Pair = typename BspPresentation<F>::Pair;
  std::vector<Pair> desc, asc;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) desc.push_back({j, i});
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) asc.push_back({i, j});
  }

  BspSearchResult<F> out;
  std::map<std::vector<std::uint32_t>, BspPresentation<F>> classes;
  std::vector<std::size_t> perm(asc.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool shape_ok = true;
    for (std::size_t t = 0; t < desc.size(); ++t) {
      auto [j, i] = desc[t];
      auto [lo, hi] = asc[perm[t]];
      if (!(lo < j && lo < hi)) {
        shape_ok = false;
        break;
      }
    }
    if (!shape_ok) continue;
    BspPresentation<F> cand{K, n, names, {}};
    for (std::size_t t = 0; t < desc.size(); ++t) {
      cand.rules.emplace(desc[t], std::make_pair(K.one(), asc[perm[t]]));
    }
    BspCheckResult chk = bsp_check(cand, step_cap);
    if (!chk.pass) continue;
    ++out.total_passing;
    classes.emplace(detail::bsp_canonical_key(cand), cand);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (auto& [key, rep] : classes) out.classes.push_back(std::move(rep));
  return out;
}

}  // namespace pbwelim
