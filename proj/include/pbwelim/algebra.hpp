#pragma once

// Quadratic presentations k<X_1..X_n | X_jX_i = rhs_ji> together with the
// two structural checks used everywhere downstream: confluence of the
// induced rewriting system (so standard monomials form a basis) and the
// solvable leading-term shape relative to an admissible order. Products in
// a validated algebra are computed by structural recursion with a
// memo shared across every order placed on the same presentation.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "polynomial.hpp"

namespace pbwelim {

// Word in the free monoid; letters are generator indices.
using Word = std::vector<std::uint32_t>;

inline Word word_of_monomial(const Monomial& m) {
  Word w;
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    for (std::uint32_t k = 0; k < m[i]; ++k) w.push_back(i);
  }
  return w;
}

inline Monomial monomial_of_ascending_word(std::size_t n, const Word& w) {
  std::vector<std::uint32_t> e(n, 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0 && w[k] < w[k - 1]) {
      throw std::invalid_argument("word is not ascending");
    }
    if (w[k] >= n) throw std::invalid_argument("letter out of range");
    ++e[w[k]];
  }
  return Monomial(std::move(e));
}

enum class RewriteStrategy { leftmost, rightmost };

constexpr std::size_t kDefaultStepCap = 1'000'000;

template <class F>
class AlgebraPresentation {
 public:
  using Elem = typename F::Elem;
  using RelKey = std::pair<std::uint32_t, std::uint32_t>;  // (j, i), j > i

  // Missing pairs default to the commuting relation X_jX_i = X_iX_j unless
  // `strict` demands that every pair be listed.
  AlgebraPresentation(F field, std::vector<std::string> names, Weights weights,
                      std::map<RelKey, Polynomial<F>> relations, bool strict = false)
      : field_(std::move(field)),
        names_(std::move(names)),
        weights_(std::move(weights)),
        rels_(std::move(relations)) {
    n_ = names_.size();
    if (n_ == 0) throw std::invalid_argument("presentation needs at least one generator");
    if (weights_.size() != n_) throw std::invalid_argument("weights arity mismatch");
    for (const auto& [key, rhs] : rels_) {
      auto [j, i] = key;
      if (!(j > i) || j >= n_) throw std::invalid_argument("relation pair out of range");
      for (const auto& [m, c] : rhs.terms()) {
        if (m.size() != n_) throw std::invalid_argument("relation arity mismatch");
      }
    }
    for (std::uint32_t j = 1; j < n_; ++j) {
      for (std::uint32_t i = 0; i < j; ++i) {
        if (rels_.count({j, i})) continue;
        if (strict) throw std::invalid_argument("missing relation for a generator pair");
        Monomial m = Monomial::generator(n_, i) + Monomial::generator(n_, j);
        rels_.emplace(RelKey{j, i}, Polynomial<F>::term(field_, m, field_.one()));
      }
    }
  }

  const F& field() const { return field_; }
  std::size_t arity() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const Weights& weights() const { return weights_; }
  const std::map<RelKey, Polynomial<F>>& relations() const { return rels_; }

  const Polynomial<F>& relation(std::uint32_t j, std::uint32_t i) const {
    auto it = rels_.find({j, i});
    if (it == rels_.end()) throw std::invalid_argument("no such relation pair");
    return it->second;
  }

  // Coefficient of X_iX_j in rhs_ji; zero when that monomial is absent.
  Elem pair_scalar(std::uint32_t j, std::uint32_t i) const {
    const Polynomial<F>& rhs = relation(j, i);
    Monomial lead = Monomial::generator(n_, i) + Monomial::generator(n_, j);
    const Elem* c = rhs.coefficient(lead);
    return c ? *c : field_.zero();
  }

  // rhs_ji with the X_iX_j term removed.
  Polynomial<F> pair_tail(std::uint32_t j, std::uint32_t i) const {
    Polynomial<F> tail = relation(j, i);
    Monomial lead = Monomial::generator(n_, i) + Monomial::generator(n_, j);
    const Elem* c = tail.coefficient(lead);
    if (c) tail.add_term(field_, lead, field_.neg(*c));
    return tail;
  }

  bool is_commutative() const {
    for (const auto& [key, rhs] : rels_) {
      auto [j, i] = key;
      Monomial lead = Monomial::generator(n_, i) + Monomial::generator(n_, j);
      if (rhs.term_count() != 1) return false;
      const Elem* c = rhs.coefficient(lead);
      if (!c || !field_.eq(*c, field_.one())) return false;
    }
    return true;
  }

  // Product memo, shared by every consumer of this presentation. Keyed by
  // (generator, monomial); the values do not depend on any order.
  const Polynomial<F>* cache_lookup(std::uint32_t g, const Monomial& m) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find({g, m});
    return it == cache_.end() ? nullptr : &it->second;
  }

  const Polynomial<F>& cache_store(std::uint32_t g, const Monomial& m,
                                   Polynomial<F> value) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    return cache_.emplace(std::make_pair(g, m), std::move(value)).first->second;
  }

 private:
  F field_;
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  Weights weights_;
  std::map<RelKey, Polynomial<F>> rels_;

  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<std::uint32_t, Monomial>, Polynomial<F>> cache_;
};

template <class F>
using PresentationPtr = std::shared_ptr<const AlgebraPresentation<F>>;

template <class F, class... Args>
PresentationPtr<F> make_presentation(Args&&... args) {
  return std::make_shared<const AlgebraPresentation<F>>(std::forward<Args>(args)...);
}

namespace detail {

inline std::optional<std::size_t> find_descent(const Word& w, RewriteStrategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == RewriteStrategy::leftmost) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) return k;
    }
  } else {
    for (std::size_t k = w.size() - 1; k-- > 0;) {
      if (w[k] > w[k + 1]) return k;
    }
  }
  return std::nullopt;
}

template <class F>
using WordState = std::map<Word, typename F::Elem>;

template <class F>
void state_accumulate(const F& K, WordState<F>& st, const Word& w,
                      const typename F::Elem& c) {
  if (K.is_zero(c)) return;
  auto it = st.find(w);
  if (it == st.end()) {
    st.emplace(w, c);
    return;
  }
  it->second = K.add(it->second, c);
  if (K.is_zero(it->second)) st.erase(it);
}

// Replaces the descent at position k by the relation right-hand side.
template <class F>
void rewrite_at(const AlgebraPresentation<F>& A, WordState<F>& st, const Word& w,
                std::size_t k, const typename F::Elem& c) {
  const F& K = A.field();
  const Polynomial<F>& rhs = A.relation(w[k], w[k + 1]);
  for (const auto& [m, cm] : rhs.terms()) {
    Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    Word mid = word_of_monomial(m);
    nw.insert(nw.end(), mid.begin(), mid.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
    state_accumulate(K, st, nw, K.mul(c, cm));
  }
}

}  // namespace detail

// Runs the rewriting system X_jX_i -> rhs_ji (j > i) to completion on a
// linear combination of words, reducing one descent per step.
template <class F>
Polynomial<F> normal_form_state(const AlgebraPresentation<F>& A,
                                detail::WordState<F> work, RewriteStrategy strategy,
                                std::size_t step_cap = kDefaultStepCap) {
  const F& K = A.field();
  Polynomial<F> out;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    typename F::Elem c = it->second;
    work.erase(it);
    auto k = detail::find_descent(w, strategy);
    if (!k) {
      out.add_term(K, monomial_of_ascending_word(A.arity(), w), c);
      continue;
    }
    if (++steps > step_cap) {
      throw resource_limit_error("rewrite step cap exceeded (" +
                                 std::to_string(step_cap) + " steps)");
    }
    detail::rewrite_at(A, work, w, *k, c);
  }
  return out;
}

template <class F>
Polynomial<F> normal_form_word(const AlgebraPresentation<F>& A, const Word& w,
                               RewriteStrategy strategy = RewriteStrategy::leftmost,
                               std::size_t step_cap = kDefaultStepCap) {
  detail::WordState<F> st;
  st.emplace(w, A.field().one());
  return normal_form_state(A, std::move(st), strategy, step_cap);
}

template <class F>
struct PbwCheckResult {
  enum class Status { pass, fail, step_cap };
  Status status = Status::pass;
  std::array<std::uint32_t, 3> triple{0, 0, 0};  // (k, j, i), k > j > i
  Polynomial<F> nf_left;
  Polynomial<F> nf_right;

  bool passed() const { return status == Status::pass; }
};

// Confluence test for the quadratic rewriting system: every overlap word
// X_kX_jX_i (k > j > i) must reach the same normal form whether the left
// or the right pair is rewritten first. By the diamond lemma this is
// exactly the condition for the standard monomials to be a basis.
template <class F>
PbwCheckResult<F> pbw_check(const AlgebraPresentation<F>& A,
                            std::size_t step_cap = kDefaultStepCap) {
  const F& K = A.field();
  PbwCheckResult<F> res;
  std::size_t n = A.arity();
  for (std::uint32_t k = 2; k < n; ++k) {
    for (std::uint32_t j = 1; j < k; ++j) {
      for (std::uint32_t i = 0; i < j; ++i) {
        Word w{k, j, i};
        detail::WordState<F> left, right;
        detail::rewrite_at(A, left, w, 0, K.one());
        detail::rewrite_at(A, right, w, 1, K.one());
        res.triple = {k, j, i};
        try {
          res.nf_left = normal_form_state(A, std::move(left),
                                          RewriteStrategy::leftmost, step_cap);
          res.nf_right = normal_form_state(A, std::move(right),
                                           RewriteStrategy::leftmost, step_cap);
        } catch (const resource_limit_error&) {
          res.status = PbwCheckResult<F>::Status::step_cap;
          return res;
        }
        if (!(res.nf_left == res.nf_right)) {
          res.status = PbwCheckResult<F>::Status::fail;
          return res;
        }
      }
    }
  }
  res.status = PbwCheckResult<F>::Status::pass;
  res.triple = {0, 0, 0};
  res.nf_left = Polynomial<F>::zero();
  res.nf_right = Polynomial<F>::zero();
  return res;
}

struct SolvableViolation {
  std::uint32_t j = 0;
  std::uint32_t i = 0;
  enum class Reason { zero_scalar, tail_not_lower } reason = Reason::zero_scalar;
  Monomial offending;  // leading tail monomial for tail_not_lower
};

struct SolvableCheckResult {
  bool pass = false;
  std::vector<SolvableViolation> violations;
};

// Leading-shape test: every relation must read X_jX_i = c X_iX_j + tail
// with c invertible and every tail monomial strictly below X_iX_j in the
// given admissible order.
template <class F>
SolvableCheckResult solvable_check(const AlgebraPresentation<F>& A,
                                   const MatrixOrder& order) {
  if (order.arity() != A.arity()) throw std::invalid_argument("order arity mismatch");
  SolvableCheckResult res;
  std::size_t n = A.arity();
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      Monomial lead = Monomial::generator(n, i) + Monomial::generator(n, j);
      if (A.field().is_zero(A.pair_scalar(j, i))) {
        res.violations.push_back({j, i, SolvableViolation::Reason::zero_scalar, lead});
        continue;
      }
      Polynomial<F> tail = A.pair_tail(j, i);
      if (tail.is_zero()) continue;
      const Monomial& tm = tail.leading_monomial(order);
      if (!order.less(tm, lead)) {
        res.violations.push_back({j, i, SolvableViolation::Reason::tail_not_lower, tm});
      }
    }
  }
  res.pass = res.violations.empty();
  return res;
}

// A presentation that passed pbw_check and solvable_check for `order`.
// Products are total and satisfy LM(a^u a^v) = u + v.
template <class F>
class ValidatedAlgebra {
 public:
  using Elem = typename F::Elem;

  ValidatedAlgebra(PresentationPtr<F> pres, MatrixOrder order)
      : pres_(std::move(pres)), order_(std::move(order)) {
    if (order_.arity() != pres_->arity()) {
      throw std::invalid_argument("order arity mismatch");
    }
  }

  const AlgebraPresentation<F>& presentation() const { return *pres_; }
  const PresentationPtr<F>& presentation_ptr() const { return pres_; }
  const MatrixOrder& order() const { return order_; }
  const F& field() const { return pres_->field(); }
  std::size_t arity() const { return pres_->arity(); }
  const Weights& weights() const { return pres_->weights(); }

  // X_g * a^m, memoized on the presentation.
  const Polynomial<F>& gen_times_mono(std::uint32_t g, const Monomial& m) const {
    if (const Polynomial<F>* hit = pres_->cache_lookup(g, m)) return *hit;
    const F& K = field();
    std::size_t n = arity();
    Polynomial<F> value;
    if (m.is_unit()) {
      value = Polynomial<F>::term(K, Monomial::generator(n, g), K.one());
    } else {
      std::uint32_t i = 0;
      while (m[i] == 0) ++i;
      if (g <= i) {
        value = Polynomial<F>::term(K, m + Monomial::generator(n, g), K.one());
      } else {
        Monomial rest = m.minus(Monomial::generator(n, i));
        const Polynomial<F>& rhs = pres_->relation(g, i);
        for (const auto& [w, c] : rhs.terms()) {
          value.add_in(K, mono_times_mono(w, rest).scaled(K, c));
        }
      }
    }
    return pres_->cache_store(g, m, std::move(value));
  }

  // a^u * a^v as a normal-form polynomial.
  Polynomial<F> mono_times_mono(const Monomial& u, const Monomial& v) const {
    const F& K = field();
    Polynomial<F> acc = Polynomial<F>::term(K, v, K.one());
    Word letters = word_of_monomial(u);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      Polynomial<F> next;
      for (const auto& [m, c] : acc.terms()) {
        next.add_in(K, gen_times_mono(*it, m).scaled(K, c));
      }
      acc = std::move(next);
    }
    return acc;
  }

  Polynomial<F> multiply(const Polynomial<F>& p, const Polynomial<F>& q) const {
    const F& K = field();
    Polynomial<F> acc;
    for (const auto& [u, cu] : p.terms()) {
      for (const auto& [v, cv] : q.terms()) {
        acc.add_in(K, mono_times_mono(u, v).scaled(K, K.mul(cu, cv)));
      }
    }
    return acc;
  }

  struct ProductDecomposition {
    Elem scalar;       // nonzero
    Monomial lead;     // u + v
    Polynomial<F> lower;  // strictly below the lead monomial
  };

  // a^u a^v = scalar * a^{u+v} + lower.
  ProductDecomposition product_decomposition(const Monomial& u, const Monomial& v) const {
    const F& K = field();
    Polynomial<F> full = mono_times_mono(u, v);
    Monomial lead = u + v;
    const Elem* c = full.coefficient(lead);
    if (!c || K.is_zero(*c)) {
      throw std::logic_error("product lost its leading monomial; algebra is not solvable");
    }
    ProductDecomposition d{*c, lead, full};
    d.lower.add_term(K, lead, K.neg(*c));
#ifndef NDEBUG
    for (const auto& [m, cm] : d.lower.terms()) {
      assert(order_.less(m, lead));
    }
#endif
    return d;
  }

 private:
  PresentationPtr<F> pres_;
  MatrixOrder order_;
};

template <class F>
struct ValidationOutcome {
  PbwCheckResult<F> pbw;
  SolvableCheckResult solvable;
  std::optional<ValidatedAlgebra<F>> algebra;

  bool ok() const { return algebra.has_value(); }
};

template <class F>
ValidationOutcome<F> validate_solvable(const PresentationPtr<F>& pres, MatrixOrder order,
                                       std::size_t step_cap = kDefaultStepCap) {
  ValidationOutcome<F> out;
  out.pbw = pbw_check(*pres, step_cap);
  out.solvable = solvable_check(*pres, order);
  if (out.pbw.passed() && out.solvable.pass) {
    out.algebra.emplace(pres, std::move(order));
  }
  return out;
}

// Throwing convenience for code paths that require a valid algebra.
template <class F>
ValidatedAlgebra<F> require_solvable(const PresentationPtr<F>& pres, MatrixOrder order,
                                     std::size_t step_cap = kDefaultStepCap) {
  ValidationOutcome<F> out = validate_solvable(pres, std::move(order), step_cap);
  if (!out.ok()) {
    if (!out.pbw.passed()) {
      throw std::invalid_argument("presentation fails the basis overlap check");
    }
    throw std::invalid_argument("presentation is not solvable for the given order");
  }
  return *std::move(out.algebra);
}

struct GradedOrderChoice {
  MatrixOrder order;
  std::vector<std::uint32_t> significance;
};

// Finds a weighted-degree order making the presentation solvable. The
// default tie permutation is tried first, then (for n <= 8) every tie
// permutation in lexicographic order, so the choice is deterministic.
template <class F>
std::optional<GradedOrderChoice> pick_graded_order(const AlgebraPresentation<F>& A) {
  const Weights& w = A.weights();
  std::size_t n = A.arity();
  std::vector<std::uint32_t> def = default_significance(n);
  if (solvable_check(A, graded_order(w, def)).pass) {
    return GradedOrderChoice{graded_order(w, def), def};
  }
  if (n > 8) return std::nullopt;
  std::vector<std::uint32_t> sig(n);
  for (std::size_t i = 0; i < n; ++i) sig[i] = static_cast<std::uint32_t>(i);
  do {
    if (sig == def) continue;
    MatrixOrder cand = graded_order(w, sig);
    if (solvable_check(A, cand).pass) return GradedOrderChoice{cand, sig};
  } while (std::next_permutation(sig.begin(), sig.end()));
  return std::nullopt;
}

struct FiltrationViolation {
  std::uint32_t j = 0;
  std::uint32_t i = 0;
  Monomial offending;
};

struct FiltrationCheckResult {
  bool pass = false;
  std::optional<FiltrationViolation> witness;
};

// Do the defining relations respect the total-degree filtration? Needs
// every right-hand-side monomial to have total degree <= 2.
template <class F>
FiltrationCheckResult filtration_compat_check(const AlgebraPresentation<F>& A) {
  for (const auto& [key, rhs] : A.relations()) {
    for (const auto& [m, c] : rhs.terms()) {
      if (m.total_degree() > 2) {
        return {false, FiltrationViolation{key.first, key.second, m}};
      }
    }
  }
  return {true, std::nullopt};
}

// dim of the span of all products of <= m generators, by direct word
// enumeration (exponential: capped at n <= 4, m <= 6). Meaningful once
// pbw_check passes, since normal forms are then canonical coordinates.
template <class F>
std::size_t filtration_probe(const AlgebraPresentation<F>& A, std::size_t m,
                             std::size_t step_cap = kDefaultStepCap) {
  std::size_t n = A.arity();
  if (n > 4 || m > 6) {
    throw resource_limit_error("filtration probe capped at n <= 4, m <= 6");
  }
  const F& K = A.field();
  std::vector<Polynomial<F>> forms;
  Word w;
  for (std::size_t len = 0; len <= m; ++len) {
    w.assign(len, 0);
    while (true) {
      forms.push_back(normal_form_word(A, w, RewriteStrategy::leftmost, step_cap));
      std::size_t k = len;
      while (k > 0 && w[k - 1] == n - 1) --k;
      if (k == 0) break;
      ++w[k - 1];
      for (std::size_t t = k; t < len; ++t) w[t] = 0;
    }
  }
  std::map<Monomial, std::size_t> col;
  for (const auto& f : forms) {
    for (const auto& [mm, c] : f.terms()) col.emplace(mm, 0);
  }
  std::size_t idx = 0;
  for (auto& [mm, c] : col) c = idx++;
  std::vector<std::vector<typename F::Elem>> rows;
  rows.reserve(forms.size());
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    std::vector<typename F::Elem> row(col.size(), K.zero());
    for (const auto& [mm, c] : f.terms()) row[col[mm]] = c;
    rows.push_back(std::move(row));
  }
  return matrix_rank(K, std::move(rows));
}

}  // namespace pbwelim
