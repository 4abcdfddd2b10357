#pragma once

// Polynomials in normal form: finite maps from PBW monomials to nonzero
// coefficients. The zero-free invariant is maintained by add_term and
// audited (debug builds) by assert_canonical.

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

#include "monomial.hpp"
#include "order.hpp"

namespace pbwelim {

template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  using TermMap = std::map<Monomial, Elem>;

  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }

  static Polynomial term(const F& K, const Monomial& m, const Elem& c) {
    Polynomial p;
    p.add_term(K, m, c);
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const TermMap& terms() const { return t_; }

  // Accumulate c * m, erasing the entry if the total cancels.
  void add_term(const F& K, const Monomial& m, const Elem& c) {
    if (K.is_zero(c)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
      return;
    }
    it->second = K.add(it->second, c);
    if (K.is_zero(it->second)) t_.erase(it);
  }

  Polynomial& add_in(const F& K, const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(K, m, c);
    return *this;
  }

  Polynomial& sub_in(const F& K, const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(K, m, K.neg(c));
    return *this;
  }

  Polynomial scaled(const F& K, const Elem& c) const {
    Polynomial r;
    if (K.is_zero(c)) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, K.mul(x, c));
    return r;
  }

  Polynomial negated(const F& K) const {
    Polynomial r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, K.neg(x));
    return r;
  }

  const Elem* coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? nullptr : &it->second;
  }

  const std::pair<const Monomial, Elem>& leading_term(const MatrixOrder& order) const {
    if (t_.empty()) throw std::domain_error("leading term of the zero polynomial");
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it) {
      if (order.greater(it->first, best->first)) best = it;
    }
    return *best;
  }

  const Monomial& leading_monomial(const MatrixOrder& order) const {
    return leading_term(order).first;
  }
  const Elem& leading_coefficient(const MatrixOrder& order) const {
    return leading_term(order).second;
  }

  Polynomial monic(const F& K, const MatrixOrder& order) const {
    if (is_zero()) return *this;
    return scaled(K, K.inv(leading_coefficient(order)));
  }

  bool supported_within(std::uint32_t mask) const {
    for (const auto& [m, c] : t_) {
      if (!m.supported_within(mask)) return false;
    }
    return true;
  }

  std::int64_t weighted_degree(const Weights& w) const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
      std::int64_t md = m.weighted_degree(w);
      if (first || md > d) d = md;
      first = false;
    }
    return d;
  }

  void assert_canonical([[maybe_unused]] const F& K) const {
#ifndef NDEBUG
    for (const auto& [m, c] : t_) {
      assert(!K.is_zero(c) && "zero coefficient stored in polynomial");
      if (!t_.empty()) assert(m.size() == t_.begin()->first.size());
    }
#endif
  }

  bool operator==(const Polynomial&) const = default;

 private:
  TermMap t_;
};

template <class F>
Polynomial<F> poly_add(const F& K, Polynomial<F> a, const Polynomial<F>& b) {
  a.add_in(K, b);
  return a;
}

template <class F>
Polynomial<F> poly_sub(const F& K, Polynomial<F> a, const Polynomial<F>& b) {
  a.sub_in(K, b);
  return a;
}

}  // namespace pbwelim
