#pragma once

// Commutative exponent vectors. These index the PBW basis a^m = a_1^{m_1}
// ... a_n^{m_n}; the noncommutative structure lives elsewhere.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbwelim {

// Strictly positive integer weights, one per generator.
struct Weights {
  std::vector<std::int64_t> w;

  Weights() = default;
  explicit Weights(std::vector<std::int64_t> values) : w(std::move(values)) {
    for (std::int64_t x : w) {
      if (x < 1) throw std::invalid_argument("weights must be >= 1");
    }
  }

  static Weights unit(std::size_t n) {
    return Weights(std::vector<std::int64_t>(n, 1));
  }

  std::size_t size() const { return w.size(); }
  std::int64_t operator[](std::size_t i) const { return w[i]; }
  bool is_unit() const {
    return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 1; });
  }
  bool operator==(const Weights&) const = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static Monomial unit(std::size_t n) { return Monomial(n); }
  static Monomial generator(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.e_.at(i) = 1;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  bool is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
  }

  std::uint64_t total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  std::int64_t weighted_degree(const Weights& w) const {
    check_arity(w.size());
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      d += w[i] * static_cast<std::int64_t>(e_[i]);
    }
    return d;
  }

  // Componentwise sum; exponents are checked against overflow so that
  // long rewriting chains fail loudly instead of wrapping.
  Monomial operator+(const Monomial& o) const {
    check_arity(o.size());
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
      if (s > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
      r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
  }

  bool divides(const Monomial& m) const {
    check_arity(m.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > m.e_[i]) return false;
    }
    return true;
  }

  // Componentwise difference; requires *this componentwise >= o.
  Monomial minus(const Monomial& o) const {
    check_arity(o.size());
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial difference would be negative");
      r.e_[i] = e_[i] - o.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_arity(b.size());
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
    }
    return r;
  }

  // Bitmask of indices with nonzero exponent; limited to n <= 32 callers.
  std::uint32_t support_mask() const {
    if (e_.size() > 32) throw std::invalid_argument("support mask needs n <= 32");
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] != 0) m |= (std::uint32_t{1} << i);
    }
    return m;
  }

  bool supported_within(std::uint32_t mask) const {
    return (support_mask() & ~mask) == 0;
  }

  // Structural comparison only (container keys); admissible monomial
  // orders are a separate concept.
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  void check_arity(std::size_t n) const {
    if (e_.size() != n) throw std::invalid_argument("monomial arity mismatch");
  }

  std::vector<std::uint32_t> e_;
};

// Exponent vectors with Sum w_i e_i <= bound, emitted in odometer order
// (last coordinate fastest).
inline std::vector<Monomial> monomials_up_to_degree(std::size_t n, const Weights& w,
                                                    std::int64_t bound) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(n, 0);
  std::vector<std::int64_t> used(n + 1, 0);  // degree consumed by cur[0..i)
  std::size_t at = 0;
  while (true) {
    if (at == n) {
      out.push_back(Monomial(cur));
      // backtrack to the last coordinate that can still grow
      std::size_t k = n;
      while (k > 0) {
        --k;
        std::int64_t nd = used[k] + static_cast<std::int64_t>(cur[k] + 1) * w[k];
        if (nd <= bound) {
          ++cur[k];
          used[k + 1] = nd;
          at = k + 1;
          break;
        }
        cur[k] = 0;
        if (k == 0) return out;
      }
      continue;
    }
    cur[at] = 0;
    used[at + 1] = used[at];
    ++at;
  }
}

}  // namespace pbwelim
