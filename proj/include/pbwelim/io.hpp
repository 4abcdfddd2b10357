#pragma once

// Text formats. An algebra file:
//
//   algebra weyl1
//   field QQ            (or: field GF 32003)
//   gens x d
//   weights 2 1         (optional; default all 1)
//   bsp                 (optional marker)
//   rel d*x = x*d + 1
//
// and an ideal file:
//
//   ideal dd
//   algebra weyl2
//   gen d1
//   gen d2
//
// Polynomials are sign-separated term tokens; a term is
// [coeff*]factor[*factor...] with coeff an integer or integer/integer and
// factors name or name^exp with strictly ascending generators. '#' starts
// a comment. Coefficients are written as rationals in every field; for
// GF(p) they reduce after parsing.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "polynomial.hpp"

namespace pbwelim {

struct RawTerm {
  bool negative = false;
  std::string num = "1";
  std::string den = "1";
  std::vector<std::pair<std::string, std::uint32_t>> factors;
  std::size_t line = 0;
};

struct RawPoly {
  std::vector<RawTerm> terms;
};

struct ResolvedTerm {
  bool negative = false;
  std::string num = "1";
  std::string den = "1";
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // ascending
  std::size_t line = 0;
};

struct ResolvedPoly {
  std::vector<ResolvedTerm> terms;
};

struct RawAlgebraFile {
  std::string name;
  bool prime_field = false;
  std::uint64_t modulus = 0;
  std::vector<std::string> gens;
  std::vector<std::int64_t> weights;  // empty means all 1
  bool bsp_marker = false;
  std::map<std::pair<std::uint32_t, std::uint32_t>, ResolvedPoly> rels;
};

struct RawIdealFile {
  std::string name;
  std::string algebra_name;
  std::vector<RawPoly> gens;
};

namespace iodetail {

inline bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

inline bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::string> tokens_of_line(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

inline RawTerm parse_term_token(std::string tok, std::size_t line) {
  RawTerm term;
  term.line = line;
  if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    term.negative = tok[0] == '-';
    tok.erase(0, 1);
  }
  if (tok.empty()) throw parse_error(line, "empty term");
  std::vector<std::string> pieces = split(tok, '*');
  std::size_t at = 0;
  if (pieces[0].empty()) throw parse_error(line, "empty factor (stray '*')");
  if (std::isdigit(static_cast<unsigned char>(pieces[0][0]))) {
    std::vector<std::string> frac = split(pieces[0], '/');
    if (frac.size() > 2 || !is_digits(frac[0]) ||
        (frac.size() == 2 && !is_digits(frac[1]))) {
      throw parse_error(line, "malformed coefficient '" + pieces[0] + "'");
    }
    term.num = frac[0];
    term.den = frac.size() == 2 ? frac[1] : "1";
    if (mpz_class(term.num) == 0) {
      throw parse_error(line, "zero coefficient is not allowed; drop the term");
    }
    if (mpz_class(term.den) == 0) throw parse_error(line, "zero denominator");
    at = 1;
  }
  for (; at < pieces.size(); ++at) {
    const std::string& p = pieces[at];
    if (p.empty()) throw parse_error(line, "empty factor (stray '*')");
    if (std::isdigit(static_cast<unsigned char>(p[0]))) {
      throw parse_error(line, "coefficient must be the first factor");
    }
    std::vector<std::string> parts = split(p, '^');
    if (parts.size() > 2) throw parse_error(line, "repeated '^' in factor '" + p + "'");
    if (!is_ident(parts[0])) throw parse_error(line, "bad generator name '" + parts[0] + "'");
    std::uint32_t exp = 1;
    if (parts.size() == 2) {
      if (!is_digits(parts[1])) {
        throw parse_error(line, "malformed exponent in '" + p + "'");
      }
      unsigned long v = 0;
      try {
        v = std::stoul(parts[1]);
      } catch (...) {
        throw parse_error(line, "exponent out of range in '" + p + "'");
      }
      if (v == 0) throw parse_error(line, "exponent must be positive in '" + p + "'");
      if (v > UINT32_MAX) throw parse_error(line, "exponent out of range in '" + p + "'");
      exp = static_cast<std::uint32_t>(v);
    }
    term.factors.emplace_back(parts[0], exp);
  }
  return term;
}

inline RawPoly parse_poly_tokens(const std::vector<std::string>& toks, std::size_t first,
                                 std::size_t line) {
  RawPoly poly;
  if (first >= toks.size()) throw parse_error(line, "missing polynomial");
  std::size_t i = first;
  bool pending_negative = false;
  if (toks[i] == "+" || toks[i] == "-") {
    pending_negative = toks[i] == "-";
    ++i;
    if (i >= toks.size()) throw parse_error(line, "dangling sign");
  }
  while (true) {
    RawTerm t = parse_term_token(toks[i], line);
    t.negative = t.negative != pending_negative;
    poly.terms.push_back(std::move(t));
    ++i;
    if (i == toks.size()) break;
    if (toks[i] != "+" && toks[i] != "-") {
      throw parse_error(line, "expected '+' or '-' before '" + toks[i] + "'");
    }
    pending_negative = toks[i] == "-";
    ++i;
    if (i == toks.size()) throw parse_error(line, "dangling sign");
  }
  return poly;
}

}  // namespace iodetail

inline ResolvedPoly resolve_poly(const RawPoly& raw,
                                 const std::map<std::string, std::uint32_t>& index) {
  ResolvedPoly out;
  for (const auto& t : raw.terms) {
    ResolvedTerm rt{t.negative, t.num, t.den, {}, t.line};
    std::int64_t prev = -1;
    for (const auto& [name, exp] : t.factors) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw parse_error(t.line, "unknown generator '" + name + "'");
      }
      if (static_cast<std::int64_t>(it->second) <= prev) {
        throw parse_error(t.line,
                          "monomial factors must be strictly ascending ('" + name + "')");
      }
      prev = it->second;
      rt.factors.emplace_back(it->second, exp);
    }
    out.terms.push_back(std::move(rt));
  }
  return out;
}

template <class F>
Polynomial<F> instantiate_poly(const F& K, const ResolvedPoly& poly, std::size_t n) {
  Polynomial<F> out;
  for (const auto& t : poly.terms) {
    typename F::Elem c = K.from_fraction(t.num, t.den);
    if (t.negative) c = K.neg(c);
    std::vector<std::uint32_t> e(n, 0);
    for (const auto& [idx, exp] : t.factors) e[idx] = exp;
    out.add_term(K, Monomial(std::move(e)), c);
  }
  return out;
}

inline RawAlgebraFile parse_algebra_file(const std::string& text) {
  RawAlgebraFile out;
  bool have_field = false;
  std::map<std::string, std::uint32_t> index;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = iodetail::tokens_of_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "algebra") {
      if (!out.name.empty()) throw parse_error(lineno, "duplicate 'algebra' line");
      if (toks.size() != 2 || !iodetail::is_ident(toks[1])) {
        throw parse_error(lineno, "expected: algebra <name>");
      }
      out.name = toks[1];
    } else if (kw == "field") {
      if (have_field) throw parse_error(lineno, "duplicate 'field' line");
      if (toks.size() == 2 && toks[1] == "QQ") {
        out.prime_field = false;
      } else if (toks.size() == 3 && toks[1] == "GF" && iodetail::is_digits(toks[2])) {
        out.prime_field = true;
        try {
          out.modulus = std::stoull(toks[2]);
        } catch (...) {
          throw parse_error(lineno, "modulus out of range");
        }
      } else {
        throw parse_error(lineno, "expected: field QQ | field GF <p>");
      }
      have_field = true;
    } else if (kw == "gens") {
      if (!out.gens.empty()) throw parse_error(lineno, "duplicate 'gens' line");
      if (toks.size() < 2) throw parse_error(lineno, "expected at least one generator");
      for (std::size_t t = 1; t < toks.size(); ++t) {
        if (!iodetail::is_ident(toks[t])) {
          throw parse_error(lineno, "bad generator name '" + toks[t] + "'");
        }
        if (index.count(toks[t])) {
          throw parse_error(lineno, "repeated generator '" + toks[t] + "'");
        }
        index.emplace(toks[t], static_cast<std::uint32_t>(out.gens.size()));
        out.gens.push_back(toks[t]);
      }
    } else if (kw == "weights") {
      if (!out.weights.empty()) throw parse_error(lineno, "duplicate 'weights' line");
      if (out.gens.empty()) throw parse_error(lineno, "'weights' must come after 'gens'");
      if (toks.size() != out.gens.size() + 1) {
        throw parse_error(lineno, "expected one weight per generator");
      }
      for (std::size_t t = 1; t < toks.size(); ++t) {
        if (!iodetail::is_digits(toks[t])) {
          throw parse_error(lineno, "weights must be positive integers");
        }
        std::int64_t w = 0;
        try {
          w = std::stoll(toks[t]);
        } catch (...) {
          throw parse_error(lineno, "weight out of range");
        }
        if (w < 1) throw parse_error(lineno, "weights must be >= 1");
        out.weights.push_back(w);
      }
    } else if (kw == "bsp") {
      if (toks.size() != 1) throw parse_error(lineno, "'bsp' takes no arguments");
      out.bsp_marker = true;
    } else if (kw == "rel") {
      if (out.gens.empty()) throw parse_error(lineno, "'rel' must come after 'gens'");
      if (toks.size() < 4 || toks[2] != "=") {
        throw parse_error(lineno, "expected: rel <g>*<g> = <polynomial>");
      }
      std::vector<std::string> lhs = iodetail::split(toks[1], '*');
      if (lhs.size() != 2 || !index.count(lhs[0]) || !index.count(lhs[1])) {
        throw parse_error(lineno, "relation left side must be a product of two generators");
      }
      std::uint32_t j = index.at(lhs[0]);
      std::uint32_t i = index.at(lhs[1]);
      if (j <= i) throw parse_error(lineno, "relation left side must be descending");
      if (out.rels.count({j, i})) {
        throw parse_error(lineno, "duplicate relation for this generator pair");
      }
      RawPoly rhs = iodetail::parse_poly_tokens(toks, 3, lineno);
      out.rels.emplace(std::make_pair(j, i), resolve_poly(rhs, index));
    } else {
      throw parse_error(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (out.name.empty()) throw parse_error(0, "missing 'algebra' line");
  if (!have_field) throw parse_error(0, "missing 'field' line");
  if (out.gens.empty()) throw parse_error(0, "missing 'gens' line");
  return out;
}

inline RawIdealFile parse_ideal_file(const std::string& text) {
  RawIdealFile out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = iodetail::tokens_of_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "ideal") {
      if (!out.name.empty()) throw parse_error(lineno, "duplicate 'ideal' line");
      if (toks.size() != 2 || !iodetail::is_ident(toks[1])) {
        throw parse_error(lineno, "expected: ideal <name>");
      }
      out.name = toks[1];
    } else if (kw == "algebra") {
      if (!out.algebra_name.empty()) throw parse_error(lineno, "duplicate 'algebra' line");
      if (toks.size() != 2 || !iodetail::is_ident(toks[1])) {
        throw parse_error(lineno, "expected: algebra <name>");
      }
      out.algebra_name = toks[1];
    } else if (kw == "gen") {
      out.gens.push_back(iodetail::parse_poly_tokens(toks, 1, lineno));
    } else {
      throw parse_error(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (out.name.empty()) throw parse_error(0, "missing 'ideal' line");
  if (out.algebra_name.empty()) throw parse_error(0, "missing 'algebra' line");
  if (out.gens.empty()) throw parse_error(0, "ideal needs at least one generator");
  return out;
}

template <class F>
PresentationPtr<F> instantiate_algebra(const F& K, const RawAlgebraFile& raw) {
  std::size_t n = raw.gens.size();
  Weights w = raw.weights.empty() ? Weights::unit(n) : Weights(raw.weights);
  std::map<typename AlgebraPresentation<F>::RelKey, Polynomial<F>> rels;
  for (const auto& [key, poly] : raw.rels) {
    rels.emplace(key, instantiate_poly(K, poly, n));
  }
  return make_presentation<F>(K, raw.gens, std::move(w), std::move(rels));
}

// ---- printing ----

template <class F>
std::string print_polynomial(const F& K, const Polynomial<F>& p,
                             const std::vector<std::string>& names,
                             const MatrixOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, typename F::Elem>> terms(p.terms().begin(),
                                                           p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string coeff = K.to_string(c);
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    std::string mono;
    for (std::uint32_t g = 0; g < m.size(); ++g) {
      if (m[g] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[g];
      if (m[g] > 1) mono += "^" + std::to_string(m[g]);
    }
    std::string body;
    if (mono.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = mono;
    } else {
      body = coeff + "*" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

template <class F>
std::string print_algebra_file(const AlgebraPresentation<F>& A, const std::string& name,
                               bool bsp_marker = false) {
  const F& K = A.field();
  std::string out = "algebra " + name + "\n";
  out += "field " + K.describe() + "\n";
  out += "gens";
  for (const auto& g : A.names()) out += " " + g;
  out += "\n";
  if (!A.weights().is_unit()) {
    out += "weights";
    for (std::size_t i = 0; i < A.weights().size(); ++i) {
      out += " " + std::to_string(A.weights()[i]);
    }
    out += "\n";
  }
  if (bsp_marker) out += "bsp\n";
  MatrixOrder canon = graded_order(A.weights());
  for (const auto& [key, rhs] : A.relations()) {
    auto [j, i] = key;
    Monomial commuted = Monomial::generator(A.arity(), i) + Monomial::generator(A.arity(), j);
    if (rhs == Polynomial<F>::term(K, commuted, K.one())) continue;  // default
    out += "rel " + A.names()[j] + "*" + A.names()[i] + " = " +
           print_polynomial(K, rhs, A.names(), canon) + "\n";
  }
  return out;
}

template <class F>
std::string print_ideal_file(const F& K, const std::string& ideal_name,
                             const std::string& algebra_name,
                             const std::vector<Polynomial<F>>& gens,
                             const std::vector<std::string>& names,
                             const MatrixOrder& order) {
  std::string out = "ideal " + ideal_name + "\n";
  out += "algebra " + algebra_name + "\n";
  for (const auto& g : gens) {
    out += "gen " + print_polynomial(K, g, names, order) + "\n";
  }
  return out;
}

inline std::string render_order(const MatrixOrder& order) {
  std::string out = "[";
  for (std::size_t r = 0; r < order.rows().size(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < order.arity(); ++c) {
      if (c) out += " ";
      out += std::to_string(order.rows()[r][c]);
    }
  }
  out += "]";
  return out;
}

}  // namespace pbwelim
