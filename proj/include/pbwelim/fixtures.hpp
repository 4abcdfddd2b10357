#pragma once

// Built-in example algebras and ideals. Texts are produced by printing
// programmatically constructed presentations, so they always parse back
// to the same objects.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "io.hpp"

namespace pbwelim {

struct Ex4Params {
  std::string lambda = "1";
  std::string mu = "1";
  int f_degree = 6;  // -1 drops the free term
};

namespace fixdetail {

using QQ = Rationals;
using RelMap = std::map<AlgebraPresentation<QQ>::RelKey, Polynomial<QQ>>;

inline Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

// zero is allowed here: the structural checks report what breaks
inline mpq_class rat(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

inline PresentationPtr<QQ> weyl1() {
  QQ K;
  RelMap rels;
  Polynomial<QQ> rhs = Polynomial<QQ>::term(K, mono({1, 1}), K.one());
  rhs.add_term(K, mono({0, 0}), K.one());
  rels.emplace(std::make_pair(1u, 0u), rhs);
  return make_presentation<QQ>(K, std::vector<std::string>{"x", "d"}, Weights::unit(2),
                               std::move(rels));
}

inline PresentationPtr<QQ> weyl2() {
  QQ K;
  RelMap rels;
  Polynomial<QQ> r1 = Polynomial<QQ>::term(K, mono({1, 0, 1, 0}), K.one());
  r1.add_term(K, mono({0, 0, 0, 0}), K.one());
  rels.emplace(std::make_pair(2u, 0u), r1);
  Polynomial<QQ> r2 = Polynomial<QQ>::term(K, mono({0, 1, 0, 1}), K.one());
  r2.add_term(K, mono({0, 0, 0, 0}), K.one());
  rels.emplace(std::make_pair(3u, 1u), r2);
  return make_presentation<QQ>(K, std::vector<std::string>{"x1", "x2", "d1", "d2"},
                               Weights::unit(4), std::move(rels));
}

inline PresentationPtr<QQ> qplane() {
  QQ K;
  RelMap rels;
  rels.emplace(std::make_pair(1u, 0u),
               Polynomial<QQ>::term(K, mono({1, 1}), K.from_int(2)));
  return make_presentation<QQ>(K, std::vector<std::string>{"x", "y"}, Weights::unit(2),
                               std::move(rels));
}

inline PresentationPtr<QQ> sl2type() {
  QQ K;
  RelMap rels;
  Polynomial<QQ> fe = Polynomial<QQ>::term(K, mono({1, 1, 0}), K.one());
  fe.add_term(K, mono({0, 0, 1}), K.from_int(-1));
  rels.emplace(std::make_pair(1u, 0u), fe);
  Polynomial<QQ> he = Polynomial<QQ>::term(K, mono({1, 0, 1}), K.one());
  he.add_term(K, mono({1, 0, 0}), K.from_int(2));
  rels.emplace(std::make_pair(2u, 0u), he);
  Polynomial<QQ> hf = Polynomial<QQ>::term(K, mono({0, 1, 1}), K.one());
  hf.add_term(K, mono({0, 1, 0}), K.from_int(-2));
  rels.emplace(std::make_pair(2u, 1u), hf);
  return make_presentation<QQ>(K, std::vector<std::string>{"e", "f", "h"},
                               Weights::unit(3), std::move(rels));
}

inline PresentationPtr<QQ> commutative3() {
  QQ K;
  return make_presentation<QQ>(K, std::vector<std::string>{"x", "y", "z"},
                               Weights::unit(3), RelMap{});
}

inline PresentationPtr<QQ> heis() {
  QQ K;
  RelMap rels;
  Polynomial<QQ> yx = Polynomial<QQ>::term(K, mono({1, 1, 0}), K.one());
  yx.add_term(K, mono({0, 0, 1}), K.from_int(-1));
  rels.emplace(std::make_pair(1u, 0u), yx);
  return make_presentation<QQ>(K, std::vector<std::string>{"x", "y", "z"},
                               Weights::unit(3), std::move(rels));
}

inline PresentationPtr<QQ> jacobifail() {
  QQ K;
  RelMap rels;
  Polynomial<QQ> r21 = Polynomial<QQ>::term(K, mono({1, 1, 0}), K.one());
  r21.add_term(K, mono({0, 0, 1}), K.from_int(-1));
  rels.emplace(std::make_pair(1u, 0u), r21);
  Polynomial<QQ> r32 = Polynomial<QQ>::term(K, mono({0, 1, 1}), K.one());
  r32.add_term(K, mono({0, 1, 0}), K.one());
  rels.emplace(std::make_pair(2u, 1u), r32);
  return make_presentation<QQ>(K, std::vector<std::string>{"a1", "a2", "a3"},
                               Weights::unit(3), std::move(rels));
}

inline PresentationPtr<QQ> ex4(const Ex4Params& p) {
  QQ K;
  RelMap rels;
  Polynomial<QQ> r20 = Polynomial<QQ>::term(K, mono({1, 0, 1}), rat(p.lambda));
  mpq_class mu = rat(p.mu);
  r20.add_term(K, mono({0, 2, 1}), mu);
  if (p.f_degree >= 0) {
    if (p.f_degree > 6) throw std::invalid_argument("free term degree must be <= 6");
    r20.add_term(K, mono({0, static_cast<std::uint32_t>(p.f_degree), 0}), K.one());
  }
  rels.emplace(std::make_pair(2u, 0u), r20);
  return make_presentation<QQ>(K, std::vector<std::string>{"x1", "x2", "x3"},
                               Weights({2, 1, 4}), std::move(rels));
}

}  // namespace fixdetail

inline std::vector<std::string> fixture_algebra_names() {
  return {"weyl1", "weyl2", "qplane", "sl2type", "commutative3",
          "heis",  "jacobifail", "ex4"};
}

inline PresentationPtr<Rationals> fixture_algebra(const std::string& name,
                                                  const Ex4Params& params = {}) {
  if (name == "weyl1") return fixdetail::weyl1();
  if (name == "weyl2") return fixdetail::weyl2();
  if (name == "qplane") return fixdetail::qplane();
  if (name == "sl2type") return fixdetail::sl2type();
  if (name == "commutative3") return fixdetail::commutative3();
  if (name == "heis") return fixdetail::heis();
  if (name == "jacobifail") return fixdetail::jacobifail();
  if (name == "ex4") return fixdetail::ex4(params);
  throw std::invalid_argument("unknown fixture algebra '" + name + "'");
}

inline std::string fixture_algebra_text(const std::string& name,
                                        const Ex4Params& params = {}) {
  return print_algebra_file(*fixture_algebra(name, params), name);
}

inline std::vector<std::string> fixture_ideal_names() {
  return {"d1", "xd", "dd", "dshift", "linear2", "prodz", "qy", "sl2h", "ex4lin"};
}

// (ideal name) -> (algebra name, generator polynomials)
inline std::pair<std::string, std::vector<Polynomial<Rationals>>> fixture_ideal(
    const std::string& name) {
  using fixdetail::mono;
  Rationals K;
  using P = Polynomial<Rationals>;
  if (name == "d1") {
    return {"weyl1", {P::term(K, mono({0, 1}), K.one())}};
  }
  if (name == "xd") {
    return {"weyl1", {P::term(K, mono({1, 0}), K.one()), P::term(K, mono({0, 1}), K.one())}};
  }
  if (name == "dd") {
    return {"weyl2",
            {P::term(K, mono({0, 0, 1, 0}), K.one()), P::term(K, mono({0, 0, 0, 1}), K.one())}};
  }
  if (name == "dshift") {
    P g1 = P::term(K, mono({0, 0, 1, 0}), K.one());
    g1.add_term(K, mono({0, 1, 0, 0}), K.from_int(-1));
    return {"weyl2", {g1, P::term(K, mono({0, 0, 0, 1}), K.one())}};
  }
  if (name == "linear2") {
    P g1 = P::term(K, mono({1, 0, 0}), K.one());
    g1.add_term(K, mono({0, 1, 0}), K.from_int(-1));
    P g2 = P::term(K, mono({0, 1, 0}), K.one());
    g2.add_term(K, mono({0, 0, 1}), K.from_int(-1));
    return {"commutative3", {g1, g2}};
  }
  if (name == "prodz") {
    return {"commutative3",
            {P::term(K, mono({1, 0, 1}), K.one()), P::term(K, mono({0, 1, 1}), K.one())}};
  }
  if (name == "qy") {
    return {"qplane", {P::term(K, mono({0, 1}), K.one())}};
  }
  if (name == "sl2h") {
    return {"sl2type", {P::term(K, mono({0, 0, 1}), K.one())}};
  }
  if (name == "ex4lin") {
    P g1 = P::term(K, mono({1, 0, 0}), K.one());
    g1.add_term(K, mono({0, 2, 0}), K.one());
    return {"ex4", {g1}};
  }
  throw std::invalid_argument("unknown fixture ideal '" + name + "'");
}

inline std::string fixture_ideal_text(const std::string& name) {
  auto [alg_name, gens] = fixture_ideal(name);
  PresentationPtr<Rationals> pres = fixture_algebra(alg_name);
  return print_ideal_file(pres->field(), name, alg_name, gens, pres->names(),
                          graded_order(pres->weights()));
}

}  // namespace pbwelim
