#pragma once

// Combined structural verdict for a presentation: basis property, degree
// filtration, algebra class, growth of the full algebra, and whether the
// elimination property is established for every nonzero left ideal.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "bsp.hpp"
#include "dimension.hpp"

namespace pbwelim {

enum class DomainClass { solvable, binomial_skew, unknown };

template <class F>
struct StructureReport {
  PbwCheckResult<F> pbw;
  FiltrationCheckResult filtration;
  SolvableCheckResult solvable;
  DomainClass domain = DomainClass::unknown;
  std::optional<GrowthResult> graph_growth;  // when the basis check passes
  bool growth_is_arity = false;              // growth degree = n established
  bool elimination_established = false;      // for every nonzero left ideal
};

// The conclusions combine three routes: a solvable presentation gives
// both the growth value and the elimination property outright; a binomial
// skew ring does the same; otherwise the filtration route needs the basis
// property, quadratic-bounded relations, and a known domain class.
template <class F>
StructureReport<F> structure_report(const AlgebraPresentation<F>& A,
                                    const MatrixOrder& order,
                                    std::size_t step_cap = kDefaultStepCap) {
  StructureReport<F> rep;
  rep.pbw = pbw_check(A, step_cap);
  rep.filtration = filtration_compat_check(A);
  rep.solvable = solvable_check(A, order);

  bool bsp_ok = false;
  if (!rep.solvable.pass) {
    BspShapeResult<F> shape = bsp_shape(A);
    if (shape.bsp) bsp_ok = bsp_check(*shape.bsp, step_cap).pass;
  }
  if (rep.solvable.pass) {
    rep.domain = DomainClass::solvable;
  } else if (bsp_ok) {
    rep.domain = DomainClass::binomial_skew;
  }

  if (rep.pbw.passed()) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> leading;
    for (const auto& [key, rhs] : A.relations()) leading.insert(key);
    rep.graph_growth = ufnarovski_gk_dim(A.arity(), leading);
  }

  bool pbw_ok = rep.pbw.passed();
  rep.growth_is_arity =
      (pbw_ok && rep.solvable.pass) || bsp_ok ||
      (pbw_ok && rep.filtration.pass && rep.domain != DomainClass::unknown);
  rep.elimination_established = rep.growth_is_arity && rep.domain != DomainClass::unknown;
  return rep;
}

template <class F>
std::vector<std::string> render_structure_report(const StructureReport<F>& rep,
                                                 const std::vector<std::string>& names) {
  std::vector<std::string> lines;
  if (rep.pbw.passed()) {
    lines.push_back("standard monomial basis: yes (all overlaps resolve)");
  } else if (rep.pbw.status == PbwCheckResult<F>::Status::step_cap) {
    lines.push_back("standard monomial basis: undecided (step cap hit)");
  } else {
    lines.push_back("standard monomial basis: no (overlap " + names[rep.pbw.triple[0]] +
                    names[rep.pbw.triple[1]] + names[rep.pbw.triple[2]] +
                    " does not resolve)");
  }
  if (rep.filtration.pass) {
    lines.push_back("degree filtration: compatible (relations are quadratic-bounded)");
  } else {
    const auto& v = *rep.filtration.witness;
    lines.push_back("degree filtration: violated by relation (" + names[v.j] + "," +
                    names[v.i] + ")");
  }
  switch (rep.domain) {
    case DomainClass::solvable:
      lines.push_back("class: solvable (order accepted by the leading-shape check)");
      break;
    case DomainClass::binomial_skew:
      lines.push_back("class: binomial skew ring");
      break;
    case DomainClass::unknown:
      lines.push_back("class: undetermined");
      break;
  }
  if (rep.graph_growth) {
    if (rep.graph_growth->exponential) {
      lines.push_back("leading-word graph growth: exponential");
    } else {
      lines.push_back("leading-word graph growth: degree " +
                      std::to_string(rep.graph_growth->dim));
    }
  }
  lines.push_back(std::string("growth degree equals the generator count: ") +
                  (rep.growth_is_arity ? "established" : "not established"));
  lines.push_back(std::string("elimination property for every nonzero left ideal: ") +
                  (rep.elimination_established ? "established" : "not established"));
  return lines;
}

}  // namespace pbwelim
