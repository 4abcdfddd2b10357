#pragma once

// Command-line surface. Everything funnels through run_command so tests
// can drive the tool in-process; the binary is a thin wrapper. Exit
// codes: 0 success, 1 a check failed / negative answer, 2 bad input,
// 3 a resource cap was hit.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algebra.hpp"
#include "bsp.hpp"
#include "dimension.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "report.hpp"

namespace pbwelim {

struct CommandResult {
  int code = 0;
  std::string out;
};

namespace clidetail {

// "check failed" outcomes travel as an exception so handlers can bail
// from any depth; this is not an error in the exit-code-2 sense.
struct check_failed {
  std::string message;
};

struct Caps {
  std::uint64_t seed = 0x5eed5eedULL;
  std::int64_t cap_degree = 40;
  std::size_t cap_basis = 5000;
  std::size_t cap_steps = kDefaultStepCap;
};

inline std::string load_text(const std::string& arg, bool ideal) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw parse_error(0, "cannot read file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  const auto names = ideal ? fixture_ideal_names() : fixture_algebra_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) {
    return ideal ? fixture_ideal_text(arg) : fixture_algebra_text(arg);
  }
  throw parse_error(0, std::string("no file or fixture ") +
                           (ideal ? "ideal" : "algebra") + " named '" + arg + "'");
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::uint32_t> names_to_indices(const std::string& csv,
                                                   const std::vector<std::string>& names) {
  std::vector<std::uint32_t> out;
  for (const auto& tok : split_csv(csv)) {
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw parse_error(0, "unknown generator '" + tok + "'");
    out.push_back(static_cast<std::uint32_t>(it - names.begin()));
  }
  return out;
}

// Order specs: auto | lex:<names> | grlex[:<names>] | wgrlex[:<names>] |
// elim:<names> | matrix:<rows>, names most-significant-first, rows
// ';'-separated with ','-separated integer entries.
inline std::optional<MatrixOrder> parse_order_spec(const std::string& spec,
                                                   const std::vector<std::string>& names,
                                                   const Weights& weights) {
  if (spec == "auto") return std::nullopt;
  std::string kind = spec, rest;
  if (auto at = spec.find(':'); at != std::string::npos) {
    kind = spec.substr(0, at);
    rest = spec.substr(at + 1);
  }
  std::size_t n = names.size();
  auto sig_or_default = [&]() {
    return rest.empty() ? default_significance(n) : names_to_indices(rest, names);
  };
  try {
    if (kind == "lex") {
      if (rest.empty()) throw parse_error(0, "lex needs a significance list, e.g. lex:z,y,x");
      return lex_order(n, names_to_indices(rest, names));
    }
    if (kind == "grlex") return graded_order(Weights::unit(n), sig_or_default());
    if (kind == "wgrlex") return graded_order(weights, sig_or_default());
    if (kind == "elim") {
      if (rest.empty()) throw parse_error(0, "elim needs a keep list, e.g. elim:x,z");
      return elimination_order(n, names_to_indices(rest, names), weights);
    }
    if (kind == "matrix") {
      std::vector<std::vector<std::int64_t>> rows;
      std::string row;
      std::istringstream rs(rest);
      while (std::getline(rs, row, ';')) {
        std::vector<std::int64_t> r;
        for (const auto& ent : split_csv(row)) {
          try {
            r.push_back(std::stoll(ent));
          } catch (...) {
            throw parse_error(0, "bad matrix entry '" + ent + "'");
          }
        }
        rows.push_back(std::move(r));
      }
      return MatrixOrder(n, std::move(rows));
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error(0, std::string("bad order: ") + e.what());
  }
  throw parse_error(0, "unknown order spec '" + spec + "'");
}

template <class F>
std::string describe_violations(const AlgebraPresentation<F>& A,
                                const SolvableCheckResult& res) {
  std::string out;
  for (const auto& v : res.violations) {
    out += "pair (" + A.names()[v.j] + "," + A.names()[v.i] + "): ";
    if (v.reason == SolvableViolation::Reason::zero_scalar) {
      out += "coefficient of " + A.names()[v.i] + "*" + A.names()[v.j] + " is zero\n";
    } else {
      out += "tail monomial is not below " + A.names()[v.i] + "*" + A.names()[v.j] + "\n";
    }
  }
  return out;
}

template <class F>
struct ResolvedAlgebra {
  PresentationPtr<F> pres;
  std::optional<ValidatedAlgebra<F>> alg;
  std::optional<std::vector<std::uint32_t>> hint_sig;
  std::string order_note;
};

// Validates pbw + solvable for the requested (or searched) order; throws
// check_failed with a report when the algebra does not qualify.
template <class F>
ResolvedAlgebra<F> resolve_validated(const F& K, const RawAlgebraFile& raw,
                                     const std::string& order_spec, const Caps& caps) {
  ResolvedAlgebra<F> out;
  out.pres = instantiate_algebra(K, raw);
  const AlgebraPresentation<F>& A = *out.pres;
  PbwCheckResult<F> pbw = pbw_check(A, caps.cap_steps);
  if (!pbw.passed()) {
    throw check_failed{"presentation fails the overlap check (triple " +
                       A.names()[pbw.triple[0]] + A.names()[pbw.triple[1]] +
                       A.names()[pbw.triple[2]] + ")\n"};
  }
  auto explicit_order = parse_order_spec(order_spec, A.names(), A.weights());
  if (explicit_order) {
    SolvableCheckResult solv = solvable_check(A, *explicit_order);
    if (!solv.pass) {
      throw check_failed{"not solvable under the requested order:\n" +
                         describe_violations(A, solv)};
    }
    out.alg.emplace(out.pres, *explicit_order);
    out.order_note = render_order(*explicit_order);
    return out;
  }
  auto choice = pick_graded_order(A);
  if (!choice) {
    throw check_failed{
        "no weighted-degree order makes the presentation solvable "
        "(tie permutations exhausted)\n"};
  }
  out.alg.emplace(out.pres, choice->order);
  out.hint_sig = choice->significance;
  out.order_note = render_order(choice->order);
  return out;
}

template <class F>
std::vector<Polynomial<F>> load_ideal_gens(const F& K, const RawIdealFile& raw_ideal,
                                           const RawAlgebraFile& raw_alg,
                                           const AlgebraPresentation<F>& A) {
  if (raw_ideal.algebra_name != raw_alg.name) {
    throw parse_error(0, "ideal '" + raw_ideal.name + "' references algebra '" +
                             raw_ideal.algebra_name + "', not '" + raw_alg.name + "'");
  }
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t g = 0; g < A.arity(); ++g) index.emplace(A.names()[g], g);
  std::vector<Polynomial<F>> gens;
  for (const auto& rp : raw_ideal.gens) {
    Polynomial<F> p = instantiate_poly(K, resolve_poly(rp, index), A.arity());
    if (p.is_zero()) throw parse_error(0, "ideal generator reduced to zero");
    gens.push_back(std::move(p));
  }
  return gens;
}

template <class F>
std::string subset_names(const std::vector<std::uint32_t>& u,
                         const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k) out += ", ";
    out += names[u[k]];
  }
  return out + "}";
}

}  // namespace clidetail

inline CommandResult run_command(const std::vector<std::string>& args) {
  using namespace clidetail;
  CommandResult result;
  std::ostringstream out;

  CLI::App app{"exact computations in PBW algebras"};
  app.require_subcommand(1);
  Caps caps;
  app.add_option("--seed", caps.seed, "seed for sampled subset selection");
  app.add_option("--cap-degree", caps.cap_degree, "total-degree cap for basis elements");
  app.add_option("--cap-basis", caps.cap_basis, "basis size cap");
  app.add_option("--cap-steps", caps.cap_steps, "rewrite step cap");
  app.fallthrough();

  std::string alg_arg, ideal_arg, order_spec = "auto", poly_text, keep_csv;
  std::string emit_name;
  Ex4Params ex4_params;
  std::size_t search_n = 3;

  CLI::App* check = app.add_subcommand("check", "structural checks");
  check->require_subcommand(1);
  CLI::App* check_pbw = check->add_subcommand("pbw", "standard-basis overlap check");
  check_pbw->add_option("algebra", alg_arg)->required();
  CLI::App* check_solv = check->add_subcommand("solvable", "leading-shape check");
  check_solv->add_option("algebra", alg_arg)->required();
  check_solv->add_option("--order", order_spec, "order spec (default: auto)");
  CLI::App* check_filt = check->add_subcommand("filtration", "quadratic-bound check");
  check_filt->add_option("algebra", alg_arg)->required();
  CLI::App* check_bsp = check->add_subcommand("bsp", "binomial skew ring conditions");
  check_bsp->add_option("algebra", alg_arg)->required();
  CLI::App* report_cmd = app.add_subcommand("report", "combined structure report");
  report_cmd->add_option("algebra", alg_arg)->required();
  report_cmd->add_option("--order", order_spec, "order spec (default: auto)");

  CLI::App* gb = app.add_subcommand("gb", "reduced left Groebner basis");
  gb->add_option("algebra", alg_arg)->required();
  gb->add_option("ideal", ideal_arg)->required();
  gb->add_option("--order", order_spec, "order spec (default: auto)");

  CLI::App* member = app.add_subcommand("member", "left ideal membership");
  member->add_option("algebra", alg_arg)->required();
  member->add_option("ideal", ideal_arg)->required();
  member->add_option("--poly", poly_text, "polynomial to test")->required();
  member->add_option("--order", order_spec, "order spec (default: auto)");

  CLI::App* gkdim = app.add_subcommand("gkdim", "growth degree of the cyclic quotient");
  gkdim->add_option("algebra", alg_arg)->required();
  gkdim->add_option("ideal", ideal_arg)->required();

  CLI::App* elim = app.add_subcommand("eliminate", "intersection with a subalgebra");
  elim->add_option("algebra", alg_arg)->required();
  elim->add_option("ideal", ideal_arg)->required();
  elim->add_option("--keep", keep_csv, "generators to keep, comma-separated")->required();

  CLI::App* elimprop = app.add_subcommand("elimprop", "certify the elimination property");
  elimprop->add_option("algebra", alg_arg)->required();
  elimprop->add_option("ideal", ideal_arg)->required();

  CLI::App* bsp_cmd = app.add_subcommand("bsp", "binomial skew ring tools");
  bsp_cmd->require_subcommand(1);
  CLI::App* bsp_search_cmd = bsp_cmd->add_subcommand("search", "census of small systems");
  bsp_search_cmd->add_option("--n", search_n, "number of generators")->required();

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "built-in examples");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->add_subcommand("list", "list fixture names");
  CLI::App* fixtures_emit = fixtures_cmd->add_subcommand("emit", "print a fixture file");
  fixtures_emit->add_option("name", emit_name)->required();
  fixtures_emit->add_option("--lambda", ex4_params.lambda, "ex4: coefficient of x1*x3");
  fixtures_emit->add_option("--mu", ex4_params.mu, "ex4: coefficient of x2^2*x3");
  fixtures_emit->add_option("--f-degree", ex4_params.f_degree,
                            "ex4: degree of the free term in x2 (-1 drops it)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    result.code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.out = std::string("error: ") + e.what() + "\n";
    result.code = 2;
    return result;
  }

  GroebnerOptions gopts;
  EliminationOptions eopts;

  auto with_field = [&](const RawAlgebraFile& raw, auto&& fn) {
    if (raw.prime_field) {
      PrimeField K(raw.modulus);
      fn(K);
    } else {
      Rationals K;
      fn(K);
    }
  };

  try {
    gopts.max_total_degree = caps.cap_degree;
    gopts.max_basis = caps.cap_basis;
    eopts.gopts = gopts;
    eopts.seed = caps.seed;

    if (check_pbw->parsed()) {
      RawAlgebraFile raw = parse_algebra_file(load_text(alg_arg, false));
      with_field(raw, [&](const auto& K) {
        auto pres = instantiate_algebra(K, raw);
        auto res = pbw_check(*pres, caps.cap_steps);
        using R = std::decay_t<decltype(res)>;
        if (res.passed()) {
          out << "pbw check: pass\n";
        } else if (res.status == R::Status::step_cap) {
          throw resource_limit_error("rewrite step cap hit during the overlap check");
        } else {
          out << "pbw check: fail\n";
          out << "overlap " << pres->names()[res.triple[0]] << pres->names()[res.triple[1]]
              << pres->names()[res.triple[2]] << " does not resolve\n";
          MatrixOrder show = graded_order(pres->weights());
          out << "left-first:  " << print_polynomial(K, res.nf_left, pres->names(), show)
              << "\n";
          out << "right-first: " << print_polynomial(K, res.nf_right, pres->names(), show)
              << "\n";
          result.code = 1;
        }
      });
    } else if (check_solv->parsed()) {
      RawAlgebraFile raw = parse_algebra_file(load_text(alg_arg, false));
      with_field(raw, [&](const auto& K) {
        auto pres = instantiate_algebra(K, raw);
        auto explicit_order = parse_order_spec(order_spec, pres->names(), pres->weights());
        if (explicit_order) {
          out << "order: " << render_order(*explicit_order) << "\n";
          auto solv = solvable_check(*pres, *explicit_order);
          if (solv.pass) {
            out << "solvable check: pass\n";
          } else {
            out << "solvable check: fail\n" << describe_violations(*pres, solv);
            result.code = 1;
          }
        } else {
          auto choice = pick_graded_order(*pres);
          if (choice) {
            out << "order: " << render_order(choice->order) << "\n";
            out << "solvable check: pass\n";
          } else {
            out << "solvable check: fail\n";
            out << "no weighted-degree order works (tie permutations exhausted)\n";
            result.code = 1;
          }
        }
      });
    } else if (check_filt->parsed()) {
      RawAlgebraFile raw = parse_algebra_file(load_text(alg_arg, false));
      with_field(raw, [&](const auto& K) {
        auto pres = instantiate_algebra(K, raw);
        auto res = filtration_compat_check(*pres);
        if (res.pass) {
          out << "filtration check: pass\n";
        } else {
          out << "filtration check: fail\n";
          out << "relation (" << pres->names()[res.witness->j] << ","
              << pres->names()[res.witness->i] << ") has a monomial of total degree > 2\n";
          result.code = 1;
        }
      });
    } else if (check_bsp->parsed()) {
      RawAlgebraFile raw = parse_algebra_file(load_text(alg_arg, false));
      with_field(raw, [&](const auto& K) {
        auto pres = instantiate_algebra(K, raw);
        auto shape = bsp_shape(*pres);
        if (!shape.bsp) {
          out << "bsp check: fail (shape)\n";
          for (const auto& p : shape.problems) out << p << "\n";
          result.code = 1;
          return;
        }
        auto chk = bsp_check(*shape.bsp, caps.cap_steps);
        for (const auto& line : chk.lines) out << line << "\n";
        if (chk.pass) {
          auto braid = braid_check(*shape.bsp);
          out << (braid.pass ? "braid relation: holds on all triples\n"
                             : "braid relation: FAILS\n");
          if (!braid.pass) {
            throw std::logic_error("braid relation failed for a passing system");
          }
          out << "bsp check: pass\n";
        } else {
          out << "bsp check: fail\n";
          result.code = 1;
        }
      });
    } else if (report_cmd->parsed()) {
      RawAlgebraFile raw = parse_algebra_file(load_text(alg_arg, false));
      with_field(raw, [&](const auto& K) {
        auto pres = instantiate_algebra(K, raw);
        auto explicit_order = parse_order_spec(order_spec, pres->names(), pres->weights());
        MatrixOrder order = explicit_order ? *explicit_order : [&] {
          auto choice = pick_graded_order(*pres);
          return choice ? choice->order : graded_order(pres->weights());
        }();
        out << "order: " << render_order(order) << "\n";
        auto rep = structure_report(*pres, order, caps.cap_steps);
        for (const auto& line : render_structure_report(rep, pres->names())) {
          out << line << "\n";
        }
      });
    } else if (gb->parsed() || member->parsed() || gkdim->parsed() || elim->parsed() ||
               elimprop->parsed()) {
      RawAlgebraFile raw = parse_algebra_file(load_text(alg_arg, false));
      RawIdealFile raw_ideal;
      if (!ideal_arg.empty()) raw_ideal = parse_ideal_file(load_text(ideal_arg, true));
      with_field(raw, [&](const auto& K) {
        using F = std::decay_t<decltype(K)>;
        ResolvedAlgebra<F> res = resolve_validated(K, raw, order_spec, caps);
        const ValidatedAlgebra<F>& alg = *res.alg;
        std::vector<Polynomial<F>> gens = load_ideal_gens(K, raw_ideal, raw, *res.pres);
        const auto& names = res.pres->names();
        out << "order: " << res.order_note << "\n";

        if (gb->parsed()) {
          LeftIdeal<F> ideal(alg, gens);
          GroebnerBasis<F> basis = buchberger(ideal, gopts);
          out << "basis size: " << basis.elems.size() << "\n";
          for (std::size_t k = 0; k < basis.elems.size(); ++k) {
            out << "g" << (k + 1) << " = "
                << print_polynomial(K, basis.elems[k], names, alg.order()) << "\n";
          }
        } else if (member->parsed()) {
          std::map<std::string, std::uint32_t> index;
          for (std::uint32_t g = 0; g < alg.arity(); ++g) index.emplace(names[g], g);
          RawPoly rp = iodetail::parse_poly_tokens(iodetail::tokens_of_line(poly_text), 0, 1);
          Polynomial<F> p = instantiate_poly(K, resolve_poly(rp, index), alg.arity());
          LeftIdeal<F> ideal(alg, gens);
          bool yes = is_member(buchberger(ideal, gopts), p);
          out << "member: " << (yes ? "yes" : "no") << "\n";
          if (!yes) result.code = 1;
        } else if (gkdim->parsed()) {
          LeftIdeal<F> ideal(alg, gens);
          DimensionReport<F> rep = gk_dim_quotient(ideal, gopts, eopts.hilbert_cap);
          out << "basis size: " << rep.gb.elems.size() << "\n";
          out << "staircase:";
          for (const auto& m : rep.staircase.generators()) {
            out << " " << print_polynomial(K, Polynomial<F>::term(K, m, K.one()), names,
                                           alg.order());
          }
          out << "\n";
          if (rep.gk == kMinusInfinity) {
            out << "growth degree: -infinity (the ideal is the whole algebra)\n";
          } else {
            out << "growth degree: " << rep.gk << "\n";
            out << "witness subset: " << subset_names<F>(rep.witness, names) << "\n";
          }
          out << "oracle: ";
          switch (rep.hilbert.status) {
            case HilbertEstimate::Status::stabilized:
              out << "stabilized, degree " << rep.hilbert.degree;
              break;
            case HilbertEstimate::Status::zero_module:
              out << "zero module";
              break;
            case HilbertEstimate::Status::inconclusive:
              out << "inconclusive within the sample cap";
              break;
          }
          out << " (stride " << rep.hilbert.stride << ")\n";
          out << "counts:";
          for (std::size_t q = 0; q < rep.hilbert.counts.size() && q <= 12; ++q) {
            out << " " << rep.hilbert.counts[q];
          }
          out << "\n";
          if (rep.weighted) {
            out << "note: weighted degrees in use; growth read from the weighted staircase\n";
          }
          out << "proper drop below the algebra's growth: "
              << (rep.proper_drop ? "yes" : "no") << "\n";
        } else if (elim->parsed()) {
          std::vector<std::uint32_t> keep = names_to_indices(keep_csv, names);
          out << "keep: " << subset_names<F>(keep, names) << "\n";
          EliminateOutcome<F> eo = eliminate(alg, gens, keep, res.hint_sig, eopts);
          if (eo.order_found) {
            out << "elimination order: " << render_order(*eo.order) << "\n";
            out << "basis size: " << eo.gb->elems.size() << "\n";
            for (std::size_t k = 0; k < eo.gb->elems.size(); ++k) {
              out << "g" << (k + 1) << " = "
                  << print_polynomial(K, eo.gb->elems[k], names, *eo.order) << "\n";
            }
            out << "intersection elements: " << eo.intersection.size() << "\n";
            for (std::size_t k = 0; k < eo.intersection.size(); ++k) {
              out << "h" << (k + 1) << " = "
                  << print_polynomial(K, eo.intersection[k], names, *eo.order) << "\n";
            }
          } else {
            out << "elimination order: none found (block and lex candidates exhausted)\n";
            LeftIdeal<F> ideal(alg, gens);
            GroebnerBasis<F> basis = buchberger(ideal, gopts);
            std::int64_t wmax = 1;
            for (std::size_t i = 0; i < alg.weights().size(); ++i) {
              wmax = std::max(wmax, alg.weights()[i]);
            }
            std::vector<std::int64_t> schedule = eopts.degree_schedule;
            std::int64_t last = schedule.empty() ? 0 : schedule.back();
            for (std::int64_t d = last + 2; d <= eopts.degree_ceiling * wmax; d += 2) {
              schedule.push_back(d);
            }
            bool found = false;
            for (std::int64_t D : schedule) {
              auto wtn = truncated_intersection(basis, keep, D, eopts.matrix_entry_cap);
              if (wtn) {
                out << "truncated slice at degree " << D << ": witness = "
                    << print_polynomial(K, *wtn, names, alg.order()) << "\n";
                found = true;
                break;
              }
              out << "truncated slice at degree " << D << ": empty\n";
            }
            if (!found) {
              out << "no intersection element found up to the degree ceiling\n";
            }
          }
        } else {  // elimprop
          LeftIdeal<F> ideal(alg, gens);
          EliminationReport<F> rep = certify_elimination_property(ideal, res.hint_sig, eopts);
          if (rep.vacuous) {
            out << "growth degree: -infinity (the ideal is the whole algebra); "
                   "nothing to certify\n";
            return;
          }
          out << "growth degree d = " << rep.d << "; checking "
              << (rep.sampled ? "sampled " : "all ") << (rep.d + 1) << "-subsets ("
              << rep.subsets.size() << " total)\n";
          for (const auto& cert : rep.subsets) {
            out << "U = " << subset_names<F>(cert.subset, names) << ": ";
            using M = typename SubsetCertificate<F>::Method;
            if (cert.method == M::order) {
              if (cert.intersection_certified_empty) {
                out << "order-based, intersection certified empty (UNEXPECTED)\n";
                continue;
              }
              out << "order-based";
            } else if (cert.method == M::truncated) {
              out << "truncated at degree " << cert.truncation_degree;
            } else {
              out << "inconclusive up to degree " << cert.bound_reached << "\n";
              continue;
            }
            out << ", witness = " << print_polynomial(K, *cert.witness, names, alg.order())
                << ", member check: " << (cert.member_verified ? "ok" : "FAILED") << "\n";
          }
          out << "certified " << rep.certified << "/" << rep.subsets.size() << "\n";
          if (!rep.all_certified) result.code = 1;
        }
      });
    } else if (bsp_search_cmd->parsed()) {
      Rationals K;
      BspSearchResult<Rationals> res = bsp_search(K, search_n, caps.cap_steps);
      out << "search n = " << search_n << " (all coefficients 1)\n";
      out << "passing assignments: " << res.total_passing << "\n";
      out << "classes modulo relabeling: " << res.classes.size() << "\n";
      for (std::size_t c = 0; c < res.classes.size(); ++c) {
        out << "class " << (c + 1) << ":\n";
        const auto& B = res.classes[c];
        for (const auto& [key, rhs] : B.rules) {
          out << "  " << B.names[key.first] << "*" << B.names[key.second] << " = "
              << B.names[rhs.second.first] << "*" << B.names[rhs.second.second] << "\n";
        }
      }
    } else if (fixtures_cmd->parsed()) {
      if (fixtures_emit->parsed()) {
        const auto algs = fixture_algebra_names();
        if (std::find(algs.begin(), algs.end(), emit_name) != algs.end()) {
          out << fixture_algebra_text(emit_name, ex4_params);
        } else {
          const auto ideals = fixture_ideal_names();
          if (std::find(ideals.begin(), ideals.end(), emit_name) != ideals.end()) {
            out << fixture_ideal_text(emit_name);
          } else {
            throw parse_error(0, "unknown fixture '" + emit_name + "'");
          }
        }
      } else {
        out << "algebras:";
        for (const auto& s : fixture_algebra_names()) out << " " << s;
        out << "\nideals:";
        for (const auto& s : fixture_ideal_names()) out << " " << s;
        out << "\n";
      }
    }
  } catch (const check_failed& e) {
    out << e.message;
    result.code = 1;
  } catch (const parse_error& e) {
    out << "error: " << e.what() << "\n";
    result.code = 2;
  } catch (const resource_limit_error& e) {
    out << "error: " << e.what() << "\n";
    result.code = 3;
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    result.code = 2;
  } catch (const std::domain_error& e) {
    out << "error: " << e.what() << "\n";
    result.code = 2;
  }

  result.out += out.str();
  return result;
}

}  // namespace pbwelim
