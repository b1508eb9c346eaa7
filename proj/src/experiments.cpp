#include "plp/experiments.hpp"

#include <sstream>
#include <stdexcept>

namespace plp {

bool Report::all_ok() const {
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

std::string str(const LogNorm& l) { return l.is_neg_infinite() ? "-inf" : to_string(l.value()); }

std::string decimal(const LogNorm& l) { return l.is_neg_infinite() ? "-inf" : to_decimal(l.value()); }

std::string opt(const std::optional<Rational>& q) { return q ? to_string(*q) : ""; }

struct Cell {
  Tower tower;
  unsigned n;
  Interval J;
  Interval Jp;
};

std::vector<Cell> grid_cells(const PeriodsGrid& g, bool all_subintervals) {
  std::vector<Cell> cells;
  for (long p : g.primes) {
    const Tower t = g.u ? Tower(p, *g.u) : Tower(p);
    for (unsigned n = g.n_min; n <= g.n_max; ++n) {
      std::vector<Interval> Js;
      if (g.J) {
        Js.push_back(*g.J);
      } else {
        for (long s = g.size_min; s <= g.size_max; ++s) Js.emplace_back(g.start, g.start + s - 1);
      }
      for (const auto& J : Js) {
        if (g.Jp) {
          cells.push_back({t, n, J, *g.Jp});
        } else if (all_subintervals) {
          for (const auto& Jp : J.subintervals()) cells.push_back({t, n, J, Jp});
        } else {
          cells.push_back({t, n, J, J});
        }
      }
    }
  }
  return cells;
}

void validate(const PeriodsGrid& g) {
  if (g.primes.empty()) throw std::invalid_argument("no primes given");
  for (long p : g.primes) Prime check(p);
  if (g.n_min > g.n_max) throw std::invalid_argument("n range is empty");
  if (!g.J && (g.size_min < 1 || g.size_min > g.size_max)) throw std::invalid_argument("|J| range is empty");
  if (g.J && g.J->empty()) throw std::invalid_argument("J must be nonempty");
  if (g.Jp) IntervalPair check(g.J ? *g.J : Interval(0, -1), *g.Jp);
}

struct Row {
  std::vector<std::string> cells;
  bool ok;
};

Report assemble(std::string kind, std::vector<std::string> columns, std::vector<Row> rows) {
  Report r;
  r.kind = std::move(kind);
  r.columns = std::move(columns);
  for (auto& row : rows) {
    r.rows.push_back(std::move(row.cells));
    r.ok.push_back(row.ok);
  }
  return r;
}

Interval recursion_interval(const RecursionConfig& c) { return c.J ? *c.J : default_interval(c.module); }

}  // namespace

Report norm_bounds_report(const PeriodsGrid& g, unsigned jobs) {
  validate(g);
  const auto cells = grid_cells(g, true);
  auto rows = parallel_map<Row>(cells.size(), jobs, [&](std::size_t i) {
    const Cell& c = cells[i];
    std::vector<std::string> v{std::to_string(c.tower.p.value()), to_string(c.tower.u), std::to_string(c.n),
                               c.J.to_string(), c.Jp.to_string()};
    try {
      const XiTilde x = build_xitilde(c.tower, c.n, IntervalPair(c.J, c.Jp));
      const bool cong = satisfies_defining_congruences(x);
      const NormBoundReport nb = check_norm_bounds(x);
      const UnitQuotient uq = unit_quotient(x);
      const bool unit_ok = !uq.is_unit || *uq.is_unit;
      v.insert(v.end(), {"true", yes(cong), str(nb.attained), decimal(nb.attained), to_string(nb.lower),
                         to_string(nb.upper), opt(nb.existence_upper), opt(nb.threshold_upper), yes(nb.ok),
                         uq.report.mu.to_string(), uq.is_unit ? yes(*uq.is_unit) : "n/a"});
      return Row{v, cong && nb.ok && uq.proven_bounds_ok && unit_ok};
    } catch (const std::logic_error& e) {
      // route disagreement or a nonzero remainder
      v.insert(v.end(), {"false", "", "", "", "", "", "", "", "", "", e.what()});
      return Row{v, false};
    }
  });
  return assemble("norm-bounds",
                  {"p", "u", "n", "J", "Jp", "routes_agree", "congruences", "norm_log", "norm_log_decimal", "lower",
                   "upper", "existence_upper", "threshold_upper", "bounds_ok", "quotient_mu", "quotient_unit"},
                  std::move(rows));
}

Report periods_invariants_report(const PeriodsGrid& g, unsigned jobs) {
  validate(g);
  const auto cells = grid_cells(g, false);
  auto rows = parallel_map<Row>(cells.size(), jobs, [&](std::size_t i) {
    const Cell& c = cells[i];
    const XiTilde x = build_xitilde(c.tower, c.n, IntervalPair(c.J, c.Jp));
    const UnitQuotient uq = unit_quotient(x);
    std::vector<std::string> v{std::to_string(c.tower.p.value()), to_string(c.tower.u), std::to_string(c.n),
                               c.J.to_string(), std::to_string(uq.report.degree), uq.report.mu.to_string(),
                               std::to_string(uq.report.lambda)};
    bool ok = uq.proven_bounds_ok && (!uq.is_unit || *uq.is_unit);
    if (c.J.size() >= 2 && c.Jp == c.J && c.n >= 1) {
      const auto e = compare_experimental_invariants(c.tower.p, c.n, c.J.size(), uq.report);
      v.insert(v.end(), {std::to_string(e.expected_degree), to_string(e.expected_mu), std::to_string(e.expected_lambda),
                         yes(e.degree_agrees), yes(e.mu_agrees), yes(e.lambda_agrees)});
      ok = ok && e.all_agree();
    } else {
      v.insert(v.end(), {"", "", "", "n/a", "n/a", "n/a"});
    }
    v.insert(v.end(), {yes(uq.proven_bounds_ok), uq.is_unit ? yes(*uq.is_unit) : "n/a"});
    return Row{v, ok};
  });
  Report r = assemble("periods-invariants",
                      {"p", "u", "n", "J", "degree", "mu", "lambda", "expected_degree", "expected_mu",
                       "expected_lambda", "degree_agrees", "mu_agrees", "lambda_agrees", "proven_bounds_ok", "unit"},
                      std::move(rows));
  r.notes.push_back("expected values: deg = p^{n-1}(|J|-1), mu = -floor((|J|-1)/(p-1)), "
                    "lambda = (p-1)p^{n-1}floor((|J|-2)/(p-1))");
  return r;
}

Report polygon_report(const FilteredPhiModule& d) {
  const Prime& p = d.prime();
  const QMatrix phiB = d.phi_in_basis();
  const Polygon hodge = hodge_polygon(d.weights());
  const Polygon newton = newton_polygon(d.phi(), p);
  const KatzMazurReport km = katz_mazur(phiB, p);
  std::vector<Row> rows;
  rows.push_back({{"hodge", hodge.to_string()}, true});
  rows.push_back({{"newton", newton.to_string()}, true});
  rows.push_back({{"smith", km.smith.to_string()}, true});
  rows.push_back({{"smith_below_newton", yes(km.below)}, km.below});
  rows.push_back({{"smith_newton_endpoints", yes(km.same_endpoints)}, km.same_endpoints});
  rows.push_back({{"hodge_newton_endpoints", yes(hodge.same_endpoints(newton))}, hodge.same_endpoints(newton)});
  rows.push_back({{"strongly_divisible", yes(strongly_divisible_check(d))}, true});
  Report r;
  try {
    const auto wa = weakly_admissible_check(d);
    rows.push_back({{"weakly_admissible", yes(wa.ok)}, true});
  } catch (const std::domain_error& e) {
    r.notes.push_back(std::string("weak admissibility not decided: ") + e.what());
  }
  Report out = assemble("polygon-suite", {"item", "value"}, std::move(rows));
  out.notes = std::move(r.notes);
  return out;
}

Report z_recursion_report(const RecursionConfig& c) {
  const Interval J = recursion_interval(c);
  ZState s = start_recursion(c.tower, c.module, J, c.N, c.mode);
  std::vector<Row> rows;
  while (s.level < c.n_max) {
    try {
      s = advance(s);
    } catch (const std::logic_error&) {
      rows.push_back({{std::to_string(s.level + 1), "false", "", "", "", ""}, false});
      break;
    }
    const bool det = determinant_identity(s);
    const bool mem = membership_all(s);
    std::string start = "n/a";
    bool start_ok = true;
    if (c.mode == ZMode::negative_n) {
      start_ok = negative_start_vanishes(s);
      start = yes(start_ok);
    } else if (c.N >= 1) {
      start_ok = surjectivity_identity(s);
      start = yes(start_ok);
    }
    rows.push_back({{std::to_string(s.level), "true", yes(det), yes(mem), start, std::to_string(s.Z.max_degree())},
                    det && mem && start_ok});
  }
  Report r = assemble("z-recursion", {"n", "congruence", "determinant", "membership", "start_condition", "max_degree"},
                      std::move(rows));
  r.notes.push_back("J = " + J.to_string() + ", N = " + std::to_string(c.N) + ", mode = " + to_string(c.mode));
  return r;
}

Report pollack_report(const RecursionConfig& c) {
  const Interval J = recursion_interval(c);
  const auto run = run_recursion(start_recursion(c.tower, c.module, J, c.N), c.n_max);
  std::vector<Row> rows;
  for (const auto& s : run) {
    const bool ok = pollack_check({s}).diagonal_ok;
    rows.push_back({{std::to_string(s.level), "diagonal", yes(ok)}, ok});
  }
  const bool pairs = pollack_check(run).pair_product_ok;
  rows.push_back({{std::to_string(run.back().level), "pair_products", yes(pairs)}, pairs});
  Report r = assemble("dim2-pollack", {"n", "check", "holds"}, std::move(rows));
  r.notes.push_back("Z_n = diag(prod of odd-level xi~, prod of even-level xi~)");
  return r;
}

Report divisor_report(const RecursionConfig& c) {
  const Interval J = recursion_interval(c);
  const auto run = run_recursion(start_recursion(c.tower, c.module, J, c.N, c.mode), c.n_max);
  std::vector<Row> rows;
  for (const auto& s : run) {
    const DivisorReport d = divisor_check(s);
    std::ostringstream inv, exp, match;
    for (std::size_t i = 0; i < d.expected.size(); ++i) {
      const char* sep = i ? ";" : "";
      inv << sep << d.invariants.divisors[i].degree();
      exp << sep << d.expected[i].degree();
      match << sep << (d.matches[i] ? "true" : "false");
    }
    rows.push_back({{std::to_string(s.level), yes(d.det_divisible), inv.str(), exp.str(), match.str(),
                     d.exact_claim ? "asserted" : "reported"},
                    d.ok()});
  }
  Report r = assemble("divisor-check",
                      {"n", "det_divisible", "divisor_degrees", "expected_degrees", "same_zeros", "divisor_claim"},
                      std::move(rows));
  if (beta_tilde(J.size(), c.tower.p) != 0)
    r.notes.push_back("beta~(|J|) != 0: divisor comparison reported, not asserted");
  return r;
}

Report slope_report(const RecursionConfig& c, const Rational& candidate) {
  const Interval J = recursion_interval(c);
  const auto run = run_recursion(start_recursion(c.tower, c.module, J, c.N), c.n_max);
  const SlopeTrace tr = slope_trace(run, candidate);
  const Rational rate = candidate + c.module.top_weight();
  std::vector<Row> rows;
  for (const auto& l : tr.levels) {
    const std::string shifted = l.log_norm.is_neg_infinite() ? "-inf" : to_string(l.log_norm.value() - rate * l.n);
    rows.push_back({{std::to_string(l.n), str(l.log_norm), decimal(l.log_norm), shifted}, true});
  }
  Report r = assemble("slope-trace", {"n", "log_norm", "log_norm_decimal", "shifted"}, std::move(rows));
  const auto& b = tr.brackets;
  r.columns.insert(r.columns.end(), {"bracket", "lower", "upper"});
  for (auto& row : r.rows) row.insert(row.end(), {"", "", ""});
  auto summary = [&](const std::string& name, const std::string& lo, const std::string& hi, bool ok) {
    r.rows.push_back({"", "", "", "", name, lo, hi});
    r.ok.push_back(ok);
  };
  summary("estimate", to_string(tr.slope_estimate), to_string(tr.slope_estimate), true);
  summary("general", to_string(b.general_lower), to_string(b.general_upper), tr.general_ok);
  if (b.smith_lower) summary("smith", to_string(*b.smith_lower), to_string(*b.smith_upper), *tr.smith_ok);
  r.notes.push_back("bracket rows: ok means the trace stays bounded at the upper end; lower ends are informational");
  r.notes.push_back(std::string("estimate >= general lower end: ") + yes(tr.estimate_above_general_lower));
  if (tr.estimate_above_smith_lower)
    r.notes.push_back(std::string("estimate >= smith lower end: ") + yes(*tr.estimate_above_smith_lower));
  r.notes.push_back("candidate t = " + to_string(candidate) +
                    (tr.candidate_dominates ? ": trace stays bounded" : ": trace exceeds the first two levels"));
  return r;
}

Report refinement_report(const Dim3Config& c) {
  const FilteredPhiModule d = refined_module(c.tower.p, c.alphas, c.P, c.weights);
  const Refinement R = standard_refinement(c.alphas, c.P);
  const Interval J = c.J ? *c.J : Interval::left_open(d.bottom_weight(), d.top_weight());
  const RefinementRunReport rep = refinement_recursion(c.tower, d, R, J, c.N, c.n_max);
  const bool cols = column_divisibility(rep.run.back());
  const LambdaDegreeReport ld = lambda_degree_check(c.tower, d, R, J, c.N, c.n_max);
  std::ostringstream degs;
  for (std::size_t i = 0; i < ld.degree.size(); ++i) {
    if (i) degs << ';';
    for (std::size_t j = 0; j < ld.degree[i].size(); ++j) degs << (j ? "," : "") << ld.degree[i][j];
  }
  std::vector<Row> rows{
      {{"upper_triangular", yes(rep.upper_triangular)}, rep.upper_triangular},
      {{"diagonal", yes(rep.diagonal_ok)}, rep.diagonal_ok},
      {{"entry_recursions", yes(rep.f_entry_ok)}, rep.f_entry_ok},
      {{"column_divisibility", yes(cols)}, cols},
      {{"lambda_degrees", degs.str()}, ld.ok},
  };
  if (d.dim() == 2) {
    rows.push_back({{"f_closed_form", yes(rep.f_closed_form_ok)}, rep.f_closed_form_ok});
    rows.push_back({{"f_values", yes(rep.f_values_ok)}, rep.f_values_ok});
  }
  Report r = assemble(d.dim() == 3 ? "dim3-check" : "refinement-check", {"check", "value"}, std::move(rows));
  r.notes.push_back("J = " + J.to_string() + ", N = " + std::to_string(c.N) + ", n_max = " + std::to_string(c.n_max));
  return r;
}

}  // namespace plp
