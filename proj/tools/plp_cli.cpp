// plp: batch runner for the periods / Iwasawa experiments.
// Exit status: 0 all checks hold, 1 some check was violated, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plp/serialize.hpp"

using namespace plp;

namespace {

struct Options {
  long p = 3;
  bool p_given = false;
  std::string u;
  std::string interval;
  std::string subinterval;
  long N = 0;
  long n_min = 1;
  long n_max = 3;
  bool n_max_given = false;
  std::string module_path;
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
  // dimension-2 module
  long r = 1;
  std::string a_p = "0";
  std::string iota = "1";
  std::string mode = "standard";
  std::string candidate = "0";
  // refinement instance
  std::string alphas = "1/3,2/3,4/3";
  std::string lambdas = "1,2,3";
  std::string weights = "-2,-1,0";
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

Tower tower(const Options& o) { return o.u.empty() ? Tower(o.p) : Tower(o.p, parse_rational(o.u)); }

FilteredPhiModule module(const Options& o) {
  if (!o.module_path.empty()) {
    FilteredPhiModule d = load_module(o.module_path);
    if (d.prime().value() != o.p && o.p_given) throw std::invalid_argument("--p differs from the module's prime");
    return d;
  }
  return dim2_module(Prime(o.p), o.r, parse_rational(o.a_p), parse_rational(o.iota));
}

RecursionConfig recursion(const Options& o, long default_nmax) {
  FilteredPhiModule d = module(o);
  RecursionConfig c{Tower(d.prime().value(), o.u.empty() ? Rational(1 + d.prime().value()) : parse_rational(o.u)),
                    d,
                    std::nullopt,
                    o.N,
                    o.n_max_given ? o.n_max : default_nmax,
                    ZMode::standard};
  if (!o.interval.empty()) c.J = parse_interval(o.interval);
  if (o.mode == "negative") c.mode = ZMode::negative_n;
  else if (o.mode != "standard") throw std::invalid_argument("--mode must be standard or negative");
  return c;
}

PeriodsGrid grid(const Options& o) {
  PeriodsGrid g;
  if (o.p_given) g.primes = {o.p};
  if (!o.u.empty()) g.u = parse_rational(o.u);
  if (o.n_min < 0 || o.n_max < 0) throw std::invalid_argument("levels must be >= 0");
  g.n_min = static_cast<unsigned>(o.n_min);
  g.n_max = static_cast<unsigned>(o.n_max);
  if (!o.interval.empty()) g.J = parse_interval(o.interval);
  if (!o.subinterval.empty()) g.Jp = parse_interval(o.subinterval);
  return g;
}

Dim3Config dim3(const Options& o) {
  Dim3Config c{tower(o), {}, QMatrix(), {}, std::nullopt, o.N, o.n_max_given ? o.n_max : 4};
  for (const auto& a : split(o.alphas)) c.alphas.push_back(parse_rational(a));
  for (const auto& w : split(o.weights)) c.weights.push_back(std::stol(w));
  const std::size_t d = c.alphas.size();
  if (d < 2 || d > 3 || c.weights.size() != d) throw std::invalid_argument("need 2 or 3 eigenvalues and as many weights");
  const auto l = split(o.lambdas);
  if (l.size() != d * (d - 1) / 2) throw std::invalid_argument("--lambdas needs d(d-1)/2 entries (row by row)");
  c.P = QMatrix::identity(d);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) c.P(i, j) = -parse_rational(l[k++]);
  if (!o.interval.empty()) c.J = parse_interval(o.interval);
  return c;
}

int emit(const Report& r, const Options& o) {
  std::string text;
  if (o.format == "json") text = to_json(r).dump(2) + "\n";
  else if (o.format == "csv") text = to_csv(r);
  else throw std::invalid_argument("--format must be json or csv");
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << text;
  }
  return r.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on xi~ periods, Z recursions and filtered phi-modules"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--p", o.p, "odd prime")->each([&](const std::string&) { o.p_given = true; });
    s->add_option("--u", o.u, "generator of 1 + pZ_p (default 1 + p)");
    s->add_option("--interval", o.interval, "J, e.g. 0..3 or ]-2,1]");
    s->add_option("--out", o.out, "output file (default stdout)");
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto levels = [&](CLI::App* s) {
    s->add_option("--N", o.N, "first level N");
    s->add_option("--nmax", o.n_max, "last level")->each([&](const std::string&) { o.n_max_given = true; });
  };
  auto module_opts = [&](CLI::App* s) {
    s->add_option("--module", o.module_path, "module JSON {p, phi, weights[, basis]}");
    s->add_option("--r", o.r, "dimension-2 module: r > 0");
    s->add_option("--ap", o.a_p, "dimension-2 module: a_p");
    s->add_option("--iota", o.iota, "dimension-2 module: iota");
  };

  auto* inv = app.add_subcommand("periods-invariants", "(deg, mu, lambda) of xi~/mlog against the conjectured formulas");
  auto* nb = app.add_subcommand("norm-bounds", "CRT vs closed form, congruences and norm bounds over a grid");
  for (auto* s : {inv, nb}) {
    common(s);
    s->add_option("--nmin", o.n_min, "first level");
    s->add_option("--nmax", o.n_max, "last level");
    s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  }
  nb->add_option("--subinterval", o.subinterval, "J' (default: every subinterval)");

  auto* poly = app.add_subcommand("polygon-suite", "Hodge, Newton and Smith polygons");
  common(poly);
  module_opts(poly);

  auto* zr = app.add_subcommand("z-recursion", "congruence, determinant, membership and surjectivity per level");
  auto* pol = app.add_subcommand("dim2-pollack", "a_p = 0: even/odd xi~ products on the diagonal");
  auto* dv = app.add_subcommand("divisor-check", "determinant divisibility and elementary divisors");
  auto* sl = app.add_subcommand("slope-trace", "growth of phi^{-(n+1)} Z_n and the slope brackets");
  for (auto* s : {zr, pol, dv, sl}) {
    common(s);
    levels(s);
    module_opts(s);
  }
  for (auto* s : {zr, dv}) s->add_option("--mode", o.mode, "standard or negative")->check(CLI::IsMember({"standard", "negative"}));
  sl->add_option("--candidate", o.candidate, "candidate slope t");

  auto* d3 = app.add_subcommand("dim3-check", "refinement recursion in the eigenbasis (dimension 2 or 3)");
  common(d3);
  levels(d3);
  d3->add_option("--alphas", o.alphas, "eigenvalues, comma separated");
  d3->add_option("--lambdas", o.lambdas, "lambda_12[,lambda_13,lambda_23]");
  d3->add_option("--weights", o.weights, "increasing weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inv) return emit(periods_invariants_report(grid(o), o.jobs), o);
    if (*nb) return emit(norm_bounds_report(grid(o), o.jobs), o);
    if (*poly) return emit(polygon_report(module(o)), o);
    if (*zr) return emit(z_recursion_report(recursion(o, 4)), o);
    if (*pol) return emit(pollack_report(recursion(o, 4)), o);
    if (*dv) return emit(divisor_report(recursion(o, 3)), o);
    if (*sl) return emit(slope_report(recursion(o, 4), parse_rational(o.candidate)), o);
    if (*d3) return emit(refinement_report(dim3(o)), o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
