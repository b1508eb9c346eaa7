#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plp/periods.hpp"
#include "plp/phimod.hpp"
#include "plp/poly_matrix.hpp"

namespace plp {

enum class ZMode { standard, negative_n };

std::string to_string(ZMode mode);

// One level of the Z recursion. The recursion starts at level N - 1 with the
// identity (standard) or omega_{N-1}^J times the identity (negative_n), and
//   Z_n = phi^{n+1} Theta_n phi^{-(n+1)} Z_{n-1}.
// Z is expressed in the adapted basis, or in the eigenbasis of `refinement`
// when one is attached.
struct ZState {
  Tower tower;
  FilteredPhiModule module;
  Interval J;
  long N;
  long level;
  ZMode mode;
  std::optional<Refinement> refinement;
  PolyMatrix Z;
  // theta[k][i] = xi~_{N+k}^{]t_i, t_top] in J}, the Theta diagonal at level N + k
  std::vector<std::vector<Poly>> theta;
};

// ]t_{HT,1}, t'_{HT,d}]
Interval default_interval(const FilteredPhiModule& d);

// ]w, t_top]
Interval weight_interval(const FilteredPhiModule& d, long w);

// Diagonal of Theta_n in the adapted basis: xi~_n^{]t_i, t_top] in J}.
std::vector<Poly> theta_entries(const Tower& t, const FilteredPhiModule& d, unsigned n, const Interval& J);
PolyMatrix theta_operator(const Tower& t, const FilteredPhiModule& d, unsigned n, const Interval& J);

// Throws std::invalid_argument if J misses ]t_{HT,1}, t_{HT,d}] or is too short
// for convergence (|J| > t_{N,d} - t_{N,1}, or the eigenvalue-ratio bound in
// refinement mode), or if N < 0 (N < 1 for negative_n).
ZState start_recursion(const Tower& t, const FilteredPhiModule& d, const Interval& J, long N,
                       ZMode mode = ZMode::standard, std::optional<Refinement> refinement = std::nullopt);

// Next level. Throws std::logic_error if Z_{n} - Z_{n-1} is not divisible by omega_{n-1}^J.
ZState advance(const ZState& s);

// States at levels N..n_max.
std::vector<ZState> run_recursion(const ZState& start, long n_max);

// det Z_n = prod_i prod_{m=N}^{n} xi~_m^{]t_i, t_top] in J} (times omega_{N-1}^{J d} for negative_n).
bool determinant_identity(const ZState& s);

struct MembershipReport {
  long j;
  unsigned level;
  bool ok;
};
// phi^{-(m+1)} Z_n(u^j zeta_{p^m} - 1) has zero coordinates along basis vectors of
// weight < j. Requires t_{HT,1} < j <= t_{HT,d} and N <= m <= n.
MembershipReport membership_check(const ZState& s, long j, unsigned m);
// All j in ]t_{HT,1}, t_{HT,d}] and m in [N, n].
bool membership_all(const ZState& s);

// Standard mode with N >= 1: Z_n at u^j zeta_{p^{N-1}} - 1 is the identity for j in J.
bool surjectivity_identity(const ZState& s);
// Negative mode: Z_n vanishes at u^j zeta - 1 for j in J and zeta of order dividing p^{N-1}.
bool negative_start_vanishes(const ZState& s);

struct SlopeLevel {
  long n;
  LogNorm log_norm;  // log_p || phi^{-(n+1)} Z_n ||_{rho_n}
};

struct SlopeBrackets {
  Rational general_lower;   // t_{N,1} - t_{HT,d}
  Rational general_upper;   // ord_p ||phi^{-1}||_B - t_{HT,1} + beta~(|J|)
  std::optional<Rational> smith_lower;   // min(s_i - t_i) when the basis is adapted to phi
  std::optional<Rational> smith_upper;   // max(s_i - t_i) + beta~(|J|)
  std::optional<Rational> refinement_upper;  // beta~(|J|) + max_{i<=k}(v(alpha_k) - t_i)
};
SlopeBrackets slope_brackets(const FilteredPhiModule& d, const Interval& J,
                             const std::optional<Refinement>& refinement = std::nullopt);

struct SlopeTrace {
  std::vector<SlopeLevel> levels;
  Rational candidate;
  // (L_{n_max} - L_{N}) / (n_max - N) - t_{HT,d}; informational only
  Rational slope_estimate;
  // L_n - (t + t_{HT,d}) n for n >= N + 2 stays at or below its maximum over
  // the first two levels (boundedness of the trace at slope t is not refuted)
  bool candidate_dominates = false;
  SlopeBrackets brackets;
  // The trace is dominated at the upper end of each bracket. Lower ends cannot
  // be refuted by finitely many levels; the estimate is compared to them in
  // estimate_above_* for reporting.
  bool general_ok = false;
  std::optional<bool> smith_ok;
  std::optional<bool> refinement_ok;
  bool estimate_above_general_lower = false;
  std::optional<bool> estimate_above_smith_lower;
};
// Whether the trace stays bounded at slope t in the sense of candidate_dominates.
bool trace_dominated(const std::vector<SlopeLevel>& levels, const Rational& t, long top_weight);
// Requires levels N..n_max with n_max >= N + 2.
SlopeTrace slope_trace(const std::vector<ZState>& run, const Rational& candidate);

struct DivisorReport {
  bool det_divisible = false;
  DivisorSequence invariants;
  std::vector<Poly> expected;  // prod_m xi~_m^{]t_i, t_top] in J}, i = 1..d
  std::vector<bool> matches;   // same zeros in the open unit disc
  bool exact_claim = false;    // beta~(|J|) == 0
  bool ok() const;
};
// Divisibility of det Z_n and the elementary divisors of Z_n over Q[x].
DivisorReport divisor_check(const ZState& s);

// Whether a / b is a unit of the ring of functions on the open unit disc: after
// removing gcd(a, b), neither side has a zero with |x| < 1.
bool same_zeros_in_open_disc(const Poly& a, const Poly& b, const Prime& p);

// Refinement mode: the first i columns of Z_n are divisible by
// mlog_{]t_i, t_top], m} for every m in [N, n].
bool column_divisibility(const ZState& s);

// Two-dimensional module with weights (-r, 0) and characteristic polynomial
// x^2 - p^{-r} a_p x + p^{-r} iota, written in the basis (phi w, w).
FilteredPhiModule dim2_module(const Prime& p, long r, const Rational& a_p, const Rational& iota);

// a_p = 0: Z_n = diag(prod of odd-level xi~, prod of even-level xi~), and
// B_{m+1} B_m = -(p^r / iota) diag(xi~_{m+1}, xi~_m) = phi^{-2} diag(...).
struct PollackReport {
  bool diagonal_ok = true;
  bool pair_product_ok = true;
};
PollackReport pollack_check(const std::vector<ZState>& run);

// Matrix of polynomials of degree < |J| with value
// (1 - p^{-j} phi)(1 - p^{j-1} phi^{-1})^{-1} at u^j - 1 for j in J (adapted basis).
// Throws std::domain_error when phi has an eigenvalue p^{j-1} for some j in J.
PolyMatrix euler_operator(const Tower& t, const FilteredPhiModule& d, const Interval& J);

// (1 - p^{-j} phi)^{-1} (1 - p^{j-1} phi^{-1}) for the two-dimensional module.
// Throws std::domain_error when p^j is an eigenvalue of phi.
QMatrix dim2_euler_value(const FilteredPhiModule& d, long j);
// The same matrix divided by dim2_euler_prefactor:
//   [[iota(1 - 1/p), p^{r+j-1} + iota p^{-j} - a_p/p],
//    [iota a_p p^{-r-1} - iota^2 p^{-j-r} - iota p^{j-1},
//     a_p^2 p^{-r-1} - a_p iota p^{-j-r} - a_p p^{j-1} + iota(1 - 1/p)]]
QMatrix dim2_euler_closed_form(const Prime& p, long r, const Rational& a_p, const Rational& iota, long j);
// p^{j+r} / (iota (p^{j+r} + iota p^{-j} - a_p))
Rational dim2_euler_prefactor(const Prime& p, long r, const Rational& a_p, const Rational& iota, long j);
// Scalar s with value = s * closed form, if one exists.
std::optional<Rational> dim2_euler_scale(const Prime& p, long r, const Rational& a_p, const Rational& iota, long j);
// First row of the closed form applied to (f, g):
//   iota(1 - 1/p) f + (p^{r+j-1} + iota p^{-j} - a_p/p) g.
// Its vanishing says the value at u^j - 1 has no component along phi(w).
Rational dim2_euler_residual(const Prime& p, long r, const Rational& a_p, const Rational& iota, long j,
                             const Rational& f, const Rational& g);

// F_{n,nu} = xi~_n F_{n-1,nu} + nu^{n+1}(xi~_n - 1), F = 0 before level N.
// xis[k] = xi~_{N+k}. Returns F at levels N..N+xis.size()-1.
std::vector<Poly> f_recursion(const std::vector<Poly>& xis, long N, const Rational& nu);
// sum_{t=N}^{n} nu^{t+1}(xi~_t - 1) prod_{t<i<=n} xi~_i
Poly f_closed_form(const std::vector<Poly>& xis, long N, const Rational& nu);

struct RefinementRunReport {
  std::vector<ZState> run;      // eigenbasis coordinates
  bool upper_triangular = true;
  bool diagonal_ok = true;      // diagonal = prod_m xi~_m^{]t_i, t_top]}
  bool f_closed_form_ok = true; // dim 2 only
  bool f_entry_ok = true;       // dim 2: Z_n(0,1) = lambda F_n; dim 3: the scalar recursions
  bool f_values_ok = true;      // dim 2: F_n(u^j zeta_m - 1) = -nu^{m+1}
  bool ok() const { return upper_triangular && diagonal_ok && f_closed_form_ok && f_entry_ok && f_values_ok; }
};
// d must be in {2, 3} for the F checks; the structural checks run for any d.
RefinementRunReport refinement_recursion(const Tower& t, const FilteredPhiModule& d, const Refinement& r,
                                         const Interval& J, long N, long n_max);

struct Dim3Entries {
  std::vector<Poly> F12, F23, F13, G13;  // levels N..n_max
};
// Scalar recursions for the off-diagonal entries with lambda_{ij} = -P(i, j).
Dim3Entries dim3_recursions(const std::vector<std::vector<Poly>>& theta, long N,
                            const std::vector<Rational>& alphas);

struct LambdaDegreeReport {
  // degree[i][j] of the (i, j) entry of Z_n as a polynomial in the scaling c
  std::vector<std::vector<long>> degree;
  bool ok = false;  // degree[i][j] <= j - i (and 0 on and below the diagonal)
};
// Scales the strictly upper part of P by c = 0..d and uses finite differences in c.
LambdaDegreeReport lambda_degree_check(const Tower& t, const FilteredPhiModule& d, const Refinement& r,
                                       const Interval& J, long N, long n);

}  // namespace plp
