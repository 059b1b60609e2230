#pragma once

// Exact evaluation of the alternating-sum identities and boundary
// convolution conjectures, with admissible-parameter sweeps.

#include "tau/exact.hpp"
#include "tau/report.hpp"
#include "tau/tau_engine.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tau {

enum class IdentityId { eq3, eq4, eq5, eq6, eq7, eq8, c32a, c32b, c33a, c33b, c34a, c34b, c35a, c35b };

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

/// Raised when parameters violate an identity's index constraints.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IdentityParams {
  int genus = 0;
  std::vector<int> d;
  /// K for eq6/eq7 and the "a" conjectures; the "b" forms fix K themselves.
  std::optional<int> K;
  /// c32: {r}; c33/c34: r_1..r_m; c35: r_1..r_m.
  std::vector<int> r;
  /// c32/c34: {s}; c35: s_1..s_l.
  std::vector<int> s;
};

nlohmann::json to_json(const IdentityParams& p);

/// sum_{j=0}^{2K} (-1)^j <tau_{2K-j} tau_j tau_d>_g.
Rational alt_pair_sum(const TauEngine& engine, int K, int genus, std::span<const int> d);

/// sum over ordered (I, J) with I |_| J = {1..n} (empty parts allowed), g' in
/// [0, g], j in [0, top] of
///   (-1)^j <tau_j left tau_{d_I}>_{g'} <tau_{top-j} right tau_{d_J}>_{g-g'}.
Rational split_sum(const TauEngine& engine, int top, std::span<const int> left, std::span<const int> right,
                   int genus, std::span<const int> d);

/// sum_j <tau_{d_1} .. tau_{d_j + shift} .. tau_{d_n} extras>_g.
Rational shifted_sum(const TauEngine& engine, int shift, int genus, std::span<const int> d,
                     std::span<const int> extras = {});

/// Throws ConstraintError naming the first violated constraint.
void check_constraints(IdentityId id, const IdentityParams& p);

/// Both sides, laid out as in the identity: closed-form constants come from
/// factorials, bracket combinations from the engine.
Report verify(const TauEngine& engine, IdentityId id, const IdentityParams& p);

struct SweepBounds {
  int gmin = 0;
  int gmax = 6;
  int nmin = 1;
  int nmax = 4;
  /// For eq6/eq7 and the "a" conjectures: K at most threshold + k_span; < 0 = no cap.
  int k_span = -1;
  /// Upper bound on r, s, r_p, s_p.
  int r_max = 2;
  /// Upper bound on m and l.
  int m_max = 3;
};

struct SkippedCase {
  IdentityParams params;
  std::string reason;
};

struct SweepPlan {
  std::vector<IdentityParams> cases;
  std::vector<SkippedCase> skipped;
};

/// Every admissible parameter tuple for the identity within the bounds, with
/// d enumerated as ascending multisets (the identities are symmetric in d).
SweepPlan sweep_params(IdentityId id, const SweepBounds& bounds);

std::vector<Report> verify_sweep(const TauEngine& engine, IdentityId id, const SweepBounds& bounds, int jobs,
                                 std::vector<SkippedCase>* skipped = nullptr);

/// Checks the termwise split of the eq3 right-hand side into the eq5 residual
/// plus half the eq4 sum at genus g-1, and the matching constants.
Report decomposition_check(const TauEngine& engine, int genus, std::span<const int> d);

struct N1Sums {
  Rational with_tau0_shifted;  ///< <tau_0 tau_{3h-g-1} tau_{g+1}>_h
  Rational with_tau0;          ///< <tau_0 tau_{3h-g} tau_g>_h
  Rational two_point;          ///< <tau_{3h-g} tau_{g-1}>_h
};

/// The three weighted sums over h = 1..g with weight (-1)^{g-h}/(24^{g-h}(g-h)!).
N1Sums n1_proof_sums(const TauEngine& engine, int genus);

/// g!/(2g+1)! g/2^g, g!/(2g+1)! 1/2^g, 1/(24^g g!).
N1Sums n1_expected(int genus);

/// One report per sum; params carry {g, sum: 1..3}.
std::vector<Report> n1_reports(const TauEngine& engine, int genus);

}  // namespace tau
