#pragma once

// Swap monotonicity sweeps and the kappa/psi volume bounds. Every report is
// relation-type: lhs = number of violations, rhs = 0, with the comparison
// count and each violating tuple in detail.

#include "tau/exact.hpp"
#include "tau/npoint.hpp"
#include "tau/report.hpp"
#include "tau/tau_engine.hpp"

#include <functional>
#include <vector>

namespace tau {

/// <tau_d>_g <= <tau_d'>_g where d' moves one unit from a larger exponent b
/// to a smaller a (b >= a + 2), over every ascending d with sum 3g-3+n and
/// every such value pair.
Report psi_swap_check(const TauEngine& engine, int genus, int n);

/// The lambda_g case: the closed form reduces each comparison to
/// multinomial(2g-3+n; d) <= multinomial(2g-3+n; d').
Report lambda_g_swap_check(int genus, int n);

/// kappa-pair swaps <k_p k_q ...> <= <k_{p+1} k_{q-1} ...> and psi-pair swaps
/// in kappa contexts, over psi multisets of size n and kappa multisets of
/// size <= max_kappa (entries >= 0), all values by the kappa-to-psi transform.
Report kappa_swap_check(const TauEngine& engine, int genus, int n, int max_kappa);

/// (2g-2+n)^{m-1}/(24^g g!) <= <k_a>_{g,n} <= <k_1^D>_{g,n}/(2g-2+n)^{D-m},
/// D = 3g-3+n, over kappa multisets with entries >= 0 and 1 <= m <= D.
Report kappa_bounds_check(const TauEngine& engine, int genus, int n);

/// <tau_d>_g >= 1/(24^g g!) over every ascending d; detail records whether
/// the minimum attains the bound.
Report psi_lower_bound_check(const TauEngine& engine, int genus, int n);

/// psi_swap_check at n = 2 read off the two-point function; one report per
/// genus in [1, max_genus]. progress(g) is called after each genus.
std::vector<Report> two_point_swap_sweep(NPointEngine& npoint, int max_genus,
                                         const std::function<void(const Report&)>& progress = {});

}  // namespace tau
