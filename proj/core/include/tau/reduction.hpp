#pragma once

// Reductions of kappa- and selected lambda-class integrals to psi brackets.

#include "tau/exact.hpp"
#include "tau/tau_engine.hpp"

#include <span>
#include <vector>

namespace tau {

/// <prod tau_{d_i} prod kappa_{a_j}>_g on M_{g,n}, n = psi.size().
struct MixedKey {
  int genus = 0;
  std::vector<int> psi;
  std::vector<int> kappa;
};

/// Set-partition transform
///   <tau_d kappa_a>_g = sum_P prod_B (-1)^{|B|-1} <tau_d prod_B tau_{a_B + 1}>_g,
/// a_B the sum of the kappa indices in block B. This inverts
/// pi_*(prod psi^{a_j+1}) = sum_{sigma in S_m} prod_{cycles c} kappa_{a_c}.
/// Total: 0 on dimension mismatch.
Rational kappa_to_psi(const TauEngine& engine, const MixedKey& key);

/// lambda_g theorem:
///   <tau_d lambda_g>_g = C(2g-3+n; d) (2^{2g-1}-1)/2^{2g-1} |B_{2g}|/(2g)!.
/// 0 on dimension mismatch; throws std::invalid_argument for g < 1 or n < 1.
Rational lambda_g_bracket(int genus, std::span<const int> d);

/// <ch_{2k-1}(E) prod tau_d>_g from Mumford's formula.
Rational ch_insertion(const TauEngine& engine, int genus, int k, std::span<const int> d);

/// The bracket combination in square brackets of Mumford's formula,
/// i.e. ch_insertion without the B_{2k}/(2k)! factor.
Rational mumford_bracket_sum(const TauEngine& engine, int genus, int k, std::span<const int> d);

/// <tau_d lambda_g lambda_{g-1}>_g = (-1)^{g-1} (2g-1)! <ch_{2g-1} tau_d>_g.
/// Requires g >= 2; returns 0 unless sum (d_j - 1) = g - 2 with d_j >= 1.
Rational lambda_gg1_bracket(const TauEngine& engine, int genus, std::span<const int> d);

/// (2g-3+n)! |B_{2g}| / (2^{2g-1} (2g)! prod (2d_j-1)!!), the closed form for
/// <tau_d lambda_g lambda_{g-1}>_g.
Rational lambda_gg1_closed(int genus, std::span<const int> d);

/// |B_{2g}| (g-1)! / (2^g (2g)!) = <kappa_{g-2} lambda_g lambda_{g-1}> on M_g.
Rational faber_kappa_constant(int genus);

/// The display form of the proportionality constant,
/// (2g-3+n)! (2g-1)!! / ((2g-1)! prod (2d_j+1)!!).
Rational faber_kappa_sum_constant(int genus, std::span<const int> d);

}  // namespace tau
