#pragma once

#include <vector>

#include "dk/blocks.hpp"
#include "dk/partition.hpp"

namespace dk {

/// [M_lambda] expanded in simples: L_lambda plus the chain predecessor of
/// lambda when it exists.
KElement standard_in_simples(const Partition& lambda, int t);

/// [L_lambda] expanded in standards: the alternating sum over downward
/// chain shifts of lambda; finite because chain indices stop at 0.
KElement simple_in_standards(const Partition& lambda, int t);

/// Multiplicity of M_tau in a standard filtration of M_lambda ⊗ M_mu: the
/// stable Kronecker coefficient.
long long tensor_standard_multiplicity(const Partition& lambda,
                                       const Partition& mu,
                                       const Partition& tau, int n_cap = 18);

/// Multiplicity of L_tau in L_lambda ⊗ L_mu at integer t: the double
/// alternating sum over downward shifts of lambda and mu of the stable
/// Kronecker coefficients at tau and at the upward shift of tau, with
/// absent labels contributing zero.
long long simple_tensor_multiplicity(const Partition& lambda,
                                     const Partition& mu, const Partition& tau,
                                     int t, int n_cap = 18);

/// All tau with a nonzero simple multiplicity in L_lambda ⊗ L_mu; support
/// is capped at |tau| <= |lambda| + |mu| (stable Kronecker coefficients
/// vanish beyond), with the boundary checked at runtime.
std::vector<std::pair<Partition, long long>> simple_tensor_expand(
    const Partition& lambda, const Partition& mu, int t, int n_cap = 18);

/// One discrepancy between the two independent computations of a tensor
/// multiplicity.
struct TensorMismatch {
  Partition tau;
  long long via_structure_constants = 0;
  long long via_characters = 0;
};

/// Cross-validates simple_tensor_multiplicity against the multiplicity of
/// pad(tau,t) in pad(lambda,t) ⊗ pad(mu,t) computed by honest character
/// arithmetic in S_t, over the whole capped support. Requires t large
/// enough that every padded label is a diagram; returns mismatches
/// (expected empty).
std::vector<TensorMismatch> consistency_large_t(const Partition& lambda,
                                                const Partition& mu, int t);

}  // namespace dk
