#pragma once

#include <map>

#include "dk/numeric.hpp"
#include "dk/partition.hpp"

namespace dk {

/// A class function of S_n over Q, keyed by cycle type.
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rat> values;

  Rat at(const Partition& cycle_type) const {
    auto it = values.find(cycle_type);
    return it == values.end() ? Rat(0) : it->second;
  }
};

/// Integer multiplicity vector over irreducibles of a fixed S_n.
struct VirtualRep {
  int n = 0;
  std::map<Partition, long long> mult;
};

/// Irreducible character value chi_lambda(rho) by the Murnaghan-Nakayama
/// rule (beta-number border-strip removal, memoized).
long long mn_character(const Partition& lambda, const Partition& rho);

/// Conjugacy class size n!/z_rho.
Int class_size(const Partition& rho);

/// Character of the irreducible lambda as a class function.
ClassFunction irreducible_character(const Partition& lambda);

/// Inner products with all irreducible characters. Throws
/// NonIntegralMultiplicity when f is not a virtual character.
VirtualRep decompose(const ClassFunction& f);

/// Kronecker coefficient g^lambda_{mu,nu} for a common size n.
long long kronecker(const Partition& lambda, const Partition& mu,
                    const Partition& nu);

/// Stable (reduced) Kronecker coefficient: the plateau of
/// g^{lambda[n]}_{mu[n],nu[n]}. Accepts after three equal consecutive
/// values; the search starts at |lambda|+|mu|+|tau| + max first part and
/// is capped (default 18, configurable).
long long reduced_kronecker(const Partition& lambda, const Partition& mu,
                            const Partition& tau, int n_cap = 18);

/// Multiplicity-one expansion of Ind(triv_d x lambda): all mu with
/// mu/lambda a horizontal strip of size d (Pieri rule).
VirtualRep pieri_expand(const Partition& lambda, int d);

}  // namespace dk
