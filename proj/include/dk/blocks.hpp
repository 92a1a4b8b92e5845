#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dk/partition.hpp"

namespace dk {

/// Where a partition sits at integer t: in a semisimple block, or as the
/// index-i member of the chain generated by a base partition.
struct BlockPosition {
  bool semisimple = true;
  Partition base;  // meaningful only when !semisimple
  int index = 0;   // meaningful only when !semisimple

  bool operator==(const BlockPosition&) const = default;
};

/// Which basis of the Grothendieck group a multiplicity vector refers to.
enum class Basis { Simple, Standard, Indecomposable, InjectiveInf };

/// A finitely supported integer vector over partition-indexed basis labels.
struct KElement {
  Basis basis = Basis::Simple;
  std::map<Partition, long long> mult;

  void add(const Partition& p, long long m) {
    auto it = mult.find(p);
    const long long v = (it == mult.end() ? 0 : it->second) + m;
    if (v == 0) {
      if (it != mult.end()) mult.erase(it);
    } else {
      mult[p] = v;
    }
  }
  bool operator==(const KElement&) const = default;
};

/// The chain base = b^(0) ⊂ b^(1) ⊂ ... ⊂ b^(i_max). b^(1) extends row 1
/// by t - |base| - base_1 + 1 boxes; b^(i+1) extends row i+1 by
/// base_i - base_{i+1} + 1 boxes. Requires t - |base| >= base_1
/// (NotABlockBase otherwise).
std::vector<Partition> block_sequence(const Partition& base, int t, int i_max);

/// Unique block position of mu at integer t >= 0.
BlockPosition classify(const Partition& mu, int t);

/// Shift mu by k steps along its chain; nullopt when the shifted label does
/// not exist (semisimple with k != 0, or index would go negative).
std::optional<Partition> dagger(const Partition& mu, int t, int k);

/// The tau ⊆ mu with mu/tau a horizontal strip such that tau is either in
/// a semisimple block or its chain successor is not contained in mu.
/// Sorted ascending.
std::vector<Partition> b_set(const Partition& mu, int t);

/// Standard multiplicities of the indecomposable X_tau: {M_tau} when tau is
/// semisimple or at chain index 0, otherwise {M_tau, M_(predecessor)}.
KElement standard_components_X(const Partition& tau, int t);

/// Indecomposable decomposition of the specialization of the injective
/// Q_lambda: indicator vector of b_set(lambda, t).
KElement gamma_Q(const Partition& lambda, int t);

/// Simple constituents of Q_lambda: all mu with lambda/mu a horizontal strip.
KElement q_simple_constituents(const Partition& lambda);

}  // namespace dk
