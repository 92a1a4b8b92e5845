#include "dk/blocks.hpp"

#include <algorithm>

#include "dk/error.hpp"

namespace dk {

std::vector<Partition> block_sequence(const Partition& base, int t, int i_max) {
  if (t - base.size() < base.first_part())
    fail_validation("NotABlockBase: need t - |base| >= base_1 (t = " +
                    std::to_string(t) + ", base = " + base.to_string() + ")");
  std::vector<Partition> seq = {base};
  for (int i = 1; i <= i_max; ++i) {
    std::vector<int> parts = seq.back().parts();
    if (i == 1) {
      // Row 1 grows to t - |base| + 1 boxes.
      if (parts.empty()) parts.push_back(0);
      parts[0] = t - base.size() + 1;
    } else {
      // Row i grows to base_{i-1} + 1 boxes.
      if (static_cast<int>(parts.size()) < i) parts.push_back(0);
      parts[i - 1] = base.part(i - 1) + 1;
    }
    seq.emplace_back(std::move(parts));
  }
  return seq;
}

BlockPosition classify(const Partition& mu, int t) {
  if (t < 0) fail_validation("BadT: t must be nonnegative");
  const int i_max = mu.rows() + 1;
  for (int sz = 0; sz <= t; ++sz) {
    for (const Partition& base : partitions_of(sz)) {
      if (base.first_part() > t - sz) continue;
      const auto seq = block_sequence(base, t, i_max);
      for (int i = 0; i <= i_max; ++i)
        if (seq[i] == mu) return BlockPosition{false, base, i};
    }
  }
  return BlockPosition{true, {}, 0};
}

std::optional<Partition> dagger(const Partition& mu, int t, int k) {
  const BlockPosition pos = classify(mu, t);
  if (pos.semisimple) {
    if (k == 0) return mu;
    return std::nullopt;
  }
  const int j = pos.index + k;
  if (j < 0) return std::nullopt;
  return block_sequence(pos.base, t, j)[j];
}

std::vector<Partition> b_set(const Partition& mu, int t) {
  std::vector<Partition> out;
  for (const Partition& tau : horizontal_strip_subs(mu)) {
    const BlockPosition pos = classify(tau, t);
    if (!pos.semisimple) {
      const Partition next = block_sequence(pos.base, t, pos.index + 1).back();
      if (contains(mu, next)) continue;
    }
    out.push_back(tau);
  }
  std::sort(out.begin(), out.end());
  return out;
}

KElement standard_components_X(const Partition& tau, int t) {
  KElement out{Basis::Standard, {}};
  out.add(tau, 1);
  const BlockPosition pos = classify(tau, t);
  if (!pos.semisimple && pos.index >= 1)
    out.add(block_sequence(pos.base, t, pos.index - 1).back(), 1);
  return out;
}

KElement gamma_Q(const Partition& lambda, int t) {
  KElement out{Basis::Indecomposable, {}};
  for (const Partition& tau : b_set(lambda, t)) out.add(tau, 1);
  return out;
}

KElement q_simple_constituents(const Partition& lambda) {
  KElement out{Basis::Simple, {}};
  for (const Partition& mu : horizontal_strip_subs(lambda)) out.add(mu, 1);
  return out;
}

}  // namespace dk
