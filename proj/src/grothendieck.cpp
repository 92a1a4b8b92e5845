#include "dk/grothendieck.hpp"

#include <algorithm>

#include "dk/characters.hpp"
#include "dk/error.hpp"

namespace dk {

namespace {

// Stable Kronecker coefficient with the support bound applied first: the
// coefficient vanishes whenever one partition is larger than the other two
// combined, which also keeps huge shifted labels away from the plateau cap.
long long rkron_or_zero(const Partition& a, const Partition& b,
                        const Partition& c, int n_cap) {
  const int sa = a.size(), sb = b.size(), sc = c.size();
  if (sa > sb + sc || sb > sa + sc || sc > sa + sb) return 0;
  return reduced_kronecker(a, b, c, n_cap);
}

}  // namespace

KElement standard_in_simples(const Partition& lambda, int t) {
  KElement out{Basis::Simple, {}};
  out.add(lambda, 1);
  if (auto prev = dagger(lambda, t, -1)) out.add(*prev, 1);
  return out;
}

KElement simple_in_standards(const Partition& lambda, int t) {
  KElement out{Basis::Standard, {}};
  for (int j = 0;; ++j) {
    const auto shifted = dagger(lambda, t, -j);
    if (!shifted) break;
    out.add(*shifted, (j % 2 == 0) ? 1 : -1);
  }
  return out;
}

long long tensor_standard_multiplicity(const Partition& lambda,
                                       const Partition& mu,
                                       const Partition& tau, int n_cap) {
  return rkron_or_zero(tau, lambda, mu, n_cap);
}

long long simple_tensor_multiplicity(const Partition& lambda,
                                     const Partition& mu, const Partition& tau,
                                     int t, int n_cap) {
  const auto tau_up = dagger(tau, t, 1);
  long long total = 0;
  for (int j = 0;; ++j) {
    const auto lj = dagger(lambda, t, -j);
    if (!lj) break;
    for (int k = 0;; ++k) {
      const auto mk = dagger(mu, t, -k);
      if (!mk) break;
      long long term = rkron_or_zero(tau, *lj, *mk, n_cap);
      if (tau_up) term += rkron_or_zero(*tau_up, *lj, *mk, n_cap);
      total += ((j + k) % 2 == 0) ? term : -term;
    }
  }
  return total;
}

std::vector<std::pair<Partition, long long>> simple_tensor_expand(
    const Partition& lambda, const Partition& mu, int t, int n_cap) {
  const int support = lambda.size() + mu.size();
  std::vector<std::pair<Partition, long long>> out;
  for (int sz = 0; sz <= support; ++sz)
    for (const Partition& tau : partitions_of(sz)) {
      const long long m = simple_tensor_multiplicity(lambda, mu, tau, t, n_cap);
      if (m != 0) out.emplace_back(tau, m);
    }
  // The support cap rests on the vanishing of stable Kronecker coefficients
  // past the combined size; spot-check the first size beyond the cap.
  for (const Partition& tau : partitions_of(support + 1)) {
    const int n = lambda.size() + mu.size() + tau.size() +
                  std::max({lambda.first_part(), mu.first_part(),
                            tau.first_part()});
    if (kronecker(pad(tau, n), pad(lambda, n), pad(mu, n)) != 0)
      fail_validation("SupportCapViolated: nonzero coefficient past |lambda|+|mu|");
  }
  return out;
}

std::vector<TensorMismatch> consistency_large_t(const Partition& lambda,
                                                const Partition& mu, int t) {
  const int support = lambda.size() + mu.size();
  if (t < 2 * support)
    fail_validation("BadT: consistency check needs t >= 2(|lambda|+|mu|)");
  std::vector<TensorMismatch> out;
  const Partition pl = pad(lambda, t), pm = pad(mu, t);
  for (int sz = 0; sz <= support; ++sz)
    for (const Partition& tau : partitions_of(sz)) {
      // Boundary-sized tau can push the plateau search past the default
      // cap; the check itself is desk-scale, so allow the extra headroom.
      const long long lhs = simple_tensor_multiplicity(lambda, mu, tau, t, 22);
      const long long rhs = kronecker(pad(tau, t), pl, pm);
      if (lhs != rhs) out.push_back({tau, lhs, rhs});
    }
  return out;
}

}  // namespace dk
