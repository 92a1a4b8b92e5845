#include "dk/characters.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "dk/error.hpp"

namespace dk {

namespace {

// chi via beta-numbers: remove a border strip of size r by lowering one
// beta-number; the sign is (-1)^(number of betas jumped over).
long long mn_recurse(const Partition& lambda, const std::vector<int>& rho,
                     std::size_t rho_idx,
                     std::map<std::pair<Partition, std::vector<int>>, long long>& memo) {
  if (rho_idx == rho.size()) return 1;  // lambda must be empty here
  std::vector<int> rho_rest(rho.begin() + rho_idx, rho.end());
  auto key = std::make_pair(lambda, rho_rest);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int r = rho[rho_idx];
  const int l = lambda.rows();
  std::vector<int> betas(l);
  for (int q = 0; q < l; ++q) betas[q] = lambda.part(q + 1) + (l - 1 - q);

  long long total = 0;
  for (int q = 0; q < l; ++q) {
    const int target = betas[q] - r;
    if (target < 0) continue;
    if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
    int crossed = 0;
    for (int c : betas)
      if (c > target && c < betas[q]) ++crossed;
    std::vector<int> nb = betas;
    nb[q] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> parts(l);
    for (int i = 0; i < l; ++i) parts[i] = nb[i] - (l - 1 - i);
    const long long sub =
        mn_recurse(Partition(std::move(parts)), rho, rho_idx + 1, memo);
    total += (crossed % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

std::map<std::pair<Partition, std::vector<int>>, long long> g_mn_memo;
std::mutex g_mn_mutex;

}  // namespace

long long mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    fail_validation("SizeMismatch: |lambda| = " + std::to_string(lambda.size()) +
                    " but |rho| = " + std::to_string(rho.size()));
  std::lock_guard<std::mutex> lock(g_mn_mutex);
  return mn_recurse(lambda, rho.parts(), 0, g_mn_memo);
}

Int class_size(const Partition& rho) {
  // n!/z_rho, z_rho = prod i^{m_i} m_i!
  const int n = rho.size();
  Int z = 1;
  int run = 0;
  for (int i = 0; i < rho.rows(); ++i) {
    const int part = rho.parts()[i];
    run = (i > 0 && rho.parts()[i - 1] == part) ? run + 1 : 1;
    z *= Int(part) * run;
  }
  return factorial(n) / z;
}

ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction f;
  f.n = lambda.size();
  for (const Partition& rho : partitions_of(f.n))
    f.values[rho] = mn_character(lambda, rho);
  return f;
}

VirtualRep decompose(const ClassFunction& f) {
  VirtualRep out;
  out.n = f.n;
  const Int nfact = factorial(f.n);
  for (const Partition& lambda : partitions_of(f.n)) {
    Rat acc = 0;
    for (const auto& [rho, value] : f.values)
      acc += Rat(class_size(rho)) * mn_character(lambda, rho) * value;
    acc /= nfact;
    if (denominator(acc) != 1)
      fail_validation("NonIntegralMultiplicity: <f, chi_" + lambda.to_string() +
                      "> is not an integer");
    if (acc != 0) out.mult[lambda] = numerator(acc).convert_to<long long>();
  }
  return out;
}

long long kronecker(const Partition& lambda, const Partition& mu,
                    const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    fail_validation("SizeMismatch: kronecker needs |lambda| = |mu| = |nu|");
  const int n = lambda.size();
  Int acc = 0;
  for (const Partition& rho : partitions_of(n))
    acc += class_size(rho) * mn_character(lambda, rho) * mn_character(mu, rho) *
           mn_character(nu, rho);
  acc /= factorial(n);
  return acc.convert_to<long long>();
}

long long reduced_kronecker(const Partition& lambda, const Partition& mu,
                            const Partition& tau, int n_cap) {
  const int floor_n =
      lambda.size() + mu.size() + tau.size() +
      std::max({lambda.first_part(), mu.first_part(), tau.first_part()});
  long long prev = 0;
  int streak = 0;
  for (int n = floor_n; n <= n_cap; ++n) {
    const long long v = kronecker(pad(lambda, n), pad(mu, n), pad(tau, n));
    streak = (streak > 0 && v == prev) ? streak + 1 : 1;
    prev = v;
    if (streak >= 3) return v;
  }
  throw Error(ErrorKind::StabilizationNotReached,
              "StabilizationNotReached: no plateau of length 3 for n <= " +
                  std::to_string(n_cap));
}

VirtualRep pieri_expand(const Partition& lambda, int d) {
  VirtualRep out;
  out.n = lambda.size() + d;
  for (const Partition& mu : horizontal_strip_sups(lambda, d)) out.mult[mu] = 1;
  return out;
}

}  // namespace dk
