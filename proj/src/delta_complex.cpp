#include "dk/delta_complex.hpp"

#include <algorithm>
#include <numeric>

#include "dk/error.hpp"

namespace dk {

namespace {

std::vector<std::vector<int>> injections(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cur.push_back(v);
      self(self, depth + 1);
      cur.pop_back();
      used[v] = 0;
    }
  };
  if (k <= n) rec(rec, 0);
  return out;
}

int sign_of(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Orbit representative of (f,g) under simultaneous precomposition, with
// the sign of the permutation carrying the representative to (f,g).
std::pair<std::vector<int>, int> orbit_rep(
    const std::vector<int>& f, const std::vector<int>& g,
    const std::vector<std::vector<int>>& sk) {
  const int k = static_cast<int>(f.size());
  std::vector<int> best;
  int best_sign = 1;
  for (const auto& sigma : sk) {
    std::vector<int> fs(k), gs(k);
    for (int i = 0; i < k; ++i) {
      fs[i] = f[sigma[i]];
      gs[i] = g[sigma[i]];
    }
    std::vector<int> cand = concat(fs, gs);
    if (best.empty() || cand < best) {
      best = std::move(cand);
      best_sign = sign_of(sigma);
    }
  }
  return {best, best_sign};
}

// All partitions contained in outer, by row-wise descent.
std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int row, int bound) -> void {
    out.emplace_back(std::vector<int>(parts));
    if (row > outer.rows()) return;
    const int hi = std::min(bound, outer.part(row));
    for (int v = hi; v >= 1; --v) {
      parts.push_back(v);
      self(self, row + 1, v);
      parts.pop_back();
    }
  };
  rec(rec, 1, outer.first_part());
  return out;
}

}  // namespace

long long delta_character(int k, int N, const Partition& rho,
                          const Partition& sigma) {
  if (rho.size() != k)
    fail_validation("SizeMismatch: |rho| must equal k");
  if (sigma.size() != N)
    fail_validation("SizeMismatch: |sigma| must equal N");
  std::map<int, int> a, b;
  for (int c : rho.parts()) ++a[c];
  for (int c : sigma.parts()) ++b[c];
  long long total = 1;
  for (const auto& [c, ac] : a) {
    const int bc = b.count(c) ? b.at(c) : 0;
    if (ac > bc) return 0;
    for (int i = 0; i < ac; ++i) total *= (bc - i) * static_cast<long long>(c);
  }
  return total;
}

PairDecomp decompose_delta(int k, int N) {
  PairDecomp out;
  for (const Partition& mu : partitions_of(N))
    for (const Partition& lambda : partitions_of(k))
      if (is_horizontal_strip(lambda, mu)) out[{mu, lambda}] = 1;
  return out;
}

PairDecomp blacktriangle_decompose(int k, int n) {
  PairDecomp out;
  for (const Partition& mu : partitions_of(n)) {
    const Partition muT = transpose(mu);
    for (const Partition& lambda : partitions_of(k))
      if (is_vertical_strip(lambda, muT)) out[{mu, lambda}] = 1;
  }
  return out;
}

EquivariantComplex build_K(int n, int N, int n_cap, int N_cap) {
  if (n < 0 || N < 0) fail_validation("BadSize: n, N must be nonnegative");
  if (n > n_cap || N > N_cap)
    fail_cap("ComplexCapExceeded: build_K limited to n <= " +
             std::to_string(n_cap) + ", N <= " + std::to_string(N_cap));

  EquivariantComplex K;
  K.n = n;
  K.N = N;
  K.terms.resize(n + 1);
  K.d.resize(n + 1);

  for (int k = 0; k <= n; ++k) {
    ComplexTerm& term = K.terms[k];
    term.k = k;
    const auto sk = permutations(k);
    const auto fs = injections(k, n);
    const auto gs = injections(k, N);
    std::map<std::vector<int>, int> rep_index;
    for (const auto& f : fs)
      for (const auto& g : gs) {
        auto [rep, sign] = orbit_rep(f, g, sk);
        (void)sign;
        rep_index.emplace(std::move(rep), 0);
      }
    for (auto& [rep, idx] : rep_index) {
      idx = static_cast<int>(term.basis.size());
      term.basis.emplace_back(std::vector<int>(rep.begin(), rep.begin() + k),
                              std::vector<int>(rep.begin() + k, rep.end()));
    }
    for (const auto& f : fs)
      for (const auto& g : gs) {
        auto [rep, sign] = orbit_rep(f, g, sk);
        term.orbit_of[concat(f, g)] = {rep_index.at(rep), sign};
      }
  }

  for (int k = 1; k <= n; ++k) {
    const ComplexTerm& src = K.terms[k];
    const ComplexTerm& dst = K.terms[k - 1];
    MatZ d(dst.dim(), src.dim());
    const auto sk = permutations(k);
    const Int shrink = factorial(k - 1);
    for (std::size_t col = 0; col < src.dim(); ++col) {
      const auto& [f, g] = src.basis[col];
      std::map<int, Int> acc;
      for (const auto& sigma : sk) {
        const int ssign = sign_of(sigma);
        std::vector<int> fs(k), gs(k);
        for (int i = 0; i < k; ++i) {
          fs[i] = f[sigma[i]];
          gs[i] = g[sigma[i]];
        }
        for (int i = 1; i <= k; ++i) {
          std::vector<int> fr, gr;
          for (int j = 0; j < k; ++j) {
            if (j == i - 1) continue;
            fr.push_back(fs[j]);
            gr.push_back(gs[j]);
          }
          const auto& [idx, osign] = dst.orbit_of.at(concat(fr, gr));
          acc[idx] += ((i % 2 == 0) ? 1 : -1) * ssign * osign;
        }
      }
      // Summing over all of S_k counts each ambient element of a target
      // orbit once, so the representative's coefficient appears (k-1)! times.
      for (const auto& [idx, v] : acc) {
        if (v % shrink != 0)
          fail_validation("InternalError: differential not orbit-divisible");
        d.at(idx, col) = v / shrink;
      }
    }
    K.d[k] = std::move(d);
  }
  return K;
}

MatZ action_on_term(const EquivariantComplex& K, int k,
                    const std::vector<int>& w, bool on_first) {
  const ComplexTerm& term = K.terms.at(k);
  MatZ out(term.dim(), term.dim());
  for (std::size_t col = 0; col < term.dim(); ++col) {
    auto [f, g] = term.basis[col];
    if (on_first)
      for (auto& v : f) v = w[v];
    else
      for (auto& v : g) v = w[v];
    const auto& [idx, sign] = term.orbit_of.at(concat(f, g));
    out.at(idx, col) = sign;
  }
  return out;
}

Partition cycle_type(const std::vector<int>& w) {
  std::vector<char> seen(w.size(), 0);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = w[j]) {
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<int>());
  return Partition(std::move(cycles));
}

std::vector<int> permutation_of_type(const Partition& rho) {
  std::vector<int> w;
  int base = 0;
  for (int c : rho.parts()) {
    for (int i = 0; i < c; ++i) w.push_back(base + (i + 1) % c);
    base += c;
  }
  return w;
}

namespace {

// Scaled isotypic projector sum_w chi(w) A(w) for each irreducible; exact
// up to the positive scalar |G| / dim, which rank computations ignore.
std::vector<MatZ> scaled_projectors(const EquivariantComplex& K, int k,
                                    int group_size, bool on_first) {
  const int m = on_first ? K.n : K.N;
  const std::vector<Partition> irreducibles = partitions_of(m);
  const std::size_t dim = K.terms[k].dim();
  std::vector<MatZ> out(irreducibles.size(), MatZ(dim, dim));
  (void)group_size;

  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 0);
  do {
    const Partition type = cycle_type(w);
    const MatZ a = action_on_term(K, k, w, on_first);
    std::vector<long long> chis(irreducibles.size());
    for (std::size_t t = 0; t < irreducibles.size(); ++t)
      chis[t] = mn_character(irreducibles[t], type);
    for (std::size_t col = 0; col < dim; ++col)
      for (std::size_t row = 0; row < dim; ++row) {
        const Int& v = a.at(row, col);
        if (v == 0) continue;
        for (std::size_t t = 0; t < irreducibles.size(); ++t)
          if (chis[t] != 0) out[t].at(row, col) += chis[t] * v;
      }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

std::map<int, PairDecomp> cohomology_bimodule(int n, int N, int n_cap,
                                              int N_cap) {
  const EquivariantComplex K = build_K(n, N, n_cap, N_cap);
  const std::vector<Partition> mus = partitions_of(n);
  const std::vector<Partition> nus = partitions_of(N);
  const Partition id_n(std::vector<int>(n, 1)), id_N(std::vector<int>(N, 1));

  std::vector<std::vector<MatZ>> pn(n + 1), pN(n + 1);
  for (int k = 0; k <= n; ++k) {
    pn[k] = scaled_projectors(K, k, 0, true);
    pN[k] = scaled_projectors(K, k, 0, false);
  }

  std::map<int, PairDecomp> out;
  for (std::size_t a = 0; a < mus.size(); ++a) {
    const long long dim_mu = mn_character(mus[a], id_n);
    for (std::size_t b = 0; b < nus.size(); ++b) {
      const long long dim_nu = mn_character(nus[b], id_N);
      const long long block = dim_mu * dim_nu;
      // Column bases of the (mu,nu)-isotypic component of each term.
      std::vector<MatZ> bases(n + 1);
      for (int k = 0; k <= n; ++k) {
        const MatZ prod = multiply(pn[k][a], pN[k][b]);
        bases[k] = select_columns(prod, pivot_columns(prod));
      }
      for (int k = 0; k <= n; ++k) {
        const long long comp = static_cast<long long>(bases[k].cols());
        long long cut = 0;
        if (k >= 1) cut += static_cast<long long>(rank(multiply(K.d[k], bases[k])));
        if (k < n)
          cut += static_cast<long long>(rank(multiply(K.d[k + 1], bases[k + 1])));
        const long long num = comp - cut;
        if (num % block != 0)
          fail_validation("InternalError: isotypic dimension not divisible");
        if (num != 0) out[-k][{mus[a], nus[b]}] = num / block;
      }
    }
  }
  return out;
}

DerivedGamma derived_gamma(const Partition& mu, int N) {
  if (N < 0) fail_validation("BadN: negative N");
  if (N >= mu.size() + mu.first_part()) return {0, pad(mu, N)};
  for (const Row1Hook& h : row1_hooks(mu))
    if (h.target_size == N) return {h.height, h.remainder};
  return {0, std::nullopt};
}

long long a_count(const Partition& mu, const Partition& tau, int k) {
  const Partition muT = transpose(mu);
  long long count = 0;
  for (const Partition& lambda : partitions_of(k))
    if (contains(lambda, tau) && contains(muT, lambda) &&
        is_vertical_strip(lambda, muT) && is_horizontal_strip(tau, lambda))
      ++count;
  return count;
}

bool euler_identity_check(const Partition& mu) {
  const Partition muT = transpose(mu);
  const int n = mu.size();
  for (const Partition& tau : subpartitions(muT)) {
    long long sum = 0;
    for (int k = tau.size(); k <= n; ++k) {
      const long long a = a_count(mu, tau, k);
      sum += (k % 2 == 0) ? a : -a;
    }
    long long expected = 0;
    if (tau == muT) expected = (n % 2 == 0) ? 1 : -1;
    if (sum != expected) return false;
  }
  return true;
}

}  // namespace dk
