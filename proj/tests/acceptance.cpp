// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Each criterion is an oracle-equivalence or invariant check at a
// scale chosen to run inside the ctest timeout.

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "dk/blocks.hpp"
#include "dk/characters.hpp"
#include "dk/delta_complex.hpp"
#include "dk/diagram.hpp"
#include "dk/grothendieck.hpp"
#include "dk/matrix.hpp"
#include "dk/numeric.hpp"
#include "dk/partition.hpp"
#include "dk/poly.hpp"

using namespace dk;

namespace {

bool all_ok = true;

void report(int num, const char* name, bool ok) {
  std::printf("criterion %d (%s): %s\n", num, name, ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  if (!ok) all_ok = false;
}

std::vector<Partition> parts_up_to(int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= n; ++s)
    for (const auto& p : partitions_of(s)) out.push_back(p);
  return out;
}

long long sgn_of_class(const Partition& rho) {
  return (rho.size() - rho.rows()) % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// 1. Character engine: orthogonality and the regular representation, n <= 8.
bool criterion1() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    const Int nf = factorial(n);
    std::map<Partition, std::map<Partition, long long>> chi;
    for (const auto& lambda : ps)
      for (const auto& rho : ps)
        chi[lambda][rho] = mn_character(lambda, rho);
    // row orthogonality
    for (const auto& lambda : ps)
      for (const auto& mu : ps) {
        Int s = 0;
        for (const auto& rho : ps)
          s += class_size(rho) * chi[lambda][rho] * chi[mu][rho];
        ok = ok && (s == (lambda == mu ? nf : Int(0)));
      }
    // column orthogonality
    for (const auto& rho : ps)
      for (const auto& sigma : ps) {
        Int s = 0;
        for (const auto& lambda : ps)
          s += Int(chi[lambda][rho]) * chi[lambda][sigma];
        ok = ok && (s == (rho == sigma ? nf / class_size(rho) : Int(0)));
      }
    // regular representation: multiplicity equals dimension
    ClassFunction reg{n, {}};
    reg.values[Partition(std::vector<int>(n, 1))] = Rat(nf);
    const auto vr = decompose(reg);
    const Partition ones(std::vector<int>(n, 1));
    for (const auto& lambda : ps) {
      const auto it = vr.mult.find(lambda);
      const long long m = it == vr.mult.end() ? 0 : it->second;
      ok = ok && (m == chi[lambda][ones]);
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Kronecker coefficients: exhaustive symmetry and nonnegativity, n <= 6;
//    tensoring with the trivial representation is the identity.
bool criterion2() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions_of(n);
    const Partition triv({n});
    for (const auto& mu : ps)
      for (const auto& nu : ps)
        ok = ok && (kronecker(triv, mu, nu) == (mu == nu ? 1 : 0));
    for (const auto& lambda : ps)
      for (const auto& mu : ps)
        for (const auto& nu : ps) {
          const long long g = kronecker(lambda, mu, nu);
          ok = ok && g >= 0;
          ok = ok && g == kronecker(mu, lambda, nu);
          ok = ok && g == kronecker(lambda, nu, mu);
        }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Stability of padded Kronecker coefficients, all sizes <= 3: the
//    sequence plateaus and rkron returns the plateau value.
bool criterion3() {
  bool ok = true;
  const auto small = parts_up_to(3);
  for (const auto& lambda : small)
    for (const auto& mu : small)
      for (const auto& tau : small) {
        const int n0 =
            lambda.size() + mu.size() + tau.size() +
            std::max({lambda.first_part(), mu.first_part(), tau.first_part()});
        std::vector<long long> a;
        for (int n = n0; n <= n0 + 6; ++n)
          a.push_back(
              kronecker(pad(lambda, n), pad(mu, n), pad(tau, n)));
        const long long v = reduced_kronecker(lambda, mu, tau);
        // first run of three equal values, then constant to the end
        std::size_t i = 0;
        while (i + 2 < a.size() && !(a[i] == a[i + 1] && a[i] == a[i + 2]))
          ++i;
        ok = ok && (i + 2 < a.size());
        if (i + 2 < a.size()) {
          ok = ok && a[i] == v;
          for (std::size_t j = i; j < a.size(); ++j) ok = ok && a[j] == v;
        }
      }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Functoriality of integer evaluation: evaluating a composite of diagram
//    morphisms equals the product of the evaluations, 200 random pairs.
SetPartitionDiagram random_diagram(int r, int s, std::mt19937& rng) {
  std::vector<std::vector<int>> blocks;
  int classes = 0;
  for (int p = 0; p < r + s; ++p) {
    const int pick = std::uniform_int_distribution<int>(0, classes)(rng);
    if (pick == classes) {
      blocks.push_back({p});
      ++classes;
    } else {
      blocks[pick].push_back(p);
    }
  }
  return SetPartitionDiagram(r, s, std::move(blocks));
}

bool criterion4() {
  bool ok = true;
  std::mt19937 rng(987654);
  for (int done = 0; done < 200; ++done) {
    const int a = std::uniform_int_distribution<int>(0, 3)(rng);
    const int b = std::uniform_int_distribution<int>(0, 3)(rng);
    const int c = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto f = DiagramMorphism::single(random_diagram(a, b, rng)) +
                   DiagramMorphism::single(random_diagram(a, b, rng),
                                           PolyInt::t_power(1));
    const auto g = DiagramMorphism::single(random_diagram(b, c, rng)) -
                   DiagramMorphism::single(random_diagram(b, c, rng));
    for (int N : {2, 3, 4})
      ok = ok && (evaluate_at_N(compose(g, f), N) ==
                  multiply(evaluate_at_N(g, N), evaluate_at_N(f, N)));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. The x_R form a complete system of orthogonal idempotents over Z[t],
//    k <= 4.
bool criterion5() {
  bool ok = true;
  for (int k = 0; k <= 4; ++k) {
    const auto rels = all_relations(k);
    std::vector<DiagramMorphism> xs;
    for (const auto& rel : rels) xs.push_back(x_R(k, rel));
    DiagramMorphism total{k, k, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ok = ok && (compose(xs[i], xs[i]) == xs[i]);
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (i != j) ok = ok && compose(xs[i], xs[j]).terms.empty();
      total = total + xs[i];
    }
    ok = ok && (total == DiagramMorphism::identity(k));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Bimodule decompositions agree with character inner products, k <= 4,
//    n, N <= 7.
bool criterion6() {
  bool ok = true;
  for (int k = 0; k <= 4; ++k) {
    const auto pk = partitions_of(k);
    const Int kf = factorial(k);
    // injections bimodule
    for (int N = 0; N <= 7; ++N) {
      const auto pN = partitions_of(N);
      const Int Nf = factorial(N);
      PairDecomp expect;
      for (const auto& mu : pN)
        for (const auto& lambda : pk) {
          Int total = 0;
          for (const auto& rho : pk)
            for (const auto& sigma : pN)
              total += class_size(rho) * class_size(sigma) *
                       mn_character(lambda, rho) * mn_character(mu, sigma) *
                       delta_character(k, N, rho, sigma);
          const Rat m = Rat(total) / Rat(kf * Nf);
          if (boost::multiprecision::denominator(m) != 1) return false;
          const long long mi =
              boost::multiprecision::numerator(m).convert_to<long long>();
          if (mi != 0) expect[{mu, lambda}] = mi;
        }
      ok = ok && (decompose_delta(k, N) == expect);
    }
    // sign-twisted bimodule
    for (int n = 0; n <= 7; ++n) {
      const auto pn = partitions_of(n);
      const Int nf = factorial(n);
      PairDecomp expect;
      for (const auto& mu : pn)
        for (const auto& lambda : pk) {
          Int total = 0;
          for (const auto& rho : pk)
            for (const auto& tau : pn)
              total += class_size(rho) * class_size(tau) * sgn_of_class(rho) *
                       mn_character(lambda, rho) * mn_character(mu, tau) *
                       delta_character(k, n, rho, tau);
          const Rat m = Rat(total) / Rat(kf * nf);
          if (boost::multiprecision::denominator(m) != 1) return false;
          const long long mi =
              boost::multiprecision::numerator(m).convert_to<long long>();
          if (mi != 0) expect[{mu, lambda}] = mi;
        }
      ok = ok && (blacktriangle_decompose(k, n) == expect);
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Cohomology of the equivariant complex, n <= 3, N <= 6:
//    - the top degree always carries exactly the padded diagrams;
//    - for N >= 2n-1 (any N when n <= 1) the whole table matches the
//      hook-removal specialization degree by degree;
//    - inside the remaining window the tables match independently
//      cross-checked values;
//    - per-isotypic-pair Euler characteristics always balance;
//    - rank-only vanishing check at (n, N) = (4, 7).
bool criterion7() {
  bool ok = true;

  std::map<std::pair<int, int>, std::map<int, PairDecomp>> window;
  const Partition e{}, p1({1}), p2({2}), p11({1, 1}), p3({3}), p21({2, 1}),
      p111({1, 1, 1}), p22({2, 2}), p211({2, 1, 1}), p1111({1, 1, 1, 1});
  window[{2, 0}] = {{0, {{{p2, e}, 1}}}};
  window[{2, 1}] = {{-1, {{{p11, p1}, 1}}}};
  window[{2, 2}] = {{-1, {{{p11, p11}, 1}}}};
  window[{3, 0}] = {{0, {{{p3, e}, 1}}}};
  window[{3, 1}] = {{-1, {{{p21, p1}, 1}}}};
  window[{3, 2}] = {{-2, {{{p111, p2}, 1}}}};
  window[{3, 3}] = {{-2, {{{p111, p21}, 1}, {{p21, p111}, 1}}}};
  window[{3, 4}] = {{-2, {{{p111, p22}, 1}}}, {-3, {{{p3, p1111}, 1}}}};

  for (int n = 0; n <= 3; ++n)
    for (int N = 0; N <= 6; ++N) {
      const auto H = cohomology_bimodule(n, N);

      // top degree: one copy of transpose(mu) x pad(mu, N) for each mu of
      // size n with N >= n + mu_1
      PairDecomp top;
      for (const auto& mu : partitions_of(n))
        if (N >= n + mu.first_part()) top[{transpose(mu), pad(mu, N)}] = 1;
      const auto it_top = H.find(-n);
      const PairDecomp got_top = it_top == H.end() ? PairDecomp{} : it_top->second;
      ok = ok && (got_top == top);

      // full match with the hook-removal specialization in the clean range
      if (n <= 1 || N >= 2 * n - 1) {
        std::map<int, PairDecomp> expect;
        for (const auto& mu : partitions_of(n)) {
          const auto dg = derived_gamma(mu, N);
          if (dg.value)
            expect[-(n - dg.degree)][{transpose(mu), *dg.value}] += 1;
        }
        ok = ok && (H == expect);
      } else {
        ok = ok && (H == window[{n, N}]);
      }

      // Euler characteristic of each isotypic pair, computed from the
      // bimodule decompositions of the terms, matches the cohomology table
      std::map<std::pair<Partition, Partition>, long long> euler;
      for (int k = 0; k <= n; ++k) {
        const long long sign = k % 2 ? -1 : 1;
        const auto B = blacktriangle_decompose(k, n);
        const auto D = decompose_delta(k, N);
        for (const auto& [bp, bm] : B)
          for (const auto& [dp, dm] : D)
            if (bp.second == dp.second)
              euler[{bp.first, dp.first}] += sign * bm * dm;
      }
      std::map<std::pair<Partition, Partition>, long long> euler_h;
      for (const auto& [deg, dec] : H) {
        const long long sign = (-deg) % 2 ? -1 : 1;
        for (const auto& [pr, m] : dec) euler_h[pr] += sign * m;
      }
      for (auto it = euler.begin(); it != euler.end();)
        it = it->second == 0 ? euler.erase(it) : std::next(it);
      for (auto it = euler_h.begin(); it != euler_h.end();)
        it = it->second == 0 ? euler_h.erase(it) : std::next(it);
      ok = ok && (euler == euler_h);
    }

  // rank-only check one size up: at (4, 7) everything below the top degree
  // vanishes and the top degree has the predicted total dimension
  {
    const auto K = build_K(4, 7);
    std::vector<long long> betti(5);
    for (int k = 0; k <= 4; ++k) {
      long long b = static_cast<long long>(K.terms[k].dim());
      if (k >= 1) b -= static_cast<long long>(rank(K.d[k]));
      if (k < 4) b -= static_cast<long long>(rank(K.d[k + 1]));
      betti[k] = b;
    }
    long long top_dim = 0;
    for (const auto& mu : partitions_of(4))
      if (7 >= 4 + mu.first_part()) {
        long long dim_n = mn_character(
            transpose(mu), Partition(std::vector<int>(4, 1)));
        long long dim_N =
            mn_character(pad(mu, 7), Partition(std::vector<int>(7, 1)));
        top_dim += dim_n * dim_N;
      }
    ok = ok && betti[0] == 0 && betti[1] == 0 && betti[2] == 0 &&
         betti[3] == 0 && betti[4] == top_dim;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Alternating-sum identity for strip counts, |mu| <= 5.
bool criterion8() {
  bool ok = true;
  for (const auto& mu : parts_up_to(5)) ok = ok && euler_identity_check(mu);
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Block combinatorics vs the horizontal-strip rule: the standard
//    multiset of the summands indexed by b_set equals the strip multiset,
//    |lambda| <= 6, t <= 8.
bool criterion9() {
  bool ok = true;
  for (int t = 0; t <= 8; ++t)
    for (const auto& lambda : parts_up_to(6)) {
      KElement total{Basis::Standard, {}};
      for (const auto& tau : b_set(lambda, t))
        for (const auto& [p, m] : standard_components_X(tau, t).mult)
          total.add(p, m);
      KElement expect{Basis::Standard, {}};
      for (const auto& mu : horizontal_strip_subs(lambda)) expect.add(mu, 1);
      ok = ok && (total == expect);
    }
  return ok;
}

// ---------------------------------------------------------------------------
// 10. Structure constants: tensor expansions agree with honest character
//     computations at t = 16 for all |lambda|, |mu| <= 3, and the
//     standard/simple basis changes are mutually inverse.
bool criterion10() {
  bool ok = true;
  const auto small = parts_up_to(3);
  for (const auto& lambda : small)
    for (const auto& mu : small)
      ok = ok && consistency_large_t(lambda, mu, 16).empty();
  for (int t = 0; t <= 8; ++t)
    for (const auto& lambda : parts_up_to(6)) {
      KElement round{Basis::Simple, {}};
      for (const auto& [nu, m] : simple_in_standards(lambda, t).mult)
        for (const auto& [p, c] : standard_in_simples(nu, t).mult)
          round.add(p, m * c);
      ok = ok && (round == KElement{Basis::Simple, {{lambda, 1}}});
      KElement back{Basis::Standard, {}};
      for (const auto& [nu, m] : standard_in_simples(lambda, t).mult)
        for (const auto& [p, c] : simple_in_standards(nu, t).mult)
          back.add(p, m * c);
      ok = ok && (back == KElement{Basis::Standard, {{lambda, 1}}});
    }
  return ok;
}

}  // namespace

int main() {
  report(1, "character table orthogonality and regular representation",
         criterion1());
  report(2, "Kronecker symmetry, nonnegativity, trivial factor", criterion2());
  report(3, "padded Kronecker stabilization", criterion3());
  report(4, "diagram evaluation functoriality", criterion4());
  report(5, "complete orthogonal idempotent system", criterion5());
  report(6, "bimodule decompositions vs character theory", criterion6());
  report(7, "equivariant complex cohomology", criterion7());
  report(8, "strip-count Euler identity", criterion8());
  report(9, "block sequences vs horizontal-strip rule", criterion9());
  report(10, "tensor structure constants and basis changes", criterion10());
  return all_ok ? 0 : 1;
}
