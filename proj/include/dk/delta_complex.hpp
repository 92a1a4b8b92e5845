#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dk/characters.hpp"
#include "dk/matrix.hpp"
#include "dk/partition.hpp"

namespace dk {

/// Multiplicity table over pairs of partitions (first ⊢ one size, second
/// ⊢ another); used for bimodule decompositions.
using PairDecomp = std::map<std::pair<Partition, Partition>, long long>;

/// One term of the K-complex: the space spanned by sign-twisted orbit
/// vectors v_(f,g) = sum over sigma in S_k of sgn(sigma) (f∘sigma, g∘sigma),
/// where f: [k] ↪ [n], g: [k] ↪ [N]. Basis labels are the lexicographically
/// minimal representatives; orbit_of maps any concatenated pair (f|g) to
/// its basis index and the sign relating it to the representative.
struct ComplexTerm {
  int k = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> basis;
  std::map<std::vector<int>, std::pair<int, int>> orbit_of;

  std::size_t dim() const { return basis.size(); }
};

/// The complex K_{n,N}: terms k = 0..n sitting in degree -k, with
/// differential d[k]: term k -> term k-1 given by
/// sum_{i=1..k} (-1)^i res^i ⊗ res^i, and commuting S_n x S_N actions.
struct EquivariantComplex {
  int n = 0, N = 0;
  std::vector<ComplexTerm> terms;  // indexed by k
  std::vector<MatZ> d;             // d[k] for k >= 1; d[0] unused
};

/// Number of injections [k] ↪ [N] fixed by (rho, sigma) acting via
/// f -> sigma ∘ f ∘ rho^{-1}; a cycle of rho of length c must map onto a
/// sigma-cycle of the same length (c rotations each, distinct targets).
long long delta_character(int k, int N, const Partition& rho,
                          const Partition& sigma);

/// Decomposition of C Inj([k],[N]) as an S_N x S_k bimodule: multiplicity
/// one on pairs (mu ⊢ N, lambda ⊢ k) with lambda ⊆ mu and mu/lambda a
/// horizontal strip.
PairDecomp decompose_delta(int k, int N);

/// Decomposition of the sign-twisted module: multiplicity one on pairs
/// (mu ⊢ n, lambda ⊢ k) with lambda ⊆ mu^T and mu^T/lambda a vertical strip.
PairDecomp blacktriangle_decompose(int k, int n);

/// Build the full complex with its orbit bases and differentials.
EquivariantComplex build_K(int n, int N, int n_cap = 4, int N_cap = 7);

/// Matrix of a permutation acting on term k. When on_first is true, w is a
/// permutation of {0..n-1} acting on the injections f; otherwise w permutes
/// {0..N-1} and acts on g.
MatZ action_on_term(const EquivariantComplex& K, int k,
                    const std::vector<int>& w, bool on_first);

/// Cycle type of a permutation given in one-line notation on {0..m-1}.
Partition cycle_type(const std::vector<int>& w);

/// A canonical permutation of {0..|rho|-1} with the given cycle type.
std::vector<int> permutation_of_type(const Partition& rho);

/// Full cohomology table: degree -k maps to the multiplicities of
/// (mu ⊢ n) ⊗ (nu ⊢ N) in H^{-k}, computed by exact isotypic projection
/// and fraction-free rank computations.
std::map<int, PairDecomp> cohomology_bimodule(int n, int N, int n_cap = 4,
                                              int N_cap = 7);

/// Derived specialization on the simple labelled mu: degree and value, or
/// zero (value absent). Stable range N >= |mu| + mu_1 gives degree 0 and
/// the padded diagram; otherwise a row-1 hook with remainder of size N
/// gives degree = hook height; otherwise zero.
struct DerivedGamma {
  int degree = 0;
  std::optional<Partition> value;
};
DerivedGamma derived_gamma(const Partition& mu, int N);

/// #{lambda ⊢ k : tau ⊆ lambda ⊆ mu^T, mu^T/lambda a vertical strip,
/// lambda/tau a horizontal strip}.
long long a_count(const Partition& mu, const Partition& tau, int k);

/// Checks sum_k (-1)^k a_count(mu,tau,k) = (-1)^|mu| [tau = mu^T] for every
/// tau contained in mu^T.
bool euler_identity_check(const Partition& mu);

}  // namespace dk
