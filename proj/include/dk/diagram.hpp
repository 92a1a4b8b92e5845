#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dk/matrix.hpp"
#include "dk/poly.hpp"

namespace dk {

/// A set partition of [r] ⊔ [s]': bottom points 1..r, top points 1'..s'.
/// Internally points are 0-based with bottom 0..r-1 and top r..r+s-1; the
/// total order is 1 < ... < r < 1' < ... < s'. Canonical form: each block
/// sorted ascending, blocks sorted by minimal element.
class SetPartitionDiagram {
public:
  SetPartitionDiagram() = default;
  SetPartitionDiagram(int r, int s, std::vector<std::vector<int>> blocks);

  int r() const { return r_; }
  int s() const { return s_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  bool is_bottom(int p) const { return p < r_; }

  auto operator<=>(const SetPartitionDiagram&) const = default;

  static SetPartitionDiagram identity(int n);

  /// Bracketed block syntax with primes for top points: "[[1,1'],[2],[2']]".
  std::string to_string() const;
  static SetPartitionDiagram parse(int r, int s, const std::string& text);

private:
  int r_ = 0, s_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Every block meets the bottom row at most once and the top row at most once.
bool is_partial_pairing(const SetPartitionDiagram& d);

/// A Z[t]-linear combination of diagrams with common arities.
struct DiagramMorphism {
  int r = 0, s = 0;
  std::map<SetPartitionDiagram, PolyInt> terms;

  static DiagramMorphism single(SetPartitionDiagram d, PolyInt coeff = 1);
  static DiagramMorphism identity(int n);

  DiagramMorphism operator+(const DiagramMorphism& o) const;
  DiagramMorphism operator-(const DiagramMorphism& o) const;
  bool operator==(const DiagramMorphism&) const = default;
};

/// Composition g∘f for f: [n]→[m], g: [m]→[k]. Diagrams are stacked, the
/// join equivalence on [n]⊔[m]⊔[k] restricted to [n]⊔[k], and each join
/// block lying entirely in the middle row contributes a factor of t.
DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f);

/// All partial pairings of [r], [s]; count is sum_l C(r,l) C(s,l) l!.
std::vector<SetPartitionDiagram> partial_pairings(int r, int s, int cap = 8);

/// The res^l diagram in Hom([k],[k-1]): blocks {i,i'} for i<l, {l},
/// {i,(i-1)'} for i>l.
SetPartitionDiagram res_diagram(int k, int l);

/// An equivalence relation on {0..k-1}, as canonical sorted blocks.
using Relation = std::vector<std::vector<int>>;

/// All equivalence relations of {0..k-1} (restricted-growth enumeration).
std::vector<Relation> all_relations(int k);

/// True iff coarse refines no block of fine: every block of fine lies
/// inside a single block of coarse.
bool is_coarser(const Relation& coarse, const Relation& fine);

/// The diagram in Hom([k],[k]) whose blocks are B ∪ B' over blocks B of R.
SetPartitionDiagram pi_R(int k, const Relation& rel);

/// The idempotent x_R = pi_R - sum over strictly coarser R' of x_{R'}.
DiagramMorphism x_R(int k, const Relation& rel, int cap = 7);

/// Matrix of the morphism on Fun([r],[N]) -> Fun([s],[N]) with t := N.
/// Entry (g,f) of a single diagram is 1 iff each block is monochromatic
/// under the coloring induced by f on bottom points and g on top points.
MatZ evaluate_at_N(const DiagramMorphism& d, int N);

}  // namespace dk
