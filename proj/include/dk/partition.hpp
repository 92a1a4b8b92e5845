#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace dk {

/// A Young diagram: weakly decreasing positive parts, trailing zeros stripped.
/// The empty partition is the empty list. Immutable after construction.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i with 1-based row index; zero beyond the last row.
  int part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

  auto operator<=>(const Partition&) const = default;

  /// Bracket syntax used by the CLI and JSON payloads, e.g. "[3,1,1]".
  std::string to_string() const;
  static Partition parse(const std::string& text);

private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition transpose(const Partition& p);

/// True iff inner is contained in outer cell-wise.
bool contains(const Partition& outer, const Partition& inner);

/// outer/inner is a horizontal strip: inner ⊆ outer and
/// outer_i >= inner_i >= outer_{i+1} for all rows.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);
bool is_vertical_strip(const Partition& inner, const Partition& outer);

/// Prepend a top row so the result has n cells. Requires n >= |p| + p_1.
Partition pad(const Partition& p, int n);

/// All partitions of n in reverse-lexicographic order.
/// Guarded by a cap (default 40) against accidental explosions.
std::vector<Partition> partitions_of(int n, int cap = 40);

/// Hooks of mu whose vertex lies in row 1, one per column j = 1..mu_1.
struct Row1Hook {
  int vertex_col;        // j
  int target_size;       // N = |mu| - mu_1 - mu^T_j + j
  int height;            // mu^T_j
  Partition remainder;   // mu with the hook removed, |remainder| = N
};
std::vector<Row1Hook> row1_hooks(const Partition& mu);

/// All inner with outer/inner a horizontal strip (any size).
std::vector<Partition> horizontal_strip_subs(const Partition& outer);

/// All outer with |outer| = |inner| + d and outer/inner a horizontal strip.
std::vector<Partition> horizontal_strip_sups(const Partition& inner, int d);

}  // namespace dk
