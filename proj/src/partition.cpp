#include "dk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dk/error.hpp"

namespace dk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail_validation("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      fail_validation("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(text[i])) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    fail_validation("partition must start with '[': " + text);
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(text[i])) ++i;
      if (start == i) fail_validation("expected integer in partition: " + text);
      parts.push_back(std::stoi(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ']') { ++i; break; }
      fail_validation("expected ',' or ']' in partition: " + text);
    }
  }
  skip_ws();
  if (i != text.size()) fail_validation("trailing characters after partition: " + text);
  return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
  std::vector<int> cols(p.first_part(), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 1; i <= inner.rows(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!contains(outer, inner)) return false;
  for (int i = 1; i <= outer.rows(); ++i)
    if (inner.part(i) < outer.part(i + 1)) return false;
  return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
  return is_horizontal_strip(transpose(inner), transpose(outer));
}

Partition pad(const Partition& p, int n) {
  if (n < p.size() + p.first_part())
    throw Error(ErrorKind::Validation,
                "PadTooSmall: need n >= " + std::to_string(p.size() + p.first_part()) +
                    " to pad " + p.to_string() + ", got " + std::to_string(n));
  std::vector<int> parts;
  parts.reserve(p.rows() + 1);
  parts.push_back(n - p.size());
  parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  return Partition(std::move(parts));
}

namespace {
void enum_partitions(int n, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    enum_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int cap) {
  if (n < 0) fail_validation("partitions_of: negative n");
  if (n > cap)
    fail_cap("partitions_of: n = " + std::to_string(n) + " exceeds cap " +
             std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> acc;
  enum_partitions(n, n, acc, out);
  return out;
}

std::vector<Row1Hook> row1_hooks(const Partition& mu) {
  std::vector<Row1Hook> out;
  const Partition muT = transpose(mu);
  for (int j = 1; j <= mu.first_part(); ++j) {
    const int m = muT.part(j);
    const int n_target = mu.size() - mu.first_part() - m + j;
    // Remainder of removing the border strip with vertex (1, j):
    // rows 1..m-1 become mu_2-1, ..., mu_m-1, row m becomes j-1,
    // rows below m unchanged.
    std::vector<int> rem;
    for (int r = 2; r <= m; ++r) rem.push_back(mu.part(r) - 1);
    rem.push_back(j - 1);
    for (int r = m + 1; r <= mu.rows(); ++r) rem.push_back(mu.part(r));
    out.push_back(Row1Hook{j, n_target, m, Partition(std::move(rem))});
  }
  std::sort(out.begin(), out.end(),
            [](const Row1Hook& a, const Row1Hook& b) {
              return a.target_size < b.target_size;
            });
  return out;
}

std::vector<Partition> horizontal_strip_subs(const Partition& outer) {
  // inner rows satisfy outer_{i+1} <= inner_i <= outer_i independently.
  std::vector<Partition> out;
  std::vector<int> acc(outer.rows());
  auto rec = [&](auto&& self, int row) -> void {
    if (row > outer.rows()) {
      out.push_back(Partition(std::vector<int>(acc.begin(), acc.begin() + outer.rows())));
      return;
    }
    for (int v = outer.part(row); v >= outer.part(row + 1); --v) {
      acc[row - 1] = v;
      self(self, row + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Partition> horizontal_strip_sups(const Partition& inner, int d) {
  // outer_1 >= inner_1 >= outer_2 >= inner_2 >= ..., with d extra cells.
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (row == inner.rows() + 1) {
      // last possible row, bounded above by inner's last part
      const int bound = (row == 1) ? left : inner.part(row - 1);
      if (left <= bound) {
        if (left > 0) acc.push_back(left);
        out.push_back(Partition(acc));
        if (left > 0) acc.pop_back();
      }
      return;
    }
    const int lo = inner.part(row);
    const int hi = std::min(inner.part(row) + left,
                            row == 1 ? inner.part(row) + left : inner.part(row - 1));
    for (int v = lo; v <= hi; ++v) {
      acc.push_back(v);
      self(self, row + 1, left - (v - lo));
      acc.pop_back();
    }
  };
  rec(rec, 1, d);
  return out;
}

}  // namespace dk
