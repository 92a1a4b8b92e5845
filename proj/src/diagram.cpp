#include "dk/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dk/error.hpp"

namespace dk {

SetPartitionDiagram::SetPartitionDiagram(int r, int s,
                                         std::vector<std::vector<int>> blocks)
    : r_(r), s_(s), blocks_(std::move(blocks)) {
  if (r < 0 || s < 0) fail_validation("BadArity: negative point count");
  std::vector<char> seen(r + s, 0);
  for (auto& b : blocks_) {
    if (b.empty()) fail_validation("BadDiagram: empty block");
    std::sort(b.begin(), b.end());
    for (int p : b) {
      if (p < 0 || p >= r + s) fail_validation("BadDiagram: point out of range");
      if (seen[p]) fail_validation("BadDiagram: repeated point");
      seen[p] = 1;
    }
  }
  for (char c : seen)
    if (!c) fail_validation("BadDiagram: uncovered point");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
}

SetPartitionDiagram SetPartitionDiagram::identity(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return SetPartitionDiagram(n, n, std::move(blocks));
}

std::string SetPartitionDiagram::to_string() const {
  std::string out = "[";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += ",";
    out += "[";
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ",";
      const int p = blocks_[b][i];
      out += is_bottom(p) ? std::to_string(p + 1)
                          : std::to_string(p - r_ + 1) + "'";
    }
    out += "]";
  }
  return out + "]";
}

SetPartitionDiagram SetPartitionDiagram::parse(int r, int s,
                                               const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      fail_validation("BadDiagramSyntax: expected '" + std::string(1, c) +
                      "' in \"" + text + "\"");
    ++i;
  };
  expect('[');
  skip_ws();
  while (i < text.size() && text[i] != ']') {
    expect('[');
    std::vector<int> block;
    skip_ws();
    while (i < text.size() && text[i] != ']') {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i) fail_validation("BadDiagramSyntax: expected point number");
      int v = std::stoi(text.substr(i, j - i));
      i = j;
      if (i < text.size() && text[i] == '\'') {
        ++i;
        if (v < 1 || v > s) fail_validation("BadDiagram: top point out of range");
        block.push_back(r + v - 1);
      } else {
        if (v < 1 || v > r)
          fail_validation("BadDiagram: bottom point out of range");
        block.push_back(v - 1);
      }
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    expect(']');
    blocks.push_back(std::move(block));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  expect(']');
  return SetPartitionDiagram(r, s, std::move(blocks));
}

bool is_partial_pairing(const SetPartitionDiagram& d) {
  for (const auto& b : d.blocks()) {
    int bottom = 0, top = 0;
    for (int p : b) (d.is_bottom(p) ? bottom : top)++;
    if (bottom > 1 || top > 1) return false;
  }
  return true;
}

DiagramMorphism DiagramMorphism::single(SetPartitionDiagram d, PolyInt coeff) {
  DiagramMorphism m;
  m.r = d.r();
  m.s = d.s();
  if (!coeff.is_zero()) m.terms.emplace(std::move(d), std::move(coeff));
  return m;
}

DiagramMorphism DiagramMorphism::identity(int n) {
  return single(SetPartitionDiagram::identity(n));
}

DiagramMorphism DiagramMorphism::operator+(const DiagramMorphism& o) const {
  if (r != o.r || s != o.s)
    fail_validation("ArityMismatch: cannot add morphisms of different arities");
  DiagramMorphism out = *this;
  for (const auto& [d, c] : o.terms) {
    PolyInt v = out.terms[d] + c;
    if (v.is_zero())
      out.terms.erase(d);
    else
      out.terms[d] = std::move(v);
  }
  return out;
}

DiagramMorphism DiagramMorphism::operator-(const DiagramMorphism& o) const {
  DiagramMorphism neg = o;
  for (auto& [d, c] : neg.terms) c = -c;
  return *this + neg;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Single-diagram composition g∘f: join on [n] ⊔ [m] ⊔ [k], restrict to the
// outer rows, and count join blocks lying wholly in the middle.
std::pair<SetPartitionDiagram, int> compose_one(const SetPartitionDiagram& g,
                                                const SetPartitionDiagram& f) {
  const int n = f.r(), m = f.s(), k = g.s();
  UnionFind uf(n + m + k);
  for (const auto& b : f.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
  // g's points shift by n: its bottom row is the shared middle row.
  for (const auto& b : g.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(n + b[0], n + b[i]);

  std::map<int, std::vector<int>> classes;
  for (int p = 0; p < n + m + k; ++p) classes[uf.find(p)].push_back(p);

  int middle_only = 0;
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : classes) {
    std::vector<int> outer;
    for (int p : members)
      if (p < n)
        outer.push_back(p);
      else if (p >= n + m)
        outer.push_back(p - m);
    if (outer.empty())
      ++middle_only;
    else
      blocks.push_back(std::move(outer));
  }
  return {SetPartitionDiagram(n, k, std::move(blocks)), middle_only};
}

}  // namespace

DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f) {
  if (f.s != g.r)
    fail_validation("ArityMismatch: compose needs inner arities to match (" +
                    std::to_string(f.s) + " vs " + std::to_string(g.r) + ")");
  DiagramMorphism out;
  out.r = f.r;
  out.s = g.s;
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) {
      auto [d, middle] = compose_one(dg, df);
      PolyInt v = out.terms[d] + cf * cg * PolyInt::t_power(middle);
      if (v.is_zero())
        out.terms.erase(d);
      else
        out.terms[d] = std::move(v);
    }
  return out;
}

namespace {

void pairings_recurse(int r, int s, int i, std::vector<int>& match,
                      std::vector<char>& top_used,
                      std::vector<SetPartitionDiagram>& out) {
  if (i == r) {
    std::vector<std::vector<int>> blocks;
    std::vector<char> top_in_pair(s, 0);
    for (int b = 0; b < r; ++b) {
      if (match[b] >= 0) {
        blocks.push_back({b, r + match[b]});
        top_in_pair[match[b]] = 1;
      } else {
        blocks.push_back({b});
      }
    }
    for (int t = 0; t < s; ++t)
      if (!top_in_pair[t]) blocks.push_back({r + t});
    out.emplace_back(r, s, std::move(blocks));
    return;
  }
  match[i] = -1;
  pairings_recurse(r, s, i + 1, match, top_used, out);
  for (int t = 0; t < s; ++t) {
    if (top_used[t]) continue;
    match[i] = t;
    top_used[t] = 1;
    pairings_recurse(r, s, i + 1, match, top_used, out);
    top_used[t] = 0;
  }
  match[i] = -1;
}

}  // namespace

std::vector<SetPartitionDiagram> partial_pairings(int r, int s, int cap) {
  if (r < 0 || s < 0) fail_validation("BadArity: negative point count");
  if (r > cap || s > cap)
    fail_cap("PairingCapExceeded: r, s must be <= " + std::to_string(cap));
  std::vector<SetPartitionDiagram> out;
  std::vector<int> match(r, -1);
  std::vector<char> top_used(s, 0);
  pairings_recurse(r, s, 0, match, top_used, out);
  return out;
}

SetPartitionDiagram res_diagram(int k, int l) {
  if (l < 1 || l > k)
    fail_validation("IndexOutOfRange: res index must satisfy 1 <= l <= k");
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i < l; ++i) blocks.push_back({i - 1, k + i - 1});
  blocks.push_back({l - 1});
  for (int i = l + 1; i <= k; ++i) blocks.push_back({i - 1, k + i - 2});
  return SetPartitionDiagram(k, k - 1, std::move(blocks));
}

std::vector<Relation> all_relations(int k) {
  std::vector<Relation> out;
  std::vector<int> label(std::max(k, 1));
  // Restricted growth strings: label[0]=0, label[i] <= 1 + max of prefix.
  auto emit = [&] {
    int classes = 0;
    for (int i = 0; i < k; ++i) classes = std::max(classes, label[i] + 1);
    Relation rel(classes);
    for (int i = 0; i < k; ++i) rel[label[i]].push_back(i);
    out.push_back(std::move(rel));
  };
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> maxes(k);
  int i = 0;
  label[0] = 0;
  maxes[0] = 0;
  while (true) {
    if (i == k - 1) {
      emit();
      while (i > 0 && label[i] == maxes[i - 1] + 1) --i;
      if (i == 0) break;
      ++label[i];
      maxes[i] = std::max(maxes[i - 1], label[i]);
    } else {
      ++i;
      label[i] = 0;
      maxes[i] = maxes[i - 1];
    }
  }
  return out;
}

bool is_coarser(const Relation& coarse, const Relation& fine) {
  std::map<int, int> where;
  for (std::size_t b = 0; b < coarse.size(); ++b)
    for (int p : coarse[b]) where[p] = static_cast<int>(b);
  for (const auto& block : fine) {
    for (int p : block)
      if (where.find(p) == where.end()) return false;
    for (std::size_t i = 1; i < block.size(); ++i)
      if (where[block[i]] != where[block[0]]) return false;
  }
  return true;
}

namespace {

Relation canonical_relation(int k, Relation rel) {
  std::vector<char> seen(k, 0);
  for (auto& b : rel) {
    if (b.empty()) fail_validation("BadRelation: empty class");
    std::sort(b.begin(), b.end());
    for (int p : b) {
      if (p < 0 || p >= k) fail_validation("BadRelation: point out of range");
      if (seen[p]) fail_validation("BadRelation: repeated point");
      seen[p] = 1;
    }
  }
  for (char c : seen)
    if (!c) fail_validation("BadRelation: uncovered point");
  std::sort(rel.begin(), rel.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return rel;
}

}  // namespace

SetPartitionDiagram pi_R(int k, const Relation& rel) {
  Relation canon = canonical_relation(k, rel);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : canon) {
    std::vector<int> block = b;
    for (int p : b) block.push_back(k + p);
    blocks.push_back(std::move(block));
  }
  return SetPartitionDiagram(k, k, std::move(blocks));
}

DiagramMorphism x_R(int k, const Relation& rel, int cap) {
  if (k > cap)
    fail_cap("BellCapExceeded: x_R limited to k <= " + std::to_string(cap));
  Relation target = canonical_relation(k, rel);
  std::vector<Relation> rels = all_relations(k);
  // Coarser relations have fewer classes, so computing in order of
  // ascending class count resolves every dependency of the recursion.
  std::sort(rels.begin(), rels.end(), [](const Relation& a, const Relation& b) {
    return a.size() < b.size();
  });
  std::map<Relation, DiagramMorphism> memo;
  for (const auto& r : rels) {
    DiagramMorphism x = DiagramMorphism::single(pi_R(k, r));
    for (const auto& [rp, xp] : memo)
      if (rp != r && is_coarser(rp, r)) x = x - xp;
    memo.emplace(r, std::move(x));
  }
  auto it = memo.find(target);
  if (it == memo.end()) fail_validation("BadRelation: not a relation on [k]");
  return it->second;
}

MatZ evaluate_at_N(const DiagramMorphism& d, int N) {
  if (N < 0) fail_validation("BadN: negative N");
  long long rows = 1, cols = 1;
  for (int i = 0; i < d.s; ++i) {
    rows *= N;
    if (rows > 1000000) fail_cap("EvalCapExceeded: matrix too large");
  }
  for (int i = 0; i < d.r; ++i) {
    cols *= N;
    if (cols > 1000000) fail_cap("EvalCapExceeded: matrix too large");
  }
  if (rows * cols > 1000000)
    fail_cap("EvalCapExceeded: matrix would have more than 10^6 entries");

  MatZ out(rows, cols);
  std::vector<int> fv(d.r), gv(d.s);
  for (const auto& [diag, coeff] : d.terms) {
    const Int value = coeff.eval(N);
    if (value == 0) continue;
    for (long long col = 0; col < cols; ++col) {
      long long c = col;
      for (int i = 0; i < d.r; ++i) {
        fv[i] = static_cast<int>(c % N);
        c /= N;
      }
      for (long long row = 0; row < rows; ++row) {
        long long rr = row;
        for (int i = 0; i < d.s; ++i) {
          gv[i] = static_cast<int>(rr % N);
          rr /= N;
        }
        bool ok = true;
        for (const auto& block : diag.blocks()) {
          int color = -1;
          for (int p : block) {
            const int v = diag.is_bottom(p) ? fv[p] : gv[p - d.r];
            if (color == -1)
              color = v;
            else if (color != v) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (ok) out.at(row, col) += value;
      }
    }
  }
  return out;
}

}  // namespace dk
