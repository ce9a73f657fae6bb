#pragma once

// Simply laced Dynkin types, their Cartan matrices, plumbing intersection forms
// and exact signatures of symmetric integer forms.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "duval/errors.hpp"
#include "duval/rational.hpp"

namespace duval {

enum class AdeKind { A, D, E };

inline char kind_letter(AdeKind k) {
  switch (k) {
    case AdeKind::A: return 'A';
    case AdeKind::D: return 'D';
    case AdeKind::E: return 'E';
  }
  return '?';
}

/// A_n (n >= 1), D_n (n >= 4) or E_n (n = 6, 7, 8). The rank is the number of
/// irreducible curves in the exceptional configuration of the singularity.
class AdeType {
 public:
  static constexpr int kMaxRank = 64;

  AdeType(AdeKind kind, int rank) : kind_(kind), rank_(rank) {
    bool ok = false;
    switch (kind) {
      case AdeKind::A: ok = rank >= 1; break;
      case AdeKind::D: ok = rank >= 4; break;
      case AdeKind::E: ok = rank >= 6 && rank <= 8; break;
    }
    if (!ok || rank > kMaxRank)
      throw InvalidType(std::string("no Dynkin type ") + kind_letter(kind) + "_" + std::to_string(rank));
  }

  static AdeType A(int n) { return {AdeKind::A, n}; }
  static AdeType D(int n) { return {AdeKind::D, n}; }
  static AdeType E(int n) { return {AdeKind::E, n}; }

  AdeKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  int components() const noexcept { return rank_; }

  std::string name() const { return std::string(1, kind_letter(kind_)) + "_" + std::to_string(rank_); }

  friend auto operator<=>(const AdeType&, const AdeType&) = default;

 private:
  AdeKind kind_;
  int rank_;
};

/// Plumbing graph: vertices 0..n-1, undirected simple edges, one Euler number per vertex.
class DynkinGraph {
 public:
  using Edge = std::pair<int, int>;

  DynkinGraph(int vertices, std::vector<Edge> edges, std::vector<std::int64_t> euler_weights)
      : n_(vertices), edges_(std::move(edges)), weights_(std::move(euler_weights)) {
    if (n_ < 0) throw InvalidType("negative vertex count");
    if (static_cast<int>(weights_.size()) != n_) throw InvalidType("one Euler weight per vertex required");
    for (auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidType("edge endpoint out of range");
      if (u == v) throw InvalidType("self-loop in plumbing graph");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw InvalidType("multi-edge in plumbing graph");
  }

  DynkinGraph(int vertices, std::vector<Edge> edges)
      : DynkinGraph(vertices, std::move(edges), std::vector<std::int64_t>(static_cast<std::size_t>(std::max(vertices, 0)), -2)) {}

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::int64_t>& euler_weights() const noexcept { return weights_; }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  /// Connected and acyclic. The empty graph is not a tree.
  bool is_tree() const {
    if (n_ == 0 || static_cast<int>(edges_.size()) != n_ - 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [u, v] : edges_) {
      const int ru = find(u), rv = find(v);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
    return true;  // n-1 edges and no cycle
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> weights_;
};

/// Standard Dynkin tree of `t`. A_n is a path; D_n and E_n are a path of n-1
/// vertices with one extra vertex hung off vertex n-3 (D) or vertex 2 (E).
inline DynkinGraph dynkin_graph(const AdeType& t, std::int64_t euler_weight = -2) {
  const int n = t.rank();
  std::vector<DynkinGraph::Edge> edges;
  const int path = t.kind() == AdeKind::A ? n : n - 1;
  for (int i = 0; i + 1 < path; ++i) edges.emplace_back(i, i + 1);
  if (t.kind() == AdeKind::D) edges.emplace_back(n - 3, n - 1);
  if (t.kind() == AdeKind::E) edges.emplace_back(2, n - 1);
  return DynkinGraph(n, std::move(edges), std::vector<std::int64_t>(static_cast<std::size_t>(n), euler_weight));
}

/// Symmetric integer matrix, row-major.
class SymIntForm {
 public:
  SymIntForm() = default;

  explicit SymIntForm(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

  SymIntForm(std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : SymIntForm(std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end())) {}

  explicit SymIntForm(const std::vector<std::vector<std::int64_t>>& rows) : SymIntForm(rows.size()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rows[i].size() != dim_) throw InvalidType("form must be square");
      for (std::size_t j = 0; j < dim_; ++j) entries_[i * dim_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (at(i, j) != at(j, i)) throw InvalidType("form must be symmetric");
  }

  static SymIntForm diagonal(const std::vector<std::int64_t>& d) {
    SymIntForm q(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) q.entries_[i * q.dim_ + i] = d[i];
    return q;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    entries_[i * dim_ + j] = v;
    entries_[j * dim_ + i] = v;
  }

  SymIntForm negated() const {
    SymIntForm q = *this;
    for (auto& e : q.entries_) e = -e;
    return q;
  }

  /// Block sum q (+) other.
  SymIntForm direct_sum(const SymIntForm& other) const {
    SymIntForm q(dim_ + other.dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) q.entries_[i * q.dim_ + j] = at(i, j);
    for (std::size_t i = 0; i < other.dim_; ++i)
      for (std::size_t j = 0; j < other.dim_; ++j)
        q.entries_[(dim_ + i) * q.dim_ + dim_ + j] = other.at(i, j);
    return q;
  }

  friend bool operator==(const SymIntForm&, const SymIntForm&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

struct FormSignature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  std::int64_t sigma() const noexcept {
    return static_cast<std::int64_t>(positives) - static_cast<std::int64_t>(negatives);
  }
  std::size_t dim() const noexcept { return positives + negatives + zeros; }

  friend bool operator==(const FormSignature&, const FormSignature&) = default;
};

inline SymIntForm cartan_matrix(const AdeType& t) {
  const DynkinGraph g = dynkin_graph(t);
  SymIntForm q(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) q.set(i, i, 2);
  for (const auto& [u, v] : g.edges()) q.set(u, v, -1);
  return q;
}

/// Intersection form of the plumbed 4-manifold: Euler numbers on the diagonal,
/// +1 for each pair of plumbed disc bundles.
inline SymIntForm plumbing_form(const DynkinGraph& g) {
  SymIntForm q(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) q.set(i, i, g.euler_weights()[i]);
  for (const auto& [u, v] : g.edges()) q.set(u, v, 1);
  return q;
}

/// Inertia of `q` by congruence diagonalization over the rationals.
inline FormSignature form_signature(const SymIntForm& q) {
  const std::size_t n = q.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = q.at(i, j);

  FormSignature s;
  // `rest` holds the indices of the block not yet split off.
  std::vector<std::size_t> rest(n);
  std::iota(rest.begin(), rest.end(), std::size_t{0});

  while (!rest.empty()) {
    auto pivot = std::find_if(rest.begin(), rest.end(), [&](std::size_t i) { return m[i][i] != 0; });
    if (pivot != rest.end()) {
      const std::size_t k = *pivot;
      rest.erase(pivot);
      const Rational d = m[k][k];
      (d > 0 ? s.positives : s.negatives)++;
      for (std::size_t i : rest) {
        if (m[i][k] == 0) continue;
        const Rational f = m[i][k] / d;
        for (std::size_t j : rest) m[i][j] -= f * m[k][j];
      }
      continue;
    }

    // Zero diagonal: split off a hyperbolic plane if any off-diagonal entry survives.
    std::size_t a = n, b = n;
    for (std::size_t x = 0; x < rest.size() && a == n; ++x)
      for (std::size_t y = x + 1; y < rest.size(); ++y)
        if (m[rest[x]][rest[y]] != 0) {
          a = rest[x];
          b = rest[y];
          break;
        }
    if (a == n) {
      s.zeros += rest.size();
      break;
    }
    const Rational e = m[a][b];
    std::erase(rest, a);
    std::erase(rest, b);
    s.positives++;
    s.negatives++;
    // Schur complement against [[0, e], [e, 0]].
    std::vector<std::vector<Rational>> upd(rest.size(), std::vector<Rational>(rest.size()));
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y) {
        const std::size_t r = rest[x], c = rest[y];
        upd[x][y] = m[r][c] - (m[r][a] * m[b][c] + m[r][b] * m[a][c]) / e;
      }
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y) m[rest[x]][rest[y]] = upd[x][y];
  }
  return s;
}

inline bool is_negative_definite(const SymIntForm& q) {
  const FormSignature s = form_signature(q);
  return s.negatives == q.dim();
}

}  // namespace duval
