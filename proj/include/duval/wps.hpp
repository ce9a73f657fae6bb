#pragma once

// Singularities of a general hypersurface in weighted projective 3-space.
//
// A general quasismooth member F_d of P(a_0, a_1, a_2, a_3) is singular only
// where it meets the singular strata of the ambient space:
//   * coordinate vertices P_i with a_i not dividing d, each a cyclic quotient
//     1/a_i(a_j, a_k), where x_i^m x_l is the monomial that makes F
//     quasismooth at P_i and {j, k} are the remaining indices;
//   * points on the coordinate edge P_i P_j with h = gcd(a_i, a_j) > 1 away
//     from the vertices, each of type 1/h(a_k, a_l). Their number is the
//     degree of the restricted binary form in the torus coordinate, i.e. the
//     number of monomials x_i^p x_j^q of degree d, minus one.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "duval/ade.hpp"
#include "duval/basket.hpp"
#include "duval/errors.hpp"

namespace duval {

/// Four positive weights of P(a_0, a_1, a_2, a_3), in the order given.
class Weights {
 public:
  static constexpr std::int64_t kMaxWeight = 1'000'000;

  Weights(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3) : a_{a0, a1, a2, a3} {
    for (auto w : a_)
      if (w < 1 || w > kMaxWeight) throw InvalidType("weights must lie in [1, " + std::to_string(kMaxWeight) + "]");
  }

  explicit Weights(const std::array<std::int64_t, 4>& a) : Weights(a[0], a[1], a[2], a[3]) {}

  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  const std::array<std::int64_t, 4>& values() const noexcept { return a_; }
  std::int64_t sum() const noexcept { return a_[0] + a_[1] + a_[2] + a_[3]; }

  Weights normalized() const {
    auto b = a_;
    std::sort(b.begin(), b.end());
    return Weights(b);
  }

  std::string to_string() const {
    return "P(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," + std::to_string(a_[2]) + "," +
           std::to_string(a_[3]) + ")";
  }

  friend auto operator<=>(const Weights&, const Weights&) = default;

 private:
  std::array<std::int64_t, 4> a_;
};

struct HypersurfaceFamily {
  Weights weights;
  std::int64_t degree;

  HypersurfaceFamily(Weights w, std::int64_t d) : weights(w), degree(d) {
    if (d < 1 || d > 4 * Weights::kMaxWeight) throw InvalidType("degree out of range");
  }

  /// omega_F = O_F for a quasismooth well-formed member.
  bool canonical_trivial() const noexcept { return degree == weights.sum(); }

  std::string name() const { return "F_" + std::to_string(degree) + " in " + weights.to_string(); }

  friend auto operator<=>(const HypersurfaceFamily&, const HypersurfaceFamily&) = default;
};

/// The quotient of C^2 by the cyclic group of order r acting with weights (b1, b2).
class CyclicQuotient {
 public:
  CyclicQuotient(std::int64_t r, std::int64_t b1, std::int64_t b2) : r_(r), b1_(mod(b1, r)), b2_(mod(b2, r)) {
    if (r < 2) throw InvalidType("cyclic quotient order must be at least 2");
    if (std::gcd(b1_, r_) != 1 || std::gcd(b2_, r_) != 1)
      throw InvalidType("cyclic quotient weights must be units mod r in " + name());
  }

  std::int64_t order() const noexcept { return r_; }
  std::int64_t b1() const noexcept { return b1_; }
  std::int64_t b2() const noexcept { return b2_; }

  /// Gorenstein cyclic quotients are exactly the A_{r-1} points.
  bool is_du_val() const noexcept { return (b1_ + b2_) % r_ == 0; }

  AdeType to_ade() const {
    if (!is_du_val()) throw NotDuVal(name() + " is not a du Val singularity");
    return AdeType::A(static_cast<int>(r_ - 1));
  }

  std::string name() const {
    return "1/" + std::to_string(r_) + "(" + std::to_string(b1_) + "," + std::to_string(b2_) + ")";
  }

  friend auto operator<=>(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  static std::int64_t mod(std::int64_t x, std::int64_t r) { return r > 0 ? ((x % r) + r) % r : x; }

  std::int64_t r_, b1_, b2_;
};

namespace detail {

/// Whether `target` is a nonnegative combination of `ws` (an empty monomial for target 0).
inline bool has_monomial(std::int64_t target, std::span<const std::int64_t> ws) {
  if (target < 0) return false;
  if (target == 0) return true;
  if (ws.empty()) return false;
  if (ws.size() == 1) return target % ws[0] == 0;
  if (ws.size() == 2) {
    for (std::int64_t p = 0; p * ws[0] <= target; ++p)
      if ((target - p * ws[0]) % ws[1] == 0) return true;
    return false;
  }
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (auto w : ws)
    for (std::int64_t s = w; s <= target; ++s)
      if (reach[s - w]) reach[s] = 1;
  return reach[target] != 0;
}

inline std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) { return std::gcd(std::gcd(a, b), c); }

/// The two indices of {0,1,2,3} other than i and j.
inline std::pair<int, int> complement(int i, int j) {
  int out[2], n = 0;
  for (int k = 0; k < 4; ++k)
    if (k != i && k != j) out[n++] = k;
  return {out[0], out[1]};
}

/// Number of monomials x_i^p x_j^q of the given degree.
inline std::int64_t edge_monomials(std::int64_t ai, std::int64_t aj, std::int64_t d) {
  std::int64_t n = 0;
  for (std::int64_t p = 0; p * ai <= d; ++p)
    if ((d - p * ai) % aj == 0) ++n;
  return n;
}

}  // namespace detail

/// gcd of every three weights is 1.
inline bool well_formed(const Weights& w) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (detail::gcd3(w[i], w[j], w[k]) != 1) return false;
  return true;
}

/// Quasismoothness of the general member: for every nonempty coordinate set I,
/// either a degree-d monomial in the variables of I exists, or |I| monomials
/// x_I^M x_e of degree d exist with pairwise distinct e outside I.
inline bool quasismooth(const HypersurfaceFamily& f) {
  const auto& a = f.weights.values();
  const std::int64_t d = f.degree;
  // Subsets in order of increasing size, so cheap failures surface first.
  std::array<unsigned, 15> masks{};
  std::iota(masks.begin(), masks.end(), 1u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  for (unsigned mask : masks) {
    std::array<std::int64_t, 4> in{};
    std::size_t k = 0;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) in[k++] = a[i];
    const std::span<const std::int64_t> sub(in.data(), k);
    if (detail::has_monomial(d, sub)) continue;
    std::size_t linked = 0;
    for (int e = 0; e < 4; ++e)
      if (!(mask & (1u << e)) && detail::has_monomial(d - a[e], sub)) ++linked;
    if (linked < k) return false;
  }
  return true;
}

inline void require_filters(const HypersurfaceFamily& f) {
  if (!well_formed(f.weights)) throw NotWellFormed(f.weights.to_string() + " is not well-formed");
  if (!quasismooth(f)) throw NotQuasismooth(f.name() + " is not quasismooth");
}

inline std::vector<CyclicQuotient> vertex_singularities(const HypersurfaceFamily& f) {
  const auto& a = f.weights.values();
  const std::int64_t d = f.degree;
  std::vector<CyclicQuotient> out;
  for (int i = 0; i < 4; ++i) {
    if (d % a[i] == 0) continue;  // x_i^(d/a_i) keeps P_i off the general member
    int link = -1;
    for (int l = 0; l < 4 && link < 0; ++l)
      if (l != i && d >= a[l] && (d - a[l]) % a[i] == 0) link = l;
    if (link < 0)
      throw NoLinkingMonomial("no monomial x_" + std::to_string(i) + "^m x_l of degree " + std::to_string(d) +
                              " on " + f.weights.to_string());
    const auto [j, k] = detail::complement(i, link);
    if (std::gcd(a[j], a[i]) != 1 || std::gcd(a[k], a[i]) != 1)
      throw NotDuVal("vertex P_" + std::to_string(i) + " of " + f.name() + " is not an isolated quotient point");
    out.emplace_back(a[i], a[j], a[k]);
  }
  return out;
}

inline std::vector<std::pair<CyclicQuotient, int>> edge_singularities(const HypersurfaceFamily& f) {
  const auto& a = f.weights.values();
  std::vector<std::pair<CyclicQuotient, int>> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const std::int64_t h = std::gcd(a[i], a[j]);
      if (h == 1) continue;
      const std::int64_t n = detail::edge_monomials(a[i], a[j], f.degree) - 1;
      if (n <= 0) continue;
      const auto [k, l] = detail::complement(i, j);
      out.emplace_back(CyclicQuotient(h, a[k], a[l]), static_cast<int>(n));
    }
  return out;
}

/// Index pairs (i, j) with gcd(a_i, a_j) > 1 whose whole edge lies on the
/// general member, i.e. no monomial x_i^p x_j^q has degree d.
inline std::vector<std::pair<int, int>> singular_edges_on_member(const HypersurfaceFamily& f) {
  const auto& a = f.weights.values();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::gcd(a[i], a[j]) > 1 && detail::edge_monomials(a[i], a[j], f.degree) == 0) out.emplace_back(i, j);
  return out;
}

inline Basket basket(const HypersurfaceFamily& f) {
  require_filters(f);
  if (auto e = singular_edges_on_member(f); !e.empty())
    throw NotDuVal(f.name() + " contains the singular edge P_" + std::to_string(e.front().first) + "P_" +
                   std::to_string(e.front().second));
  Basket b;
  for (const auto& q : vertex_singularities(f)) b.add(q.to_ade());
  for (const auto& [q, n] : edge_singularities(f)) b.add(q.to_ade(), n);
  return b;
}

}  // namespace duval
