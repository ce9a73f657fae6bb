#pragma once

// Signatures of du Val surfaces with trivial canonical class and the
// comparison T_{1*}(X) = L_*(X) for canonical 3-folds with q(X) > 0, carried
// out on the Kawamata cover F × E -> X.

#include <string>
#include <variant>
#include <vector>

#include "duval/ade.hpp"
#include "duval/basket.hpp"
#include "duval/errors.hpp"
#include "duval/homology.hpp"

namespace duval {

inline constexpr int kMaxTotalD = 19;

inline int smooth_k3_signature() { return kK3HodgeNumbers.signature(); }

/// Normal projective surface with du Val singularities and trivial canonical class.
class SurfaceModel {
 public:
  explicit SurfaceModel(Basket b = {}, int q = 0) : basket_(std::move(b)), q_(q) {
    if (q < 0 || q > 2) throw InvalidType("surface irregularity must be 0, 1 or 2");
    if (q > 0 && !basket_.empty()) throw InvalidType("a surface with q > 0 is nonsingular");
  }

  const Basket& basket() const noexcept { return basket_; }
  int q() const noexcept { return q_; }

 private:
  Basket basket_;
  int q_;
};

/// sigma(F) = sigma(F_0) + sum d_i, with sigma(F_0) = -16 when q(F) = 0 and 0 otherwise.
inline int sigma_k3(const Basket& b, int q = 0) {
  if (q < 0 || q > 2) throw InvalidType("surface irregularity must be 0, 1 or 2");
  if (q > 0 && !b.empty()) throw InvalidType("a surface with q > 0 is nonsingular");
  if (b.total_d() > kMaxTotalD)
    throw BoundViolation("basket " + b.to_string() + " has " + std::to_string(b.total_d()) + " > 19 exceptional curves");
  if (q > 0) return 0;
  return smooth_k3_signature() + b.total_d();
}

inline int sigma_k3(const SurfaceModel& s) { return sigma_k3(s.basket(), s.q()); }

struct NovikovDecomposition {
  int sigma_resolution = 0;
  std::vector<int> tube_signatures;
  int sigma_complement = 0;
  std::vector<int> cone_signatures;

  /// sigma(F) assembled from the complement and the coned-off links.
  int sigma_surface() const {
    int s = sigma_complement;
    for (int c : cone_signatures) s += c;
    return s;
  }

  bool consistent() const {
    int s = sigma_complement;
    for (int t : tube_signatures) s += t;
    for (int c : cone_signatures)
      if (c != 0) return false;
    return s == sigma_resolution && tube_signatures.size() == cone_signatures.size();
  }
};

/// Splits sigma(F_0) along the tubes around the exceptional trees. Each tube
/// signature is read off its plumbing form.
inline NovikovDecomposition novikov_assembly(const Basket& b) {
  if (b.total_d() > kMaxTotalD) throw BoundViolation("basket " + b.to_string() + " exceeds 19 exceptional curves");
  NovikovDecomposition n;
  n.sigma_resolution = smooth_k3_signature();
  int tubes = 0;
  for (const auto& t : b.entries()) {
    const int s = static_cast<int>(form_signature(plumbing_form(dynkin_graph(t))).sigma());
    n.tube_signatures.push_back(s);
    tubes += s;
  }
  n.sigma_complement = n.sigma_resolution - tubes;
  // Suspensions of links admit an orientation-reversing flip.
  n.cone_signatures.assign(b.point_count(), 0);
  if (!n.consistent()) throw InvariantViolation("Novikov decomposition does not add up");
  return n;
}

/// H^1 of each exceptional configuration vanishes rationally iff its dual graph is a tree of P^1s.
inline bool rational_homology_manifold_check(const std::vector<DynkinGraph>& exceptional_graphs) {
  for (const auto& g : exceptional_graphs)
    if (!g.is_tree()) return false;
  return true;
}

inline bool rational_homology_manifold_check(const Basket& b) {
  std::vector<DynkinGraph> graphs;
  for (const auto& t : b.entries()) graphs.push_back(dynkin_graph(t));
  return rational_homology_manifold_check(graphs);
}

struct CurveFiber {};
struct PointFiber {};
using Fiber = std::variant<SurfaceModel, CurveFiber, PointFiber>;

/// Kawamata cover F × E -> X of degree d over Alb(X), with dim E = q(X).
class KawamataDiagram {
 public:
  static KawamataDiagram surface_fiber(SurfaceModel f, int d) { return {1, std::move(f), d}; }
  static KawamataDiagram curve_fiber(int d) { return {2, CurveFiber{}, d}; }
  static KawamataDiagram point_fiber(int d) { return {3, PointFiber{}, d}; }

  /// The diagram forced by q(X): a surface, curve or point fiber.
  static KawamataDiagram for_irregularity(int q, SurfaceModel f, int d) {
    switch (q) {
      case 1: return surface_fiber(std::move(f), d);
      case 2: return curve_fiber(d);
      case 3: return point_fiber(d);
      default: throw InvalidType("q(X) must be 1, 2 or 3 for a 3-fold with q > 0");
    }
  }

  int q() const noexcept { return q_; }
  const Fiber& fiber() const noexcept { return fiber_; }
  int cover_degree() const noexcept { return d_; }

  const SurfaceModel& surface() const { return std::get<SurfaceModel>(fiber_); }

 private:
  KawamataDiagram(int q, Fiber f, int d) : q_(q), fiber_(std::move(f)), d_(d) {
    if (d < 1) throw InvalidType("cover degree must be positive");
  }

  int q_;
  Fiber fiber_;
  int d_;
};

/// Spaces, generators and the cover p: F × E -> X of a Kawamata diagram.
struct KawamataScenario {
  SpaceLabel fiber;
  SpaceLabel torus;
  SpaceLabel cover;
  SpaceLabel threefold;
  CoveringMap p;

  /// p_*[pt_F × E] on X; only present when F is a surface.
  Generator pushed_point_class() const { return Generator("p_*[pt_F×E]", 2, threefold); }
};

inline KawamataScenario make_scenario(const KawamataDiagram& k) {
  const int fiber_dim = 2 * (3 - k.q());
  const SpaceLabel fiber("F", fiber_dim);
  const SpaceLabel torus("E", 2 * k.q());
  const SpaceLabel cover = product_space(fiber, torus);
  const SpaceLabel x("X", 6);
  CoveringMap p(cover, x, k.cover_degree());
  const Rational d = k.cover_degree();

  // The deck group acts diagonally, so [X] lifts to the whole cover and
  // [pt_F × E] pulls back to d translates of itself.
  p.set_pushforward(fundamental_generator(cover), d * FormalClass::fundamental(x));
  p.set_transfer(fundamental_generator(x), FormalClass::fundamental(cover));
  KawamataScenario s{fiber, torus, cover, x, std::move(p)};
  if (fiber_dim > 0) {
    const Generator pt_fiber(product_label(point_generator(fiber).label, fundamental_generator(torus).label), torus.dim,
                             cover);
    const Generator pushed(s.pushed_point_class().label, torus.dim, x);
    s.p.set_pushforward(pt_fiber, FormalClass(x, pushed));
    s.p.set_transfer(pushed, d * FormalClass(cover, pt_fiber));
  }
  if (torus.dim == 4) {
    const Generator fiber_pt(product_label(fundamental_generator(fiber).label, point_generator(torus).label),
                             fiber.dim, cover);
    const Generator pushed("p_*[F×pt_E]", fiber.dim, x);
    s.p.set_pushforward(fiber_pt, FormalClass(x, pushed));
    s.p.set_transfer(pushed, d * FormalClass(cover, fiber_pt));
  }
  return s;
}

/// L_*(X) in closed form: sigma(F)/d · p_*[pt_F×E] + [X] when q = 1, else [X].
inline FormalClass threefold_lclass(const KawamataDiagram& k) {
  const KawamataScenario s = make_scenario(k);
  FormalClass l = FormalClass::fundamental(s.threefold);
  if (k.q() == 1) l.add(s.pushed_point_class(), Rational(sigma_k3(k.surface()), k.cover_degree()));
  return l;
}

namespace detail {

/// L_* of the torus factor E of dimension q: its signature term only exists for q = 2.
inline FormalClass torus_lclass(const SpaceLabel& torus) {
  FormalClass l = FormalClass::fundamental(torus);
  if (torus.dim == 4) l.add(point_generator(torus), kAbelianSurfaceHodgeNumbers.signature());
  return l;
}

}  // namespace detail

struct BsyReport {
  FormalClass hodge;        ///< T_{1*}(X) = (1/d) p_* (T_{1*}(F) × T_{1*}(E))
  FormalClass topological;  ///< L_*(X) = (1/d) p_* (L_*(F) × L_*(E))
  FormalClass closed_form;  ///< threefold_lclass
  bool transfer_consistent = false;  ///< p_! L_*(X) = L_*(F × E)
  bool equal = false;
};

/// Derives T_{1*}(X) and L_*(X) along independent routes and compares them term by term.
inline BsyReport bsy_check(const KawamataDiagram& k) {
  const KawamataScenario s = make_scenario(k);
  const Rational d = k.cover_degree();

  // Hodge route: scissor computation on the fiber, multiplicativity of T_{y*} under
  // exterior products and finite Galois covers.
  FormalClass t1_fiber = FormalClass::fundamental(s.fiber);
  if (k.q() == 1) {
    const SurfaceModel& f = k.surface();
    t1_fiber = f.q() == 0 ? t1_surface(f.basket(), f.basket().point_count(), s.fiber)
                          : l_class_surface(0, s.fiber);  // nonsingular with vanishing signature
  }
  const FormalClass t1_cover = product_class(t1_fiber, detail::torus_lclass(s.torus));
  FormalClass hodge = pushforward(s.p, t1_cover) / d;

  // Topological route: the signature formula and multiplicativity of L_* under covers.
  FormalClass l_fiber = FormalClass::fundamental(s.fiber);
  if (k.q() == 1) l_fiber = l_class_surface(sigma_k3(k.surface()), s.fiber);
  const FormalClass l_cover = product_class(l_fiber, detail::torus_lclass(s.torus));
  FormalClass topological = pushforward(s.p, l_cover) / d;

  BsyReport r{std::move(hodge), std::move(topological), threefold_lclass(k)};
  r.transfer_consistent = transfer(s.p, r.topological) == l_cover;
  r.equal = r.hodge == r.topological && r.topological == r.closed_form && r.transfer_consistent;
  return r;
}

}  // namespace duval
