#pragma once

// Formal rational homology classes on named compact spaces.
//
// Classes are finite rational combinations of declared generators; maps
// between spaces are given by their values on generators. This is enough to
// carry L-classes and Hodge L-classes (T_{1*}) through products, finite
// covers and resolutions of du Val surfaces.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "duval/basket.hpp"
#include "duval/errors.hpp"
#include "duval/rational.hpp"

namespace duval {

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// A compact space of even real dimension.
struct SpaceLabel {
  std::string name;
  int dim = 0;

  SpaceLabel() = default;
  SpaceLabel(std::string n, int d) : name(std::move(n)), dim(d) {
    if (d < 0 || d % 2 != 0) throw DimensionMismatch("space " + name + " must have even nonnegative dimension");
  }

  friend auto operator<=>(const SpaceLabel&, const SpaceLabel&) = default;
};

inline SpaceLabel product_space(const SpaceLabel& a, const SpaceLabel& b) {
  return SpaceLabel(a.name + "×" + b.name, a.dim + b.dim);
}

/// A named homology generator. `label` is the printed symbol, e.g. "[pt_F]".
struct Generator {
  int degree = 0;
  std::string label;
  SpaceLabel space;

  Generator() = default;
  Generator(std::string l, int deg, SpaceLabel s) : degree(deg), label(std::move(l)), space(std::move(s)) {
    if (deg < 0 || deg % 2 != 0 || deg > space.dim)
      throw DimensionMismatch("generator " + label + " has degree " + std::to_string(deg) + " on " + space.name);
  }

  // Ordered by degree first so printed classes read from low to high degree.
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator fundamental_generator(const SpaceLabel& s) { return Generator("[" + s.name + "]", s.dim, s); }
inline Generator point_generator(const SpaceLabel& s) { return Generator("[pt_" + s.name + "]", 0, s); }

/// Label of g×h: "[a]" and "[b]" combine to "[a×b]".
inline std::string product_label(const std::string& a, const std::string& b) {
  auto bracketed = [](const std::string& s) { return s.size() >= 2 && s.front() == '[' && s.back() == ']'; };
  if (bracketed(a) && bracketed(b)) return "[" + a.substr(1, a.size() - 2) + "×" + b.substr(1, b.size() - 2) + "]";
  return "(" + a + ")×(" + b + ")";
}

class FormalClass {
 public:
  using Terms = std::map<Generator, Rational>;

  FormalClass() = default;
  explicit FormalClass(SpaceLabel space) : space_(std::move(space)) {}

  FormalClass(SpaceLabel space, const Generator& g, const Rational& c = 1) : space_(std::move(space)) { add(g, c); }

  static FormalClass fundamental(const SpaceLabel& s) { return FormalClass(s, fundamental_generator(s)); }
  static FormalClass point(const SpaceLabel& s) { return FormalClass(s, point_generator(s)); }

  const SpaceLabel& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FormalClass& add(const Generator& g, const Rational& c) {
    if (g.space != space_) throw SpaceMismatch("generator " + g.label + " does not live on " + space_.name);
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  Rational coefficient(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Component of real degree `degree`.
  FormalClass degree_part(int degree) const {
    FormalClass out(space_);
    for (const auto& [g, c] : terms_)
      if (g.degree == degree) out.terms_.emplace(g, c);
    return out;
  }

  FormalClass& operator+=(const FormalClass& o) {
    require_same_space(o);
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  FormalClass& operator-=(const FormalClass& o) {
    require_same_space(o);
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
  }
  FormalClass& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) c *= k;
    return *this;
  }

  friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
  friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
  friend FormalClass operator*(const Rational& k, FormalClass a) { return a *= k; }
  friend FormalClass operator/(FormalClass a, const Rational& k) { return a *= Rational(1) / k; }

  friend bool operator==(const FormalClass&, const FormalClass&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
      const bool neg = c < 0;
      const bool lead = out.empty();
      // A leading negative fraction keeps its sign inside the parentheses.
      const Rational mag = neg && !(lead && !is_integer(c)) ? Rational(-c) : c;
      if (!lead)
        out += neg ? " - " : " + ";
      else if (neg && is_integer(c))
        out += "-";
      if (mag != 1) out += is_integer(mag) ? duval::to_string(mag) + "·" : "(" + duval::to_string(mag) + ")·";
      out += g.label;
    }
    return out;
  }

 private:
  void require_same_space(const FormalClass& o) const {
    if (o.space_ != space_) throw SpaceMismatch("classes on " + space_.name + " and " + o.space_.name);
  }

  SpaceLabel space_;
  Terms terms_;
};

/// Exterior product; bilinear, degrees add.
inline FormalClass product_class(const FormalClass& a, const FormalClass& b) {
  const SpaceLabel s = product_space(a.space(), b.space());
  FormalClass out(s);
  for (const auto& [g, x] : a.terms())
    for (const auto& [h, y] : b.terms()) out.add(Generator(product_label(g.label, h.label), g.degree + h.degree, s), x * y);
  return out;
}

/// A degree-preserving linear map of formal classes, given on generators.
class ClassMap {
 public:
  ClassMap() = default;
  ClassMap(SpaceLabel source, SpaceLabel target) : source_(std::move(source)), target_(std::move(target)) {}

  ClassMap& set(const Generator& g, FormalClass image) {
    if (g.space != source_) throw SpaceMismatch(g.label + " is not a generator of " + source_.name);
    if (image.space() != target_) throw SpaceMismatch("image of " + g.label + " must live on " + target_.name);
    for (const auto& [h, c] : image.terms())
      if (h.degree != g.degree) throw DimensionMismatch("image of " + g.label + " changes degree");
    images_.insert_or_assign(g, std::move(image));
    return *this;
  }

  const SpaceLabel& source() const noexcept { return source_; }
  const SpaceLabel& target() const noexcept { return target_; }
  const std::map<Generator, FormalClass>& images() const noexcept { return images_; }

  FormalClass operator()(const FormalClass& c) const {
    if (c.space() != source_) throw SpaceMismatch("class on " + c.space().name + " applied to map from " + source_.name);
    FormalClass out(target_);
    for (const auto& [g, x] : c.terms()) {
      auto it = images_.find(g);
      if (it == images_.end()) throw UnknownGenerator("no image declared for " + g.label);
      out += x * it->second;
    }
    return out;
  }

 private:
  SpaceLabel source_, target_;
  std::map<Generator, FormalClass> images_;
};

/// A finite covering p: source -> target of degree d with pushforward p_* and transfer p_!.
class CoveringMap {
 public:
  CoveringMap(SpaceLabel source, SpaceLabel target, int degree)
      : degree_(degree), push_(source, target), transfer_(target, source) {
    if (degree < 1) throw InvalidType("covering degree must be positive");
    if (source.dim != target.dim) throw DimensionMismatch("a finite cover preserves dimension");
  }

  CoveringMap& set_pushforward(const Generator& g, FormalClass image) {
    push_.set(g, std::move(image));
    return *this;
  }
  CoveringMap& set_transfer(const Generator& g, FormalClass image) {
    transfer_.set(g, std::move(image));
    return *this;
  }

  const SpaceLabel& source() const noexcept { return push_.source(); }
  const SpaceLabel& target() const noexcept { return push_.target(); }
  int degree() const noexcept { return degree_; }
  const ClassMap& pushforward_map() const noexcept { return push_; }
  const ClassMap& transfer_map() const noexcept { return transfer_; }

  /// p_* p_! = d on every declared target generator.
  bool transfer_law_holds() const {
    for (const auto& [g, image] : transfer_.images()) {
      if (push_(image) != Rational(degree_) * FormalClass(target(), g)) return false;
    }
    return true;
  }

 private:
  int degree_;
  ClassMap push_;
  ClassMap transfer_;
};

inline FormalClass pushforward(const CoveringMap& p, const FormalClass& c) { return p.pushforward_map()(c); }
inline FormalClass transfer(const CoveringMap& p, const FormalClass& c) { return p.transfer_map()(c); }

/// Hodge numbers of a compact connected Kähler surface relevant to its signature.
struct SurfaceHodgeNumbers {
  int h20 = 0;
  int h11 = 0;

  /// Hodge index theorem: sigma = 2 h^{2,0} - h^{1,1} + 2.
  int signature() const noexcept { return 2 * h20 - h11 + 2; }
};

inline constexpr SurfaceHodgeNumbers kK3HodgeNumbers{1, 20};
inline constexpr SurfaceHodgeNumbers kAbelianSurfaceHodgeNumbers{1, 4};

/// L_*(F) = sigma [pt] + [F] for a surface that is a rational homology manifold.
inline FormalClass l_class_surface(const Integer& sigma, const SpaceLabel& surface) {
  if (surface.dim != 4) throw DimensionMismatch(surface.name + " is not a surface");
  return Rational(sigma) * FormalClass::point(surface) + FormalClass::fundamental(surface);
}

struct TreeHodgeClass {
  FormalClass cls;
  Rational degree0;
};

/// T_{1*} of the exceptional tree of n rational curves over a rational double
/// point: the n curve classes minus (n-1) point classes.
inline TreeHodgeClass hodge_class_tree(int n, const std::string& name = "E") {
  if (n < 1) throw InvalidType("an exceptional tree has at least one component");
  const SpaceLabel tree(name, 2);
  FormalClass c(tree);
  for (int i = 1; i <= n; ++i) c.add(Generator("[P1_" + std::to_string(i) + "]", 2, tree), 1);
  c.add(point_generator(tree), -(n - 1));
  const Rational d0 = c.coefficient(point_generator(tree));
  return {std::move(c), d0};
}

/// Hodge L-class of a du Val K3 surface F by scissor additivity over its
/// crepant resolution F_0 -> F: the smooth part contributes f_*T_{1*}(F_0),
/// the m singular points contribute m [pt], and the exceptional trees are
/// removed through their degree-0 components.
inline FormalClass t1_surface(const Basket& b, std::size_t singular_points, const SpaceLabel& surface = {"F", 4}) {
  if (singular_points != b.point_count())
    throw BasketPointCountMismatch("basket has " + std::to_string(b.point_count()) + " points, got " +
                                   std::to_string(singular_points));
  const SpaceLabel resolution(surface.name + "_0", 4);
  const FormalClass t1_resolution = l_class_surface(kK3HodgeNumbers.signature(), resolution);

  ClassMap resolve(resolution, surface);
  resolve.set(point_generator(resolution), FormalClass::point(surface));
  resolve.set(fundamental_generator(resolution), FormalClass::fundamental(surface));

  FormalClass t1 = resolve(t1_resolution) + Rational(static_cast<std::int64_t>(singular_points)) * FormalClass::point(surface);

  int index = 0;
  for (const auto& t : b.entries()) {
    const TreeHodgeClass tree = hodge_class_tree(t.components(), "E_" + std::to_string(++index));
    // f| contracts the tree to its singular point; curve classes die.
    ClassMap contract(tree.cls.space(), surface);
    contract.set(point_generator(tree.cls.space()), FormalClass::point(surface));
    for (int i = 1; i <= t.components(); ++i)
      contract.set(Generator("[P1_" + std::to_string(i) + "]", 2, tree.cls.space()), FormalClass(surface));
    t1 -= contract(tree.cls.degree_part(0));
  }
  return t1;
}

}  // namespace duval
