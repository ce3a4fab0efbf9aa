#pragma once

#include <optional>
#include <vector>

#include "homstruct/numerics.hpp"

namespace homstruct {

/// Point of the Riemann sphere in canonical form: either a finite complex
/// value (homogeneous (z:1)) or the point at infinity ((1:0)). Scaling a
/// homogeneous representative does not change equality.
class SpherePoint {
 public:
  SpherePoint() : infinite_(false) {}
  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }
  static SpherePoint finite(ComplexScalar z) {
    SpherePoint p;
    p.z_ = std::move(z);
    return p;
  }
  static SpherePoint of(std::complex<double> z) { return finite(ComplexScalar::approx(z)); }

  bool is_infinity() const { return infinite_; }
  const ComplexScalar& z() const { return z_; }

 private:
  bool infinite_;
  ComplexScalar z_;
};

/// Fubini-Study (chordal) distance on the sphere; well defined at infinity,
/// with values in [0, 1].
double chordal_distance(const SpherePoint& p, const SpherePoint& q);
bool sphere_eq(const SpherePoint& p, const SpherePoint& q, const Tolerance& tol);
/// Lexicographic (re, im) order with infinity sorting last.
bool sphere_less(const SpherePoint& p, const SpherePoint& q);

/// Element of PSL(2,C) stored as a det-1 matrix [[a,b],[c,d]]; M and -M are
/// the same element, so equality tests both signs.
class Moebius {
 public:
  Moebius();  // identity
  Moebius(ComplexScalar a, ComplexScalar b, ComplexScalar c, ComplexScalar d,
          const Tolerance& tol = Tolerance());
  static Moebius identity() { return Moebius(); }
  static Moebius diagonal(const ComplexScalar& alpha, const Tolerance& tol = Tolerance());
  static Moebius translation(const ComplexScalar& t);
  /// z -> a/z, the off-diagonal involution family.
  static Moebius inversion(const ComplexScalar& a, const Tolerance& tol = Tolerance());

  const ComplexScalar& a() const { return a_; }
  const ComplexScalar& b() const { return b_; }
  const ComplexScalar& c() const { return c_; }
  const ComplexScalar& d() const { return d_; }

  Moebius inverse() const;
  ComplexScalar trace_squared() const;
  double max_entry() const;

  /// Deterministic sign representative (used for serialization).
  Moebius canonical_sign(const Tolerance& tol = Tolerance()) const;

 private:
  ComplexScalar a_, b_, c_, d_;
  void normalize(const Tolerance& tol);
};

Moebius compose(const Moebius& m1, const Moebius& m2);
Moebius inverse(const Moebius& m);
Moebius conjugate(const Moebius& g, const Moebius& m);  // g m g^-1

bool psl_equal(const Moebius& m, const Moebius& n, const Tolerance& tol);
bool is_identity(const Moebius& m, const Tolerance& tol);

SpherePoint act(const Moebius& m, const SpherePoint& p, const Tolerance& tol = Tolerance());

struct FixedPointSet {
  bool every_point = false;  // identity fixes everything
  std::vector<SpherePoint> points;
};

FixedPointSet fixed_points(const Moebius& m, const Tolerance& tol = Tolerance());

struct ElementType {
  enum class Tag { Identity, Parabolic, Elliptic, Loxodromic };
  Tag tag = Tag::Identity;
  std::optional<int> order;  // filled for elliptic elements of finite order
};

/// Dynamical type from the trace squared: 4 -> identity or parabolic, real in
/// [0,4) -> elliptic (order from the eigenvalue ratio), else loxodromic.
ElementType classify_element(const Moebius& m, int max_order = 200,
                             const Tolerance& tol = Tolerance());

enum class PairClass { NotCommuting, SharedFixedSet, KleinFourPair };

/// Trichotomy for a pair of elements: they fail to commute, they commute with
/// a common fixed set, or they are commuting involutions with disjoint fixed
/// pairs (half-turns about perpendicular axes).
PairClass commuting_pair_class(const Moebius& m1, const Moebius& m2,
                               const Tolerance& tol = Tolerance());

struct NormalForm {
  enum class Shape { Trivial, Diagonal, UpperTriangular, KleinFour, General };
  Moebius conjugator;       // maps the input into the standard frame
  std::vector<Moebius> gens;  // conjugator * g * conjugator^-1, in input order
  Shape shape = Shape::General;
};

/// Conjugates a generating set into a standard frame: a shared fixed pair goes
/// to {0, inf} (smaller lexicographic point to 0), a single shared fixed point
/// to inf, a Klein-four configuration to the standard involutions with axes
/// {0,inf}, {1,-1}, {i,-i}. Anything else is returned untouched.
NormalForm conjugate_to_normal_form(const std::vector<Moebius>& gens,
                                    const Tolerance& tol = Tolerance());

/// The Moebius map sending (p, q, r) to (0, inf, 1); p, q, r distinct.
Moebius map_to_zero_inf_one(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r,
                            const Tolerance& tol = Tolerance());

}  // namespace homstruct
