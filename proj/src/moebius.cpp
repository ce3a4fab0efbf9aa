#include "homstruct/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace homstruct {

namespace {

const ComplexScalar kOne = ComplexScalar::exact_int(1);
const ComplexScalar kZero = ComplexScalar::exact_int(0);

double entry_scale(const Moebius& m) { return std::max(1.0, m.max_entry()); }

}  // namespace

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
  if (p.is_infinity() && q.is_infinity()) return 0.0;
  if (p.is_infinity() || q.is_infinity()) {
    const std::complex<double> z = (p.is_infinity() ? q : p).z().value();
    return 1.0 / std::sqrt(1.0 + std::norm(z));
  }
  const std::complex<double> a = p.z().value(), b = q.z().value();
  return std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

bool sphere_eq(const SpherePoint& p, const SpherePoint& q, const Tolerance& tol) {
  if (p.is_infinity() != q.is_infinity())
    return chordal_distance(p, q) <= tol.eps;
  if (p.is_infinity()) return true;
  if (p.z().is_exact() && q.z().is_exact()) return approx_eq(p.z(), q.z(), tol);
  return chordal_distance(p, q) <= tol.eps;
}

bool sphere_less(const SpherePoint& p, const SpherePoint& q) {
  if (p.is_infinity()) return false;
  if (q.is_infinity()) return true;
  const auto a = p.z().value(), b = q.z().value();
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Moebius::Moebius() : a_(kOne), b_(kZero), c_(kZero), d_(kOne) {}

Moebius::Moebius(ComplexScalar a, ComplexScalar b, ComplexScalar c, ComplexScalar d,
                 const Tolerance& tol)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  normalize(tol);
}

void Moebius::normalize(const Tolerance& tol) {
  const ComplexScalar det = a_ * d_ - b_ * c_;
  const double scale = std::max({1.0, a_.abs(), b_.abs(), c_.abs(), d_.abs()});
  if (det.abs() <= tol.eps * scale * scale)
    throw Error("singular_matrix", "matrix has vanishing determinant");
  if (det.is_exact() && det.re_rational() == 1 && det.im_rational() == 0) return;
  const ComplexScalar s = det.sqrt();
  a_ = a_ / s;
  b_ = b_ / s;
  c_ = c_ / s;
  d_ = d_ / s;
}

Moebius Moebius::diagonal(const ComplexScalar& alpha, const Tolerance& tol) {
  return Moebius(alpha, kZero, kZero, kOne / alpha, tol);
}

Moebius Moebius::translation(const ComplexScalar& t) {
  return Moebius(kOne, t, kZero, kOne);
}

Moebius Moebius::inversion(const ComplexScalar& a, const Tolerance& tol) {
  return Moebius(kZero, a, kOne, kZero, tol);
}

Moebius Moebius::inverse() const {
  Moebius m;
  m.a_ = d_;
  m.b_ = -b_;
  m.c_ = -c_;
  m.d_ = a_;
  return m;
}

ComplexScalar Moebius::trace_squared() const {
  const ComplexScalar t = a_ + d_;
  return t * t;
}

double Moebius::max_entry() const {
  return std::max({a_.abs(), b_.abs(), c_.abs(), d_.abs()});
}

Moebius Moebius::canonical_sign(const Tolerance& tol) const {
  const ComplexScalar* entries[4] = {&a_, &b_, &c_, &d_};
  const double scale = entry_scale(*this);
  for (const ComplexScalar* e : entries) {
    if (e->abs() <= tol.eps * scale) continue;
    const auto v = e->value();
    bool flip = false;
    if (std::abs(v.real()) > tol.eps * e->abs())
      flip = v.real() < 0;
    else
      flip = v.imag() < 0;
    if (!flip) return *this;
    Moebius m = *this;
    m.a_ = -m.a_;
    m.b_ = -m.b_;
    m.c_ = -m.c_;
    m.d_ = -m.d_;
    return m;
  }
  return *this;
}

Moebius compose(const Moebius& m1, const Moebius& m2) {
  return Moebius(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                 m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

Moebius inverse(const Moebius& m) { return m.inverse(); }

Moebius conjugate(const Moebius& g, const Moebius& m) {
  return compose(g, compose(m, g.inverse()));
}

bool psl_equal(const Moebius& m, const Moebius& n, const Tolerance& tol) {
  const bool all_exact = m.a().is_exact() && m.b().is_exact() && m.c().is_exact() &&
                         m.d().is_exact() && n.a().is_exact() && n.b().is_exact() &&
                         n.c().is_exact() && n.d().is_exact();
  if (all_exact) {
    auto eq = [](const ComplexScalar& x, const ComplexScalar& y) {
      return x.re_rational() == y.re_rational() && x.im_rational() == y.im_rational();
    };
    const bool plus = eq(m.a(), n.a()) && eq(m.b(), n.b()) && eq(m.c(), n.c()) && eq(m.d(), n.d());
    if (plus) return true;
    auto eqn = [](const ComplexScalar& x, const ComplexScalar& y) {
      return x.re_rational() == -y.re_rational() && x.im_rational() == -y.im_rational();
    };
    return eqn(m.a(), n.a()) && eqn(m.b(), n.b()) && eqn(m.c(), n.c()) && eqn(m.d(), n.d());
  }
  auto diff = [&](double sign) {
    double d = 0.0;
    d = std::max(d, std::abs(m.a().value() - sign * n.a().value()));
    d = std::max(d, std::abs(m.b().value() - sign * n.b().value()));
    d = std::max(d, std::abs(m.c().value() - sign * n.c().value()));
    d = std::max(d, std::abs(m.d().value() - sign * n.d().value()));
    return d;
  };
  const double scale = std::max(entry_scale(m), entry_scale(n));
  return std::min(diff(1.0), diff(-1.0)) <= tol.eps * scale;
}

bool is_identity(const Moebius& m, const Tolerance& tol) {
  return psl_equal(m, Moebius::identity(), tol);
}

SpherePoint act(const Moebius& m, const SpherePoint& p, const Tolerance& tol) {
  ComplexScalar num, den;
  if (p.is_infinity()) {
    num = m.a();
    den = m.c();
  } else {
    num = m.a() * p.z() + m.b();
    den = m.c() * p.z() + m.d();
  }
  if (num.is_exact() && den.is_exact()) {
    if (den.re_rational() == 0 && den.im_rational() == 0) return SpherePoint::infinity();
    return SpherePoint::finite(num / den);
  }
  if (den.abs() <= tol.eps * num.abs() || den.abs() == 0.0) return SpherePoint::infinity();
  return SpherePoint::finite(num / den);
}

FixedPointSet fixed_points(const Moebius& m, const Tolerance& tol) {
  FixedPointSet out;
  if (is_identity(m, tol)) {
    out.every_point = true;
    return out;
  }
  // Fixed points solve c z^2 + (d - a) z - b = 0; infinity is fixed iff c = 0.
  const double scale = entry_scale(m);
  const ComplexScalar amd = m.a() - m.d();
  if (m.c().abs() <= tol.eps * scale) {
    if (amd.abs() > tol.eps * scale) {
      out.points.push_back(SpherePoint::finite(m.b() / (-amd)));
      out.points.push_back(SpherePoint::infinity());
    } else {
      out.points.push_back(SpherePoint::infinity());  // parabolic translation
    }
  } else {
    const ComplexScalar disc = amd * amd + ComplexScalar::exact_int(4) * m.b() * m.c();
    const ComplexScalar two_c = ComplexScalar::exact_int(2) * m.c();
    const bool parabolic = disc.is_exact()
                               ? (disc.re_rational() == 0 && disc.im_rational() == 0)
                               : disc.abs() <= tol.eps * scale * scale;
    if (parabolic) {
      out.points.push_back(SpherePoint::finite(amd / two_c));
    } else {
      const ComplexScalar s = disc.sqrt();
      out.points.push_back(SpherePoint::finite((amd + s) / two_c));
      out.points.push_back(SpherePoint::finite((amd - s) / two_c));
    }
  }
  std::sort(out.points.begin(), out.points.end(), sphere_less);
  return out;
}

ElementType classify_element(const Moebius& m, int max_order, const Tolerance& tol) {
  ElementType out;
  const ComplexScalar t2 = m.trace_squared();
  const ComplexScalar four = ComplexScalar::exact_int(4);
  const bool t2_is_4 = t2.is_exact() && four.is_exact()
                           ? (t2.re_rational() == 4 && t2.im_rational() == 0)
                           : std::abs(t2.value() - 4.0) <= tol.eps;
  if (t2_is_4) {
    out.tag = is_identity(m, tol) ? ElementType::Tag::Identity : ElementType::Tag::Parabolic;
    return out;
  }
  const auto v = t2.value();
  if (std::abs(v.imag()) <= tol.eps && v.real() >= -tol.eps && v.real() < 4.0) {
    out.tag = ElementType::Tag::Elliptic;
    // Eigenvalue ratio mu^2, mu = (t + sqrt(t^2-4))/2; order is its order as
    // a root of unity (sign of the trace drops out of the square).
    const ComplexScalar t = m.a() + m.d();
    const ComplexScalar s = (t2 - four).sqrt();
    const ComplexScalar mu = (t + s) / ComplexScalar::exact_int(2);
    out.order = root_of_unity_order(mu * mu, max_order, tol);
    return out;
  }
  out.tag = ElementType::Tag::Loxodromic;
  return out;
}

namespace {

bool is_involution(const Moebius& m, const Tolerance& tol) {
  const auto t2 = m.trace_squared().value();
  return std::abs(t2) <= tol.eps && !is_identity(m, tol);
}

bool fixed_sets_disjoint(const FixedPointSet& f, const FixedPointSet& g, const Tolerance& tol) {
  for (const auto& p : f.points)
    for (const auto& q : g.points)
      if (sphere_eq(p, q, tol)) return false;
  return true;
}

}  // namespace

PairClass commuting_pair_class(const Moebius& m1, const Moebius& m2, const Tolerance& tol) {
  const Moebius comm = compose(compose(m1, m2), compose(m1.inverse(), m2.inverse()));
  if (!is_identity(comm, tol)) return PairClass::NotCommuting;
  if (is_involution(m1, tol) && is_involution(m2, tol)) {
    const auto f1 = fixed_points(m1, tol);
    const auto f2 = fixed_points(m2, tol);
    if (fixed_sets_disjoint(f1, f2, tol)) return PairClass::KleinFourPair;
  }
  return PairClass::SharedFixedSet;
}

Moebius map_to_zero_inf_one(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r,
                            const Tolerance& tol) {
  // w -> (w-p)(r-q) / ((w-q)(r-p)), with the usual limits when a point is inf.
  if (p.is_infinity()) {
    const ComplexScalar rq = r.z() - q.z();
    return Moebius(kZero, rq, kOne, -q.z(), tol);
  }
  if (q.is_infinity()) {
    const ComplexScalar rp = r.z() - p.z();
    return Moebius(kOne, -p.z(), kZero, rp, tol);
  }
  if (r.is_infinity()) {
    return Moebius(kOne, -p.z(), kOne, -q.z(), tol);
  }
  const ComplexScalar rq = r.z() - q.z();
  const ComplexScalar rp = r.z() - p.z();
  return Moebius(rq, -p.z() * rq, rp, -q.z() * rp, tol);
}

namespace {

Moebius map_pair_to_zero_inf(const SpherePoint& p, const SpherePoint& q, const Tolerance& tol) {
  if (q.is_infinity()) return Moebius::translation(-p.z());
  if (p.is_infinity()) return Moebius(kZero, kOne, kOne, -q.z(), tol);
  return Moebius(kOne, -p.z(), kOne, -q.z(), tol);
}

}  // namespace

NormalForm conjugate_to_normal_form(const std::vector<Moebius>& gens, const Tolerance& tol) {
  NormalForm out;
  out.conjugator = Moebius::identity();
  out.gens = gens;
  if (gens.empty()) throw Error("empty_generators", "need at least one generator");

  std::vector<const Moebius*> nonid;
  for (const auto& g : gens)
    if (!is_identity(g, tol)) nonid.push_back(&g);
  if (nonid.empty()) {
    out.shape = NormalForm::Shape::Trivial;
    return out;
  }

  std::vector<FixedPointSet> fixed;
  fixed.reserve(nonid.size());
  for (const auto* g : nonid) fixed.push_back(fixed_points(*g, tol));

  // Common fixed points across all non-identity generators.
  std::vector<SpherePoint> common = fixed[0].points;
  for (std::size_t i = 1; i < fixed.size() && !common.empty(); ++i) {
    std::vector<SpherePoint> next;
    for (const auto& p : common)
      for (const auto& q : fixed[i].points)
        if (sphere_eq(p, q, tol)) next.push_back(p);
    common = std::move(next);
  }

  auto apply = [&](const Moebius& t) {
    out.conjugator = t;
    for (auto& g : out.gens) g = conjugate(t, g);
  };

  if (common.size() >= 2) {
    SpherePoint p = common[0], q = common[1];
    if (sphere_less(q, p)) std::swap(p, q);  // smaller lexicographic point to 0
    apply(map_pair_to_zero_inf(p, q, tol));
    out.shape = NormalForm::Shape::Diagonal;
    return out;
  }
  if (common.size() == 1) {
    const SpherePoint& p = common[0];
    if (!p.is_infinity()) apply(Moebius(kZero, kOne, kOne, -p.z(), tol));
    out.shape = NormalForm::Shape::UpperTriangular;
    return out;
  }

  // Klein-four configuration: commuting involutions with three distinct axes.
  bool klein = true;
  for (const auto* g : nonid)
    if (!is_involution(*g, tol)) klein = false;
  if (klein) {
    for (std::size_t i = 0; i + 1 < nonid.size() && klein; ++i)
      for (std::size_t j = i + 1; j < nonid.size() && klein; ++j)
        if (commuting_pair_class(*nonid[i], *nonid[j], tol) == PairClass::NotCommuting)
          klein = false;
  }
  if (klein) {
    std::size_t second = 0;
    for (std::size_t j = 1; j < nonid.size(); ++j) {
      if (fixed_sets_disjoint(fixed[0], fixed[j], tol)) {
        second = j;
        break;
      }
    }
    if (second != 0) {
      SpherePoint p = fixed[0].points[0];
      SpherePoint q = fixed[0].points.size() > 1 ? fixed[0].points[1] : SpherePoint::infinity();
      if (sphere_less(q, p)) std::swap(p, q);
      SpherePoint r = fixed[second].points[0];
      SpherePoint s = fixed[second].points.size() > 1 ? fixed[second].points[1]
                                                      : SpherePoint::infinity();
      if (sphere_less(s, r)) std::swap(r, s);
      apply(map_to_zero_inf_one(p, q, r, tol));
      out.shape = NormalForm::Shape::KleinFour;
      return out;
    }
  }

  out.shape = NormalForm::Shape::General;
  return out;
}

}  // namespace homstruct
