#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace homstruct {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Domain error with a stable machine-readable code ("singular_matrix",
/// "outside_catalogue", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Tolerance {
  double eps = 1e-9;
  Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0)) throw Error("invalid_tolerance", "tolerance must be positive");
  }
};

/// Complex number with a dual representation: Gaussian-rational (exact) or
/// complex<double> (approx). Arithmetic between two exact values stays exact;
/// anything touching an approx value is approx. Values needing irrational
/// constants (sqrt, exp, log, hexagonal roots of unity) fall back to approx.
class ComplexScalar {
 public:
  ComplexScalar() : exact_(true), re_q_(0), im_q_(0), val_(0.0, 0.0) {}

  static ComplexScalar exact(Rational re, Rational im = Rational(0));
  static ComplexScalar exact_int(long re, long im = 0);
  static ComplexScalar approx(std::complex<double> v);
  static ComplexScalar approx(double re, double im = 0.0);

  bool is_exact() const { return exact_; }
  std::complex<double> value() const { return val_; }
  double re() const { return val_.real(); }
  double im() const { return val_.imag(); }
  const Rational& re_rational() const { return re_q_; }
  const Rational& im_rational() const { return im_q_; }

  ComplexScalar conj() const;
  /// |z|^2; exact when z is.
  ComplexScalar norm2() const;
  double abs() const { return std::abs(val_); }

  /// Principal square root. Stays exact when the value is a perfect square
  /// in the Gaussian rationals, otherwise degrades to approx.
  ComplexScalar sqrt() const;
  /// Integer power; exact inputs stay exact (negative exponents included).
  ComplexScalar pow_int(long k) const;

  ComplexScalar exp() const { return approx(std::exp(val_)); }
  ComplexScalar log() const { return approx(std::log(val_)); }

  bool is_zero(const Tolerance& tol) const;

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator-(const ComplexScalar& a);
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b);

  /// Lossless form for exact values ("3", "-1/2"); %.17g pair otherwise.
  std::string str() const;

 private:
  bool exact_;
  Rational re_q_, im_q_;
  std::complex<double> val_;
};

/// Equality under the scalar's tolerance policy: exact pairs compare exactly,
/// anything else compares as |a-b| <= eps.
bool approx_eq(const ComplexScalar& a, const ComplexScalar& b, const Tolerance& tol);

/// Smallest n <= max_order with z^n = 1, if any. In approx mode requires
/// ||z|-1| <= eps and |z^n - 1| <= n*eps (error grows linearly in the power
/// count); exact mode compares exactly.
std::optional<int> root_of_unity_order(const ComplexScalar& z, int max_order,
                                       const Tolerance& tol = Tolerance());

/// sqrt of a nonnegative rational when it is rational, i.e. numerator and
/// denominator are both perfect squares.
std::optional<Rational> rational_sqrt(const Rational& q);

std::optional<Rational> parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

/// Primitive n-th root of unity; exact for n in {1,2,4}, approx otherwise.
ComplexScalar root_of_unity(int n);

/// Deterministic uniform sampler (fixed bit recipe, not distribution-library
/// dependent, so outputs are reproducible across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next();
  double unit();  // [0, 1)
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::complex<double> box(double re_lo, double re_hi, double im_lo, double im_hi);

 private:
  std::uint64_t state_;
};

}  // namespace homstruct
