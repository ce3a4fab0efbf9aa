#include "homstruct/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace homstruct {

namespace {

std::complex<double> to_double(const Rational& re, const Rational& im) {
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace

ComplexScalar ComplexScalar::exact(Rational re, Rational im) {
  ComplexScalar z;
  z.exact_ = true;
  z.re_q_ = std::move(re);
  z.im_q_ = std::move(im);
  z.val_ = to_double(z.re_q_, z.im_q_);
  return z;
}

ComplexScalar ComplexScalar::exact_int(long re, long im) {
  return exact(Rational(re), Rational(im));
}

ComplexScalar ComplexScalar::approx(std::complex<double> v) {
  ComplexScalar z;
  z.exact_ = false;
  z.val_ = v;
  return z;
}

ComplexScalar ComplexScalar::approx(double re, double im) {
  return approx(std::complex<double>(re, im));
}

ComplexScalar ComplexScalar::conj() const {
  if (exact_) return exact(re_q_, -im_q_);
  return approx(std::conj(val_));
}

ComplexScalar ComplexScalar::norm2() const {
  if (exact_) return exact(re_q_ * re_q_ + im_q_ * im_q_);
  return approx(std::norm(val_));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt sn = boost::multiprecision::sqrt(num);
  if (sn * sn != num) return std::nullopt;
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

ComplexScalar ComplexScalar::sqrt() const {
  if (exact_) {
    if (im_q_ == 0) {
      if (re_q_ >= 0) {
        if (auto r = rational_sqrt(re_q_)) return exact(*r);
      } else {
        if (auto r = rational_sqrt(-re_q_)) return exact(Rational(0), *r);
      }
    } else {
      // sqrt(a+bi) = s + t i with s^2 = (|z|+a)/2, t^2 = (|z|-a)/2,
      // sign(t) = sign(b); rational iff all three square roots are.
      const Rational n2 = re_q_ * re_q_ + im_q_ * im_q_;
      if (auto r = rational_sqrt(n2)) {
        auto s = rational_sqrt((*r + re_q_) / 2);
        auto t = rational_sqrt((*r - re_q_) / 2);
        if (s && t) {
          Rational ti = (im_q_ > 0) ? *t : Rational(-*t);
          return exact(*s, ti);
        }
      }
    }
  }
  return approx(std::sqrt(val_));
}

ComplexScalar ComplexScalar::pow_int(long k) const {
  ComplexScalar base = *this;
  if (k < 0) {
    base = ComplexScalar::exact_int(1) / base;
    k = -k;
  }
  ComplexScalar out = ComplexScalar::exact_int(1);
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool ComplexScalar::is_zero(const Tolerance& tol) const {
  if (exact_) return re_q_ == 0 && im_q_ == 0;
  return std::abs(val_) <= tol.eps;
}

ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact_ && b.exact_) return ComplexScalar::exact(a.re_q_ + b.re_q_, a.im_q_ + b.im_q_);
  return ComplexScalar::approx(a.val_ + b.val_);
}

ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact_ && b.exact_) return ComplexScalar::exact(a.re_q_ - b.re_q_, a.im_q_ - b.im_q_);
  return ComplexScalar::approx(a.val_ - b.val_);
}

ComplexScalar operator-(const ComplexScalar& a) {
  if (a.exact_) return ComplexScalar::exact(-a.re_q_, -a.im_q_);
  return ComplexScalar::approx(-a.val_);
}

ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact_ && b.exact_) {
    return ComplexScalar::exact(a.re_q_ * b.re_q_ - a.im_q_ * b.im_q_,
                                a.re_q_ * b.im_q_ + a.im_q_ * b.re_q_);
  }
  return ComplexScalar::approx(a.val_ * b.val_);
}

ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact_ && b.exact_) {
    const Rational n2 = b.re_q_ * b.re_q_ + b.im_q_ * b.im_q_;
    if (n2 == 0) throw Error("division_by_zero", "division by exact zero");
    return ComplexScalar::exact((a.re_q_ * b.re_q_ + a.im_q_ * b.im_q_) / n2,
                                (a.im_q_ * b.re_q_ - a.re_q_ * b.im_q_) / n2);
  }
  if (b.val_ == std::complex<double>(0.0, 0.0))
    throw Error("division_by_zero", "division by zero");
  return ComplexScalar::approx(a.val_ / b.val_);
}

std::string rational_str(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const BigInt num(text.substr(0, slash));
      const BigInt den(text.substr(slash + 1));
      if (den == 0) return std::nullopt;
      return Rational(num, den);
    }
    // Decimal literal: sign, digits, optional fraction, optional exponent.
    std::string digits;
    long exp10 = 0;
    bool neg = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
    }
    bool seen_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c >= '0' && c <= '9') {
        digits.push_back(c);
        seen_digit = true;
        if (seen_dot) --exp10;
      } else if (c == '.' && !seen_dot) {
        seen_dot = true;
      } else if ((c == 'e' || c == 'E') && seen_digit) {
        exp10 += std::stol(text.substr(i + 1));
        break;
      } else {
        return std::nullopt;
      }
    }
    if (!seen_digit) return std::nullopt;
    BigInt mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    Rational out(mant);
    BigInt pow10 = 1;
    for (long k = 0; k < std::labs(exp10); ++k) pow10 *= 10;
    if (exp10 >= 0)
      out *= Rational(pow10);
    else
      out /= Rational(pow10);
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string ComplexScalar::str() const {
  if (exact_) return rational_str(re_q_) + (im_q_ >= 0 ? "+" : "") + rational_str(im_q_) + "i";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", val_.real(), val_.imag());
  return buf;
}

bool approx_eq(const ComplexScalar& a, const ComplexScalar& b, const Tolerance& tol) {
  if (a.is_exact() && b.is_exact())
    return a.re_rational() == b.re_rational() && a.im_rational() == b.im_rational();
  return std::abs(a.value() - b.value()) <= tol.eps;
}

std::optional<int> root_of_unity_order(const ComplexScalar& z, int max_order,
                                       const Tolerance& tol) {
  if (max_order < 1) throw Error("invalid_bound", "max_order must be >= 1");
  if (z.is_exact()) {
    if (z.norm2().re_rational() != 1) return std::nullopt;
    ComplexScalar p = z;
    const ComplexScalar one = ComplexScalar::exact_int(1);
    for (int n = 1; n <= max_order; ++n) {
      if (approx_eq(p, one, tol)) return n;
      p = p * z;
    }
    return std::nullopt;
  }
  if (std::abs(std::abs(z.value()) - 1.0) > tol.eps) return std::nullopt;
  std::complex<double> p = z.value();
  for (int n = 1; n <= max_order; ++n) {
    if (std::abs(p - std::complex<double>(1.0, 0.0)) <= n * tol.eps) return n;
    p *= z.value();
  }
  return std::nullopt;
}

ComplexScalar root_of_unity(int n) {
  if (n <= 0) throw Error("invalid_params", "root order must be positive");
  switch (n) {
    case 1:
      return ComplexScalar::exact_int(1);
    case 2:
      return ComplexScalar::exact_int(-1);
    case 4:
      return ComplexScalar::exact_int(0, 1);
    default: {
      const double t = 2.0 * std::numbers::pi / n;
      return ComplexScalar::approx(std::cos(t), std::sin(t));
    }
  }
}

std::uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::complex<double> Rng::box(double re_lo, double re_hi, double im_lo, double im_hi) {
  return {range(re_lo, re_hi), range(im_lo, im_hi)};
}

}  // namespace homstruct
