#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sheetpow {

/// Raised when an operation is evaluated outside its domain (log of zero,
/// a non-positive power of zero, non-finite components, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A complex number a+bi with finite components.
class RectComplex {
 public:
  constexpr RectComplex() = default;
  RectComplex(double re, double im = 0.0);  // NOLINT: implicit from real is intended

  [[nodiscard]] constexpr double re() const { return re_; }
  [[nodiscard]] constexpr double im() const { return im_; }

  [[nodiscard]] constexpr bool is_zero() const { return re_ == 0.0 && im_ == 0.0; }
  /// Squared modulus re^2 + im^2.
  [[nodiscard]] constexpr double norm() const { return re_ * re_ + im_ * im_; }

  friend RectComplex operator+(RectComplex a, RectComplex b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend RectComplex operator-(RectComplex a, RectComplex b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend RectComplex operator-(RectComplex a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const RectComplex&, const RectComplex&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

/// z = r e^{i theta}. No range restriction on theta; `to_polar` produces the
/// principal argument.
struct PolarComplex {
  double r = 0.0;
  double theta = 0.0;
};

/// (a+bi)(c+di) = (ac-bd) + (ad+bc)i, evaluated literally.
RectComplex rect_mul(RectComplex z1, RectComplex z2);

/// |z|, robust against intermediate overflow.
double modulus(RectComplex z);

/// Principal argument in (-pi, pi]. Points on the negative real axis map to
/// +pi regardless of the sign of a zero imaginary part; Arg(0) = 0.
double principal_arg(RectComplex z);

/// Modulus and principal argument. to_polar(0) = (0, 0).
PolarComplex to_polar(RectComplex z);

RectComplex to_rect(PolarComplex p);

/// ln|z| + i Arg(z). Throws DomainError for z = 0.
RectComplex principal_log(RectComplex z);

/// e^{z}.
RectComplex complex_exp(RectComplex z);

/// z multiplied by itself n times through `rect_mul`; z^0 = 1.
RectComplex int_pow_rect(RectComplex z, std::uint32_t n);

/// r^n e^{i n theta}, back in rectangular form.
RectComplex int_pow_polar(RectComplex z, std::uint32_t n);

/// Principal power e^{alpha Log z}, computed as |z|^alpha e^{i alpha Arg z}.
/// 0^alpha = 0 for alpha > 0; throws DomainError for z = 0, alpha <= 0.
RectComplex principal_pow(RectComplex z, double alpha);

/// Shortest round-trip decimal; negative zero prints as "0".
std::string format_real(double x);

/// Shortest round-trip text such as "-46+9i" or "0.5-2i".
std::string format_complex(RectComplex z);

/// Parses "a+bi", "a-bi", "bi" or "a". Throws std::invalid_argument.
RectComplex parse_complex(const std::string& text);

}  // namespace sheetpow
