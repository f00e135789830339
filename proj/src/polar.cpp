#include "sheetpow/polar.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string_view>

namespace sheetpow {

RectComplex::RectComplex(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("complex component is not finite");
  }
}

RectComplex rect_mul(RectComplex z1, RectComplex z2) {
  const double a = z1.re(), b = z1.im();
  const double c = z2.re(), d = z2.im();
  return {a * c - b * d, a * d + b * c};
}

double modulus(RectComplex z) { return std::hypot(z.re(), z.im()); }

double principal_arg(RectComplex z) {
  if (z.is_zero()) {
    return 0.0;
  }
  // atan2(-0.0, x<0) is -pi, outside (-pi, pi].
  const double im = z.im() == 0.0 ? 0.0 : z.im();
  return std::atan2(im, z.re());
}

PolarComplex to_polar(RectComplex z) { return {modulus(z), principal_arg(z)}; }

RectComplex to_rect(PolarComplex p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

RectComplex principal_log(RectComplex z) {
  if (z.is_zero()) {
    throw DomainError("logarithm of zero is undefined");
  }
  return {std::log(modulus(z)), principal_arg(z)};
}

RectComplex complex_exp(RectComplex z) {
  return to_rect({std::exp(z.re()), z.im()});
}

RectComplex int_pow_rect(RectComplex z, std::uint32_t n) {
  RectComplex acc{1.0, 0.0};
  for (std::uint32_t k = 0; k < n; ++k) {
    acc = rect_mul(acc, z);
  }
  return acc;
}

RectComplex int_pow_polar(RectComplex z, std::uint32_t n) {
  if (n == 0) {
    return {1.0, 0.0};
  }
  const PolarComplex p = to_polar(z);
  const double k = static_cast<double>(n);
  return to_rect({std::pow(p.r, k), k * p.theta});
}

RectComplex principal_pow(RectComplex z, double alpha) {
  if (z.is_zero()) {
    if (alpha > 0.0) {
      return {};
    }
    throw DomainError("zero raised to a non-positive power");
  }
  const PolarComplex p = to_polar(z);
  return to_rect({std::pow(p.r, alpha), alpha * p.theta});
}

std::string format_real(double x) {
  if (x == 0.0) {
    x = 0.0;  // drop the sign of negative zero
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

namespace {

double parse_real(std::string_view s, const std::string& whole) {
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("malformed complex literal: '" + whole + "'");
  }
  return value;
}

}  // namespace

std::string format_complex(RectComplex z) {
  std::string out = format_real(z.re());
  const std::string im = format_real(z.im());
  if (im.front() != '-') {
    out += '+';
  }
  out += im;
  out += 'i';
  return out;
}

RectComplex parse_complex(const std::string& text) {
  const std::string_view s{text};
  if (s.empty()) {
    throw std::invalid_argument("empty complex literal");
  }
  if (s.back() != 'i') {
    return {parse_real(s, text), 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // The split is the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {0.0, parse_real(body, text)};
  }
  return {parse_real(body.substr(0, split), text), parse_real(body.substr(split), text)};
}

}  // namespace sheetpow
