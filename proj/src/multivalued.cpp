#include "sheetpow/multivalued.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace sheetpow {

RationalExponent::RationalExponent(std::int64_t p, std::int64_t q) {
  if (q == 0) {
    throw std::invalid_argument("rational exponent with zero denominator");
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

namespace {

ValueSet branch_values(RectComplex z, double scale, std::int64_t count) {
  if (z.is_zero()) {
    throw DomainError("multivalued power of zero");
  }
  const PolarComplex base = to_polar(z);
  ValueSet set;
  set.modulus = std::pow(base.r, scale);
  set.values.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = 0; k < count; ++k) {
    const double arg = (base.theta + 2.0 * std::numbers::pi * static_cast<double>(k)) * scale;
    set.values.push_back(to_rect({set.modulus, arg}));
    set.k_index.push_back(k);
    set.arguments.push_back(arg);
  }
  return set;
}

}  // namespace

ValueSet nth_roots(RectComplex z, std::uint32_t n) {
  if (n == 0) {
    throw std::invalid_argument("root order must be positive");
  }
  return branch_values(z, 1.0 / static_cast<double>(n), n);
}

ValueSet rational_pow_values(RectComplex z, RationalExponent e) {
  return branch_values(z, e.value(), e.q());
}

std::vector<std::pair<std::size_t, std::size_t>> match_permutation(const ValueSet& a,
                                                                   const ValueSet& b,
                                                                   double tol) {
  if (a.size() != b.size()) {
    throw NoMatch("value sets differ in size");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t found = b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (modulus(a.values[i] - b.values[j]) > tol) {
        continue;
      }
      if (found != b.size()) {
        throw AmbiguousMatch("value " + std::to_string(i) + " has several candidates");
      }
      found = j;
    }
    if (found == b.size()) {
      throw NoMatch("value " + std::to_string(i) + " has no partner");
    }
    if (used[found]) {
      throw NoMatch("partner " + std::to_string(found) + " matched twice");
    }
    used[found] = true;
    pairs.emplace_back(i, found);
  }
  return pairs;
}

}  // namespace sheetpow
