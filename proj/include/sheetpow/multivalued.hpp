#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sheetpow/polar.hpp"

namespace sheetpow {

/// alpha = p/q in lowest terms with q >= 1. The constructor reduces and
/// normalizes the sign into p; q = 0 is rejected.
class RationalExponent {
 public:
  RationalExponent(std::int64_t p, std::int64_t q);

  [[nodiscard]] std::int64_t p() const { return p_; }
  [[nodiscard]] std::int64_t q() const { return q_; }
  [[nodiscard]] double value() const {
    return static_cast<double>(p_) / static_cast<double>(q_);
  }
  [[nodiscard]] bool is_integer() const { return q_ == 1; }

  friend bool operator==(const RationalExponent&, const RationalExponent&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// The finite set of values of a multivalued power, one per branch index k.
/// `arguments` holds the unreduced angle each value was generated with.
struct ValueSet {
  std::vector<RectComplex> values;
  std::vector<std::int64_t> k_index;
  std::vector<double> arguments;
  double modulus = 0.0;

  [[nodiscard]] std::size_t size() const { return values.size(); }
};

/// |z|^{1/n} e^{i(Arg z + 2k pi)/n}, k = 0..n-1. Throws DomainError on z = 0.
ValueSet nth_roots(RectComplex z, std::uint32_t n);

/// |z|^{p/q} e^{i(Arg z + 2k pi) p/q}, k = 0..q-1. Throws DomainError on z = 0.
ValueSet rational_pow_values(RectComplex z, RationalExponent e);

class NoMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbiguousMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultMatchTolerance = 1e-9;

/// Finds the bijection sigma with |a[i] - b[sigma(i)]| <= tol. Returns the
/// pairs (i, sigma(i)) ordered by i.
///
/// Values are compared in rectangular form, so arguments that differ by a
/// multiple of 2 pi compare equal. Throws NoMatch when some a[i] (or some
/// b[j]) has no partner and AmbiguousMatch when a[i] has two candidates.
std::vector<std::pair<std::size_t, std::size_t>> match_permutation(
    const ValueSet& a, const ValueSet& b, double tol = kDefaultMatchTolerance);

}  // namespace sheetpow
