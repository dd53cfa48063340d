#pragma once

#include "moebius/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moebius {

/// Distance-counting polynomial H(G,x) = sum_{k=1..D} c_k x^k of a connected
/// graph G with diameter D: c_k is the number of unordered vertex pairs at
/// distance exactly k. There is no constant term; c_1 is the edge count and
/// the coefficients sum to C(V,2).
class HosoyaPolynomial {
 public:
  // coefficients[i] holds c_{i+1}. Requires a nonempty sequence whose last
  // (k = diameter) entry is positive.
  explicit HosoyaPolynomial(std::vector<std::uint64_t> coefficients);

  std::size_t diameter() const noexcept { return coefficients_.size(); }

  // 1-based: coefficient(k) is c_k for k in 1..diameter().
  std::uint64_t coefficient(std::size_t k) const;

  const std::vector<std::uint64_t>& coefficients() const noexcept {
    return coefficients_;
  }

  // Sum of all coefficients; equals C(V,2) for a polynomial built from a graph.
  Integer pair_count() const;

  bool operator==(const HosoyaPolynomial& other) const = default;

 private:
  std::vector<std::uint64_t> coefficients_;
};

enum class IndexSource { FromPolynomial, ClosedForm };

/// The four distance-based indices as exact rationals.
struct IndexReport {
  Rational wiener;
  Rational hyper_wiener;
  Rational harary;
  Rational tsz;
  IndexSource source = IndexSource::FromPolynomial;
};

// H(p, x), evaluated exactly.
Rational evaluate(const HosoyaPolynomial& p, const Rational& x);

// W = H'(1) = sum_k k c_k. Integral for every coefficient sequence.
Rational wiener(const HosoyaPolynomial& p);

// WW = 1/2 (x H)''(1) = 1/2 sum_k k(k+1) c_k. Integral: k(k+1) is even.
Rational hyper_wiener(const HosoyaPolynomial& p);

// Ha = integral over [0,1] of H(x)/x = sum_k c_k / k.
Rational harary(const HosoyaPolynomial& p);

// TSZ = 1/3! (x^2 H)'''(1) = 1/6 sum_k k(k+1)(k+2) c_k. Integral: three
// consecutive factors are divisible by 6.
Rational tsz(const HosoyaPolynomial& p);

// Bundles the four relations above with source = FromPolynomial.
IndexReport indices_from_polynomial(const HosoyaPolynomial& p);

}  // namespace moebius
