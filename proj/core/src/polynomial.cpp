#include "moebius/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace moebius {

namespace {

// Exact division guard for the relations that force an integer result.
Integer exact_divide(const Integer& value, unsigned divisor) {
  if (value % divisor != 0) {
    throw std::logic_error("index relation produced a non-integer value");
  }
  return value / divisor;
}

}  // namespace

HosoyaPolynomial::HosoyaPolynomial(std::vector<std::uint64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument(
        "Hosoya polynomial requires at least one coefficient");
  }
  if (coefficients_.back() == 0) {
    throw std::invalid_argument(
        "Hosoya polynomial: coefficient at k = diameter must be positive");
  }
}

std::uint64_t HosoyaPolynomial::coefficient(std::size_t k) const {
  if (k == 0 || k > coefficients_.size()) {
    throw std::out_of_range("Hosoya coefficient index outside 1..diameter");
  }
  return coefficients_[k - 1];
}

Integer HosoyaPolynomial::pair_count() const {
  Integer total = 0;
  for (std::uint64_t c : coefficients_) total += c;
  return total;
}

Rational evaluate(const HosoyaPolynomial& p, const Rational& x) {
  // Horner over c_D..c_1, then one extra factor x: there is no constant term.
  Rational acc = 0;
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + Integer(*it);
  }
  return acc * x;
}

Rational wiener(const HosoyaPolynomial& p) {
  Integer acc = 0;
  std::size_t k = 1;
  for (std::uint64_t c : p.coefficients()) {
    acc += Integer(k) * c;
    ++k;
  }
  return Rational(acc);
}

Rational hyper_wiener(const HosoyaPolynomial& p) {
  Integer acc = 0;
  std::size_t k = 1;
  for (std::uint64_t c : p.coefficients()) {
    acc += Integer(k) * (k + 1) * c;
    ++k;
  }
  return Rational(exact_divide(acc, 2));
}

Rational harary(const HosoyaPolynomial& p) {
  Rational acc = 0;
  std::size_t k = 1;
  for (std::uint64_t c : p.coefficients()) {
    acc += Rational(Integer(c), Integer(k));
    ++k;
  }
  return acc;
}

Rational tsz(const HosoyaPolynomial& p) {
  Integer acc = 0;
  std::size_t k = 1;
  for (std::uint64_t c : p.coefficients()) {
    acc += Integer(k) * (k + 1) * (k + 2) * c;
    ++k;
  }
  return Rational(exact_divide(acc, 6));
}

IndexReport indices_from_polynomial(const HosoyaPolynomial& p) {
  return IndexReport{
      .wiener = wiener(p),
      .hyper_wiener = hyper_wiener(p),
      .harary = harary(p),
      .tsz = tsz(p),
      .source = IndexSource::FromPolynomial,
  };
}

}  // namespace moebius
