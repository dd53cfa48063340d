#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moebius/polynomial.hpp"
#include "moebius/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

using moebius::evaluate;
using moebius::harary;
using moebius::HosoyaPolynomial;
using moebius::hyper_wiener;
using moebius::IndexSource;
using moebius::indices_from_polynomial;
using moebius::Integer;
using moebius::Rational;
using moebius::tsz;
using moebius::wiener;

namespace {
const HosoyaPolynomial kM103{{45, 72, 81, 81, 72}};  // M(10,3)
const HosoyaPolynomial kM43{{15, 21}};               // M(4,3)
const HosoyaPolynomial kEdge{{1}};                   // K_2
}  // namespace

TEST_CASE("construction rejects empty and zero-leading sequences") {
  const std::vector<std::uint64_t> empty;
  const std::vector<std::uint64_t> zero_led{3, 0};
  const std::vector<std::uint64_t> zero_inside{3, 0, 1};
  CHECK_THROWS_AS(HosoyaPolynomial{empty}, std::invalid_argument);
  CHECK_THROWS_AS(HosoyaPolynomial{zero_led}, std::invalid_argument);
  CHECK(HosoyaPolynomial{zero_inside}.diameter() == 3);
}

TEST_CASE("coefficient access is 1-based") {
  CHECK(kM103.coefficient(1) == 45);
  CHECK(kM103.coefficient(5) == 72);
  CHECK_THROWS_AS(kM103.coefficient(0), std::out_of_range);
  CHECK_THROWS_AS(kM103.coefficient(6), std::out_of_range);
  CHECK(kM103.diameter() == 5);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(kM103, Rational(1)) == Rational(351));  // = C(27,2)
  CHECK(evaluate(kM43, Rational(0)) == Rational(0));
  CHECK(evaluate(kEdge, Rational(1)) == Rational(1));
  CHECK(evaluate(kM43, Rational(1, 2)) == Rational(15, 2) + Rational(21, 4));
  CHECK(kM103.pair_count() == 351);
}

TEST_CASE("wiener") {
  CHECK(wiener(kM103) == Rational(1116));
  CHECK(wiener(kM43) == Rational(57));
  CHECK(wiener(kEdge) == Rational(1));
}

TEST_CASE("hyper_wiener") {
  CHECK(hyper_wiener(kM103) == Rational(2637));
  CHECK(hyper_wiener(kM43) == Rational(78));
  CHECK(hyper_wiener(kEdge) == Rational(1));
}

TEST_CASE("harary") {
  CHECK(harary(kM103) == Rational(2853, 20));
  CHECK(harary(kM43) == Rational(51, 2));
  CHECK(harary(kEdge) == Rational(1));
}

TEST_CASE("tsz") {
  CHECK(tsz(kM103) == Rational(5283));
  CHECK(tsz(kM43) == Rational(99));
  CHECK(tsz(kEdge) == Rational(1));
}

TEST_CASE("indices_from_polynomial bundles the four relations") {
  const auto report = indices_from_polynomial(kM103);
  CHECK(report.wiener == Rational(1116));
  CHECK(report.hyper_wiener == Rational(2637));
  CHECK(report.harary == Rational(2853, 20));
  CHECK(report.tsz == Rational(5283));
  CHECK(report.source == IndexSource::FromPolynomial);

  const auto small = indices_from_polynomial(kM43);
  CHECK(small.wiener == Rational(57));
  CHECK(small.hyper_wiener == Rational(78));
  CHECK(small.harary == Rational(51, 2));
  CHECK(small.tsz == Rational(99));

  const auto edge = indices_from_polynomial(kEdge);
  CHECK(edge.wiener == Rational(1));
  CHECK(edge.hyper_wiener == Rational(1));
  CHECK(edge.harary == Rational(1));
  CHECK(edge.tsz == Rational(1));
}

TEST_CASE("W, WW and TSZ are integral for random coefficient sequences") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> coeff(0, 5000);
  std::uniform_int_distribution<std::size_t> length(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> coeffs(length(rng));
    for (auto& c : coeffs) c = coeff(rng);
    coeffs.back() = coeff(rng) + 1;
    const HosoyaPolynomial p(coeffs);
    CHECK(moebius::is_integer(wiener(p)));
    CHECK(moebius::is_integer(hyper_wiener(p)));
    CHECK(moebius::is_integer(tsz(p)));
    // Derivative/summation identities on the raw coefficients.
    Rational w = 0, ww = 0, ha = 0, t = 0;
    for (std::size_t k = 1; k <= coeffs.size(); ++k) {
      const Integer c = coeffs[k - 1];
      w += Rational(c * k);
      ww += Rational(c * k * (k + 1), 2);
      ha += Rational(c, k);
      t += Rational(c * k * (k + 1) * (k + 2), 6);
    }
    CHECK(wiener(p) == w);
    CHECK(hyper_wiener(p) == ww);
    CHECK(harary(p) == ha);
    CHECK(tsz(p) == t);
  }
}

TEST_CASE("evaluate at 1 equals the coefficient sum") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> coeffs(1 + trial % 12);
    for (auto& c : coeffs) c = coeff(rng);
    const HosoyaPolynomial p(coeffs);
    CHECK(evaluate(p, Rational(1)) == Rational(p.pair_count()));
  }
}

TEST_CASE("rational rendering") {
  CHECK(moebius::to_fraction_string(Rational(2853, 20)) == "2853/20");
  CHECK(moebius::to_fraction_string(Rational(1116)) == "1116");
  CHECK(moebius::to_fraction_string(Rational(-3, 6)) == "-1/2");
  CHECK(moebius::to_decimal_string(Rational(2853, 20)) == "142.65");
  CHECK(moebius::is_integer(Rational(8, 4)));
  CHECK_FALSE(moebius::is_integer(Rational(1, 3)));
}
