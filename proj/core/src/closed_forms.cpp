#include "moebius/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace moebius {

namespace {

// sum_{i=3}^{upper} 1/i; zero when upper < 3.
Rational harmonic_from_3(std::uint32_t upper) {
  Rational acc = 0;
  for (std::uint32_t i = 3; i <= upper; ++i) acc += Rational(1, i);
  return acc;
}

}  // namespace

ParityCase classify_m(std::uint32_t m) {
  if (m < 4) {
    throw std::invalid_argument("closed forms require m >= 4 (got m = " +
                                std::to_string(m) + ")");
  }
  if (m == 4) return ParityCase::SpecialM4;
  if (m == 5) return ParityCase::SpecialM5;
  return m % 2 == 0 ? ParityCase::EvenM : ParityCase::OddM;
}

HosoyaPolynomial hosoya_coeffs_closed(std::uint32_t m) {
  switch (classify_m(m)) {
    case ParityCase::SpecialM4:
      return HosoyaPolynomial({15, 21});
    case ParityCase::SpecialM5:
      return HosoyaPolynomial({20, 30, 16});
    case ParityCase::EvenM: {
      const std::uint64_t base = m - 1;
      const std::size_t top = m / 2;
      std::vector<std::uint64_t> coeffs(top);
      coeffs[0] = 5 * base;
      coeffs[1] = 8 * base;
      for (std::size_t k = 3; k < top; ++k) coeffs[k - 1] = 9 * base;
      coeffs[top - 1] = 8 * base;
      return HosoyaPolynomial(std::move(coeffs));
    }
    case ParityCase::OddM: {
      const std::uint64_t base = m - 1;
      const std::size_t top = (m + 1) / 2;
      std::vector<std::uint64_t> coeffs(top);
      coeffs[0] = 5 * base;
      coeffs[1] = 8 * base;
      for (std::size_t k = 3; k + 1 < top; ++k) coeffs[k - 1] = 9 * base;
      coeffs[top - 2] = 17 * base / 2;
      coeffs[top - 1] = 4 * base;
      return HosoyaPolynomial(std::move(coeffs));
    }
  }
  throw std::logic_error("unreachable parity case");
}

IndexReport indices_closed(std::uint32_t m) {
  const ParityCase parity = classify_m(m);
  if (parity == ParityCase::SpecialM4 || parity == ParityCase::SpecialM5) {
    throw std::invalid_argument("closed-form indices require m >= 6 (got m = " +
                                std::to_string(m) + ")");
  }

  const Integer mi(m);
  const Integer m2 = mi * mi;
  const Integer m3 = m2 * mi;
  const Integer m4 = m3 * mi;

  IndexReport report;
  report.source = IndexSource::ClosedForm;

  if (parity == ParityCase::EvenM) {
    report.wiener = Rational(9 * m3 + 5 * m2 - 62 * mi + 48, 8);
    report.hyper_wiener = Rational(3 * m4, 16) + Rational(13 * m3, 16) +
                          Rational(m2, 4) - Rational(33 * mi, 4) + 7;
    report.harary = Rational(9 * mi + 7) - Rational(16, mi) +
                    Rational(9 * (mi - 1)) * harmonic_from_3((m - 2) / 2);
    report.tsz = Rational(m4, 16) + Rational(43 * m2, 24) +
                 Rational(31 * m3, 48) + Rational(19, 3) - Rational(53 * mi, 6);
  } else {
    report.wiener = Rational(9 * m3 + 5 * m2 - 53 * mi + 39, 8);
    report.hyper_wiener = Rational(3 * m4, 16) + Rational(13 * m3, 16) +
                          Rational(13 * m2, 16) - Rational(125 * mi, 16) + 6;
    // Summation bound floor((m-2)/2) = (m-3)/2 for odd m.
    report.harary = Rational(mi * (9 * mi + 25), mi + 1) +
                    Rational(9 * (mi - 1)) * harmonic_from_3((m - 3) / 2);
    report.tsz = Rational(m4, 16) + Rational(31 * m3, 48) +
                 Rational(95 * m2, 48) - Rational(133 * mi, 16) +
                 Rational(45, 8);
  }
  return report;
}

}  // namespace moebius
