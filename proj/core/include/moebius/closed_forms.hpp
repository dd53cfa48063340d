#pragma once

#include "moebius/polynomial.hpp"

#include <cstdint>

namespace moebius {

// Which closed-form family applies to M(m,3).
enum class ParityCase { EvenM, OddM, SpecialM4, SpecialM5 };

// EvenM for even m >= 6, OddM for odd m >= 7; m = 4 and m = 5 are special
// cases with their own coefficient tables. Throws for m < 4.
ParityCase classify_m(std::uint32_t m);

// Closed-form Hosoya coefficients of M(m,3).
//   even m >= 6, top index m/2:
//     c_1 = 5(m-1), c_2 = 8(m-1), c_k = 9(m-1) for 2 < k < m/2,
//     c_{m/2} = 8(m-1)
//   odd m >= 7, top index (m+1)/2:
//     c_1 = 5(m-1), c_2 = 8(m-1), c_k = 9(m-1) for 2 < k < (m-1)/2,
//     c_{(m-1)/2} = 17(m-1)/2, c_{(m+1)/2} = 4(m-1)
//   m = 4: [15, 21]; m = 5: [20, 30, 16]
HosoyaPolynomial hosoya_coeffs_closed(std::uint32_t m);

// Closed-form index values of M(m,3) for even m >= 6 or odd m >= 7,
// evaluated in exact rational arithmetic; source = ClosedForm.
//
// The TSZ expressions are transcribed as-is even though they do not agree
// with the polynomial relation for any m; the verify module reports that
// disagreement as a known discrepancy rather than patching it here.
IndexReport indices_closed(std::uint32_t m);

}  // namespace moebius
