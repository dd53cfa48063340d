#include "moebius/verify.hpp"

#include "moebius/closed_forms.hpp"
#include "moebius/graph.hpp"
#include "moebius/ladder.hpp"
#include "moebius/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace moebius {

namespace {

std::string render_coefficients(const std::vector<std::uint64_t>& coeffs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out << ' ';
    out << coeffs[i];
  }
  out << ']';
  return out.str();
}

std::string render_indices(const Rational& w, const Rational& ww,
                           const Rational& ha, const Rational& t) {
  std::ostringstream out;
  out << "W=" << to_fraction_string(w) << " WW=" << to_fraction_string(ww)
      << " Ha=" << to_fraction_string(ha) << " TSZ=" << to_fraction_string(t);
  return out.str();
}

std::string render_dimensions(VertexId n) {
  return std::to_string(n) + "x" + std::to_string(n) + " matrix";
}

Check compare(std::string_view name, std::string expected, std::string actual) {
  Check check;
  check.name = std::string(name);
  check.status =
      expected == actual ? CheckStatus::Match : CheckStatus::Mismatch;
  check.expected = std::move(expected);
  check.actual = std::move(actual);
  return check;
}

Check skipped(std::string_view name) {
  Check check;
  check.name = std::string(name);
  check.status = CheckStatus::Skipped;
  return check;
}

bool blocks_applicable(std::uint32_t m) {
  return (m % 2 == 0) ? m >= 6 : m >= 7;
}

}  // namespace

bool is_known_discrepancy(std::string_view check_name) {
  return std::find(known_discrepancies.begin(), known_discrepancies.end(),
                   check_name) != known_discrepancies.end();
}

Overall VerificationReport::overall() const noexcept {
  for (const Check& check : checks) {
    if (check.status == CheckStatus::Mismatch) return Overall::HasMismatch;
  }
  return Overall::AllMatch;
}

bool VerificationReport::has_unexpected_mismatch() const noexcept {
  for (const Check& check : checks) {
    if (check.status == CheckStatus::Mismatch &&
        !is_known_discrepancy(check.name)) {
      return true;
    }
  }
  return false;
}

VerificationReport verify_hosoya(std::uint32_t m) {
  const HosoyaPolynomial oracle = hosoya_polynomial(build_ladder({m, 3}));
  const HosoyaPolynomial closed = hosoya_coeffs_closed(m);

  VerificationReport report;
  report.m = m;
  report.checks.push_back(compare(check_names::hosoya,
                                  render_coefficients(oracle.coefficients()),
                                  render_coefficients(closed.coefficients())));
  return report;
}

VerificationReport verify_blocks(std::uint32_t m) {
  if (!blocks_applicable(m)) {
    throw std::invalid_argument(
        "block verification requires even m >= 6 or odd m >= 7");
  }
  const DistanceMatrix from_bfs = distance_matrix(build_ladder({m, 3}));
  const DistanceMatrix from_blocks = assemble_block_distance_matrix(m);

  VerificationReport report;
  report.m = m;
  if (from_bfs == from_blocks) {
    const std::string digest = render_dimensions(from_bfs.size());
    report.checks.push_back(compare(check_names::blocks, digest, digest));
    return report;
  }
  // Name the first differing entry with both values.
  for (VertexId i = 0; i < from_bfs.size(); ++i) {
    for (VertexId j = 0; j < from_bfs.size(); ++j) {
      if (from_bfs(i, j) != from_blocks(i, j)) {
        const std::string where =
            "(" + std::to_string(i) + "," + std::to_string(j) + ")=";
        report.checks.push_back(compare(
            check_names::blocks, where + std::to_string(from_bfs(i, j)),
            where + std::to_string(from_blocks(i, j))));
        return report;
      }
    }
  }
  throw std::logic_error("distance matrices differ but no entry differs");
}

VerificationReport verify_indices(std::uint32_t m) {
  if (!blocks_applicable(m)) {
    throw std::invalid_argument(
        "index verification requires even m >= 6 or odd m >= 7");
  }
  const Graph ladder = build_ladder({m, 3});
  const IndexReport from_poly =
      indices_from_polynomial(hosoya_polynomial(ladder));
  const IndexReport closed = indices_closed(m);

  VerificationReport report;
  report.m = m;
  report.checks.push_back(compare(check_names::wiener,
                                  to_fraction_string(from_poly.wiener),
                                  to_fraction_string(closed.wiener)));
  report.checks.push_back(compare(check_names::hyper_wiener,
                                  to_fraction_string(from_poly.hyper_wiener),
                                  to_fraction_string(closed.hyper_wiener)));
  report.checks.push_back(compare(check_names::harary,
                                  to_fraction_string(from_poly.harary),
                                  to_fraction_string(closed.harary)));
  report.checks.push_back(compare(check_names::tsz,
                                  to_fraction_string(from_poly.tsz),
                                  to_fraction_string(closed.tsz)));

  // Internal consistency anchor: the polynomial relations must reproduce
  // the direct summations over the distance table.
  const DistanceMatrix distances = distance_matrix(ladder);
  report.checks.push_back(
      compare(check_names::direct,
              render_indices(wiener_from_distances(distances),
                             hyper_wiener_from_distances(distances),
                             harary_from_distances(distances),
                             tsz_from_distances(distances)),
              render_indices(from_poly.wiener, from_poly.hyper_wiener,
                             from_poly.harary, from_poly.tsz)));
  return report;
}

std::vector<VerificationReport> sweep(std::uint32_t m_min, std::uint32_t m_max) {
  if (m_min < 4 || m_min > m_max) {
    throw std::invalid_argument("sweep requires 4 <= m_min <= m_max");
  }
  std::vector<VerificationReport> reports;
  reports.reserve(m_max - m_min + 1);
  for (std::uint32_t m = m_min; m <= m_max; ++m) {
    VerificationReport combined;
    combined.m = m;
    auto append = [&combined](VerificationReport&& part) {
      for (Check& check : part.checks) {
        combined.checks.push_back(std::move(check));
      }
    };
    append(verify_hosoya(m));
    if (blocks_applicable(m)) {
      append(verify_blocks(m));
      append(verify_indices(m));
    } else {
      combined.checks.push_back(skipped(check_names::blocks));
      combined.checks.push_back(skipped(check_names::wiener));
      combined.checks.push_back(skipped(check_names::hyper_wiener));
      combined.checks.push_back(skipped(check_names::harary));
      combined.checks.push_back(skipped(check_names::tsz));
      combined.checks.push_back(skipped(check_names::direct));
    }
    reports.push_back(std::move(combined));
  }
  return reports;
}

}  // namespace moebius
