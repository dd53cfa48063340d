// moebius: Hosoya polynomials and distance-based topological indices of
// generalized Moebius ladders M(m,n), with cross-verification of the n=3
// closed forms against the BFS oracle.

#include "moebius/closed_forms.hpp"
#include "moebius/graph.hpp"
#include "moebius/ladder.hpp"
#include "moebius/polynomial.hpp"
#include "moebius/rational.hpp"
#include "moebius/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using moebius::BlockMatrix;
using moebius::Check;
using moebius::CheckStatus;
using moebius::DistanceMatrix;
using moebius::Graph;
using moebius::HosoyaPolynomial;
using moebius::IndexReport;
using moebius::LadderSpec;
using moebius::Overall;
using moebius::Rational;
using moebius::VerificationReport;
using moebius::VertexId;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// rendering helpers

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Fraction plus a decimal approximation when the value is not integral.
std::string rational_text(const Rational& value) {
  std::string out = moebius::to_fraction_string(value);
  if (!moebius::is_integer(value)) {
    out += " (~" + moebius::to_decimal_string(value) + ")";
  }
  return out;
}

std::string status_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Match: return "match";
    case CheckStatus::Mismatch: return "mismatch";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::string overall_string(Overall overall) {
  return overall == Overall::AllMatch ? "all_match" : "has_mismatch";
}

std::string polynomial_text(const std::vector<std::uint64_t>& coeffs) {
  std::ostringstream out;
  out << "H = ";
  bool first = true;
  for (std::size_t k = 1; k <= coeffs.size(); ++k) {
    if (coeffs[k - 1] == 0) continue;
    if (!first) out << " + ";
    out << coeffs[k - 1] << 'x';
    if (k > 1) out << '^' << k;
    first = false;
  }
  return out.str();
}

// Histogram of the upper-triangle entries of a distance table.
std::vector<std::uint64_t> coefficients_from_matrix(const DistanceMatrix& d) {
  std::vector<std::uint64_t> counts(d.max_entry(), 0);
  for (VertexId i = 0; i < d.size(); ++i) {
    for (VertexId j = i + 1; j < d.size(); ++j) ++counts[d(i, j) - 1];
  }
  return counts;
}

void emit_json(const ordered_json& value) { std::cout << value.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// poly

struct PolyOptions {
  std::uint32_t m = 0;
  std::uint32_t n = 3;
  std::string method = "bfs";
  std::string format = "text";
};

std::vector<std::uint64_t> poly_coefficients(const PolyOptions& opt) {
  if (opt.method == "bfs") {
    const Graph ladder = moebius::build_ladder({opt.m, opt.n});
    return moebius::hosoya_polynomial(ladder).coefficients();
  }
  if (opt.n != 3) {
    throw std::invalid_argument("method '" + opt.method +
                                "' requires --n 3 (got n = " +
                                std::to_string(opt.n) + ")");
  }
  if (opt.method == "closed") {
    return moebius::hosoya_coeffs_closed(opt.m).coefficients();
  }
  return coefficients_from_matrix(
      moebius::assemble_block_distance_matrix(opt.m));
}

int run_poly(const PolyOptions& opt) {
  const std::vector<std::uint64_t> coeffs = poly_coefficients(opt);
  if (opt.format == "text") {
    std::cout << polynomial_text(coeffs) << '\n';
  } else if (opt.format == "json") {
    ordered_json doc;
    doc["m"] = opt.m;
    doc["n"] = opt.n;
    doc["method"] = opt.method;
    ordered_json table = ordered_json::object();
    for (std::size_t k = 1; k <= coeffs.size(); ++k) {
      table[std::to_string(k)] = coeffs[k - 1];
    }
    doc["coefficients"] = std::move(table);
    emit_json(doc);
  } else {
    std::cout << "k,coefficient\n";
    for (std::size_t k = 1; k <= coeffs.size(); ++k) {
      std::cout << k << ',' << coeffs[k - 1] << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// indices

struct IndicesOptions {
  std::uint32_t m = 0;
  std::string source = "polynomial";
  std::string format = "text";
};

IndexReport polynomial_indices(std::uint32_t m) {
  const Graph ladder = moebius::build_ladder({m, 3});
  return moebius::indices_from_polynomial(moebius::hosoya_polynomial(ladder));
}

struct NamedIndex {
  const char* display;  // W, WW, Ha, TSZ
  const char* key;      // wiener, hyper_wiener, harary, tsz
  Rational IndexReport::*field;
};

constexpr NamedIndex kIndexTable[] = {
    {"W", "wiener", &IndexReport::wiener},
    {"WW", "hyper_wiener", &IndexReport::hyper_wiener},
    {"Ha", "harary", &IndexReport::harary},
    {"TSZ", "tsz", &IndexReport::tsz},
};

void render_single(const IndexReport& report, const IndicesOptions& opt) {
  if (opt.format == "text") {
    for (const NamedIndex& idx : kIndexTable) {
      std::cout << idx.display << " = " << rational_text(report.*(idx.field))
                << '\n';
    }
  } else if (opt.format == "json") {
    ordered_json doc;
    doc["m"] = opt.m;
    doc["source"] = opt.source;
    for (const NamedIndex& idx : kIndexTable) {
      doc[idx.key] = moebius::to_fraction_string(report.*(idx.field));
    }
    emit_json(doc);
  } else {
    std::cout << "index,value\n";
    for (const NamedIndex& idx : kIndexTable) {
      std::cout << idx.key << ','
                << csv_escape(moebius::to_fraction_string(report.*(idx.field)))
                << '\n';
    }
  }
}

void render_both(const IndexReport& poly, const IndexReport& closed,
                 const IndicesOptions& opt) {
  if (opt.format == "text") {
    for (const NamedIndex& idx : kIndexTable) {
      const Rational& lhs = poly.*(idx.field);
      const Rational& rhs = closed.*(idx.field);
      std::cout << idx.display
                << " polynomial=" << moebius::to_fraction_string(lhs)
                << " closed_form=" << moebius::to_fraction_string(rhs);
      if (lhs == rhs) {
        std::cout << " match";
      } else {
        std::cout << " MISMATCH";
        if (moebius::is_known_discrepancy(idx.key)) std::cout << " (known)";
      }
      std::cout << '\n';
    }
  } else if (opt.format == "json") {
    ordered_json doc;
    doc["m"] = opt.m;
    doc["source"] = "both";
    ordered_json lhs = ordered_json::object();
    ordered_json rhs = ordered_json::object();
    ordered_json match = ordered_json::object();
    for (const NamedIndex& idx : kIndexTable) {
      lhs[idx.key] = moebius::to_fraction_string(poly.*(idx.field));
      rhs[idx.key] = moebius::to_fraction_string(closed.*(idx.field));
      match[idx.key] = poly.*(idx.field) == closed.*(idx.field);
    }
    doc["polynomial"] = std::move(lhs);
    doc["closed_form"] = std::move(rhs);
    doc["match"] = std::move(match);
    emit_json(doc);
  } else {
    std::cout << "index,polynomial,closed_form,match\n";
    for (const NamedIndex& idx : kIndexTable) {
      const bool same = poly.*(idx.field) == closed.*(idx.field);
      std::cout << idx.key << ','
                << csv_escape(moebius::to_fraction_string(poly.*(idx.field)))
                << ','
                << csv_escape(moebius::to_fraction_string(closed.*(idx.field)))
                << ',' << (same ? "true" : "false") << '\n';
    }
  }
}

int run_indices(const IndicesOptions& opt) {
  if (opt.source == "polynomial") {
    render_single(polynomial_indices(opt.m), opt);
  } else if (opt.source == "closed") {
    render_single(moebius::indices_closed(opt.m), opt);
  } else {
    const IndexReport closed = moebius::indices_closed(opt.m);
    render_both(polynomial_indices(opt.m), closed, opt);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::uint32_t m_min = 0;
  std::uint32_t m_max = 0;
  bool strict = false;
  std::string format = "text";
};

bool check_known(const Check& check) {
  return check.status == CheckStatus::Mismatch &&
         moebius::is_known_discrepancy(check.name);
}

void render_verify_text(const std::vector<VerificationReport>& reports) {
  std::size_t total = 0;
  std::size_t mismatches = 0;
  std::size_t known = 0;
  for (const VerificationReport& report : reports) {
    std::size_t match_count = 0;
    std::size_t mismatch_count = 0;
    std::size_t known_count = 0;
    std::size_t skipped_count = 0;
    for (const Check& check : report.checks) {
      switch (check.status) {
        case CheckStatus::Match: ++match_count; break;
        case CheckStatus::Mismatch:
          ++mismatch_count;
          if (check_known(check)) ++known_count;
          break;
        case CheckStatus::Skipped: ++skipped_count; break;
      }
    }
    total += report.checks.size();
    mismatches += mismatch_count;
    known += known_count;

    std::cout << "m=" << report.m << ": " << match_count << " match, "
              << mismatch_count << " mismatch";
    if (known_count > 0) std::cout << " (" << known_count << " known)";
    if (skipped_count > 0) std::cout << ", " << skipped_count << " skipped";
    std::cout << '\n';
    for (const Check& check : report.checks) {
      std::cout << "  " << check.name << ": ";
      if (check.status == CheckStatus::Match) {
        std::cout << "match " << check.expected;
      } else if (check.status == CheckStatus::Mismatch) {
        std::cout << "MISMATCH";
        if (check_known(check)) std::cout << " (known)";
        std::cout << " expected=" << check.expected
                  << " actual=" << check.actual;
      } else {
        std::cout << "skipped";
      }
      std::cout << '\n';
    }
  }
  std::cout << "summary: " << reports.size() << " m values, " << total
            << " checks, " << mismatches << " mismatches (" << known
            << " known, " << (mismatches - known) << " unexpected)\n";
}

void render_verify_json(const std::vector<VerificationReport>& reports,
                        const VerifyOptions& opt) {
  ordered_json doc;
  doc["m_min"] = opt.m_min;
  doc["m_max"] = opt.m_max;
  doc["strict"] = opt.strict;
  ordered_json list = ordered_json::array();
  for (const VerificationReport& report : reports) {
    ordered_json entry;
    entry["m"] = report.m;
    entry["overall"] = overall_string(report.overall());
    ordered_json checks = ordered_json::array();
    for (const Check& check : report.checks) {
      ordered_json c;
      c["name"] = check.name;
      c["status"] = status_string(check.status);
      c["expected"] = check.expected;
      c["actual"] = check.actual;
      c["known"] = check_known(check);
      checks.push_back(std::move(c));
    }
    entry["checks"] = std::move(checks);
    list.push_back(std::move(entry));
  }
  doc["reports"] = std::move(list);
  emit_json(doc);
}

void render_verify_csv(const std::vector<VerificationReport>& reports) {
  std::cout << "m,check,status,expected,actual,known\n";
  for (const VerificationReport& report : reports) {
    for (const Check& check : report.checks) {
      std::cout << report.m << ',' << check.name << ','
                << status_string(check.status) << ','
                << csv_escape(check.expected) << ',' << csv_escape(check.actual)
                << ',' << (check_known(check) ? "true" : "false") << '\n';
    }
  }
}

int run_verify(const VerifyOptions& opt) {
  const std::vector<VerificationReport> reports =
      moebius::sweep(opt.m_min, opt.m_max);
  if (opt.format == "text") {
    render_verify_text(reports);
  } else if (opt.format == "json") {
    render_verify_json(reports, opt);
  } else {
    render_verify_csv(reports);
  }
  if (opt.strict) {
    for (const VerificationReport& report : reports) {
      if (report.has_unexpected_mismatch()) return 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// graph

struct GraphOptions {
  std::uint32_t m = 0;
  std::uint32_t n = 3;
  std::string format = "text";
};

std::string vertex_label(const LadderSpec& spec, VertexId v) {
  return "(" + std::to_string(v / spec.n) + "," + std::to_string(v % spec.n) +
         ")";
}

// Edge list with u < v, ordered by (u, v).
std::vector<std::pair<VertexId, VertexId>> sorted_edges(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v > u) edges.emplace_back(u, v);
    }
  }
  return edges;
}

int run_graph(const GraphOptions& opt) {
  const LadderSpec spec{opt.m, opt.n};
  const Graph ladder = moebius::build_ladder(spec);
  const auto edges = sorted_edges(ladder);

  if (opt.format == "text") {
    std::cout << "M(" << opt.m << ',' << opt.n << "): "
              << ladder.vertex_count() << " vertices, " << edges.size()
              << " edges\n";
    for (const auto& [u, v] : edges) {
      std::cout << vertex_label(spec, u) << " -- " << vertex_label(spec, v)
                << '\n';
    }
  } else if (opt.format == "json") {
    ordered_json doc;
    doc["vertices"] = ladder.vertex_count();
    ordered_json list = ordered_json::array();
    for (const auto& [u, v] : edges) {
      list.push_back(ordered_json::array({u, v}));
    }
    doc["edges"] = std::move(list);
    emit_json(doc);
  } else if (opt.format == "csv") {
    for (const auto& [u, v] : edges) std::cout << u << ',' << v << '\n';
  } else {
    std::cout << "graph M_" << opt.m << '_' << opt.n << " {\n";
    std::cout << "  node [shape=circle];\n";
    for (VertexId v = 0; v < ladder.vertex_count(); ++v) {
      std::cout << "  " << v << " [label=\"" << vertex_label(spec, v)
                << "\"];\n";
    }
    for (const auto& [u, v] : edges) {
      std::cout << "  " << u << " -- " << v << ";\n";
    }
    std::cout << "}\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hosoya polynomials and distance-based indices of generalized "
      "Moebius ladders M(m,n)"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};
  const std::vector<std::string> graph_formats{"text", "json", "csv", "dot"};

  PolyOptions poly_opt;
  CLI::App* poly = app.add_subcommand(
      "poly", "Hosoya polynomial coefficients of M(m,n)");
  poly->add_option("--m", poly_opt.m, "grid columns before identification")
      ->required();
  poly->add_option("--n", poly_opt.n, "grid rows")->capture_default_str();
  poly->add_option("--method", poly_opt.method,
                   "bfs oracle, closed form, or block assembly (n=3 only "
                   "for closed/blocks)")
      ->check(CLI::IsMember({"bfs", "closed", "blocks"}))
      ->capture_default_str();
  poly->add_option("--format", poly_opt.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  IndicesOptions indices_opt;
  CLI::App* indices = app.add_subcommand(
      "indices", "Wiener, hyper-Wiener, Harary and TSZ indices of M(m,3)");
  indices->add_option("--m", indices_opt.m, "grid columns")->required();
  indices->add_option("--source", indices_opt.source,
                      "polynomial relations, closed forms, or both "
                      "side-by-side")
      ->check(CLI::IsMember({"polynomial", "closed", "both"}))
      ->capture_default_str();
  indices->add_option("--format", indices_opt.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-verify closed forms against the BFS oracle over a "
                "range of m");
  verify->add_option("--m-min", verify_opt.m_min, "start of the m range")
      ->required();
  verify->add_option("--m-max", verify_opt.m_max, "end of the m range")
      ->required();
  verify->add_flag("--strict", verify_opt.strict,
                   "exit nonzero on any mismatch outside the known list");
  verify->add_option("--format", verify_opt.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  GraphOptions graph_opt;
  CLI::App* graph = app.add_subcommand("graph", "emit the ladder M(m,n)");
  graph->add_option("--m", graph_opt.m, "grid columns")->required();
  graph->add_option("--n", graph_opt.n, "grid rows")->capture_default_str();
  graph->add_option("--format", graph_opt.format, "output format")
      ->check(CLI::IsMember(graph_formats))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (poly->parsed()) return run_poly(poly_opt);
    if (indices->parsed()) return run_indices(indices_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (graph->parsed()) return run_graph(graph_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
