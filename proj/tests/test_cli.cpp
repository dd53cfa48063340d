#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/cli_runner.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

using testsupport::run_cli;

namespace {

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("poly text prints the polynomial") {
  const auto result = run_cli("poly --m 10 --n 3 --method closed");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "H = 45x + 72x^2 + 81x^3 + 81x^4 + 72x^5\n");
  CHECK(result.err.empty());
}

TEST_CASE("poly json shape and key order") {
  const auto result = run_cli("poly --m 4 --format json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["m"] == 4);
  CHECK(doc["n"] == 3);
  CHECK(doc["method"] == "bfs");
  CHECK(doc["coefficients"]["1"] == 15);
  CHECK(doc["coefficients"]["2"] == 21);
  // Insertion-ordered keys: m, n, method, coefficients; distances ascending.
  CHECK(result.out.find("\"m\"") < result.out.find("\"n\""));
  CHECK(result.out.find("\"method\"") < result.out.find("\"coefficients\""));
  CHECK(result.out.find("\"1\"") < result.out.find("\"2\""));
}

TEST_CASE("poly methods agree") {
  const auto bfs = run_cli("poly --m 10 --format csv");
  const auto blocks = run_cli("poly --m 10 --method blocks --format csv");
  const auto closed = run_cli("poly --m 10 --method closed --format csv");
  CHECK(bfs.exit_code == 0);
  CHECK(bfs.out == blocks.out);
  CHECK(bfs.out == closed.out);
  CHECK(bfs.out.starts_with("k,coefficient\n1,45\n"));
}

TEST_CASE("poly rejects closed/blocks with n != 3") {
  const auto result = run_cli("poly --m 10 --n 4 --method closed");
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
  CHECK(result.err.find("requires --n 3") != std::string::npos);
  CHECK(count_lines(result.err) == 1);
}

TEST_CASE("poly bfs handles n != 3") {
  const auto result = run_cli("poly --m 7 --n 2 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.out.starts_with("k,coefficient\n1,18\n"));
}

TEST_CASE("indices from the polynomial route") {
  const auto result = run_cli("indices --m 10");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("W = 1116\n") != std::string::npos);
  CHECK(result.out.find("WW = 2637\n") != std::string::npos);
  CHECK(result.out.find("Ha = 2853/20 (~142.65)\n") != std::string::npos);
  CHECK(result.out.find("TSZ = 5283\n") != std::string::npos);
}

TEST_CASE("indices from the closed forms") {
  const auto result = run_cli("indices --m 7 --source closed --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "index,value\nwiener,375\nhyper_wiener,720\nharary,77\ntsz,416\n");
}

TEST_CASE("indices closed rejects m = 4 with the documented message") {
  const auto result = run_cli("indices --m 4 --source closed");
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
  CHECK(result.err.find("closed-form indices require m >= 6") !=
        std::string::npos);
}

TEST_CASE("indices side-by-side flags the TSZ mismatch as known") {
  const auto result = run_cli("indices --m 10 --source both");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("TSZ polynomial=5283 closed_form=1368 MISMATCH "
                        "(known)") != std::string::npos);
  CHECK(result.out.find("W polynomial=1116 closed_form=1116 match") !=
        std::string::npos);

  const auto json = run_cli("indices --m 10 --source both --format json");
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["polynomial"]["tsz"] == "5283");
  CHECK(doc["closed_form"]["tsz"] == "1368");
  CHECK(doc["match"]["tsz"] == false);
  CHECK(doc["match"]["wiener"] == true);
  CHECK(doc["match"]["hyper_wiener"] == true);
  CHECK(doc["match"]["harary"] == true);
}

TEST_CASE("verify csv has one row per (m, check) pair") {
  const auto result = run_cli("verify --m-min 4 --m-max 12 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(count_lines(result.out) == 1 + 9 * 7);  // header + 9 m-values x 7
  CHECK(result.out.starts_with("m,check,status,expected,actual,known\n"));
  CHECK(result.out.find("10,tsz,mismatch,5283,1368,true") !=
        std::string::npos);
  CHECK(result.out.find("4,block_distance_matrix,skipped,,,false") !=
        std::string::npos);
  CHECK(result.out.find(",mismatch,") != std::string::npos);
  // No unexpected mismatches: every mismatch row is a known one.
  std::istringstream lines(result.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find(",mismatch,") != std::string::npos) {
      CHECK(line.find(",tsz,") != std::string::npos);
      CHECK(line.ends_with(",true"));
    }
  }
}

TEST_CASE("verify strict exits zero when only known mismatches occur") {
  const auto result = run_cli("verify --m-min 4 --m-max 20 --strict");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("tsz: MISMATCH (known)") != std::string::npos);
  CHECK(result.out.find("unexpected)") != std::string::npos);
}

TEST_CASE("verify renders a single report block for a singleton range") {
  const auto result = run_cli("verify --m-min 6 --m-max 6");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("m=6:") != std::string::npos);
  CHECK(result.out.find("m=7:") == std::string::npos);
  CHECK(result.out.find("summary: 1 m values, 7 checks") !=
        std::string::npos);
}

TEST_CASE("verify rejects an inverted range") {
  const auto result = run_cli("verify --m-min 7 --m-max 6");
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
  CHECK(result.err.find("4 <= m_min <= m_max") != std::string::npos);
}

TEST_CASE("verify json reports overall per m") {
  const auto result = run_cli("verify --m-min 5 --m-max 6 --format json");
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["m_min"] == 5);
  CHECK(doc["reports"].size() == 2);
  CHECK(doc["reports"][0]["m"] == 5);
  CHECK(doc["reports"][0]["overall"] == "all_match");
  CHECK(doc["reports"][1]["m"] == 6);
  CHECK(doc["reports"][1]["overall"] == "has_mismatch");
  bool saw_known = false;
  for (const auto& check : doc["reports"][1]["checks"]) {
    if (check["name"] == "tsz") {
      CHECK(check["status"] == "mismatch");
      CHECK(check["known"] == true);
      saw_known = true;
    }
  }
  CHECK(saw_known);
}

TEST_CASE("graph csv is a pure sorted edge list") {
  const auto result = run_cli("graph --m 4 --n 3 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(count_lines(result.out) == 15);
  CHECK(result.out.starts_with("0,1\n"));
}

TEST_CASE("graph json shape") {
  const auto m10 = run_cli("graph --m 10 --n 3 --format json");
  const auto doc = nlohmann::json::parse(m10.out);
  CHECK(doc["vertices"] == 27);
  CHECK(doc["edges"].size() == 45);

  const auto m72 = run_cli("graph --m 7 --n 2 --format json");
  const auto doc72 = nlohmann::json::parse(m72.out);
  CHECK(doc72["vertices"] == 12);
  CHECK(doc72["edges"].size() == 18);
  for (const auto& edge : doc72["edges"]) {
    CHECK(edge[0].get<int>() < edge[1].get<int>());
  }
}

TEST_CASE("graph dot labels vertices by grid coordinates") {
  const auto result = run_cli("graph --m 4 --n 3 --format dot");
  CHECK(result.exit_code == 0);
  CHECK(result.out.starts_with("graph M_4_3 {"));
  CHECK(result.out.find("0 [label=\"(0,0)\"];") != std::string::npos);
  CHECK(result.out.find("8 [label=\"(2,2)\"];") != std::string::npos);
  CHECK(result.out.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("graph rejects out-of-range parameters") {
  const auto result = run_cli("graph --m 3 --n 3");
  CHECK(result.exit_code != 0);
  CHECK(result.err.find("parameters outside supported range") !=
        std::string::npos);
}

TEST_CASE("dot format is graph-only") {
  const auto result = run_cli("poly --m 10 --format dot");
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
  CHECK(!result.err.empty());
}

TEST_CASE("missing required options are usage errors on stderr") {
  const auto result = run_cli("poly");
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
  CHECK(!result.err.empty());

  const auto nosub = run_cli("");
  CHECK(nosub.exit_code != 0);
}

TEST_CASE("identical invocations are byte-identical") {
  for (const char* args :
       {"verify --m-min 4 --m-max 11 --format json",
        "verify --m-min 4 --m-max 11 --format csv",
        "poly --m 12 --format json", "graph --m 9 --n 4 --format dot",
        "indices --m 8 --source both --format csv"}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.size() > 0);
  }
}
