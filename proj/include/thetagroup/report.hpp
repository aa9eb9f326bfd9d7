#pragma once

#include "thetagroup/rankweyl.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace thetagroup {

using Json = nlohmann::ordered_json;

/// Display form of a classification row.
struct OutputRow {
  std::string type;
  std::string kac;
  int order = 0;
  std::string carter;
  int rank = 0;
  std::string little_weyl;
  int little_weyl_order = 0;
  std::vector<int> degrees;
  std::string reduction;
  std::string theta_on_l;
  bool n_regular = false;
  bool criterion = false;
  std::string note;

  bool operator==(const OutputRow&) const = default;
};

OutputRow to_output(const ClassificationRow& row);
Json to_json(const OutputRow& row);
/// Inverse of to_json; throws nlohmann::json::exception on schema violations.
OutputRow output_row_from_json(const Json& j);

/// {"type", "rows": [...], "zero_rank": [...]}.
Json table_json(const std::string& type, const Classification& c);
/// Markdown table with the columns Kac diagram, m, w, r, W_c, L, θ|_L, followed by
/// the zero-rank diagrams.
std::string table_markdown(const std::string& type, const Classification& c);

Json dossier_json(const Dossier& d);
std::string dossier_text(const Dossier& d);

/// One checked item of a verification suite.
struct SuiteItem {
  std::string item;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();
/// Runs a named suite; throws std::invalid_argument for an unknown name.
std::vector<SuiteItem> run_suite(const std::string& suite, std::uint64_t seed = 0);

}  // namespace thetagroup
