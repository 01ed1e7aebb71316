#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "flagcurv/json_io.hpp"

namespace flagcurv {

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& text);

/// A titled grid of strings plus free-form notes.
struct ReportTable {
  std::string id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  json to_json() const;
};

void render(std::ostream& os, const ReportTable& t, Format f);
/// Several tables: blank-line separated text/CSV blocks, or one JSON array.
void render(std::ostream& os, const std::vector<ReportTable>& ts, Format f);

/// (d1, d2, d3) exactly as printed in the published type I table, by catalog slug.
std::array<int, 3> printed_type_one_dimensions(const std::string& slug);

/// The reconstructions of the published tables, ids "table1", "table3",
/// "table4", "kl-g2", "kl-f4", "triples-f4", "solutions-g2", "solutions-f4".
std::vector<ReportTable> published_tables();

}  // namespace flagcurv
