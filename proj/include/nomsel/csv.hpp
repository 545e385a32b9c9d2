#pragma once

#include <iosfwd>
#include <string>

#include "nomsel/table.hpp"

namespace nomsel {

// What to do with empty fields in attribute columns. Empty class fields
// always reject the whole row, under either policy.
enum class MissingPolicy { as_category, drop_row };

const char* missing_policy_name(MissingPolicy policy);

struct LoadResult {
  DataTable table;
  std::size_t data_lines = 0;                 // data lines parsed (header and comments excluded)
  std::size_t rows_dropped_missing_class = 0;
  std::size_t rows_dropped_policy = 0;        // drop_row only
};

// CSV dialect: comma separated, UTF-8, first non-comment line is a header of
// unique column names, RFC-4180 quoting accepted, empty field = missing.
// Lines starting with '#' before the header are skipped (outputs of this
// toolkit carry a self-describing comment there).
//
// Categories are registered per column in first-appearance order. Under
// as_category, columns with any missing cell gain a final "NA" category and
// missing cells are recoded into it; under drop_row such rows are removed.
LoadResult read_csv(const std::string& path, const std::string& target_name,
                    MissingPolicy policy = MissingPolicy::as_category);
LoadResult read_csv(std::istream& in, const std::string& target_name,
                    MissingPolicy policy = MissingPolicy::as_category,
                    const std::string& origin = "<stream>");

// Writes the same dialect. Cells of a variable's missing category are
// emitted as empty fields, so read_csv(write_csv(t)) reproduces t exactly.
// A non-empty comment is written as '#'-prefixed lines above the header.
void write_csv(const DataTable& table, const std::string& path, const std::string& comment = "");
void write_csv(const DataTable& table, std::ostream& out, const std::string& comment = "");

}  // namespace nomsel
