#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nomsel {

// Category code of one cell. Codes are per-variable, assigned by first
// appearance in file order; at most 255 categories per variable.
using Code = std::uint8_t;

// In-memory sentinel for a missing cell. It only exists between CSV parse
// and the missing-policy pass: tables handed to scorers and classifiers
// never contain it (AS_CATEGORY recodes it, DROP_ROW deletes the row).
inline constexpr Code kMissingCode = 0xff;
inline constexpr std::size_t kMaxCategories = 255;

struct NominalVariable {
  std::string name;
  std::vector<std::string> categories;  // unique, first-appearance order
  // True when the last category stands for an empty CSV field; the writer
  // emits it as an empty field again so ingest round-trips exactly.
  bool has_missing_category = false;

  std::size_t n_categories() const { return categories.size(); }
  // Index of a label, or n_categories() when absent.
  std::size_t index_of(const std::string& label) const;
};

struct Schema {
  std::vector<NominalVariable> variables;
  std::size_t target_index = 0;

  std::size_t n_variables() const { return variables.size(); }
  std::size_t n_attributes() const { return variables.size() - 1; }
  const NominalVariable& target() const { return variables[target_index]; }
  // Variable indices of all non-class attributes, ascending.
  std::vector<std::size_t> attribute_indices() const;
  // Throws std::invalid_argument when any invariant is broken (duplicate
  // names, target out of range, target with < 2 categories, ...).
  void validate() const;
};

// Column-oriented nominal table with a designated class variable.
// Immutable after construction; safe to share across threads.
class DataTable {
 public:
  DataTable() = default;
  // Validates all invariants: column/row counts, codes in range, no missing
  // codes in the class column.
  DataTable(Schema schema, std::vector<std::vector<Code>> columns);

  const Schema& schema() const { return schema_; }
  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_variables() const { return schema_.n_variables(); }
  std::size_t n_attributes() const { return schema_.n_attributes(); }
  std::size_t target_index() const { return schema_.target_index; }
  std::size_t n_classes() const { return schema_.target().n_categories(); }

  const std::vector<Code>& column(std::size_t variable) const { return columns_[variable]; }
  const std::vector<Code>& class_column() const { return columns_[schema_.target_index]; }
  Code at(std::size_t row, std::size_t variable) const { return columns_[variable][row]; }

  // Codes of one row over the non-class attributes, in ascending variable
  // order (the layout classifier models index by "attribute position").
  void gather_row(std::size_t row, std::vector<Code>& out) const;

  bool operator==(const DataTable& other) const;

 private:
  Schema schema_;
  std::vector<std::vector<Code>> columns_;  // one per variable
  std::size_t n_rows_ = 0;
};

// New table with the chosen attributes (in the given order) plus the class
// column appended last; row order preserved. Indices must be valid variable
// indices, exclude the class, and contain no duplicates.
DataTable select_columns(const DataTable& table, const std::vector<std::size_t>& attribute_indices);

// (class label, count) per class category, in category order. Counts sum
// to n_rows.
std::vector<std::pair<std::string, std::size_t>> class_distribution(const DataTable& table);

}  // namespace nomsel
