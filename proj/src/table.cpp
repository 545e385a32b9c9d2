#include "nomsel/table.hpp"

#include <stdexcept>
#include <unordered_set>

namespace nomsel {

std::size_t NominalVariable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < categories.size(); ++i)
    if (categories[i] == label) return i;
  return categories.size();
}

std::vector<std::size_t> Schema::attribute_indices() const {
  std::vector<std::size_t> out;
  out.reserve(n_attributes());
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (i != target_index) out.push_back(i);
  return out;
}

void Schema::validate() const {
  if (variables.empty()) throw std::invalid_argument("schema: no variables");
  if (target_index >= variables.size())
    throw std::invalid_argument("schema: target index out of range");
  std::unordered_set<std::string> names;
  for (const auto& v : variables) {
    if (!names.insert(v.name).second)
      throw std::invalid_argument("schema: duplicate variable name '" + v.name + "'");
    if (v.categories.empty())
      throw std::invalid_argument("schema: variable '" + v.name + "' has no categories");
    if (v.categories.size() > kMaxCategories)
      throw std::invalid_argument("schema: variable '" + v.name + "' exceeds " +
                                  std::to_string(kMaxCategories) + " categories");
    std::unordered_set<std::string> labels;
    for (const auto& c : v.categories)
      if (!labels.insert(c).second)
        throw std::invalid_argument("schema: duplicate category '" + c + "' in variable '" +
                                    v.name + "'");
  }
  if (target().n_categories() < 2)
    throw std::invalid_argument("schema: class variable needs at least 2 categories");
}

DataTable::DataTable(Schema schema, std::vector<std::vector<Code>> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
  schema_.validate();
  if (columns_.size() != schema_.n_variables())
    throw std::invalid_argument("table: column count does not match schema");
  n_rows_ = columns_.empty() ? 0 : columns_[0].size();
  for (std::size_t v = 0; v < columns_.size(); ++v) {
    if (columns_[v].size() != n_rows_)
      throw std::invalid_argument("table: column '" + schema_.variables[v].name +
                                  "' has inconsistent row count");
    const std::size_t n_cats = schema_.variables[v].n_categories();
    const bool is_class = (v == schema_.target_index);
    for (Code code : columns_[v]) {
      if (code == kMissingCode) {
        if (is_class) throw std::invalid_argument("table: missing value in class column");
        continue;
      }
      if (code >= n_cats)
        throw std::invalid_argument("table: code out of range in column '" +
                                    schema_.variables[v].name + "'");
    }
  }
}

void DataTable::gather_row(std::size_t row, std::vector<Code>& out) const {
  out.clear();
  for (std::size_t v = 0; v < columns_.size(); ++v)
    if (v != schema_.target_index) out.push_back(columns_[v][row]);
}

bool DataTable::operator==(const DataTable& other) const {
  if (n_rows_ != other.n_rows_ || schema_.target_index != other.schema_.target_index)
    return false;
  if (schema_.variables.size() != other.schema_.variables.size()) return false;
  for (std::size_t v = 0; v < schema_.variables.size(); ++v) {
    const auto& a = schema_.variables[v];
    const auto& b = other.schema_.variables[v];
    if (a.name != b.name || a.categories != b.categories ||
        a.has_missing_category != b.has_missing_category)
      return false;
  }
  return columns_ == other.columns_;
}

DataTable select_columns(const DataTable& table, const std::vector<std::size_t>& attribute_indices) {
  const std::size_t target = table.target_index();
  std::unordered_set<std::size_t> seen;
  for (std::size_t idx : attribute_indices) {
    if (idx >= table.n_variables())
      throw std::invalid_argument("select_columns: index " + std::to_string(idx) + " out of range");
    if (idx == target)
      throw std::invalid_argument("select_columns: index equals the class column");
    if (!seen.insert(idx).second)
      throw std::invalid_argument("select_columns: duplicate index " + std::to_string(idx));
  }
  Schema schema;
  std::vector<std::vector<Code>> columns;
  for (std::size_t idx : attribute_indices) {
    schema.variables.push_back(table.schema().variables[idx]);
    columns.push_back(table.column(idx));
  }
  schema.target_index = schema.variables.size();
  schema.variables.push_back(table.schema().target());
  columns.push_back(table.class_column());
  return DataTable(std::move(schema), std::move(columns));
}

std::vector<std::pair<std::string, std::size_t>> class_distribution(const DataTable& table) {
  const auto& target = table.schema().target();
  std::vector<std::size_t> counts(target.n_categories(), 0);
  for (Code c : table.class_column()) ++counts[c];
  std::vector<std::pair<std::string, std::size_t>> out;
  out.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out.emplace_back(target.categories[i], counts[i]);
  return out;
}

}  // namespace nomsel
