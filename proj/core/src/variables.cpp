#include "jetdet/variables.hpp"

#include <set>
#include <tuple>

#include "jetdet/error.hpp"

namespace jetdet {

VariableTable::VariableTable(std::vector<VariableInfo> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxVariables) {
    throw UsageError("variable table has " + std::to_string(entries_.size()) +
                     " entries; at most " + std::to_string(kMaxVariables) + " supported");
  }
  std::set<std::tuple<int, int, int>> positions;
  std::set<std::string> names;
  for (const auto& v : entries_) {
    if (!positions.emplace(v.layer, v.row, v.col).second) {
      throw UsageError("duplicate variable position for " + v.name);
    }
    if (!names.insert(v.name).second) throw UsageError("duplicate variable name " + v.name);
  }
}

std::string layer_name(int layer, int k) {
  if (k <= 2) {
    static constexpr const char* kNames[] = {"x", "y", "z"};
    return kNames[layer];
  }
  return "v" + std::to_string(layer);
}

TablePtr VariableTable::jet(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 0) throw UsageError("jet table needs m, n >= 1 and k >= 0");
  std::vector<VariableInfo> entries;
  entries.reserve(static_cast<std::size_t>(m) * n * (k + 1));
  for (int s = k; s >= 0; --s) {
    const std::string base = layer_name(s, k);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        entries.push_back({s, i, j, base + "[" + std::to_string(i) + "," + std::to_string(j) + "]"});
      }
    }
  }
  return std::make_shared<const VariableTable>(std::move(entries));
}

TablePtr VariableTable::named(const std::vector<std::string>& names) {
  std::vector<VariableInfo> entries;
  int col = 1;
  for (const auto& name : names) entries.push_back({0, 1, col++, name});
  return std::make_shared<const VariableTable>(std::move(entries));
}

std::optional<std::size_t> VariableTable::find(int layer, int row, int col) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& v = entries_[i];
    if (v.layer == layer && v.row == row && v.col == col) return i;
  }
  return std::nullopt;
}

std::size_t VariableTable::index(int layer, int row, int col) const {
  if (auto i = find(layer, row, col)) return *i;
  throw UsageError("no variable at layer " + std::to_string(layer) + " position (" +
                   std::to_string(row) + "," + std::to_string(col) + ")");
}

std::optional<std::size_t> VariableTable::find_name(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

bool VariableTable::operator==(const VariableTable& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].same_position(o.entries_[i]) || entries_[i].name != o.entries_[i].name) {
      return false;
    }
  }
  return true;
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace jetdet
