#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetdet {

/// Hard upper bound on ring size; monomials store dense exponent arrays.
inline constexpr std::size_t kMaxVariables = 64;

/// One indeterminate x^{(layer)}_{row,col} of a jet ring.
struct VariableInfo {
  int layer = 0;
  int row = 1;
  int col = 1;
  std::string name;

  bool same_position(const VariableInfo& o) const {
    return layer == o.layer && row == o.row && col == o.col;
  }
};

/// Ordered list of variables. Position is priority: index 0 is the largest
/// variable under every monomial order in this library.
class VariableTable {
 public:
  explicit VariableTable(std::vector<VariableInfo> entries);

  /// Variables x^{(s)}_{i,j} for an m x n matrix truncated at jet order k.
  /// Layers run from k down to 0, row-major within each layer, so the
  /// (2, n, k = 2) table is z11 > ... > z2n > y11 > ... > y2n > x11 > ... > x2n.
  static std::shared_ptr<const VariableTable> jet(int m, int n, int k);

  /// Plain named variables x1 > x2 > ... in the given order (layer 0, row 1).
  static std::shared_ptr<const VariableTable> named(const std::vector<std::string>& names);

  std::size_t size() const { return entries_.size(); }
  const VariableInfo& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<VariableInfo>& entries() const { return entries_; }

  std::optional<std::size_t> find(int layer, int row, int col) const;
  std::size_t index(int layer, int row, int col) const;  // throws UsageError
  std::optional<std::size_t> find_name(std::string_view name) const;

  bool operator==(const VariableTable& o) const;

 private:
  std::vector<VariableInfo> entries_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

/// Display name for layer s of a jet ring with maximal order k: x, y, z while
/// k <= 2, otherwise v0, v1, ...
std::string layer_name(int layer, int k);

/// True when both pointers denote the same table (identity or equal content).
bool same_table(const TablePtr& a, const TablePtr& b);

}  // namespace jetdet
