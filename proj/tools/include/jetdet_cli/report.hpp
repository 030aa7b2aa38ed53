#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace jetdet::cli {

enum class Format { kText, kStructured };

/// Ordered key/value lines. Structured output is `key=value`, one per line;
/// text output aligns values after `key:`.
class Report {
 public:
  void add(std::string key, std::string value);
  template <class Range>
  void add_list(std::string key, const Range& values) {
    std::string joined;
    for (const auto& v : values) {
      if (!joined.empty()) joined += ',';
      joined += to_field(v);
    }
    add(std::move(key), joined);
  }

  void write(std::ostream& os, Format format) const;
  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }

 private:
  template <class T>
  static std::string to_field(const T& v) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      return std::string(v);
    } else if constexpr (requires { v.get_str(); }) {
      return v.get_str();
    } else {
      return std::to_string(v);
    }
  }

  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace jetdet::cli
