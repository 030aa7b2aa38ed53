#include "jetdet_cli/report.hpp"

#include <algorithm>

namespace jetdet::cli {

void Report::add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }

void Report::write(std::ostream& os, Format format) const {
  if (format == Format::kStructured) {
    for (const auto& [k, v] : lines_) os << k << '=' << v << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : lines_) width = std::max(width, k.size());
  for (const auto& [k, v] : lines_) {
    os << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
  }
}

}  // namespace jetdet::cli
