#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetdet/sr_complex.hpp"

namespace jetdet {

/// Family rank first (F < E < D < C < A), then lex_compare of the vertex
/// sets. Throws UsageError for untagged facets.
std::strong_ordering star_compare(const Facet& p, const Facet& q);

/// Facets in the order they are to be shelled; facets[0] is F_1.
struct ShellingOrder {
  std::vector<Facet> facets;

  /// Sorts ascending under star_compare.
  static ShellingOrder star(std::vector<Facet> facets);
  static ShellingOrder of(std::span<const VertexSet> facets);
};

struct ShellingVerdict {
  bool valid = true;
  /// (i, j), i < j, such that no v in F_j - F_i has F_j - F_k = {v} for k < j.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// c(F_t) = {v in F_t : F_t - F_s = {v} for some s < t}, for every t.
std::vector<VertexSet> restriction_sets(const ShellingOrder& order);

/// Pure, and for all i < j the set F_j - F_i meets c(F_j).
ShellingVerdict verify_shelling(const ShellingOrder& order);

struct HVector {
  std::vector<std::int64_t> h;  // h[j] = #{t : |c(F_t)| = j}
  std::vector<VertexSet> restriction;
};

/// Throws UsageError when `order` is not a shelling.
HVector h_vector(const ShellingOrder& order);

/// h_j(T) per facet family; every family gets a row of the same length
/// (at least 4 entries) even when it has no members.
using FamilyHTable = std::map<FacetFamily, std::vector<std::int64_t>>;
FamilyHTable h_by_family(const ShellingOrder& order);

}  // namespace jetdet
