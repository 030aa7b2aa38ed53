#include "jetdet/shelling.hpp"

#include <algorithm>

#include "jetdet/error.hpp"

namespace jetdet {

std::strong_ordering star_compare(const Facet& p, const Facet& q) {
  if (!p.tag || !q.tag) throw UsageError("star_compare needs family-tagged facets");
  if (p.tag->family != q.tag->family) {
    return static_cast<int>(p.tag->family) <=> static_cast<int>(q.tag->family);
  }
  return lex_compare(p.vertices, q.vertices);
}

ShellingOrder ShellingOrder::star(std::vector<Facet> facets) {
  std::stable_sort(facets.begin(), facets.end(),
                   [](const Facet& a, const Facet& b) { return star_compare(a, b) < 0; });
  return {std::move(facets)};
}

ShellingOrder ShellingOrder::of(std::span<const VertexSet> facets) {
  ShellingOrder order;
  for (auto f : facets) order.facets.push_back({f, std::nullopt});
  return order;
}

std::vector<VertexSet> restriction_sets(const ShellingOrder& order) {
  const auto& f = order.facets;
  std::vector<VertexSet> c(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      const VertexSet diff = f[t].vertices - f[s].vertices;
      if (diff.size() == 1) c[t] = c[t] | diff;
    }
  }
  return c;
}

ShellingVerdict verify_shelling(const ShellingOrder& order) {
  const auto& f = order.facets;
  ShellingVerdict verdict;
  for (std::size_t t = 1; t < f.size(); ++t) {
    if (f[t].vertices.size() != f[0].vertices.size()) {
      verdict.valid = false;
      verdict.reason = "impure: facet " + std::to_string(t) + " has " + std::to_string(f[t].vertices.size()) +
                       " vertices, facet 0 has " + std::to_string(f[0].vertices.size());
      return verdict;
    }
  }
  const auto c = restriction_sets(order);
  for (std::size_t j = 1; j < f.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!(f[j].vertices - f[i].vertices).intersects(c[j])) {
        verdict.valid = false;
        verdict.witness = {i, j};
        verdict.reason = "facet " + std::to_string(j) + " meets facet " + std::to_string(i) +
                         " outside every codimension-one face shared with an earlier facet";
        return verdict;
      }
    }
  }
  return verdict;
}

HVector h_vector(const ShellingOrder& order) {
  if (auto verdict = verify_shelling(order); !verdict) {
    throw UsageError("h_vector needs a shelling: " + verdict.reason);
  }
  HVector out;
  out.restriction = restriction_sets(order);
  for (auto c : out.restriction) {
    const std::size_t j = c.size();
    if (out.h.size() <= j) out.h.resize(j + 1, 0);
    ++out.h[j];
  }
  return out;
}

FamilyHTable h_by_family(const ShellingOrder& order) {
  const HVector hv = h_vector(order);
  const std::size_t width = std::max<std::size_t>(hv.h.size(), 4);
  FamilyHTable table;
  for (auto family : kAllFamilies) table[family].assign(width, 0);
  for (std::size_t t = 0; t < order.facets.size(); ++t) {
    const auto& tag = order.facets[t].tag;
    if (!tag) throw UsageError("h_by_family needs family-tagged facets");
    ++table[tag->family][hv.restriction[t].size()];
  }
  return table;
}

}  // namespace jetdet
