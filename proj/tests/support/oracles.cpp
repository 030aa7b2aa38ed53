#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace jetdet::testing {

std::strong_ordering grevlex_by_weights(const Monomial& a, const Monomial& b, std::size_t nvars) {
  std::vector<long> wa{static_cast<long>(a.degree())}, wb{static_cast<long>(b.degree())};
  for (std::size_t i = nvars; i-- > 0;) {
    wa.push_back(-static_cast<long>(a.exponent(i)));
    wb.push_back(-static_cast<long>(b.exponent(i)));
  }
  return wa <=> wb;
}

std::vector<VertexSet> faces_by_subsets(std::size_t vertices, const std::vector<VertexSet>& forbidden) {
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << vertices); ++s) {
    bool ok = true;
    for (auto f : forbidden) {
      if ((f.bits & s) == f.bits) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(VertexSet{s});
  }
  return out;
}

std::vector<VertexSet> facets_by_subsets(std::size_t vertices, const std::vector<VertexSet>& forbidden) {
  std::vector<VertexSet> faces = faces_by_subsets(vertices, forbidden);
  std::vector<char> is_face(std::size_t{1} << vertices, 0);
  for (auto f : faces) is_face[f.bits] = 1;
  std::vector<VertexSet> out;
  for (auto f : faces) {
    bool maximal = true;
    for (std::size_t v = 0; v < vertices && maximal; ++v) {
      if (!f.contains(v) && is_face[f.bits | (std::uint64_t{1} << v)]) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool pair_satisfies_definition(const std::vector<VertexSet>& facets, std::size_t i, std::size_t j) {
  VertexSet diff = facets[j] - facets[i];
  for (std::size_t k = 0; k < j; ++k) {
    VertexSet d = facets[j] - facets[k];
    if (d.size() == 1 && d.subset_of(diff)) return true;
  }
  return false;
}

bool is_shelling_by_definition(const std::vector<VertexSet>& facets) {
  for (std::size_t j = 1; j < facets.size(); ++j) {
    if (facets[j].size() != facets[0].size()) return false;
    for (std::size_t i = 0; i < j; ++i) {
      if (!pair_satisfies_definition(facets, i, j)) return false;
    }
  }
  return true;
}

std::vector<Integer> hilbert_function_by_listing(const std::vector<Monomial>& gens, std::size_t nvars, int D) {
  std::vector<Integer> out(static_cast<std::size_t>(D + 1), Integer(0));
  Monomial m;
  std::function<void(std::size_t, int)> walk = [&](std::size_t var, int left) {
    if (var + 1 == nvars) {
      m.set_exponent(var, static_cast<unsigned>(left));
      bool standard = std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      if (standard) out[m.degree()] += 1;
      m.set_exponent(var, 0);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.set_exponent(var, static_cast<unsigned>(e));
      walk(var + 1, left - e);
    }
    m.set_exponent(var, 0);
  };
  for (int d = 0; d <= D; ++d) {
    if (nvars == 0) {
      if (d == 0) out[0] = gens.empty() ? 1 : 0;
      continue;
    }
    walk(0, d);
  }
  return out;
}

std::vector<Integer> expand_by_prefix_sums(const std::vector<Integer>& numerator, int shift, int d, int D) {
  std::vector<Integer> c(static_cast<std::size_t>(D + 1), Integer(0));
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    int at = shift + static_cast<int>(i);
    if (at >= 0 && at <= D) c[static_cast<std::size_t>(at)] += numerator[i];
  }
  for (int rep = 0; rep < d; ++rep) {
    for (int t = 1; t <= D; ++t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - 1)];
  }
  return c;
}

}  // namespace jetdet::testing
