#include "jetdet/sr_complex.hpp"

#include <algorithm>
#include <numeric>

#include "jetdet/error.hpp"
#include "jetdet/jet_ideals.hpp"

namespace jetdet {

VertexSet VertexSet::of(std::initializer_list<std::size_t> vertices) {
  VertexSet s;
  for (auto v : vertices) {
    if (v >= 64) throw UsageError("vertex index out of range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::first(std::size_t count) {
  if (count > 64) throw UsageError("vertex universe larger than 64");
  return {count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1};
}

std::strong_ordering lex_compare(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits ^ b.bits;
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t low = diff & (~diff + 1);
  return (a.bits & low) ? std::strong_ordering::greater : std::strong_ordering::less;
}

SimplicialComplex::SimplicialComplex(TablePtr table, std::vector<std::size_t> vertex_to_variable,
                                     std::vector<VertexSet> forbidden)
    : table_(std::move(table)),
      vertex_to_variable_(std::move(vertex_to_variable)),
      forbidden_(std::move(forbidden)) {
  if (vertex_to_variable_.size() > 64) throw UsageError("vertex universe larger than 64");
  for (auto var : vertex_to_variable_) {
    if (!table_ || var >= table_->size()) throw UsageError("vertex maps outside the variable table");
  }
  for (auto f : forbidden_) {
    if (!f.subset_of(universe())) throw UsageError("forbidden set outside the universe");
  }
}

std::optional<std::size_t> SimplicialComplex::vertex_of_variable(std::size_t var) const {
  for (std::size_t v = 0; v < vertex_to_variable_.size(); ++v) {
    if (vertex_to_variable_[v] == var) return v;
  }
  return std::nullopt;
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(), [&](VertexSet f) { return f.subset_of(s); });
}

bool SimplicialComplex::is_maximal_face(VertexSet s) const {
  if (!is_face(s)) return false;
  const VertexSet outside = universe() - s;
  for (std::size_t v = 0; v < universe_size(); ++v) {
    if (!outside.contains(v)) continue;
    VertexSet bigger = s;
    bigger.insert(v);
    if (is_face(bigger)) return false;
  }
  return true;
}

std::string SimplicialComplex::vertex_name(std::size_t v) const { return (*table_)[vertex_to_variable_[v]].name; }

std::vector<std::string> SimplicialComplex::vertex_names(VertexSet s) const {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < universe_size(); ++v) {
    if (s.contains(v)) out.push_back(vertex_name(v));
  }
  return out;
}

VertexSet SimplicialComplex::vertex_set(std::span<const std::string> names) const {
  VertexSet s;
  for (const auto& name : names) {
    auto var = table_->find_name(name);
    auto v = var ? vertex_of_variable(*var) : std::nullopt;
    if (!v) throw UsageError("unknown vertex " + name);
    s.insert(*v);
  }
  return s;
}

SimplicialComplex sr_complex_from_ideal(const MonomialIdeal& ideal, std::span<const std::size_t> vertex_order) {
  const auto& table = ideal.table();
  std::vector<std::size_t> order(vertex_order.begin(), vertex_order.end());
  if (order.empty()) {
    order.resize(table->size());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != table->size()) throw UsageError("vertex order must list every variable once");
  std::vector<std::size_t> var_to_vertex(table->size(), table->size());
  for (std::size_t v = 0; v < order.size(); ++v) {
    if (order[v] >= table->size() || var_to_vertex[order[v]] != table->size()) {
      throw UsageError("vertex order must list every variable once");
    }
    var_to_vertex[order[v]] = v;
  }
  std::vector<VertexSet> forbidden;
  for (const auto& g : ideal.gens()) {
    if (!g.is_squarefree()) {
      throw UsageError("Stanley-Reisner complex needs square-free generators; got " + to_string(g, *table));
    }
    VertexSet s;
    for (std::size_t var = 0; var < table->size(); ++var) {
      if (g.exponent(var) > 0) s.insert(var_to_vertex[var]);
    }
    forbidden.push_back(s);
  }
  return SimplicialComplex(table, std::move(order), std::move(forbidden));
}

std::vector<std::size_t> layer_ascending_order(const VariableTable& table) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& va = table[a];
    const auto& vb = table[b];
    return std::tie(va.layer, va.row, va.col) < std::tie(vb.layer, vb.row, vb.col);
  });
  return order;
}

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges, const EnumerationOptions& opts) {
  std::vector<VertexSet> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
  });
  std::vector<VertexSet> current{VertexSet{}};
  std::size_t processed = 0;
  for (const VertexSet edge : sorted) {
    if (edge.empty()) return {};  // the empty set cannot be hit
    std::vector<VertexSet> keep;
    std::vector<VertexSet> missing;
    for (auto t : current) (t.intersects(edge) ? keep : missing).push_back(t);
    std::vector<VertexSet> next = keep;
    for (auto t : missing) {
      for (std::uint64_t rest = edge.bits; rest != 0; rest &= rest - 1) {
        VertexSet candidate{t.bits | (rest & (~rest + 1))};
        const bool redundant =
            std::any_of(keep.begin(), keep.end(), [&](VertexSet k) { return k.subset_of(candidate); });
        if (!redundant) next.push_back(candidate);
      }
    }
    std::sort(next.begin(), next.end(), [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    ++processed;
    if (next.size() > opts.max_transversals) {
      throw CapExceeded("minimal transversal count exceeds " + std::to_string(opts.max_transversals),
                        "edges_processed=" + std::to_string(processed) + "/" + std::to_string(sorted.size()) +
                            " transversals=" + std::to_string(next.size()));
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [](VertexSet a, VertexSet b) { return lex_compare(a, b) < 0; });
  return current;
}

std::vector<VertexSet> enumerate_facets_bruteforce(const SimplicialComplex& c, const EnumerationOptions& opts) {
  if (c.universe_size() > opts.max_universe) {
    throw CapExceeded("universe of " + std::to_string(c.universe_size()) + " vertices exceeds cap " +
                          std::to_string(opts.max_universe),
                      "edges_processed=0");
  }
  std::vector<VertexSet> facets;
  for (auto t : minimal_transversals(c.forbidden(), opts)) facets.push_back(c.universe() - t);
  std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return lex_compare(a, b) < 0; });
  return facets;
}

const char* family_name(FacetFamily f) {
  switch (f) {
    case FacetFamily::kA: return "A";
    case FacetFamily::kC: return "C";
    case FacetFamily::kD: return "D";
    case FacetFamily::kE: return "E";
    case FacetFamily::kF: return "F";
  }
  return "?";
}

std::optional<FacetFamily> parse_family(char c) {
  for (auto f : kAllFamilies) {
    if (family_name(f)[0] == c) return f;
  }
  return std::nullopt;
}

SimplicialComplex delta0(int n) {
  const GammaBasis gamma = gamma_basis(n);
  const MonomialIdeal lead = leading_ideal(gamma.generator_set());
  const auto order = layer_ascending_order(*gamma.table);
  return sr_complex_from_ideal(lead, order);
}

std::size_t delta0_vertex(int n, int layer, int row, int col) {
  if (layer < 0 || layer > 2 || row < 1 || row > 2 || col < 1 || col > n) {
    throw UsageError("vertex position out of range");
  }
  return static_cast<std::size_t>(layer * 2 * n + (row - 1) * n + (col - 1));
}

std::vector<std::array<int, 3>> family_parameters(FacetFamily family, int n) {
  std::vector<std::array<int, 3>> out;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      for (int w = 1; w <= n; ++w) {
        bool ok = false;
        switch (family) {
          case FacetFamily::kA: ok = u < v && u <= w; break;   // a1 < a2, a1 <= ar
          case FacetFamily::kC: ok = u <= v && v <= w; break;  // c1 <= c2 <= c3
          case FacetFamily::kD: ok = u < v && v <= w; break;   // d1 < d2 <= d3
          case FacetFamily::kE: ok = u <= v && v < w; break;   // e1 <= e2 < e3
          case FacetFamily::kF: ok = u < v && v < w; break;    // f1 < f2 < f3
        }
        if (ok) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

VertexSet family_facet(int n, const FamilyTag& tag) {
  constexpr int x = 0, y = 1, z = 2;
  VertexSet s;
  auto span = [&](int layer, int row, int from, int to) {
    for (int col = from; col <= to; ++col) s.insert(delta0_vertex(n, layer, row, col));
  };
  const auto [p1, p2, p3] = tag.params;
  switch (tag.family) {
    case FacetFamily::kA:  // (a1, a2, ar)
      span(x, 1, p1, p3), span(x, 2, p3, n);
      span(y, 1, 1, p1), span(y, 1, p2, n);
      span(z, 1, 1, n), span(z, 2, 1, p2);
      break;
    case FacetFamily::kC:
      span(x, 1, p2, p3), span(x, 2, p3, n);
      span(y, 1, 1, p1), span(y, 2, p1, p2);
      span(z, 1, 1, n), span(z, 2, 1, n);
      break;
    case FacetFamily::kD:
      span(x, 2, p1, n);
      span(y, 1, 1, p1), span(y, 1, p2, p3), span(y, 2, p3, n);
      span(z, 1, 1, n), span(z, 2, 1, p2);
      break;
    case FacetFamily::kE:
      span(x, 2, p2, n);
      span(y, 1, 1, p1), span(y, 2, p1, p2), span(y, 2, p3, n);
      span(z, 1, 1, n), span(z, 2, 1, p3);
      break;
    case FacetFamily::kF:
      span(x, 2, p1, n);
      span(y, 2, 1, p1), span(y, 2, p2, n);
      span(z, 1, 1, p3), span(z, 2, p3, n), span(z, 2, 1, p2);
      break;
  }
  return s;
}

std::vector<Facet> enumerate_facets_families(int n) {
  if (n < 2) throw UsageError("facet families need n >= 2");
  std::vector<Facet> out;
  for (auto family : {FacetFamily::kF, FacetFamily::kE, FacetFamily::kD, FacetFamily::kC, FacetFamily::kA}) {
    std::vector<Facet> members;
    for (const auto& params : family_parameters(family, n)) {
      FamilyTag tag{family, params};
      members.push_back({family_facet(n, tag), tag});
    }
    std::sort(members.begin(), members.end(),
              [](const Facet& a, const Facet& b) { return lex_compare(a.vertices, b.vertices) < 0; });
    out.insert(out.end(), members.begin(), members.end());
  }
  return out;
}

}  // namespace jetdet
