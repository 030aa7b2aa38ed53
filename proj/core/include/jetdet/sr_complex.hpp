#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetdet/groebner.hpp"
#include "jetdet/variables.hpp"

namespace jetdet {

/// Subset of a vertex universe of at most 64 vertices, one bit per vertex.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet of(std::initializer_list<std::size_t> vertices);
  static VertexSet first(std::size_t count);  // {0, ..., count - 1}

  bool contains(std::size_t v) const { return (bits >> v) & 1u; }
  void insert(std::size_t v) { bits |= std::uint64_t{1} << v; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
  VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
  VertexSet operator-(VertexSet o) const { return {bits & ~o.bits}; }
  bool operator==(const VertexSet&) const = default;
};

/// Lexicographic membership order with vertex 0 most significant: at the
/// first vertex where the sets differ, the set containing it is greater.
std::strong_ordering lex_compare(VertexSet a, VertexSet b);

/// Vertex universe, forbidden sets (minimal non-faces) and, once enumerated,
/// the facets. Vertex v stands for table variable vertex_variable(v).
class SimplicialComplex {
 public:
  SimplicialComplex(TablePtr table, std::vector<std::size_t> vertex_to_variable,
                    std::vector<VertexSet> forbidden);

  const TablePtr& table() const { return table_; }
  std::size_t universe_size() const { return vertex_to_variable_.size(); }
  VertexSet universe() const { return VertexSet::first(universe_size()); }
  std::size_t vertex_variable(std::size_t v) const { return vertex_to_variable_[v]; }
  std::optional<std::size_t> vertex_of_variable(std::size_t var) const;
  const std::vector<VertexSet>& forbidden() const { return forbidden_; }

  const std::vector<VertexSet>& facets() const { return facets_; }
  void set_facets(std::vector<VertexSet> facets) { facets_ = std::move(facets); }

  /// True iff s contains no forbidden set.
  bool is_face(VertexSet s) const;
  /// A face to which no further vertex can be added.
  bool is_maximal_face(VertexSet s) const;

  std::string vertex_name(std::size_t v) const;
  /// Names in vertex order.
  std::vector<std::string> vertex_names(VertexSet s) const;
  VertexSet vertex_set(std::span<const std::string> names) const;

 private:
  TablePtr table_;
  std::vector<std::size_t> vertex_to_variable_;
  std::vector<VertexSet> forbidden_;
  std::vector<VertexSet> facets_;
};

/// Stanley-Reisner complex of a square-free monomial ideal. `vertex_order`
/// lists table variable indices in vertex order (empty = table order).
/// Throws UsageError naming the first non-square-free generator.
SimplicialComplex sr_complex_from_ideal(const MonomialIdeal& ideal,
                                        std::span<const std::size_t> vertex_order = {});

/// Jet-table variables sorted by (layer, row, col): x-block first.
std::vector<std::size_t> layer_ascending_order(const VariableTable& table);

struct EnumerationOptions {
  std::size_t max_universe = 64;
  std::size_t max_transversals = 2'000'000;
};

/// Minimal transversals of a hypergraph, built edge by edge (Berge's
/// dualization). Sorted ascending by lex_compare.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges,
                                            const EnumerationOptions& opts = {});

/// Facets as complements of the minimal transversals of the forbidden sets,
/// sorted ascending by lex_compare.
std::vector<VertexSet> enumerate_facets_bruteforce(const SimplicialComplex& c,
                                                   const EnumerationOptions& opts = {});

// ---- The complex of L(I^{2,n}_{2,2}) ------------------------------------

/// Values are ranked F < E < D < C < A, the family order of the *-ordering.
enum class FacetFamily { kF = 0, kE = 1, kD = 2, kC = 3, kA = 4 };

inline constexpr std::array<FacetFamily, 5> kAllFamilies{FacetFamily::kA, FacetFamily::kC, FacetFamily::kD,
                                                         FacetFamily::kE, FacetFamily::kF};

const char* family_name(FacetFamily f);
std::optional<FacetFamily> parse_family(char c);

struct FamilyTag {
  FacetFamily family;
  std::array<int, 3> params;  // (a1, a2, ar), (c1, c2, c3), (d1, d2, d3), ...
};

struct Facet {
  VertexSet vertices;
  std::optional<FamilyTag> tag;
};

/// Complex of the leading monomials of Gamma, vertices in layer-ascending
/// order (x11..x2n, y11..y2n, z11..z2n); facets not yet enumerated.
SimplicialComplex delta0(int n);

/// Vertex index of layer(0=x,1=y,2=z)_{row,col} in the delta0 ordering.
std::size_t delta0_vertex(int n, int layer, int row, int col);

/// Admissible parameter triples of a family, lexicographic.
std::vector<std::array<int, 3>> family_parameters(FacetFamily family, int n);

/// Vertex set of a family member read off its row-interval description.
VertexSet family_facet(int n, const FamilyTag& tag);

/// All family members for column count n (n >= 2), in *-order.
std::vector<Facet> enumerate_facets_families(int n);

}  // namespace jetdet
