#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace jetdet::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(std::string why) {
    if (failures++ == 0) first_failure = std::move(why);
  }
};

inline constexpr std::size_t kDefaultCases = 1000;

PropertyResult prop_order_axioms(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_normal_form_reconstruction(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_normal_form_uniqueness(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_coprime_criterion(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_squarefree_faces(std::uint64_t seed, std::size_t cases = kDefaultCases);

PropertyResult prop_ring_axioms(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_parse_round_trip(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_determinant(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_series_arithmetic(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_hilbert_oracle(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_shelling_witness(std::uint64_t seed, std::size_t cases = kDefaultCases);

}  // namespace jetdet::testing
