#include <gtest/gtest.h>

#include "properties.hpp"

using namespace jetdet::testing;

namespace {

void expect_clean(const PropertyResult& r) {
  EXPECT_EQ(r.cases, kDefaultCases) << r.name;
  EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Property, OrderAxioms) { expect_clean(prop_order_axioms(0x5eed0001)); }
TEST(Property, NormalFormReconstruction) { expect_clean(prop_normal_form_reconstruction(0x5eed0002)); }
TEST(Property, NormalFormUniqueness) { expect_clean(prop_normal_form_uniqueness(0x5eed0003)); }
TEST(Property, CoprimeCriterion) { expect_clean(prop_coprime_criterion(0x5eed0004)); }
TEST(Property, SquareFreeFaces) { expect_clean(prop_squarefree_faces(0x5eed0005)); }
TEST(Property, RingAxioms) { expect_clean(prop_ring_axioms(0x5eed0006)); }
TEST(Property, ParseRoundTrip) { expect_clean(prop_parse_round_trip(0x5eed0007)); }
TEST(Property, Determinant) { expect_clean(prop_determinant(0x5eed0008)); }
TEST(Property, SeriesArithmetic) { expect_clean(prop_series_arithmetic(0x5eed0009)); }
TEST(Property, HilbertOracle) { expect_clean(prop_hilbert_oracle(0x5eed000a)); }
TEST(Property, ShellingWitness) { expect_clean(prop_shelling_witness(0x5eed000b)); }
