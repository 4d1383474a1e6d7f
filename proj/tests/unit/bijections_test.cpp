#include <gtest/gtest.h>

#include "golden.hpp"
#include "sptok/bijections.hpp"
#include "sptok/error.hpp"
#include "sptok/weights.hpp"

namespace sptok {
namespace {

UTurnASM uasm(int n, std::vector<std::vector<int>> rows) { return {n, IntMatrix::from_rows(rows)}; }

ShiftedTableau single(const char* entry) {
  return ShiftedTableau{1, StrictPartition({1}), {{parse_entry(entry).letter}}};
}

TEST(WorkedExample, UasmToSt) { EXPECT_EQ(uasm_to_st(golden::uasm()), golden::st()); }
TEST(WorkedExample, StToUasm) { EXPECT_EQ(st_to_uasm(golden::st()), golden::uasm()); }
TEST(WorkedExample, UasmToGtp) { EXPECT_EQ(uasm_to_gtp(golden::uasm()), golden::gtp()); }
TEST(WorkedExample, GtpToUasm) { EXPECT_EQ(gtp_to_uasm(golden::gtp()), golden::uasm()); }
TEST(WorkedExample, StToGtp) { EXPECT_EQ(st_to_gtp(golden::st()), golden::gtp()); }
TEST(WorkedExample, GtpToSt) { EXPECT_EQ(gtp_to_st(golden::gtp()), golden::st()); }

TEST(WorkedExample, CompassMatrixAllEntries) {
  CompassPointMatrix got = uasm_to_cpm(golden::uasm());
  CompassPointMatrix want = golden::cpm();
  ASSERT_EQ(got.rows.size(), 10u);
  int matched = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 9; ++j) {
      EXPECT_EQ(got.rows[i][j], want.rows[i][j]) << "entry (" << i + 1 << "," << j + 1 << ")";
      matched += got.rows[i][j] == want.rows[i][j];
    }
  EXPECT_EQ(matched, 90);
  EXPECT_EQ(cpm_to_uasm(got), golden::uasm());
}

TEST(RankOne, Tableaux) {
  EXPECT_EQ(st_to_gtp(single("1")).rows, (std::vector<std::vector<int>>{{1}, {1}}));
  EXPECT_EQ(st_to_gtp(single("1-")).rows, (std::vector<std::vector<int>>{{0}, {1}}));
  EXPECT_EQ(gtp_to_st(SympGTPattern{1, {{0}, {1}}}), single("1-"));
  EXPECT_EQ(st_to_uasm(single("1-")), uasm(1, {{0}, {1}}));
  EXPECT_EQ(uasm_to_st(uasm(1, {{1}, {0}})), single("1"));
  EXPECT_EQ(uasm_to_st(uasm(1, {{0}, {1}})), single("1-"));
  EXPECT_EQ(uasm_to_gtp(uasm(1, {{1}, {0}})).rows, (std::vector<std::vector<int>>{{1}, {1}}));
}

TEST(RankOne, Compass) {
  using C = Compass;
  EXPECT_EQ(uasm_to_cpm(uasm(1, {{1}, {0}})).rows, (std::vector<std::vector<C>>{{C::WE}, {C::NE}}));
  EXPECT_EQ(uasm_to_cpm(uasm(1, {{0}, {1}})).rows, (std::vector<std::vector<C>>{{C::SE}, {C::WE}}));
}

TEST(Errors, NegativeMultiplicityAndNotInvertible) {
  try {
    gtp_to_st(SympGTPattern{1, {{2}, {1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeMultiplicity);
  }
  // two equal entries on one diagonal
  ShiftedTableau bad{2, StrictPartition({2, 1}), {{Letter::unbarred(1), Letter::unbarred(2)}, {Letter::unbarred(1)}}};
  try {
    st_to_uasm(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvertible);
  }
  try {
    cpm_to_uasm(CompassPointMatrix{1, 1, {{Compass::WE}, {Compass::NE, Compass::SE}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

// Round trips, the commuting triangle and the CPM lemma over every object of
// the small shapes.
class AllObjects : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(AllObjects, RoundTripsAndTriangle) {
  const auto [n, w] = GetParam();
  for (const auto& mu : partitions_up_to(n, w)) {
    const auto lambda = add_staircase(mu, n);
    const auto sts = enumerate_shifted_tableaux(lambda, n);
    const auto as = enumerate_uasm(lambda, n);
    const auto gs = enumerate_gtp(lambda, n);
    ASSERT_EQ(sts.size(), as.size());
    ASSERT_EQ(sts.size(), gs.size());
    for (const auto& st : sts) {
      const UTurnASM a = st_to_uasm(st);
      ASSERT_TRUE(validate_uasm(a, lambda).ok());
      ASSERT_EQ(uasm_to_st(a), st);
      const SympGTPattern g = st_to_gtp(st);
      ASSERT_TRUE(validate_gtp(g).ok());
      ASSERT_EQ(gtp_to_st(g), st);
      ASSERT_EQ(uasm_to_gtp(a), g);
      ASSERT_EQ(gtp_to_uasm(g), a);
      const CompassPointMatrix c = uasm_to_cpm(a);
      ASSERT_EQ(cpm_to_uasm(c), a);
      ASSERT_TRUE(lemma_counts(c).ok());
    }
    for (const auto& a : as) ASSERT_EQ(st_to_uasm(uasm_to_st(a)), a);
    for (const auto& g : gs) ASSERT_EQ(st_to_gtp(gtp_to_st(g)), g);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, AllObjects,
                         ::testing::Values(std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 1}));

}  // namespace
}  // namespace sptok
