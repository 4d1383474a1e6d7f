#include <gtest/gtest.h>

#include "golden.hpp"
#include "sptok/bijections.hpp"
#include "sptok/error.hpp"
#include "sptok/weights.hpp"

namespace sptok {
namespace {

LaurentPoly X(int k, int e = 1) { return LaurentPoly::variable(VarId::x(k), e); }
LaurentPoly Y(int k, int e = 1) { return LaurentPoly::variable(VarId::y(k), e); }
LaurentPoly Q(int e = 1) { return LaurentPoly::variable(VarId::q(), e); }
LaurentPoly T(int e = 1) { return LaurentPoly::variable(VarId::t(), e); }
const LaurentPoly kOne(1);

UTurnASM uasm(int n, std::vector<std::vector<int>> rows) { return {n, IntMatrix::from_rows(rows)}; }

ShiftedTableau st1(std::initializer_list<const char*> row) {
  ShiftedTableau s{1, StrictPartition({static_cast<int>(row.size())}), {{}}};
  for (const char* e : row) s.rows[0].push_back(parse_entry(e).letter);
  return s;
}

std::map<VarId, Monomial> y_to_qx(int n) {
  std::map<VarId, Monomial> m;
  for (int k = 1; k <= n; ++k) m[VarId::y(k)] = Monomial(VarId::q()) * Monomial(VarId::x(k));
  return m;
}

TEST(WeightT, Examples) {
  EXPECT_EQ(wgt_T(SymplecticTableau{1, Partition{}, {}}, true), kOne);
  SymplecticTableau bar{1, Partition({1}), {{Letter::barred(1)}}};
  EXPECT_EQ(wgt_T(bar, true), T(2) * X(1, -1));
  EXPECT_EQ(wgt_T(bar, false), X(1, -1));
  LaurentPoly sum;
  for (const auto& t : enumerate_symplectic_tableaux(Partition({1}), 2)) sum += wgt_T(t, false);
  EXPECT_EQ(sum, X(1) + X(1, -1) + X(2) + X(2, -1));
}

TEST(WeightQT, Examples) {
  PrimedShiftedTableau plain{st1({"1"}), {{false}}};
  PrimedShiftedTableau primed{st1({"1"}), {{true}}};
  PrimedShiftedTableau barp{st1({"1-"}), {{true}}};
  EXPECT_EQ(wgt_QT(plain, false), X(1));
  EXPECT_EQ(wgt_QT(primed, false), Y(1));
  EXPECT_EQ(wgt_QT(barp, true), T(2) * Y(1, -1));
  LaurentPoly sum;
  for (const auto& q : primings(st1({"1"}))) sum += wgt_QT(q, false);
  EXPECT_EQ(sum, X(1) + Y(1));
  EXPECT_EQ(sum, wgt_ST(st1({"1"})));
}

TEST(WeightST, Examples) {
  EXPECT_EQ(wgt_ST(golden::st()), golden::weight());
  EXPECT_EQ(wgt_ST(st1({"1", "1-"})), (X(1) + Y(1)) * (X(1, -1) + Y(1, -1)));
  EXPECT_EQ(wgt_ST(st1({"1", "1"})), (X(1) + Y(1)) * X(1));
}

TEST(WeightCPM, Examples) {
  EXPECT_EQ(wgt_cpm(golden::uasm(), WeightScheme::CPM_XY), golden::weight());
  EXPECT_EQ(wgt_cpm(golden::uasm(), WeightScheme::CPM_XY_ALT), golden::weight());
  const UTurnASM up = uasm(1, {{1}, {0}}), down = uasm(1, {{0}, {1}});
  EXPECT_EQ(wgt_cpm(up, WeightScheme::CPM_XY), X(1) + Y(1));
  EXPECT_EQ(wgt_cpm(up, WeightScheme::CPM_XY_ALT), X(1) + Y(1));
  EXPECT_EQ(wgt_cpm(up, WeightScheme::CPM_Q_PLAIN), (kOne + Q()) * X(1));
  EXPECT_EQ(wgt_cpm(down, WeightScheme::CPM_Q_PLAIN), (kOne + Q(-1)) * X(1, -1));
  try {
    wgt_cpm(up, WeightScheme::GT_XY);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownScheme);
  }
}

TEST(WeightCPM, NormalisedConstantsAgreeAtRankOne) {
  for (const auto& a : {uasm(1, {{1}, {0}}), uasm(1, {{0}, {1}})})
    EXPECT_EQ(wgt_cpm(a, WeightScheme::CPM_Q_NORM, NormConstant::FullPower),
              wgt_cpm(a, WeightScheme::CPM_Q_NORM, NormConstant::Literal));
}

TEST(WeightGT, Examples) {
  EXPECT_EQ(wgt_gtp(golden::gtp(), WeightScheme::GT_XY), golden::weight());
  const SympGTPattern a{1, {{1}, {1}}}, b{1, {{0}, {1}}};
  EXPECT_EQ(wgt_gtp(a, WeightScheme::GT_XY), wgt_ST(gtp_to_st(a)));
  EXPECT_EQ(wgt_gtp(b, WeightScheme::GT_XY), wgt_ST(gtp_to_st(b)));
  EXPECT_EQ(wgt_gtp(a, WeightScheme::GT_Q), (kOne + Q()) * X(1));
  EXPECT_EQ(wgt_gtp(b, WeightScheme::GT_Q), (kOne + Q()) * X(1, -1) * Q(-1));
  EXPECT_THROW(wgt_gtp(a, WeightScheme::CPM_XY), Error);
}

TEST(Statistics, WorkedExample) {
  GTStatistics s = gt_statistics(golden::gtp());
  EXPECT_EQ(s.B, 7);
  EXPECT_EQ(s.R_o, 2);
  EXPECT_EQ(s.L_e, 5);
  EXPECT_EQ(s.x_exponents, (std::vector<int>{0, 1, 0, -4, 0}));
  EXPECT_EQ(wgt_gtp(golden::gtp(), WeightScheme::GT_QX), (kOne + Q()).pow(7) * Q(7) * X(2) * X(4, -4));
  EXPECT_EQ(qx_factored(s), "(1+q)^7 * q^7 * x2 * x4^-4");
}

TEST(Statistics, RankOne) {
  GTStatistics a = gt_statistics(SympGTPattern{1, {{1}, {1}}});
  EXPECT_EQ(a.B, 0);
  EXPECT_EQ(a.R_o, 0);
  EXPECT_EQ(a.L_e, 1);
  EXPECT_EQ(a.x_exponents, (std::vector<int>{1}));
  GTStatistics b = gt_statistics(SympGTPattern{1, {{0}, {1}}});
  EXPECT_EQ(b.B, 0);
  EXPECT_EQ(b.R_o, 0);
  EXPECT_EQ(b.L_e, 0);
  EXPECT_EQ(b.x_exponents, (std::vector<int>{-1}));
  EXPECT_EQ(qx_factored(b), "x1^-1");
}

TEST(WeightSTQ, Examples) {
  EXPECT_EQ(wgt_st_q(st1({"1"})), (kOne + Q()) * X(1));
  EXPECT_EQ(wgt_st_q(st1({"1-"})), (kOne + Q(-1)) * X(1, -1));
  LaurentPoly sum;
  for (const auto& st : enumerate_shifted_tableaux(StrictPartition({1}), 1)) sum += wgt_st_q(st);
  EXPECT_EQ(sum, (kOne + Q()) * X(1) + (kOne + Q(-1)) * X(1, -1));
  EXPECT_EQ(sum, (X(1) + Q() * X(1)) * (kOne + Q(-1) * X(1, -2)));
}

TEST(WeightSTQ, NeighbourConventionsDifferOnlyWithVerticalPairs) {
  // the worked tableau has 2 above 2, so the two readings disagree there
  EXPECT_NE(wgt_st_q(golden::st(), QNeighbour::Below), wgt_st_q(golden::st(), QNeighbour::Above));
  EXPECT_EQ(wgt_st_q(st1({"1", "1-"}), QNeighbour::Below), wgt_st_q(st1({"1", "1-"}), QNeighbour::Above));
}

TEST(Annotation, CellsMultiplyToWeight) {
  auto cells = annotate_st(golden::st(), WeightScheme::ST_XY);
  LaurentPoly prod(1);
  for (const auto& row : cells)
    for (const auto& c : row) prod *= c;
  EXPECT_EQ(prod, golden::weight());
  EXPECT_EQ(cells[0][2], Y(2));                    // 2 above 2
  EXPECT_EQ(cells[0][5], X(3));                    // 3 after 3
  EXPECT_EQ(cells[0][0], X(1) + Y(1));             // free
  auto q = annotate_st(golden::st(), WeightScheme::ST_Q);
  EXPECT_EQ(q[0][2], Q() * X(2));
  EXPECT_THROW(annotate_st(golden::st(), WeightScheme::GT_Q), Error);
}

TEST(Lemma, Examples) {
  LemmaReport r = lemma_counts(golden::cpm());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.rows[0].ns_nw_ne_k, 0);
  using C = Compass;
  LemmaReport a = lemma_counts(CompassPointMatrix{1, 1, {{C::WE}, {C::NE}}});
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a.rows[0].we_nw_ne_kbar, 1);
  LemmaReport b = lemma_counts(CompassPointMatrix{1, 1, {{C::SE}, {C::WE}}});
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(b.rows[0].ns_nw_ne_k, 0);
  EXPECT_EQ(b.rows[0].we_nw_ne_kbar, 1);
}

TEST(Lemma, ViolationThrows) {
  using C = Compass;
  CompassPointMatrix bad{1, 1, {{C::NS}, {C::NE}}};
  EXPECT_FALSE(lemma_counts(bad).ok());
  try {
    check_lemma(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LemmaViolation);
  }
}

TEST(Schemes, TextRoundTrip) {
  for (WeightScheme s : all_schemes()) EXPECT_EQ(parse_scheme(to_string(s)), s);
  EXPECT_EQ(all_schemes().size(), 11u);
  EXPECT_THROW(parse_scheme("CPM"), Error);
}

// Weight equivalences on every object of the small shapes; the acceptance
// suite repeats this over the full identity sweep.
class WeightProperties : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(WeightProperties, HoldPerObject) {
  const auto [n, w] = GetParam();
  const auto qsub = y_to_qx(n);
  std::map<VarId, Monomial> tscale;
  for (int k = 1; k <= n; ++k) {
    tscale[VarId::x(k)] = Monomial(VarId::t()) * Monomial(VarId::x(k));
    tscale[VarId::y(k)] = Monomial(VarId::t()) * Monomial(VarId::y(k));
  }
  const LaurentPoly c0 = (kOne + Q()).pow(n) * Q(-n * (n + 1) / 2);

  for (const auto& mu : partitions_up_to(n, w)) {
    const auto lambda = add_staircase(mu, n);
    LaurentPoly plain, norm;
    for (const auto& st : enumerate_shifted_tableaux(lambda, n)) {
      const UTurnASM a = st_to_uasm(st);
      const SympGTPattern g = st_to_gtp(st);
      const LaurentPoly ws = wgt_ST(st);
      // same weight in all three representations
      ASSERT_EQ(wgt_cpm(a, WeightScheme::CPM_XY), ws);
      ASSERT_EQ(wgt_gtp(g, WeightScheme::GT_XY), ws);
      // the alternative CPM weighting
      ASSERT_EQ(wgt_cpm(a, WeightScheme::CPM_XY_ALT), ws);
      // primings sum to the unprimed weight; the deformed weight is t-homogeneous
      LaurentPoly primed_sum;
      for (const auto& qt : primings(st)) {
        primed_sum += wgt_QT(qt, false);
        ASSERT_EQ(wgt_QT(qt, true).substitute(tscale), T(lambda.size()) * wgt_QT(qt, false));
      }
      ASSERT_EQ(primed_sum, ws);
      // q-weights are the y = qx specialisation
      const LaurentPoly wq = ws.substitute(qsub);
      ASSERT_EQ(wgt_st_q(st), wq);
      ASSERT_EQ(wgt_cpm(a, WeightScheme::CPM_Q_PLAIN), wq);
      ASSERT_EQ(wgt_gtp(g, WeightScheme::GT_Q), wq);
      // statistics form
      ASSERT_EQ(c0 * wgt_gtp(g, WeightScheme::GT_QX), wgt_gtp(g, WeightScheme::GT_Q));
      ASSERT_TRUE(lemma_counts(uasm_to_cpm(a)).ok());
      plain += wgt_cpm(a, WeightScheme::CPM_Q_PLAIN);
      norm += wgt_cpm(a, WeightScheme::CPM_Q_NORM);
    }
    // normalised and plain CPM q-weights agree in total
    ASSERT_EQ(plain, norm) << to_string(lambda);
  }
}

TEST_P(WeightProperties, StatisticsMatchCompassCounts) {
  const auto [n, w] = GetParam();
  for (const auto& mu : partitions_up_to(n, w))
    for (const auto& a : enumerate_uasm(add_staircase(mu, n), n)) {
      const auto c = uasm_to_cpm(a);
      const auto s = gt_statistics(uasm_to_gtp(a));
      int nw_odd = 0, ne_even = 0, ns = 0;
      for (int o = 0; o < 2 * n; ++o)
        for (Compass x : c.rows[o]) {
          nw_odd += o % 2 == 0 && x == Compass::NW;
          ne_even += o % 2 == 1 && x == Compass::NE;
          ns += x == Compass::NS;
        }
      ASSERT_EQ(s.R_o, nw_odd);
      ASSERT_EQ(s.L_e, ne_even);
      ASSERT_EQ(s.B, ns);
    }
}

INSTANTIATE_TEST_SUITE_P(Small, WeightProperties,
                         ::testing::Values(std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 1}));

}  // namespace
}  // namespace sptok
