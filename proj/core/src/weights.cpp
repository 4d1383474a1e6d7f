#include "sptok/weights.hpp"

#include <array>

namespace sptok {

namespace {

constexpr std::array<std::string_view, 11> kSchemeNames = {
    "T_DEFORMED", "QT_DEFORMED", "ST_XY", "CPM_XY", "CPM_XY_ALT", "GT_XY",
    "ST_Q",       "CPM_Q_PLAIN", "CPM_Q_NORM", "GT_Q", "GT_QX",
};

}  // namespace

std::string_view to_string(WeightScheme s) noexcept { return kSchemeNames[static_cast<int>(s)]; }

WeightScheme parse_scheme(std::string_view text) {
  for (std::size_t i = 0; i < kSchemeNames.size(); ++i)
    if (kSchemeNames[i] == text) return static_cast<WeightScheme>(i);
  throw Error(Errc::UnknownScheme, "unknown weight scheme '" + std::string(text) + "'");
}

const std::vector<WeightScheme>& all_schemes() {
  static const std::vector<WeightScheme> schemes = [] {
    std::vector<WeightScheme> v;
    for (std::size_t i = 0; i < kSchemeNames.size(); ++i) v.push_back(static_cast<WeightScheme>(i));
    return v;
  }();
  return schemes;
}

std::string_view to_string(QNeighbour v) noexcept { return v == QNeighbour::Below ? "below" : "above"; }
std::string_view to_string(NormConstant v) noexcept { return v == NormConstant::FullPower ? "full-power" : "literal"; }
std::string_view to_string(LeCount v) noexcept { return v == LeCount::ProofSum ? "proof-sum" : "set-builder"; }

GTStatistics gt_statistics(const SympGTPattern& g) { return gt_statistics(g, classify_blr(g)); }

GTStatistics gt_statistics(const SympGTPattern& g, const BLRClassification& blr) {
  const int n = g.n;
  GTStatistics s;
  s.x_exponents.assign(n, 0);
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      if (j < k) s.B += blr.chi(Betweenness::B, k, j, false) + blr.chi(Betweenness::B, k, j, true);
      s.R_o += blr.chi(Betweenness::R, k, j, false);
      s.L_e += blr.chi(Betweenness::L, k, j, true);
      if (j < k) s.L_e_set_builder += blr.chi(Betweenness::L, k, j, true);
      s.x_exponents[k - 1] += 2 * g.unbarred(k, j) - g.barred(k, j) - g.barred(k - 1, j);
    }
    s.B += blr.chi(Betweenness::B, k, k, false) * blr.chi(Betweenness::B, k, k, true);
  }
  return s;
}

LaurentPoly wgt_T(const SymplecticTableau& t, bool deformed) {
  return weigh::symplectic_tableau(SymbolicRing{}, t, deformed);
}

LaurentPoly wgt_QT(const PrimedShiftedTableau& qt, bool deformed) {
  return weigh::primed_tableau(SymbolicRing{}, qt, deformed);
}

LaurentPoly wgt_ST(const ShiftedTableau& st) { return weigh::shifted_tableau(SymbolicRing{}, st); }

LaurentPoly wgt_st_q(const ShiftedTableau& st, QNeighbour nb) {
  return weigh::shifted_tableau_q(SymbolicRing{}, st, nb);
}

LaurentPoly wgt_cpm(const UTurnASM& a, WeightScheme scheme, NormConstant c0) {
  switch (scheme) {
    case WeightScheme::CPM_XY:
    case WeightScheme::CPM_XY_ALT:
    case WeightScheme::CPM_Q_PLAIN:
    case WeightScheme::CPM_Q_NORM: break;
    default: throw Error(Errc::UnknownScheme, std::string(to_string(scheme)) + " is not a CPM weighting");
  }
  return weigh::compass_matrix(SymbolicRing{}, uasm_to_cpm(a), scheme, c0);
}

LaurentPoly wgt_gtp(const SympGTPattern& g, WeightScheme scheme, LeCount le) {
  const auto blr = classify_blr(g);
  if (scheme == WeightScheme::GT_QX) return weigh::gt_qx(SymbolicRing{}, gt_statistics(g, blr), le);
  return weigh::gt_pattern(SymbolicRing{}, g, blr, scheme);
}

std::vector<std::vector<LaurentPoly>> annotate_st(const ShiftedTableau& st, WeightScheme scheme, QNeighbour nb) {
  if (scheme != WeightScheme::ST_XY && scheme != WeightScheme::ST_Q)
    throw Error(Errc::UnknownScheme, std::string(to_string(scheme)) + " does not weigh tableau cells");
  SymbolicRing r;
  std::vector<std::vector<LaurentPoly>> out(st.rows.size());
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i) {
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c) {
      const Letter l = st.at(i, c);
      if (scheme == WeightScheme::ST_XY) {
        out[i - 1].push_back(weigh::shifted_cell(r, l, cell_case(st, i, c)));
      } else {
        const bool left = st.contains(i, c - 1) && st.at(i, c - 1) == l;
        const int ni = nb == QNeighbour::Below ? i + 1 : i - 1;
        const bool other = st.contains(ni, c) && st.at(ni, c) == l;
        out[i - 1].push_back(weigh::shifted_q_cell(r, l, left, other));
      }
    }
  }
  return out;
}

std::string qx_factored(const GTStatistics& s, LeCount le) {
  std::vector<std::string> factors;
  auto power = [](std::string base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
  if (s.B != 0) factors.push_back(power("(1+q)", s.B));
  const int qe = s.R_o + s.le(le);
  if (qe != 0) factors.push_back(power("q", qe));
  for (int k = 1; k <= static_cast<int>(s.x_exponents.size()); ++k)
    if (s.x_exponents[k - 1] != 0) factors.push_back(power("x" + std::to_string(k), s.x_exponents[k - 1]));
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " * ";
    out += factors[i];
  }
  return out;
}

LemmaReport lemma_counts(const CompassPointMatrix& c) {
  LemmaReport rep;
  auto count = [&](int o, Compass which) {
    int t = 0;
    for (Compass e : c.rows[o])
      if (e == which) ++t;
    return t;
  };
  auto p = [&](int o) {
    if (c.rows[o].empty()) return 0;
    Compass e = c.rows[o][0];
    return e == Compass::WE || e == Compass::SW || e == Compass::NW ? 1 : 0;
  };
  for (int k = 1; k <= c.n; ++k) {
    const int ok = 2 * k - 2;
    const int ob = 2 * k - 1;
    LemmaRow row;
    row.k = k;
    row.ns_nw_ne_k = count(ok, Compass::NS) + count(ok, Compass::NW) + count(ok, Compass::NE);
    row.we_nw_ne_kbar = count(ob, Compass::WE) + count(ob, Compass::NW) + count(ob, Compass::NE);
    row.p_k = p(ok);
    row.p_kbar = p(ob);
    row.we_k = count(ok, Compass::WE);
    row.ns_k = count(ok, Compass::NS);
    row.we_kbar = count(ob, Compass::WE);
    row.ns_kbar = count(ob, Compass::NS);
    const std::string ks = std::to_string(k);
    if (row.ns_nw_ne_k != k - 1)
      rep.violations.push_back("#NS+#NW+#NE in row " + ks + " is " + std::to_string(row.ns_nw_ne_k));
    if (row.we_nw_ne_kbar != k)
      rep.violations.push_back("#WE+#NW+#NE in row " + ks + "- is " + std::to_string(row.we_nw_ne_kbar));
    if (row.we_k != row.ns_k + row.p_k) rep.violations.push_back("#WE != #NS + chi(P) in row " + ks);
    if (row.we_kbar != row.ns_kbar + row.p_kbar) rep.violations.push_back("#WE != #NS + chi(P) in row " + ks + "-");
    if (row.p_k + row.p_kbar != 1) rep.violations.push_back("chi(P) in rows " + ks + " and " + ks + "- do not sum to 1");
    rep.rows.push_back(row);
  }
  return rep;
}

void check_lemma(const CompassPointMatrix& c) {
  auto rep = lemma_counts(c);
  if (!rep.ok()) throw Error(Errc::LemmaViolation, rep.violations.front());
}

}  // namespace sptok
