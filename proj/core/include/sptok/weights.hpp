#pragma once

// Weight functions on every object family. The formulas live in namespace
// `weigh` as templates over a WeightRing so the identity engine can evaluate
// them symbolically or at modular points without duplicating them; the plain
// functions below are the symbolic instances.

#include <string>
#include <string_view>
#include <vector>

#include "sptok/algebra.hpp"
#include "sptok/bijections.hpp"
#include "sptok/error.hpp"
#include "sptok/matrices.hpp"
#include "sptok/rings.hpp"
#include "sptok/tableaux.hpp"

namespace sptok {

enum class WeightScheme {
  T_DEFORMED,
  QT_DEFORMED,
  ST_XY,
  CPM_XY,
  CPM_XY_ALT,
  GT_XY,
  ST_Q,
  CPM_Q_PLAIN,
  CPM_Q_NORM,
  GT_Q,
  GT_QX,
};

std::string_view to_string(WeightScheme s) noexcept;
/// Throws UnknownScheme.
WeightScheme parse_scheme(std::string_view text);
const std::vector<WeightScheme>& all_schemes();

/// Which neighbour earns the q·x_k weight in the q-specialised tableau
/// weight: the equal entry directly below (the y = qx substitution of the
/// (x,y) table) or directly above.
enum class QNeighbour { Below, Above };
/// Overall constant of the normalised CPM q-weighting:
/// (1+q)^n / q^{n(n+1)/2} or (1+q) / q^{n(n+1)/2}.
enum class NormConstant { FullPower, Literal };
/// L_e summed over 1 ≤ j ≤ k, or over 1 ≤ j ≤ k-1.
enum class LeCount { ProofSum, SetBuilder };

std::string_view to_string(QNeighbour v) noexcept;
std::string_view to_string(NormConstant v) noexcept;
std::string_view to_string(LeCount v) noexcept;

struct GTStatistics {
  int B = 0;
  int R_o = 0;
  int L_e = 0;               // j ≤ k
  int L_e_set_builder = 0;   // j < k
  std::vector<int> x_exponents;  // [k-1] = Σ_j (2m_{kj} - m_{k̄j} - m_{k-1̄,j})

  int le(LeCount c) const noexcept { return c == LeCount::ProofSum ? L_e : L_e_set_builder; }
};

GTStatistics gt_statistics(const SympGTPattern& g);
GTStatistics gt_statistics(const SympGTPattern& g, const BLRClassification& blr);

namespace weigh {

template <WeightRing R>
using V = typename R::value_type;

/// x_k for k, x_k^{-1} for k̄.
template <WeightRing R>
V<R> x_of(const R& r, Letter l) {
  return r.variable(VarId::x(l.level()), l.is_barred() ? -1 : 1);
}
template <WeightRing R>
V<R> y_of(const R& r, Letter l) {
  return r.variable(VarId::y(l.level()), l.is_barred() ? -1 : 1);
}
template <WeightRing R>
V<R> one_plus_q(const R& r, int sign = 1) {
  return r.add(r.one(), r.variable(VarId::q(), sign));
}

template <WeightRing R>
V<R> symplectic_tableau(const R& r, const SymplecticTableau& t, bool deformed) {
  V<R> w = r.one();
  const V<R> t2 = deformed ? r.variable(VarId::t(), 2) : r.one();
  for (const auto& row : t.rows)
    for (Letter l : row) {
      w = r.mul(w, x_of(r, l));
      if (l.is_barred() && deformed) w = r.mul(w, t2);
    }
  return w;
}

template <WeightRing R>
V<R> primed_entry(const R& r, Entry e, bool deformed) {
  V<R> w = e.primed ? y_of(r, e.letter) : x_of(r, e.letter);
  if (e.letter.is_barred() && deformed) w = r.mul(w, r.variable(VarId::t(), 2));
  return w;
}

template <WeightRing R>
V<R> primed_tableau(const R& r, const PrimedShiftedTableau& qt, bool deformed) {
  V<R> w = r.one();
  const auto& st = qt.base;
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i)
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c)
      w = r.mul(w, primed_entry(r, qt.at(i, c), deformed));
  return w;
}

/// (x,y) weight of one shifted-tableau cell.
template <WeightRing R>
V<R> shifted_cell(const R& r, Letter l, CellCase cc) {
  switch (cc) {
    case CellCase::LeftEqual: return x_of(r, l);
    case CellCase::BelowEqual: return y_of(r, l);
    case CellCase::Free: break;
  }
  return r.add(x_of(r, l), y_of(r, l));
}

/// q weight of one cell; `neighbour_equal` says whether the cell matches the
/// neighbour that carries q (and not its left neighbour).
template <WeightRing R>
V<R> shifted_q_cell(const R& r, Letter l, bool left_equal, bool neighbour_equal) {
  const int sign = l.is_barred() ? -1 : 1;
  if (left_equal) return x_of(r, l);
  if (neighbour_equal) return r.mul(r.variable(VarId::q(), sign), x_of(r, l));
  return r.mul(one_plus_q(r, sign), x_of(r, l));
}

template <WeightRing R>
V<R> shifted_tableau(const R& r, const ShiftedTableau& st) {
  V<R> w = r.one();
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i)
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c)
      w = r.mul(w, shifted_cell(r, st.at(i, c), cell_case(st, i, c)));
  return w;
}

template <WeightRing R>
V<R> shifted_tableau_q(const R& r, const ShiftedTableau& st, QNeighbour nb) {
  V<R> w = r.one();
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i) {
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c) {
      const Letter l = st.at(i, c);
      const bool left = st.contains(i, c - 1) && st.at(i, c - 1) == l;
      const int ni = nb == QNeighbour::Below ? i + 1 : i - 1;
      const bool other = st.contains(ni, c) && st.at(ni, c) == l;
      w = r.mul(w, shifted_q_cell(r, l, left, other));
    }
  }
  return w;
}

/// c_0 · Π c_ij weights for the four CPM schemes. Throws UnknownScheme for
/// any other scheme.
template <WeightRing R>
V<R> compass_matrix(const R& r, const CompassPointMatrix& cpm, WeightScheme scheme,
                    NormConstant c0 = NormConstant::FullPower) {
  V<R> w = r.one();
  for (int o = 0; o < static_cast<int>(cpm.rows.size()); ++o) {
    const Letter l = Letter::from_ordinal(o);
    const bool bar = l.is_barred();
    const int sign = bar ? -1 : 1;
    const auto& row = cpm.rows[o];
    if (scheme == WeightScheme::CPM_XY_ALT && !row.empty() &&
        (row[0] == Compass::WE || row[0] == Compass::NW || row[0] == Compass::SW))
      w = r.mul(w, r.add(x_of(r, l), y_of(r, l)));
    for (Compass c : row) {
      switch (scheme) {
        case WeightScheme::CPM_XY:
          if (c == Compass::WE) w = r.mul(w, r.add(x_of(r, l), y_of(r, l)));
          else if (c == Compass::NW) w = r.mul(w, y_of(r, l));
          else if (c == Compass::SW) w = r.mul(w, x_of(r, l));
          break;
        case WeightScheme::CPM_XY_ALT:
          if (c == Compass::NS) w = r.mul(w, r.add(x_of(r, l), y_of(r, l)));
          else if (c == Compass::NW) w = r.mul(w, y_of(r, l));
          else if (c == Compass::SW) w = r.mul(w, x_of(r, l));
          break;
        case WeightScheme::CPM_Q_PLAIN:
          if (c == Compass::WE) w = r.mul(w, r.mul(one_plus_q(r, sign), x_of(r, l)));
          else if (c == Compass::NW) w = r.mul(w, r.mul(r.variable(VarId::q(), sign), x_of(r, l)));
          else if (c == Compass::SW) w = r.mul(w, x_of(r, l));
          break;
        case WeightScheme::CPM_Q_NORM:
          if (c == Compass::WE || c == Compass::SW) w = r.mul(w, x_of(r, l));
          else if (c == Compass::NS) w = r.mul(w, one_plus_q(r));
          else if (c == Compass::NW) w = r.mul(w, bar ? x_of(r, l) : r.mul(r.variable(VarId::q()), x_of(r, l)));
          else if (c == Compass::NE && bar) w = r.mul(w, r.variable(VarId::q()));
          break;
        default: throw Error(Errc::UnknownScheme, std::string(to_string(scheme)) + " is not a CPM weighting");
      }
    }
  }
  if (scheme == WeightScheme::CPM_Q_NORM) {
    const int n = cpm.n;
    const unsigned power = c0 == NormConstant::FullPower ? static_cast<unsigned>(n) : 1U;
    w = r.mul(w, ring_pow(r, one_plus_q(r), power));
    w = r.mul(w, r.variable(VarId::q(), -(n * (n + 1) / 2)));
  }
  return w;
}

template <WeightRing R>
V<R> gt_monomial(const R& r, const GTStatistics& s) {
  V<R> w = r.one();
  for (int k = 1; k <= static_cast<int>(s.x_exponents.size()); ++k)
    if (s.x_exponents[k - 1] != 0) w = r.mul(w, r.variable(VarId::x(k), s.x_exponents[k - 1]));
  return w;
}

/// GT_XY and GT_Q. Throws UnknownScheme for other schemes.
template <WeightRing R>
V<R> gt_pattern(const R& r, const SympGTPattern& g, const BLRClassification& blr, WeightScheme scheme) {
  const int n = g.n;
  V<R> w = r.one();
  if (scheme == WeightScheme::GT_XY) {
    for (int k = 1; k <= n; ++k) {
      const V<R> xk = r.variable(VarId::x(k));
      const V<R> yk = r.variable(VarId::y(k));
      const V<R> xb = r.variable(VarId::x(k), -1);
      const V<R> yb = r.variable(VarId::y(k), -1);
      for (int j = 1; j <= k; ++j) {
        switch (blr.at(k, j, false)) {
          case Betweenness::B: w = r.mul(w, r.add(xk, yk)); break;
          case Betweenness::L: w = r.mul(w, xk); break;
          case Betweenness::R: w = r.mul(w, yk); break;
        }
        const int e1 = g.unbarred(k, j) - g.barred(k - 1, j) - 1;
        if (e1 != 0) w = r.mul(w, r.variable(VarId::x(k), e1));
        switch (blr.at(k, j, true)) {
          case Betweenness::B: w = r.mul(w, r.add(xb, yb)); break;
          case Betweenness::L: w = r.mul(w, xb); break;
          case Betweenness::R: w = r.mul(w, yb); break;
        }
        const int e2 = g.barred(k, j) - g.unbarred(k, j) - 1;
        if (e2 != 0) w = r.mul(w, r.variable(VarId::x(k), -e2));
      }
    }
    return w;
  }
  if (scheme == WeightScheme::GT_Q) {
    int b = 0;
    int qe = 0;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= k; ++j) {
        b += blr.chi(Betweenness::B, k, j, false) + blr.chi(Betweenness::B, k, j, true);
        qe += blr.chi(Betweenness::R, k, j, false) + blr.chi(Betweenness::L, k, j, true) - 1;
      }
    w = ring_pow(r, one_plus_q(r), static_cast<unsigned>(b));
    if (qe != 0) w = r.mul(w, r.variable(VarId::q(), qe));
    return r.mul(w, gt_monomial(r, gt_statistics(g, blr)));
  }
  throw Error(Errc::UnknownScheme, std::string(to_string(scheme)) + " is not a GT weighting");
}

/// (1+q)^B q^{R_o+L_e} x^{xwgt}.
template <WeightRing R>
V<R> gt_qx(const R& r, const GTStatistics& s, LeCount le = LeCount::ProofSum) {
  V<R> w = ring_pow(r, one_plus_q(r), static_cast<unsigned>(s.B));
  const int qe = s.R_o + s.le(le);
  if (qe != 0) w = r.mul(w, r.variable(VarId::q(), qe));
  return r.mul(w, gt_monomial(r, s));
}

}  // namespace weigh

LaurentPoly wgt_T(const SymplecticTableau& t, bool deformed);
LaurentPoly wgt_QT(const PrimedShiftedTableau& qt, bool deformed);
LaurentPoly wgt_ST(const ShiftedTableau& st);
LaurentPoly wgt_st_q(const ShiftedTableau& st, QNeighbour nb = QNeighbour::Below);
/// CPM_XY, CPM_XY_ALT, CPM_Q_PLAIN or CPM_Q_NORM of the CPM of `a`.
LaurentPoly wgt_cpm(const UTurnASM& a, WeightScheme scheme, NormConstant c0 = NormConstant::FullPower);
/// GT_XY, GT_Q or GT_QX.
LaurentPoly wgt_gtp(const SympGTPattern& g, WeightScheme scheme, LeCount le = LeCount::ProofSum);

/// Per-cell weights of a shifted tableau under ST_XY or ST_Q, laid out like
/// st.rows.
std::vector<std::vector<LaurentPoly>> annotate_st(const ShiftedTableau& st, WeightScheme scheme,
                                                  QNeighbour nb = QNeighbour::Below);

/// "(1+q)^7 * q^7 * x2 * x4^-4"; factors with exponent 0 are left out.
std::string qx_factored(const GTStatistics& s, LeCount le = LeCount::ProofSum);

struct LemmaRow {
  int k = 0;
  int ns_nw_ne_k = 0;       // expected k-1
  int we_nw_ne_kbar = 0;    // expected k
  int p_k = 0;              // χ(P_k)
  int p_kbar = 0;           // χ(P_k̄)
  int we_k = 0, ns_k = 0, we_kbar = 0, ns_kbar = 0;
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Row-count identities of a CPM coming from a valid UASM:
/// #NS_k+#NW_k+#NE_k = k-1, #WE_k̄+#NW_k̄+#NE_k̄ = k, #WE_i = #NS_i + χ(P_i)
/// and χ(P_k)+χ(P_k̄) = 1, with P_i := c_{i1} ∈ {WE, SW, NW}.
LemmaReport lemma_counts(const CompassPointMatrix& c);
/// Same, throwing LemmaViolation on the first failure.
void check_lemma(const CompassPointMatrix& c);

}  // namespace sptok
