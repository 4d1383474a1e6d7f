#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sptok/shapes.hpp"

namespace sptok {

struct Violation {
  std::string condition;  // "T1", "ST3", "QT2", "shape", ...
  Cell cell;
  std::string detail;
};

struct Validation {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Filling of the ordinary diagram of `shape`; rows[i-1][c-1] is cell (i, c).
struct SymplecticTableau {
  int n = 0;
  Partition shape;
  std::vector<std::vector<Letter>> rows;

  Letter at(int row, int col) const { return rows[row - 1][col - 1]; }
  bool operator==(const SymplecticTableau&) const = default;
};

/// Filling of the shifted diagram of `shape`; rows[i-1][c-i] is cell (i, c).
struct ShiftedTableau {
  int n = 0;
  StrictPartition shape;
  std::vector<std::vector<Letter>> rows;

  bool contains(int row, int col) const noexcept {
    return row >= 1 && row <= static_cast<int>(rows.size()) && col >= row &&
           col < row + static_cast<int>(rows[row - 1].size());
  }
  Letter at(int row, int col) const { return rows[row - 1][col - row]; }
  auto operator<=>(const ShiftedTableau& o) const { return rows <=> o.rows; }
  bool operator==(const ShiftedTableau&) const = default;
};

struct PrimedShiftedTableau {
  ShiftedTableau base;
  std::vector<std::vector<bool>> primed;  // same layout as base.rows

  Entry at(int row, int col) const { return {base.at(row, col), primed[row - 1][col - row]}; }
  bool operator==(const PrimedShiftedTableau&) const = default;
};

/// Neighbourhood of a shifted-tableau cell that fixes its weight and its
/// priming: equal to its left neighbour, equal to the entry directly below,
/// or neither. Both cannot hold at once since those two neighbours share a
/// diagonal.
enum class CellCase { LeftEqual, BelowEqual, Free };

CellCase cell_case(const ShiftedTableau& st, int row, int col);
int free_cell_count(const ShiftedTableau& st);

/// T1 rows weak, T2 columns strict, T3 levels k, k̄ only in rows ≤ k.
/// Throws ShapeMismatch when the rows do not cover the diagram of `shape`.
Validation validate(const SymplecticTableau& t);
/// ST1 rows weak, ST2 columns weak, ST3 diagonals strict, ST4 row k starts
/// with k or k̄, and ℓ(λ) = n.
Validation validate(const ShiftedTableau& st);
/// The base must be a valid ST; QT1 entry equal to its left neighbour is
/// unprimed, QT2 entry above an equal entry is primed.
Validation validate(const PrimedShiftedTableau& qt);

/// Enumerates T^μ(n) in lexicographic order of the row-major reading word.
/// Throws RankTooSmall when ℓ(μ) > n.
void for_each_symplectic_tableau(const Partition& mu, int n, const std::function<void(const SymplecticTableau&)>& fn);
std::vector<SymplecticTableau> enumerate_symplectic_tableaux(const Partition& mu, int n);

/// Enumerates ST^λ(n). Cells are filled bottom row first, each row left to
/// right, and tableaux come out in lexicographic order of that reading word.
/// Throws BadLength when ℓ(λ) ≠ n.
void for_each_shifted_tableau(const StrictPartition& lambda, int n,
                              const std::function<void(const ShiftedTableau&)>& fn);
std::vector<ShiftedTableau> enumerate_shifted_tableaux(const StrictPartition& lambda, int n);

/// All 2^f primed refinements of `st`, f = free_cell_count(st), in binary
/// counting order over the free cells in row-major order.
void for_each_priming(const ShiftedTableau& st, const std::function<void(const PrimedShiftedTableau&)>& fn);
std::vector<PrimedShiftedTableau> primings(const ShiftedTableau& st);

namespace detail {

void check_shifted_shape(const StrictPartition& lambda, int n);

/// Backtracking fill of the shifted diagram of λ: rows n..1, each left to
/// right. For every placement `visitor.place(depth, letter, cell_case)` is
/// called before descending; `visitor.complete(tableau)` at every leaf.
/// Every partial filling extends, so there are no dead branches.
template <class Visitor>
void walk_shifted(const StrictPartition& lambda, int n, Visitor& visitor) {
  check_shifted_shape(lambda, n);
  ShiftedTableau cur{n, lambda, {}};
  cur.rows.resize(n);
  // per depth: cell, and the depths of its left, lower and lower-right
  // neighbours (-1 when absent)
  struct Slot {
    int row, pos, left, below, diag;
  };
  std::vector<Slot> order;
  std::vector<std::vector<int>> depth_of(n + 2);
  for (int i = n; i >= 1; --i) {
    cur.rows[i - 1].resize(lambda.part(i));
    depth_of[i].resize(lambda.part(i));
    for (int p = 0; p < lambda.part(i); ++p) {
      const int below_len = lambda.part(i + 1);  // row i+1 starts one column right
      Slot s{i, p, p > 0 ? depth_of[i][p - 1] : -1, -1, -1};
      if (p >= 1 && p - 1 < below_len) s.below = depth_of[i + 1][p - 1];
      if (p < below_len) s.diag = depth_of[i + 1][p];
      depth_of[i][p] = static_cast<int>(order.size());
      order.push_back(s);
    }
  }
  const int top = 2 * n - 1;
  const int total = static_cast<int>(order.size());
  std::vector<int> val(total);

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == total) {
      visitor.complete(static_cast<const ShiftedTableau&>(cur));
      return;
    }
    const Slot& s = order[depth];
    int lo = s.left < 0 ? 2 * s.row - 2 : val[s.left];
    int hi = s.left < 0 ? 2 * s.row - 1 : top;
    const int below = s.below < 0 ? -1 : val[s.below];
    if (s.below >= 0) hi = std::min(hi, below);
    if (s.diag >= 0) hi = std::min(hi, val[s.diag] - 1);
    for (int v = lo; v <= hi; ++v) {
      val[depth] = v;
      cur.rows[s.row - 1][s.pos] = Letter::from_ordinal(v);
      CellCase cc = CellCase::Free;
      if (s.left >= 0 && v == lo) cc = CellCase::LeftEqual;
      else if (v == below) cc = CellCase::BelowEqual;
      visitor.place(depth, Letter::from_ordinal(v), cc);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

}  // namespace sptok
