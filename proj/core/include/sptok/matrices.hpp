#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sptok/shapes.hpp"
#include "sptok/tableaux.hpp"

namespace sptok {

/// Dense row-major integer matrix, 0-based.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  int operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::vector<std::vector<int>> to_rows() const;
  auto operator<=>(const IntMatrix&) const = default;
};

/// 2n×m U-turn alternating sign matrix. Matrix row r (0-based) belongs to the
/// letter with ordinal r, so rows read 1, 1̄, 2, 2̄, ..., n, n̄ top to bottom.
struct UTurnASM {
  int n = 0;
  IntMatrix a;

  int breadth() const noexcept { return a.cols; }
  int at(Letter row, int col) const { return a(row.ordinal(), col - 1); }
  auto operator<=>(const UTurnASM&) const = default;
};

enum class Compass { WE, NS, NE, SE, NW, SW };

std::string_view to_string(Compass c) noexcept;
Compass parse_compass(std::string_view text);

struct CompassPointMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Compass>> rows;  // 2n rows in alphabet order

  Compass at(Letter row, int col) const { return rows[row.ordinal()][col - 1]; }
  bool operator==(const CompassPointMatrix&) const = default;
};

/// Strict symplectic Gelfand-Tsetlin pattern. rows[2k-2] is row k and
/// rows[2k-1] is row k̄, each with k entries; the top row is rows[2n-1].
struct SympGTPattern {
  int n = 0;
  std::vector<std::vector<int>> rows;

  /// m_{kj}; zero for k = 0 or j > k.
  int unbarred(int k, int j) const;
  /// m_{k̄j}; zero for k = 0 (the row 0̄ below the pattern) or j > k.
  int barred(int k, int j) const;
  const std::vector<int>& top() const { return rows.back(); }
  auto operator<=>(const SympGTPattern&) const = default;
};

enum class Betweenness { B, L, R };

struct BLRClassification {
  int n = 0;
  std::vector<std::vector<Betweenness>> unbarred;  // [k-1][j-1], 1 ≤ j ≤ k
  std::vector<std::vector<Betweenness>> barred;

  Betweenness at(int k, int j, bool bar) const { return (bar ? barred : unbarred)[k - 1][j - 1]; }
  int chi(Betweenness b, int k, int j, bool bar) const { return at(k, j, bar) == b ? 1 : 0; }
};

/// UA1 alternation, UA2 topmost nonzero is 1, UA3 rightmost nonzero is 1,
/// UA4 line sums in {0,1}, UA4' row_k + row_k̄ = 1, UA5 column sums from λ.
/// Throws DimensionMismatch unless `a` is 2n×λ_1 with n = ℓ(λ).
Validation validate_uasm(const UTurnASM& a, const StrictPartition& lambda);

/// Betweenness, strictness, nonnegativity and the not-both-zero rule.
/// Throws ShapeMismatch on wrong row count or row lengths.
Validation validate_gtp(const SympGTPattern& g);

/// UA^λ(n), produced from ST^λ(n) through the inverse of the row(A) map and
/// re-validated against UA1-UA5. Throws BadLength when ℓ(λ) ≠ n.
void for_each_uasm(const StrictPartition& lambda, int n, const std::function<void(const UTurnASM&)>& fn);
std::vector<UTurnASM> enumerate_uasm(const StrictPartition& lambda, int n);

/// GT^λ(n), generated top row down. Throws BadLength when ℓ(λ) ≠ n.
void for_each_gtp(const StrictPartition& lambda, int n, const std::function<void(const SympGTPattern&)>& fn);
std::vector<SympGTPattern> enumerate_gtp(const StrictPartition& lambda, int n);

BLRClassification classify_blr(const SympGTPattern& g);

/// Right-to-left cumulative row sums. Throws InvariantViolation if an entry
/// leaves {0,1}, which cannot happen for a valid UASM.
IntMatrix row_cumsum(const UTurnASM& a);
/// Top-to-bottom cumulative column sums, same guarantee.
IntMatrix col_cumsum(const UTurnASM& a);

}  // namespace sptok
