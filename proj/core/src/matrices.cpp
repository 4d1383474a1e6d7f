#include "sptok/matrices.hpp"

#include <array>

#include "sptok/bijections.hpp"
#include "sptok/error.hpp"

namespace sptok {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out[i][j] = (*this)(i, j);
  return out;
}

namespace {

constexpr std::array<std::string_view, 6> kCompassNames = {"WE", "NS", "NE", "SE", "NW", "SW"};

}  // namespace

std::string_view to_string(Compass c) noexcept { return kCompassNames[static_cast<int>(c)]; }

Compass parse_compass(std::string_view text) {
  for (std::size_t i = 0; i < kCompassNames.size(); ++i)
    if (kCompassNames[i] == text) return static_cast<Compass>(i);
  throw Error(Errc::ParseError, "unknown compass point '" + std::string(text) + "'");
}

int SympGTPattern::unbarred(int k, int j) const {
  if (k == 0 || j > k) return 0;
  return rows[2 * k - 2][j - 1];
}

int SympGTPattern::barred(int k, int j) const {
  if (k == 0 || j > k) return 0;
  return rows[2 * k - 1][j - 1];
}

// ------------------------------------------------------------------ UASM

namespace {

std::string row_name(int r) { return to_string(Letter::from_ordinal(r)); }

// Alternation and the sign of the extreme nonzero along one line, visiting
// entries in the order given by `at(0..len-1)`; `first_must_be_one` applies
// to the first nonzero seen.
template <class At>
void check_line(int len, At at, const char* extreme_cond, const std::string& what, Validation& v, Cell cell) {
  int prev = 0;
  int sum = 0;
  bool first = true;
  for (int t = 0; t < len; ++t) {
    int e = at(t);
    if (e == 0) continue;
    if (first && e != 1) v.violations.push_back({extreme_cond, cell, what + ": first nonzero is not 1"});
    if (!first && e == prev) v.violations.push_back({"UA1", cell, what + ": nonzero entries do not alternate"});
    first = false;
    prev = e;
    sum += e;
  }
  if (sum != 0 && sum != 1) v.violations.push_back({"UA4", cell, what + ": sum " + std::to_string(sum)});
}

}  // namespace

Validation validate_uasm(const UTurnASM& u, const StrictPartition& lambda) {
  const int n = lambda.length();
  const auto& a = u.a;
  if (u.n != n || a.rows != 2 * n || a.cols != lambda.breadth() || a.data.size() != std::size_t(a.rows) * a.cols)
    throw Error(Errc::DimensionMismatch, "UASM is " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                                             ", expected " + std::to_string(2 * n) + "x" +
                                             std::to_string(lambda.breadth()));
  Validation v;
  const int m = a.cols;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < m; ++j)
      if (a(i, j) < -1 || a(i, j) > 1)
        v.violations.push_back({"entries", {i + 1, j + 1}, "entry " + std::to_string(a(i, j)) + " not in {-1,0,1}"});
  if (!v.ok()) return v;

  std::vector<int> row_sum(a.rows, 0);
  for (int i = 0; i < a.rows; ++i) {
    // rows are read right to left so the rightmost nonzero comes first
    check_line(m, [&](int t) { return a(i, m - 1 - t); }, "UA3", "row " + row_name(i), v, {i + 1, 0});
    for (int j = 0; j < m; ++j) row_sum[i] += a(i, j);
  }
  std::vector<bool> is_part(m + 1, false);
  for (int p : lambda.parts()) is_part[p] = true;
  for (int j = 0; j < m; ++j) {
    check_line(a.rows, [&](int t) { return a(t, j); }, "UA2", "column " + std::to_string(j + 1), v, {0, j + 1});
    int col_sum = 0;
    for (int i = 0; i < a.rows; ++i) col_sum += a(i, j);
    if (col_sum != (is_part[j + 1] ? 1 : 0))
      v.violations.push_back({"UA5", {0, j + 1},
                              "column " + std::to_string(j + 1) + " sums to " + std::to_string(col_sum)});
  }
  for (int k = 1; k <= n; ++k)
    if (row_sum[2 * k - 2] + row_sum[2 * k - 1] != 1)
      v.violations.push_back({"UA4'", {2 * k - 1, 0}, "row_" + std::to_string(k) + " + row_" + std::to_string(k) +
                                                           "- = " +
                                                           std::to_string(row_sum[2 * k - 2] + row_sum[2 * k - 1])});
  return v;
}

void for_each_uasm(const StrictPartition& lambda, int n, const std::function<void(const UTurnASM&)>& fn) {
  for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) {
    UTurnASM a = st_to_uasm(st);
    Validation v = validate_uasm(a, lambda);
    if (!v.ok())
      throw Error(Errc::InvariantViolation, "generated UASM fails " + v.violations.front().condition + ": " +
                                                v.violations.front().detail);
    fn(a);
  });
}

std::vector<UTurnASM> enumerate_uasm(const StrictPartition& lambda, int n) {
  std::vector<UTurnASM> out;
  for_each_uasm(lambda, n, [&](const UTurnASM& a) { out.push_back(a); });
  return out;
}

IntMatrix row_cumsum(const UTurnASM& u) {
  IntMatrix r(u.a.rows, u.a.cols);
  for (int i = 0; i < r.rows; ++i) {
    int s = 0;
    for (int j = r.cols - 1; j >= 0; --j) {
      s += u.a(i, j);
      if (s != 0 && s != 1) throw Error(Errc::InvariantViolation, "row cumulative sum left {0,1}");
      r(i, j) = s;
    }
  }
  return r;
}

IntMatrix col_cumsum(const UTurnASM& u) {
  IntMatrix c(u.a.rows, u.a.cols);
  for (int j = 0; j < c.cols; ++j) {
    int s = 0;
    for (int i = 0; i < c.rows; ++i) {
      s += u.a(i, j);
      if (s != 0 && s != 1) throw Error(Errc::InvariantViolation, "column cumulative sum left {0,1}");
      c(i, j) = s;
    }
  }
  return c;
}

// ------------------------------------------------------------------ GTP

Validation validate_gtp(const SympGTPattern& g) {
  const int n = g.n;
  if (n < 1 || static_cast<int>(g.rows.size()) != 2 * n)
    throw Error(Errc::ShapeMismatch, "pattern of rank " + std::to_string(n) + " needs " + std::to_string(2 * n) +
                                         " rows, got " + std::to_string(g.rows.size()));
  for (int r = 0; r < 2 * n; ++r)
    if (static_cast<int>(g.rows[r].size()) != r / 2 + 1)
      throw Error(Errc::ShapeMismatch, "row " + row_name(r) + " must have " + std::to_string(r / 2 + 1) + " entries");

  Validation v;
  auto between = [&](int hi, int mid, int lo, int k, int j, const std::string& what) {
    if (!(hi >= mid && mid >= lo))
      v.violations.push_back({"betweenness", {k, j}, what + " fails " + std::to_string(hi) + " >= " +
                                                         std::to_string(mid) + " >= " + std::to_string(lo)});
  };
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      if (g.unbarred(k, j) < 0 || g.barred(k, j) < 0)
        v.violations.push_back({"nonnegative", {k, j}, "negative entry"});
      between(g.barred(k, j), g.unbarred(k, j), g.barred(k, j + 1), k, j, "m(" + std::to_string(k) + "," +
                                                                              std::to_string(j) + ")");
      if (k < n)
        between(g.unbarred(k + 1, j), g.barred(k, j), g.unbarred(k + 1, j + 1), k, j,
                "m(" + std::to_string(k) + "-," + std::to_string(j) + ")");
      if (j < k) {
        if (!(g.unbarred(k, j) > g.unbarred(k, j + 1)))
          v.violations.push_back({"strictness", {k, j}, "row " + std::to_string(k) + " not strictly decreasing"});
        if (!(g.barred(k, j) > g.barred(k, j + 1)))
          v.violations.push_back({"strictness", {k, j}, "row " + std::to_string(k) + "- not strictly decreasing"});
      }
    }
    if (g.unbarred(k, k) == 0 && g.barred(k, k) == 0)
      v.violations.push_back({"not-both-zero", {k, k}, "m(" + std::to_string(k) + "," + std::to_string(k) +
                                                           ") and its barred partner are both 0"});
  }
  return v;
}

void for_each_gtp(const StrictPartition& lambda, int n, const std::function<void(const SympGTPattern&)>& fn) {
  detail::check_shifted_shape(lambda, n);
  SympGTPattern g{n, {}};
  g.rows.resize(2 * n);
  for (int r = 0; r < 2 * n; ++r) g.rows[r].assign(r / 2 + 1, 0);
  g.rows[2 * n - 1] = lambda.parts();

  // Fill row r (alphabet ordinal) entry j from the row above, r+1. Row k̄
  // interlaces with row k+1 and row k with row k̄; both read x_j ∈ [p_{j+1}, p_j].
  auto rec = [&](auto&& self, int r, int j) -> void {
    if (r < 0) {
      fn(g);
      return;
    }
    auto& row = g.rows[r];
    const auto& parent = g.rows[r + 1];
    const int len = static_cast<int>(row.size());
    if (j == len) {
      if (r % 2 == 0 && row.back() == 0 && parent.back() == 0) return;  // not both zero
      self(self, r - 1, 0);
      return;
    }
    int hi = parent[j];
    int lo = j + 1 < static_cast<int>(parent.size()) ? parent[j + 1] : 0;
    if (j > 0) hi = std::min(hi, row[j - 1] - 1);
    for (int x = hi; x >= lo; --x) {
      row[j] = x;
      self(self, r, j + 1);
    }
  };
  rec(rec, 2 * n - 2, 0);
}

std::vector<SympGTPattern> enumerate_gtp(const StrictPartition& lambda, int n) {
  std::vector<SympGTPattern> out;
  for_each_gtp(lambda, n, [&](const SympGTPattern& g) { out.push_back(g); });
  return out;
}

BLRClassification classify_blr(const SympGTPattern& g) {
  const int n = g.n;
  BLRClassification c{n, {}, {}};
  c.unbarred.resize(n);
  c.barred.resize(n);
  auto triple = [](int a, int b, int d) {
    if (a > b && b > d) return Betweenness::B;
    if (a == b && b > d) return Betweenness::L;
    if (a > b && b == d) return Betweenness::R;
    throw Error(Errc::InvariantViolation, "betweenness triple " + std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(d) + " is not strict, left or right");
  };
  for (int k = 1; k <= n; ++k) {
    c.unbarred[k - 1].resize(k);
    c.barred[k - 1].resize(k);
    for (int j = 1; j < k; ++j) {
      c.unbarred[k - 1][j - 1] = triple(g.unbarred(k, j), g.barred(k - 1, j), g.unbarred(k, j + 1));
      c.barred[k - 1][j - 1] = triple(g.barred(k, j), g.unbarred(k, j), g.barred(k, j + 1));
    }
    // j = k: R is never true for nonnegative, interlaced entries
    c.unbarred[k - 1][k - 1] = g.unbarred(k, k) > 0 ? Betweenness::B : Betweenness::L;
    c.barred[k - 1][k - 1] = g.barred(k, k) > g.unbarred(k, k) ? Betweenness::B : Betweenness::L;
  }
  return c;
}

}  // namespace sptok
