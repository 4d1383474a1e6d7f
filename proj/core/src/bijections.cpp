#include "sptok/bijections.hpp"

#include "sptok/error.hpp"

namespace sptok {

SympGTPattern st_to_gtp(const ShiftedTableau& st) {
  const int n = st.n;
  SympGTPattern g{n, {}};
  g.rows.resize(2 * n);
  for (int o = 0; o < 2 * n; ++o) {
    const int k = o / 2 + 1;
    g.rows[o].assign(k, 0);
    for (int j = 1; j <= k && j <= static_cast<int>(st.rows.size()); ++j) {
      int count = 0;
      for (Letter l : st.rows[j - 1])
        if (l.ordinal() <= o) ++count;
      g.rows[o][j - 1] = count;
    }
  }
  return g;
}

ShiftedTableau gtp_to_st(const SympGTPattern& g) {
  const int n = g.n;
  ShiftedTableau st{n, StrictPartition(g.top()), {}};
  st.rows.resize(n);
  for (int j = 1; j <= n; ++j) {
    auto& row = st.rows[j - 1];
    for (int k = j; k <= n; ++k) {
      const int plain = g.unbarred(k, j) - g.barred(k - 1, j);
      const int bar = g.barred(k, j) - g.unbarred(k, j);
      if (plain < 0 || bar < 0)
        throw Error(Errc::NegativeMultiplicity, "row " + std::to_string(j) + " would hold a negative number of " +
                                                    std::to_string(k) + (plain < 0 ? "" : "-") + " entries");
      row.insert(row.end(), plain, Letter::unbarred(k));
      row.insert(row.end(), bar, Letter::barred(k));
    }
  }
  return st;
}

ShiftedTableau uasm_to_st(const UTurnASM& a) {
  const IntMatrix r = row_cumsum(a);
  const int n = a.n;
  std::vector<std::vector<Letter>> rows(n);
  for (int j = 0; j < r.cols; ++j) {
    int depth = 0;
    for (int o = 0; o < r.rows; ++o) {
      if (r(o, j) == 0) continue;
      if (depth >= n) throw Error(Errc::InvariantViolation, "diagonal " + std::to_string(j + 1) + " is too long");
      auto& row = rows[depth];
      if (static_cast<int>(row.size()) != j)
        throw Error(Errc::InvariantViolation, "diagonal " + std::to_string(j + 1) + " leaves a gap in row " +
                                                  std::to_string(depth + 1));
      row.push_back(Letter::from_ordinal(o));
      ++depth;
    }
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return ShiftedTableau{n, StrictPartition(parts), std::move(rows)};
}

UTurnASM st_to_uasm(const ShiftedTableau& st) {
  const int n = st.n;
  const int m = st.shape.breadth();
  IntMatrix profile(2 * n, m + 1);
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i) {
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c) {
      const int diag = c - i;
      const int o = st.at(i, c).ordinal();
      if (o >= 2 * n) throw Error(Errc::NotInvertible, "entry beyond rank " + std::to_string(n));
      if (profile(o, diag) != 0)
        throw Error(Errc::NotInvertible, "diagonal " + std::to_string(diag + 1) + " repeats " + to_string(st.at(i, c)));
      profile(o, diag) = 1;
    }
  }
  UTurnASM u{n, IntMatrix(2 * n, m)};
  for (int o = 0; o < 2 * n; ++o)
    for (int j = 0; j < m; ++j) u.a(o, j) = profile(o, j) - profile(o, j + 1);
  return u;
}

SympGTPattern uasm_to_gtp(const UTurnASM& a) {
  const IntMatrix c = col_cumsum(a);
  SympGTPattern g{a.n, {}};
  g.rows.resize(2 * a.n);
  for (int o = 0; o < 2 * a.n; ++o) {
    const int k = o / 2 + 1;
    auto& row = g.rows[o];
    for (int j = c.cols - 1; j >= 0; --j)
      if (c(o, j) == 1) row.push_back(j + 1);
    if (static_cast<int>(row.size()) > k)
      throw Error(Errc::InvariantViolation, "row " + to_string(Letter::from_ordinal(o)) + " of col(A) has " +
                                                std::to_string(row.size()) + " ones, more than " + std::to_string(k));
    row.resize(k, 0);
  }
  return g;
}

UTurnASM gtp_to_uasm(const SympGTPattern& g) {
  const int n = g.n;
  const int m = g.top().empty() ? 0 : g.top().front();
  IntMatrix col(2 * n, m);
  for (int o = 0; o < 2 * n; ++o) {
    for (int e : g.rows[o]) {
      if (e == 0) continue;
      if (e < 0 || e > m) throw Error(Errc::InvalidInput, "pattern entry " + std::to_string(e) + " out of range");
      if (col(o, e - 1) != 0) throw Error(Errc::NotInvertible, "repeated entry in a pattern row");
      col(o, e - 1) = 1;
    }
  }
  UTurnASM u{n, IntMatrix(2 * n, m)};
  for (int o = 0; o < 2 * n; ++o)
    for (int j = 0; j < m; ++j) u.a(o, j) = col(o, j) - (o > 0 ? col(o - 1, j) : 0);
  return u;
}

CompassPointMatrix uasm_to_cpm(const UTurnASM& u) {
  const auto& a = u.a;
  CompassPointMatrix c{u.n, a.cols, {}};
  c.rows.assign(a.rows, std::vector<Compass>(a.cols, Compass::SE));
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      if (a(i, j) == 1) {
        c.rows[i][j] = Compass::WE;
        continue;
      }
      if (a(i, j) == -1) {
        c.rows[i][j] = Compass::NS;
        continue;
      }
      int north = -1;
      int east = -1;
      int west = 0;
      int south = 0;
      for (int t = i - 1; t >= 0; --t)
        if (a(t, j) != 0) {
          north = a(t, j);
          break;
        }
      for (int t = j + 1; t < a.cols; ++t)
        if (a(i, t) != 0) {
          east = a(i, t);
          break;
        }
      for (int t = j - 1; t >= 0 && west == 0; --t) west = a(i, t);
      for (int t = i + 1; t < a.rows && south == 0; ++t) south = a(t, j);
      if (west == 0) west = -east;
      if (south == 0) south = -north;

      Compass cp;
      if (north == 1 && west == 1 && east == -1 && south == -1) cp = Compass::NE;
      else if (north == -1 && west == 1 && east == -1 && south == 1) cp = Compass::SE;
      else if (north == 1 && west == -1 && east == 1 && south == -1) cp = Compass::NW;
      else if (north == -1 && west == -1 && east == 1 && south == 1) cp = Compass::SW;
      else
        throw Error(Errc::UnmatchedPattern, "zero at row " + to_string(Letter::from_ordinal(i)) + ", column " +
                                                std::to_string(j + 1) + " has neighbours N=" + std::to_string(north) +
                                                " W=" + std::to_string(west) + " E=" + std::to_string(east) +
                                                " S=" + std::to_string(south));
      c.rows[i][j] = cp;
    }
  }
  return c;
}

UTurnASM cpm_to_uasm(const CompassPointMatrix& c) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : c.rows) {
    auto& row = rows.emplace_back();
    for (Compass x : r) row.push_back(x == Compass::WE ? 1 : x == Compass::NS ? -1 : 0);
  }
  return UTurnASM{c.n, IntMatrix::from_rows(rows)};
}

}  // namespace sptok
