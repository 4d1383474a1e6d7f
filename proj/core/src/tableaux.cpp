#include "sptok/tableaux.hpp"

#include "sptok/error.hpp"

namespace sptok {

namespace {

std::string cell_str(int row, int col) { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

void check_alphabet(Letter l, int n, int row, int col, Validation& v) {
  if (l.level() > n)
    v.violations.push_back({"alphabet", {row, col}, to_string(l) + " exceeds rank " + std::to_string(n)});
}

}  // namespace

CellCase cell_case(const ShiftedTableau& st, int row, int col) {
  Letter v = st.at(row, col);
  if (st.contains(row, col - 1) && st.at(row, col - 1) == v) return CellCase::LeftEqual;
  if (st.contains(row + 1, col) && st.at(row + 1, col) == v) return CellCase::BelowEqual;
  return CellCase::Free;
}

int free_cell_count(const ShiftedTableau& st) {
  int f = 0;
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i)
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c)
      if (cell_case(st, i, c) == CellCase::Free) ++f;
  return f;
}

// ------------------------------------------------------------- validation

Validation validate(const SymplecticTableau& t) {
  const auto& mu = t.shape;
  if (static_cast<int>(t.rows.size()) != mu.length())
    throw Error(Errc::ShapeMismatch, "tableau has " + std::to_string(t.rows.size()) + " rows, shape has " +
                                         std::to_string(mu.length()));
  for (int i = 1; i <= mu.length(); ++i)
    if (static_cast<int>(t.rows[i - 1].size()) != mu.part(i))
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(i) + " has the wrong length");

  Validation v;
  for (int i = 1; i <= mu.length(); ++i) {
    for (int c = 1; c <= mu.part(i); ++c) {
      Letter l = t.at(i, c);
      check_alphabet(l, t.n, i, c, v);
      if (c > 1 && t.at(i, c - 1) > l)
        v.violations.push_back({"T1", {i, c}, "row decreases at " + cell_str(i, c)});
      if (i > 1 && !(t.at(i - 1, c) < l))
        v.violations.push_back({"T2", {i, c}, "column not strictly increasing at " + cell_str(i, c)});
      if (l.level() < i)
        v.violations.push_back({"T3", {i, c}, to_string(l) + " appears below row " + std::to_string(l.level())});
    }
  }
  return v;
}

namespace detail {

void check_shifted_shape(const StrictPartition& lambda, int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "rank must be positive");
  if (lambda.length() != n)
    throw Error(Errc::BadLength, "shape " + to_string(lambda) + " must have length n = " + std::to_string(n));
}

}  // namespace detail

Validation validate(const ShiftedTableau& st) {
  const auto& lambda = st.shape;
  if (static_cast<int>(st.rows.size()) != lambda.length())
    throw Error(Errc::ShapeMismatch, "tableau has " + std::to_string(st.rows.size()) + " rows, shape has " +
                                         std::to_string(lambda.length()));
  for (int i = 1; i <= lambda.length(); ++i)
    if (static_cast<int>(st.rows[i - 1].size()) != lambda.part(i))
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(i) + " has the wrong length");

  Validation v;
  if (lambda.length() != st.n)
    v.violations.push_back({"length", {0, 0}, "ℓ(λ) = " + std::to_string(lambda.length()) + " but n = " +
                                                  std::to_string(st.n)});
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int c = i; c < i + lambda.part(i); ++c) {
      Letter l = st.at(i, c);
      check_alphabet(l, st.n, i, c, v);
      if (st.contains(i, c - 1) && st.at(i, c - 1) > l)
        v.violations.push_back({"ST1", {i, c}, "row decreases at " + cell_str(i, c)});
      if (st.contains(i - 1, c) && st.at(i - 1, c) > l)
        v.violations.push_back({"ST2", {i, c}, "column decreases at " + cell_str(i, c)});
      if (st.contains(i - 1, c - 1) && !(st.at(i - 1, c - 1) < l))
        v.violations.push_back({"ST3", {i, c}, "diagonal not strictly increasing at " + cell_str(i, c)});
    }
    if (lambda.part(i) > 0 && st.at(i, i).level() != i)
      v.violations.push_back({"ST4", {i, i}, "row " + std::to_string(i) + " starts with " + to_string(st.at(i, i))});
  }
  return v;
}

Validation validate(const PrimedShiftedTableau& qt) {
  const auto& st = qt.base;
  Validation v = validate(st);
  if (qt.primed.size() != st.rows.size())
    throw Error(Errc::ShapeMismatch, "prime flags do not match the tableau rows");
  for (std::size_t r = 0; r < st.rows.size(); ++r)
    if (qt.primed[r].size() != st.rows[r].size())
      throw Error(Errc::ShapeMismatch, "prime flags do not match the tableau rows");
  for (int i = 1; i <= st.shape.length(); ++i) {
    for (int c = i; c < i + st.shape.part(i); ++c) {
      bool primed = qt.primed[i - 1][c - i];
      switch (cell_case(st, i, c)) {
        case CellCase::LeftEqual:
          if (primed) v.violations.push_back({"QT1", {i, c}, "equal to left neighbour but primed"});
          break;
        case CellCase::BelowEqual:
          if (!primed) v.violations.push_back({"QT2", {i, c}, "above an equal entry but unprimed"});
          break;
        case CellCase::Free: break;
      }
    }
  }
  return v;
}

// ------------------------------------------------------------- enumeration

void for_each_symplectic_tableau(const Partition& mu, int n,
                                 const std::function<void(const SymplecticTableau&)>& fn) {
  if (n < 1) throw Error(Errc::InvalidInput, "rank must be positive");
  if (mu.length() > n)
    throw Error(Errc::RankTooSmall, "partition " + to_string(mu) + " has length > " + std::to_string(n));
  SymplecticTableau cur{n, mu, {}};
  cur.rows.resize(mu.length());
  for (int i = 1; i <= mu.length(); ++i) cur.rows[i - 1].resize(mu.part(i));
  auto cells = ordinary_cells(mu);
  const int top = 2 * n - 1;
  const int total = static_cast<int>(cells.size());

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == total) {
      fn(cur);
      return;
    }
    const auto [i, c] = cells[depth];
    int lo = 2 * i - 2;  // T3: level ≥ row
    if (c > 1) lo = std::max(lo, cur.at(i, c - 1).ordinal());
    if (i > 1) lo = std::max(lo, cur.at(i - 1, c).ordinal() + 1);
    for (int v = lo; v <= top; ++v) {
      cur.rows[i - 1][c - 1] = Letter::from_ordinal(v);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

std::vector<SymplecticTableau> enumerate_symplectic_tableaux(const Partition& mu, int n) {
  std::vector<SymplecticTableau> out;
  for_each_symplectic_tableau(mu, n, [&](const SymplecticTableau& t) { out.push_back(t); });
  return out;
}

namespace {

struct CallbackVisitor {
  const std::function<void(const ShiftedTableau&)>& fn;
  void place(int, Letter, CellCase) const noexcept {}
  void complete(const ShiftedTableau& st) const { fn(st); }
};

}  // namespace

void for_each_shifted_tableau(const StrictPartition& lambda, int n,
                              const std::function<void(const ShiftedTableau&)>& fn) {
  CallbackVisitor visitor{fn};
  detail::walk_shifted(lambda, n, visitor);
}

std::vector<ShiftedTableau> enumerate_shifted_tableaux(const StrictPartition& lambda, int n) {
  std::vector<ShiftedTableau> out;
  for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) { out.push_back(st); });
  return out;
}

void for_each_priming(const ShiftedTableau& st, const std::function<void(const PrimedShiftedTableau&)>& fn) {
  PrimedShiftedTableau qt{st, {}};
  qt.primed.resize(st.rows.size());
  std::vector<Cell> free_cells;
  for (int i = 1; i <= static_cast<int>(st.rows.size()); ++i) {
    qt.primed[i - 1].assign(st.rows[i - 1].size(), false);
    for (int c = i; c < i + static_cast<int>(st.rows[i - 1].size()); ++c) {
      switch (cell_case(st, i, c)) {
        case CellCase::LeftEqual: break;
        case CellCase::BelowEqual: qt.primed[i - 1][c - i] = true; break;
        case CellCase::Free: free_cells.push_back({i, c}); break;
      }
    }
  }
  if (free_cells.size() >= 63) throw Error(Errc::ScaleExceeded, "too many free cells to enumerate primings");
  const std::uint64_t count = std::uint64_t{1} << free_cells.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t b = 0; b < free_cells.size(); ++b) {
      const auto [i, c] = free_cells[b];
      qt.primed[i - 1][c - i] = ((mask >> b) & 1U) != 0;
    }
    fn(qt);
  }
}

std::vector<PrimedShiftedTableau> primings(const ShiftedTableau& st) {
  std::vector<PrimedShiftedTableau> out;
  for_each_priming(st, [&](const PrimedShiftedTableau& qt) { out.push_back(qt); });
  return out;
}

}  // namespace sptok
