#pragma once

// Exact weighted sum over ST^λ(n) for weights that factor over cells and
// depend only on a cell's letter and whether it equals its left or lower
// neighbour. Rows are processed bottom-up; the state after row i is the row
// word itself, so the work grows with the number of compatible row pairs
// rather than with |ST^λ(n)|.

#include <cstdint>
#include <map>
#include <vector>

#include "sptok/rings.hpp"
#include "sptok/tableaux.hpp"

namespace sptok::detail {

/// `cell(letter, case)` returns the ring value of one cell.
template <WeightRing R, class CellWeight>
typename R::value_type row_transfer_sum(const R& r, const StrictPartition& lambda, int n, CellWeight&& cell) {
  using V = typename R::value_type;
  using Word = std::vector<std::uint8_t>;
  check_shifted_shape(lambda, n);
  const int top = 2 * n - 1;

  // weights[ordinal][case]
  std::vector<std::vector<V>> weights(2 * n);
  for (int o = 0; o < 2 * n; ++o)
    for (CellCase cc : {CellCase::LeftEqual, CellCase::BelowEqual, CellCase::Free})
      weights[o].push_back(cell(Letter::from_ordinal(o), cc));

  std::map<Word, V> below_states;
  below_states.emplace(Word{}, r.one());
  V total = r.zero();

  for (int i = n; i >= 1; --i) {
    const int len = lambda.part(i);
    const int below_len = lambda.part(i + 1);  // row i+1 spans columns i+1 .. i+below_len
    const bool last = i == 1;
    std::map<Word, V> states;
    Word w(len);
    std::vector<V> prod(len + 1, r.one());

    for (const auto& [below, base] : below_states) {
      prod[0] = base;
      // position p of row i is column c = i + p; the cell below is row i+1
      // position p-1 and the diagonal neighbour is position p.
      auto rec = [&](auto&& self, int p) -> void {
        if (p == len) {
          if (last) {
            r.add_to(total, prod[len]);
          } else {
            auto it = states.find(w);
            if (it == states.end()) states.emplace(w, prod[len]);
            else r.add_to(it->second, prod[len]);
          }
          return;
        }
        int lo = p == 0 ? 2 * i - 2 : w[p - 1];
        int hi = p == 0 ? 2 * i - 1 : top;
        const bool has_below = p >= 1 && p - 1 < below_len;
        if (has_below) hi = std::min<int>(hi, below[p - 1]);
        if (p < below_len) hi = std::min<int>(hi, below[p] - 1);
        for (int v = lo; v <= hi; ++v) {
          w[p] = static_cast<std::uint8_t>(v);
          CellCase cc = CellCase::Free;
          if (p > 0 && w[p - 1] == v) cc = CellCase::LeftEqual;
          else if (has_below && below[p - 1] == v) cc = CellCase::BelowEqual;
          r.mul_into(prod[p + 1], prod[p], weights[v][static_cast<int>(cc)]);
          self(self, p + 1);
        }
      };
      rec(rec, 0);
    }
    below_states = std::move(states);
  }
  return total;
}

}  // namespace sptok::detail
