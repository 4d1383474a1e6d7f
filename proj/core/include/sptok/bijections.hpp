#pragma once

// Maps between shifted tableaux, U-turn ASMs and strict symplectic GT
// patterns, plus the compass-point recoding of a UASM.
//
//   ST --st_to_uasm--> A --uasm_to_gtp--> GT
//    ^------------ gtp_to_st --------------'
//
// Every map is a bijection on valid input; the inverse directions are
// implemented independently rather than by search.

#include "sptok/matrices.hpp"
#include "sptok/tableaux.hpp"

namespace sptok {

/// m_{ij} = number of entries ≤ i (alphabet order) in row j of `st`.
SympGTPattern st_to_gtp(const ShiftedTableau& st);
/// Row j holds m_{kj} - m_{k-1̄,j} copies of k then m_{k̄j} - m_{kj} copies
/// of k̄, k = j..n. Throws NegativeMultiplicity on a negative count.
ShiftedTableau gtp_to_st(const SympGTPattern& g);

/// Column j of row(A) lists, by row, the letters on diagonal j of the tableau.
ShiftedTableau uasm_to_st(const UTurnASM& a);
/// Inverse of uasm_to_st. Throws NotInvertible if a diagonal repeats a letter.
UTurnASM st_to_uasm(const ShiftedTableau& st);

/// Row i of col(A) lists, by column number, the entries of GT row i.
SympGTPattern uasm_to_gtp(const UTurnASM& a);
/// Inverse of uasm_to_gtp: GT row i marks its positive entries in row i of
/// col(A), and A is recovered by differencing down each column.
UTurnASM gtp_to_uasm(const SympGTPattern& g);

/// +1 → WE, -1 → NS; a 0 is classified by the signs of its nearest nonzero
/// neighbours (N, W, E, S). A missing neighbour continues the alternation of
/// its line: N and E default to -1, W to the negated effective E value and S
/// to the negated effective N value. Throws UnmatchedPattern if a 0 matches
/// none of NE, SE, NW, SW.
CompassPointMatrix uasm_to_cpm(const UTurnASM& a);
/// Reads WE as +1, NS as -1 and every corner code as 0. Throws
/// DimensionMismatch on ragged rows.
UTurnASM cpm_to_uasm(const CompassPointMatrix& c);

}  // namespace sptok
