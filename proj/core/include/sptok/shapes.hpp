#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sptok {

/// Weakly decreasing sequence of nonnegative integers, stored with trailing
/// zeros trimmed. The rank n it is used with is carried separately.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  /// Part i (1-based); 0 past the length.
  int part(int i) const noexcept { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing sequence of positive integers.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  int part(int i) const noexcept { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  /// λ_1, the breadth of the diagram; 0 when empty.
  int breadth() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  auto operator<=>(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);
std::string to_string(const StrictPartition& p);
/// Comma-separated parts; the empty string is the empty partition.
std::vector<int> parse_parts(std::string_view text);

/// λ = μ + δ with δ = (n, n-1, ..., 1). Throws RankTooSmall if ℓ(μ) > n.
StrictPartition add_staircase(const Partition& mu, int n);
/// μ = λ - δ for ℓ(λ) = n. Throws BadLength when λ has the wrong length.
Partition remove_staircase(const StrictPartition& lambda, int n);
StrictPartition staircase(int n);

/// All μ with ℓ(μ) ≤ n and |μ| ≤ max_weight, ordered by |μ| and then by
/// decreasing lexicographic order of parts.
std::vector<Partition> partitions_up_to(int n, int max_weight);

/// 1-based (row, column) position in a diagram.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Row i holds columns i .. i+λ_i-1.
std::vector<Cell> shifted_cells(const StrictPartition& lambda);
/// Row i holds columns 1 .. μ_i.
std::vector<Cell> ordinary_cells(const Partition& mu);

/// A letter of the alphabet 1 < 1̄ < 2 < 2̄ < ... < n < n̄, stored as its
/// 0-based position in that order (level k ↦ 2k-2, k̄ ↦ 2k-1). The ordinal
/// doubles as the row index of the corresponding U-turn ASM row.
class Letter {
 public:
  constexpr Letter() = default;
  static constexpr Letter from_ordinal(int ordinal) { return Letter(static_cast<std::uint8_t>(ordinal)); }
  static constexpr Letter unbarred(int level) { return from_ordinal(2 * level - 2); }
  static constexpr Letter barred(int level) { return from_ordinal(2 * level - 1); }

  constexpr int ordinal() const noexcept { return ord_; }
  constexpr int level() const noexcept { return ord_ / 2 + 1; }
  constexpr bool is_barred() const noexcept { return (ord_ & 1U) != 0; }

  auto operator<=>(const Letter&) const = default;

 private:
  constexpr explicit Letter(std::uint8_t ord) : ord_(ord) {}
  std::uint8_t ord_ = 0;
};

/// Entry of a (possibly primed) tableau. Primes do not affect the order.
struct Entry {
  Letter letter;
  bool primed = false;
  bool operator==(const Entry&) const = default;
};

/// ASCII form: "3" for 3, "3-" for 3̄, with a trailing "'" when primed.
std::string to_string(Letter l);
std::string to_string(const Entry& e);
Entry parse_entry(std::string_view text);

}  // namespace sptok
