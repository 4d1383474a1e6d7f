#pragma once

// Exact sparse Laurent polynomials in x_1..x_n, y_1..y_n, t, q with
// arbitrary-precision integer coefficients, plus evaluation in Z/pZ.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sptok {

enum class VarKind : std::uint8_t { X = 0, Y = 1, T = 2, Q = 3 };

/// A variable symbol. `index` is 1-based for X and Y and ignored (kept 0) for T and Q.
struct VarId {
  VarKind kind = VarKind::X;
  int index = 0;

  static VarId x(int k) { return {VarKind::X, k}; }
  static VarId y(int k) { return {VarKind::Y, k}; }
  static VarId t() { return {VarKind::T, 0}; }
  static VarId q() { return {VarKind::Q, 0}; }

  auto operator<=>(const VarId&) const = default;
};

std::string to_string(VarId v);

/// Laurent monomial stored as a dense exponent vector over a fixed variable
/// universe (x_1..x_R, y_1..y_R, t, q with R = kMaxRank). Slot order is the
/// canonical (kind, index) order, so the defaulted comparison is lexicographic
/// with X < Y < T < Q.
class Monomial {
 public:
  static constexpr int kMaxRank = 12;
  static constexpr int kSlots = 2 * kMaxRank + 2;

  Monomial() { exps_.fill(0); }
  explicit Monomial(VarId v, int exponent = 1);

  int exponent(VarId v) const { return exps_[slot(v)]; }
  void set_exponent(VarId v, int exponent);
  bool is_one() const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial inverse() const;

  /// Calls f(VarId, exponent) for every nonzero exponent in canonical order.
  template <class F>
  void for_each(F&& f) const {
    for (int s = 0; s < kSlots; ++s)
      if (exps_[s] != 0) f(var_of_slot(s), static_cast<int>(exps_[s]));
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  static int slot(VarId v);
  static VarId var_of_slot(int s);

 private:
  std::array<std::int16_t, kSlots> exps_;
};

class LaurentPoly {
 public:
  using Coeff = mpz_class;
  using TermMap = std::map<Monomial, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Monomial& m, Coeff c = 1);

  static LaurentPoly variable(VarId v, int exponent = 1) { return LaurentPoly(Monomial(v, exponent)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Coeff coeff(const Monomial& m) const;

  /// Adds c·m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const Coeff& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned e) const;

  /// Replaces every variable v present in `images` by the monomial images[v].
  LaurentPoly substitute(const std::map<VarId, Monomial>& images) const;

  /// Variables with a nonzero exponent in some term, in canonical order.
  std::vector<VarId> variables() const;

 private:
  TermMap terms_;
};

// Canonical text form: terms in ascending monomial order, each written as
// `coef * x1^e * y2^-3 * q`, joined by " + " / " - ". Exponent 1 is omitted.
std::string to_string(const LaurentPoly& p);
// Human-oriented form: unit coefficients and the multiplication signs are
// dropped ("x1 + y1^-1"). Parses back as well.
std::string to_pretty_string(const LaurentPoly& p);
LaurentPoly parse_poly(std::string_view text);

/// Arithmetic in Z/pZ for a prime p < 2^32, so products fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

  explicit PrimeField(std::uint64_t prime = kDefaultPrime);

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t x = a * b;
    if (mersenne31_) {
      x = (x & p_) + (x >> 31);
      x = (x & p_) + (x >> 31);
      return x >= p_ ? x - p_ : x;
    }
    return x % p_;
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept;
  /// Throws NonInvertiblePoint when a ≡ 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const mpz_class& c) const;
  std::uint64_t reduce(long long c) const;

 private:
  std::uint64_t p_;
  bool mersenne31_ = false;  // p = 2^31 - 1 reduces by folding
};

bool is_prime(std::uint64_t p);

using Assignment = std::map<VarId, std::uint64_t>;

/// Value of p at the point `assignment` in Z/pZ. Every variable of p must be
/// assigned; a variable appearing with a negative exponent must be invertible.
std::uint64_t eval_mod(const LaurentPoly& p, const Assignment& assignment, std::uint64_t prime);

}  // namespace sptok
