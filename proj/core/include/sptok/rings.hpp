#pragma once

// Coefficient rings in which weights are evaluated. Every weight formula is
// written once against the WeightRing interface and instantiated either
// symbolically (LaurentPoly) or at a batch of points of Z/pZ (ModularLanes).

#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "sptok/algebra.hpp"

namespace sptok {

template <class R>
concept WeightRing = requires(const R& r, typename R::value_type& out, const typename R::value_type& a, VarId v,
                              int e, long c) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.constant(c) } -> std::convertible_to<typename R::value_type>;
  { r.variable(v, e) } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  r.add_to(out, a);
  r.mul_into(out, a, a);
};

template <WeightRing R>
typename R::value_type ring_pow(const R& r, typename R::value_type base, unsigned e) {
  auto result = r.one();
  while (e) {
    if (e & 1U) result = r.mul(result, base);
    e >>= 1U;
    if (e) base = r.mul(base, base);
  }
  return result;
}

struct SymbolicRing {
  using value_type = LaurentPoly;

  LaurentPoly zero() const { return {}; }
  LaurentPoly one() const { return LaurentPoly(1); }
  LaurentPoly constant(long c) const { return LaurentPoly(c); }
  LaurentPoly variable(VarId v, int e = 1) const { return LaurentPoly::variable(v, e); }
  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) const { return a + b; }
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return a * b; }
  void add_to(LaurentPoly& out, const LaurentPoly& a) const { out += a; }
  void mul_into(LaurentPoly& out, const LaurentPoly& a, const LaurentPoly& b) const { out = a * b; }
};

/// Values at `lanes` independent points of Z/pZ, one residue per lane.
class ModularLanes {
 public:
  using value_type = std::vector<std::uint64_t>;

  /// Points drawn uniformly from [1, p-1] for each variable in `universe`,
  /// lane by lane, from a mt19937_64 seeded with `seed`.
  ModularLanes(const PrimeField& field, const std::vector<VarId>& universe, int lanes, std::uint64_t seed);

  int lanes() const noexcept { return lanes_; }
  const PrimeField& field() const noexcept { return field_; }
  /// The assignment used by one lane, e.g. for reporting a counterexample.
  Assignment point(int lane) const;

  value_type zero() const { return value_type(lanes_, 0); }
  value_type one() const { return value_type(lanes_, 1); }
  value_type constant(long c) const { return value_type(lanes_, field_.reduce(static_cast<long long>(c))); }
  value_type variable(VarId v, int e = 1) const;
  value_type add(const value_type& a, const value_type& b) const {
    value_type r(a);
    add_to(r, b);
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type r(lanes_);
    mul_into(r, a, b);
    return r;
  }
  void add_to(value_type& out, const value_type& a) const {
    for (int i = 0; i < lanes_; ++i) out[i] = field_.add(out[i], a[i]);
  }
  void mul_into(value_type& out, const value_type& a, const value_type& b) const {
    for (int i = 0; i < lanes_; ++i) out[i] = field_.mul(a[i], b[i]);
  }
  /// Evaluates a polynomial in all lanes.
  value_type evaluate(const LaurentPoly& p) const;

 private:
  const value_type& lookup(VarId v) const;
  const value_type& lookup_inverse(VarId v) const;

  PrimeField field_;
  int lanes_;
  std::map<VarId, value_type> values_;
  std::map<VarId, value_type> inverses_;
};

/// Plain unsigned counting; used for cardinalities (all variables = 1).
struct CountingRing {
  using value_type = std::uint64_t;

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  std::uint64_t constant(long c) const { return static_cast<std::uint64_t>(c); }
  std::uint64_t variable(VarId, int = 1) const { return 1; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  void add_to(std::uint64_t& out, std::uint64_t a) const { out = add(out, a); }
  void mul_into(std::uint64_t& out, std::uint64_t a, std::uint64_t b) const { out = mul(a, b); }
};

static_assert(WeightRing<SymbolicRing>);
static_assert(WeightRing<ModularLanes>);
static_assert(WeightRing<CountingRing>);

}  // namespace sptok
