#include "sptok/rings.hpp"

#include "sptok/error.hpp"

namespace sptok {

ModularLanes::ModularLanes(const PrimeField& field, const std::vector<VarId>& universe, int lanes,
                           std::uint64_t seed)
    : field_(field), lanes_(lanes) {
  if (lanes < 1) throw Error(Errc::InvalidInput, "at least one evaluation point is required");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, field_.modulus() - 1);
  for (VarId v : universe) values_[v].resize(lanes_);
  for (int lane = 0; lane < lanes_; ++lane)
    for (VarId v : universe) values_[v][lane] = dist(rng);
  for (const auto& [v, vals] : values_) {
    auto& inv = inverses_[v];
    inv.resize(lanes_);
    for (int lane = 0; lane < lanes_; ++lane) inv[lane] = field_.inv(vals[lane]);
  }
}

Assignment ModularLanes::point(int lane) const {
  Assignment a;
  for (const auto& [v, vals] : values_) a[v] = vals.at(lane);
  return a;
}

const ModularLanes::value_type& ModularLanes::lookup(VarId v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw Error(Errc::UnassignedVariable, to_string(v));
  return it->second;
}

const ModularLanes::value_type& ModularLanes::lookup_inverse(VarId v) const {
  auto it = inverses_.find(v);
  if (it == inverses_.end()) throw Error(Errc::UnassignedVariable, to_string(v));
  return it->second;
}

ModularLanes::value_type ModularLanes::variable(VarId v, int e) const {
  if (e == 0) return one();
  const auto& base = e > 0 ? lookup(v) : lookup_inverse(v);
  if (e == 1 || e == -1) return base;
  value_type r(lanes_);
  auto mag = static_cast<std::uint64_t>(e > 0 ? e : -e);
  for (int i = 0; i < lanes_; ++i) r[i] = field_.pow(base[i], mag);
  return r;
}

ModularLanes::value_type ModularLanes::evaluate(const LaurentPoly& p) const {
  value_type acc = zero();
  value_type term(lanes_);
  for (const auto& [m, c] : p.terms()) {
    term.assign(lanes_, field_.reduce(c));
    m.for_each([&](VarId v, int e) { mul_into(term, term, variable(v, e)); });
    add_to(acc, term);
  }
  return acc;
}

std::uint64_t CountingRing::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::ScaleExceeded, "count overflows 64 bits");
  return r;
}

std::uint64_t CountingRing::mul(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::ScaleExceeded, "count overflows 64 bits");
  return r;
}

}  // namespace sptok
