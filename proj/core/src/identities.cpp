#include "sptok/identities.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

#include "sptok/bijections.hpp"
#include "sptok/detail/row_transfer.hpp"
#include "sptok/error.hpp"
#include "sptok/matrices.hpp"
#include "sptok/rings.hpp"

namespace sptok {

namespace {

constexpr std::array<std::string_view, 9> kIdentityNames = {
    "PROP_T", "COR_Q", "THM_ST", "COR_UASM", "COR_GT", "COR_ST_Q", "COR_UASM_Q", "COR_GT_Q", "COR_GT_QX",
};

bool is_q_identity(IdentityId id) {
  switch (id) {
    case IdentityId::COR_ST_Q:
    case IdentityId::COR_UASM_Q:
    case IdentityId::COR_GT_Q:
    case IdentityId::COR_GT_QX: return true;
    default: return false;
  }
}

}  // namespace

std::string_view to_string(IdentityId id) noexcept { return kIdentityNames[static_cast<int>(id)]; }

IdentityId parse_identity(std::string_view text) {
  for (std::size_t i = 0; i < kIdentityNames.size(); ++i)
    if (kIdentityNames[i] == text) return static_cast<IdentityId>(i);
  throw Error(Errc::UnknownIdentity, "unknown identity '" + std::string(text) + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (std::size_t i = 0; i < kIdentityNames.size(); ++i) v.push_back(static_cast<IdentityId>(i));
    return v;
  }();
  return ids;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::T: return "t";
    case Family::ST: return "st";
    case Family::QT: return "qt";
    case Family::UASM: return "uasm";
    case Family::GTP: return "gtp";
  }
  return "?";
}

Family lhs_family(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::PROP_T:
    case IdentityId::COR_Q: return Family::QT;
    case IdentityId::THM_ST:
    case IdentityId::COR_ST_Q: return Family::ST;
    case IdentityId::COR_UASM:
    case IdentityId::COR_UASM_Q: return Family::UASM;
    default: return Family::GTP;
  }
}

std::string_view to_string(Mode m) noexcept { return m == Mode::Symbolic ? "symbolic" : "modular"; }

std::string_view to_string(Accumulation a) noexcept {
  switch (a) {
    case Accumulation::Auto: return "auto";
    case Accumulation::Streamed: return "streamed";
    case Accumulation::RowTransfer: return "row-transfer";
  }
  return "?";
}

std::vector<VarId> variable_universe(IdentityId id, int n) {
  std::vector<VarId> vars;
  for (int k = 1; k <= n; ++k) vars.push_back(VarId::x(k));
  if (is_q_identity(id)) {
    vars.push_back(VarId::q());
  } else {
    for (int k = 1; k <= n; ++k) vars.push_back(VarId::y(k));
    if (id == IdentityId::PROP_T) vars.push_back(VarId::t());
  }
  return vars;
}

// ------------------------------------------------------------ generic sums

namespace {

template <WeightRing R>
using V = typename R::value_type;

template <WeightRing R>
V<R> sp_sum(const R& r, const Partition& mu, int n, bool deformed) {
  V<R> acc = r.zero();
  for_each_symplectic_tableau(mu, n, [&](const SymplecticTableau& t) {
    r.add_to(acc, weigh::symplectic_tableau(r, t, deformed));
  });
  return acc;
}

/// Π_{i≤j} (x_i + y_j)(1 + t² x_i⁻¹ y_j⁻¹)
template <WeightRing R>
V<R> xy_product(const R& r, int n, bool deformed) {
  V<R> acc = r.one();
  const V<R> t2 = deformed ? r.variable(VarId::t(), 2) : r.one();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      acc = r.mul(acc, r.add(r.variable(VarId::x(i)), r.variable(VarId::y(j))));
      V<R> inv = r.mul(t2, r.mul(r.variable(VarId::x(i), -1), r.variable(VarId::y(j), -1)));
      acc = r.mul(acc, r.add(r.one(), inv));
    }
  return acc;
}

/// Π_{i≤j} (x_i + q x_j)(1 + q⁻¹ x_i⁻¹ x_j⁻¹)
template <WeightRing R>
V<R> q_product(const R& r, int n) {
  V<R> acc = r.one();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      acc = r.mul(acc, r.add(r.variable(VarId::x(i)), r.mul(r.variable(VarId::q()), r.variable(VarId::x(j)))));
      V<R> inv = r.mul(r.variable(VarId::q(), -1), r.mul(r.variable(VarId::x(i), -1), r.variable(VarId::x(j), -1)));
      acc = r.mul(acc, r.add(r.one(), inv));
    }
  return acc;
}

/// Π_i (q x_i + x_i⁻¹) Π_{i<j} (x_i + q x_j)(q + x_i⁻¹ x_j⁻¹)
template <WeightRing R>
V<R> qx_product(const R& r, int n) {
  V<R> acc = r.one();
  for (int i = 1; i <= n; ++i) {
    acc = r.mul(acc, r.add(r.mul(r.variable(VarId::q()), r.variable(VarId::x(i))), r.variable(VarId::x(i), -1)));
    for (int j = i + 1; j <= n; ++j) {
      acc = r.mul(acc, r.add(r.variable(VarId::x(i)), r.mul(r.variable(VarId::q()), r.variable(VarId::x(j)))));
      acc = r.mul(acc, r.add(r.variable(VarId::q()), r.mul(r.variable(VarId::x(i), -1), r.variable(VarId::x(j), -1))));
    }
  }
  return acc;
}

template <WeightRing R>
V<R> rhs_value(const R& r, IdentityId id, const Partition& mu, int n) {
  const bool deformed = id == IdentityId::PROP_T;
  V<R> prod;
  switch (id) {
    case IdentityId::PROP_T:
    case IdentityId::COR_Q:
    case IdentityId::THM_ST:
    case IdentityId::COR_UASM:
    case IdentityId::COR_GT: prod = xy_product(r, n, deformed); break;
    case IdentityId::COR_ST_Q:
    case IdentityId::COR_UASM_Q:
    case IdentityId::COR_GT_Q: prod = q_product(r, n); break;
    case IdentityId::COR_GT_QX: prod = qx_product(r, n); break;
  }
  return r.mul(prod, sp_sum(r, mu, n, deformed));
}

template <WeightRing R>
V<R> lhs_streamed(const R& r, IdentityId id, const StrictPartition& lambda, int n, const Variants& var,
                  std::uint64_t& objects) {
  V<R> acc = r.zero();
  objects = 0;
  switch (id) {
    case IdentityId::PROP_T:
    case IdentityId::COR_Q: {
      const bool deformed = id == IdentityId::PROP_T;
      for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) {
        for_each_priming(st, [&](const PrimedShiftedTableau& qt) {
          r.add_to(acc, weigh::primed_tableau(r, qt, deformed));
          ++objects;
        });
      });
      break;
    }
    case IdentityId::THM_ST:
      for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) {
        r.add_to(acc, weigh::shifted_tableau(r, st));
        ++objects;
      });
      break;
    case IdentityId::COR_ST_Q:
      for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) {
        r.add_to(acc, weigh::shifted_tableau_q(r, st, var.q_neighbour));
        ++objects;
      });
      break;
    case IdentityId::COR_UASM:
    case IdentityId::COR_UASM_Q: {
      WeightScheme scheme;
      if (id == IdentityId::COR_UASM)
        scheme = var.cpm_xy == CpmXyWeighting::Standard ? WeightScheme::CPM_XY : WeightScheme::CPM_XY_ALT;
      else
        scheme = var.cpm_q == CpmQWeighting::Plain ? WeightScheme::CPM_Q_PLAIN : WeightScheme::CPM_Q_NORM;
      for_each_uasm(lambda, n, [&](const UTurnASM& a) {
        r.add_to(acc, weigh::compass_matrix(r, uasm_to_cpm(a), scheme, var.c0));
        ++objects;
      });
      break;
    }
    case IdentityId::COR_GT:
    case IdentityId::COR_GT_Q:
    case IdentityId::COR_GT_QX:
      for_each_gtp(lambda, n, [&](const SympGTPattern& g) {
        const auto blr = classify_blr(g);
        if (id == IdentityId::COR_GT_QX)
          r.add_to(acc, weigh::gt_qx(r, gt_statistics(g, blr), var.le));
        else
          r.add_to(acc, weigh::gt_pattern(r, g, blr, id == IdentityId::COR_GT ? WeightScheme::GT_XY
                                                                               : WeightScheme::GT_Q));
        ++objects;
      });
      break;
  }
  return acc;
}

/// Shifted-tableau identities whose cell weight depends only on the letter
/// and the left/lower equalities, so both the lane-streaming visitor and
/// the row transfer apply.
bool has_cell_local_weight(IdentityId id, const Variants& var) {
  return id == IdentityId::THM_ST || (id == IdentityId::COR_ST_Q && var.q_neighbour == QNeighbour::Below);
}

template <WeightRing R>
V<R> local_cell_weight(const R& r, IdentityId id, Letter l, CellCase cc) {
  if (id == IdentityId::THM_ST) return weigh::shifted_cell(r, l, cc);
  return weigh::shifted_q_cell(r, l, cc == CellCase::LeftEqual, cc == CellCase::BelowEqual);
}

/// Incremental product along the backtracking walk, one flat lane array per
/// depth, so each placed cell costs `lanes` modular products. Residues fit
/// in 32 bits, which lets the compiler vectorise the 32x32->64 products.
template <bool Mersenne>
class LaneStream {
 public:
  LaneStream(const ModularLanes& r, IdentityId id, const StrictPartition& lambda, int n)
      : p_(r.field().modulus()), lanes_(r.lanes()), cells_(lambda.size()) {
    table_.resize(static_cast<std::size_t>(2 * n) * 3 * lanes_);
    for (int o = 0; o < 2 * n; ++o)
      for (int c = 0; c < 3; ++c) {
        auto w = local_cell_weight(r, id, Letter::from_ordinal(o), static_cast<CellCase>(c));
        std::copy(w.begin(), w.end(), table_.begin() + (static_cast<std::size_t>(o) * 3 + c) * lanes_);
      }
    prod_.assign(static_cast<std::size_t>(cells_ + 1) * lanes_, 1);
    acc_.assign(lanes_, 0);
    leaf_.assign(lanes_, 0);
  }

  void place(int depth, Letter l, CellCase cc) {
    const std::uint32_t* w = &table_[(static_cast<std::size_t>(l.ordinal()) * 3 + static_cast<int>(cc)) * lanes_];
    const int lanes = lanes_;  // stores through uint32_t* may alias lanes_
    if (depth == cells_ - 1) {
      // siblings at the last cell share prod[depth]; sum their weights and
      // multiply once when the walk moves to another parent
      std::uint32_t* leaf = leaf_.data();
      const std::uint32_t p = p32_;
      for (int i = 0; i < lanes; ++i) leaf[i] = add(leaf[i], w[i], p);
      pending_ = true;
      return;
    }
    if (pending_) flush();
    const std::uint32_t* src = &prod_[static_cast<std::size_t>(depth) * lanes_];
    std::uint32_t* dst = &prod_[static_cast<std::size_t>(depth + 1) * lanes_];
    for (int i = 0; i < lanes; ++i) dst[i] = mul(src[i], w[i]);
  }

  void complete(const ShiftedTableau&) { ++count_; }

  std::vector<std::uint64_t> sum() {
    if (pending_) flush();
    return {acc_.begin(), acc_.end()};
  }
  std::uint64_t count() const { return count_; }

 private:
  void flush() {
    const std::uint32_t* src = &prod_[static_cast<std::size_t>(cells_ - 1) * lanes_];
    std::uint32_t* leaf = leaf_.data();
    std::uint32_t* acc = acc_.data();
    const int lanes = lanes_;
    const std::uint32_t p = p32_;
    for (int i = 0; i < lanes; ++i) {
      acc[i] = add(acc[i], mul(src[i], leaf[i]), p);
      leaf[i] = 0;
    }
    pending_ = false;
  }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    // p < 2^32 but the sum may not fit, so compare before adding
    const std::uint32_t room = p - a;
    return b >= room ? b - room : a + b;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t x = static_cast<std::uint64_t>(a) * b;
    if constexpr (Mersenne) {
      std::uint32_t s = static_cast<std::uint32_t>(x & 0x7fffffffU) + static_cast<std::uint32_t>(x >> 31);
      s = (s & 0x7fffffffU) + (s >> 31);
      return s >= 0x7fffffffU ? s - 0x7fffffffU : s;
    } else {
      return static_cast<std::uint32_t>(x % p_);
    }
  }

  std::uint64_t p_;
  std::uint32_t p32_ = static_cast<std::uint32_t>(p_);
  int lanes_;
  int cells_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> prod_;
  std::vector<std::uint32_t> acc_;
  std::vector<std::uint32_t> leaf_;
  bool pending_ = false;
  std::uint64_t count_ = 0;
};

template <bool Mersenne>
std::vector<std::uint64_t> stream_lanes(const ModularLanes& r, IdentityId id, const StrictPartition& lambda, int n,
                                        std::uint64_t expected) {
  LaneStream<Mersenne> visitor(r, id, lambda, n);
  detail::walk_shifted(lambda, n, visitor);
  if (visitor.count() != expected) throw Error(Errc::InvariantViolation, "streamed object count mismatch");
  return visitor.sum();
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

// ------------------------------------------------------------ public builders

LaurentPoly sp_mu(const Partition& mu, int n, bool deformed) { return sp_sum(SymbolicRing{}, mu, n, deformed); }

LaurentPoly q_lambda(const StrictPartition& lambda, int n, bool deformed) {
  LaurentPoly acc;
  for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) {
    for_each_priming(st, [&](const PrimedShiftedTableau& qt) { acc += wgt_QT(qt, deformed); });
  });
  return acc;
}

LaurentPoly q_delta_product(int n, bool deformed) {
  if (n < 1) throw Error(Errc::InvalidInput, "rank must be positive");
  return xy_product(SymbolicRing{}, n, deformed);
}

LaurentPoly rhs_product(IdentityId id, const Partition& mu, int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "rank must be positive");
  return rhs_value(SymbolicRing{}, id, mu, n);
}

std::uint64_t count_shifted_tableaux(const StrictPartition& lambda, int n) {
  return detail::row_transfer_sum(CountingRing{}, lambda, n, [](Letter, CellCase) { return std::uint64_t{1}; });
}

std::uint64_t count_lhs_objects(IdentityId id, const StrictPartition& lambda, int n) {
  if (lhs_family(id) == Family::QT)
    return detail::row_transfer_sum(CountingRing{}, lambda, n, [](Letter, CellCase cc) {
      return cc == CellCase::Free ? std::uint64_t{2} : std::uint64_t{1};
    });
  return count_shifted_tableaux(lambda, n);
}

// ------------------------------------------------------------ verification

VerificationReport verify(IdentityId id, const Partition& mu, int n, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1 || n > Monomial::kMaxRank)
    throw Error(Errc::InvalidInput, "rank must lie in 1.." + std::to_string(Monomial::kMaxRank));
  VerificationReport rep;
  rep.identity = id;
  rep.n = n;
  rep.mu = mu;
  rep.lambda = add_staircase(mu, n);
  rep.mode = opts.mode;
  rep.variants = opts.variants;
  rep.objects = count_lhs_objects(id, rep.lambda, n);

  if (opts.mode == Mode::Symbolic) {
    if (rep.objects > opts.symbolic_cap)
      throw Error(Errc::ScaleExceeded, std::to_string(rep.objects) + " objects exceed the symbolic cap of " +
                                           std::to_string(opts.symbolic_cap));
    SymbolicRing r;
    std::uint64_t streamed = 0;
    LaurentPoly lhs = lhs_streamed(r, id, rep.lambda, n, opts.variants, streamed);
    if (streamed != rep.objects)
      throw Error(Errc::InvariantViolation, "enumerated " + std::to_string(streamed) + " objects, expected " +
                                                std::to_string(rep.objects));
    LaurentPoly rhs = rhs_value(r, id, mu, n);
    rep.accumulation = Accumulation::Streamed;
    rep.lhs_terms = lhs.size();
    rep.rhs_terms = rhs.size();
    rep.equal = lhs == rhs;
    if (!rep.equal) {
      const LaurentPoly diff = lhs - rhs;
      const Monomial& m = diff.terms().begin()->first;
      Counterexample cx;
      cx.monomial = to_string(LaurentPoly(m));
      cx.lhs_coeff = lhs.coeff(m).get_str();
      cx.rhs_coeff = rhs.coeff(m).get_str();
      rep.counterexample = cx;
    }
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.millis = millis_since(start);
    return rep;
  }

  if (opts.trials < 1) throw Error(Errc::InvalidInput, "modular mode needs at least one trial");
  const PrimeField field(opts.prime);
  const ModularLanes r(field, variable_universe(id, n), opts.trials, opts.seed);
  rep.trials = opts.trials;
  rep.seed = opts.seed;
  rep.prime = opts.prime;

  Accumulation acc = opts.accumulation;
  const bool local = has_cell_local_weight(id, opts.variants);
  if (acc == Accumulation::Auto) {
    if (rep.objects <= opts.stream_cap) acc = Accumulation::Streamed;
    else if (local) acc = Accumulation::RowTransfer;
    else
      throw Error(Errc::ScaleExceeded, std::to_string(rep.objects) + " objects exceed the stream cap of " +
                                           std::to_string(opts.stream_cap));
  }
  if (acc == Accumulation::Streamed && rep.objects > opts.stream_cap)
    throw Error(Errc::ScaleExceeded, std::to_string(rep.objects) + " objects exceed the stream cap of " +
                                         std::to_string(opts.stream_cap));
  if (acc == Accumulation::RowTransfer && !local)
    throw Error(Errc::InvalidInput, "row-transfer accumulation needs a shifted-tableau identity with cell-local weights");
  rep.accumulation = acc;

  ModularLanes::value_type lhs;
  if (acc == Accumulation::RowTransfer) {
    lhs = detail::row_transfer_sum(r, rep.lambda, n,
                                   [&](Letter l, CellCase cc) { return local_cell_weight(r, id, l, cc); });
  } else if (local) {
    if (opts.prime < (1ULL << 32)) {
      lhs = opts.prime == PrimeField::kDefaultPrime ? stream_lanes<true>(r, id, rep.lambda, n, rep.objects)
                                                    : stream_lanes<false>(r, id, rep.lambda, n, rep.objects);
    } else {
      std::uint64_t streamed = 0;
      lhs = lhs_streamed(r, id, rep.lambda, n, opts.variants, streamed);
      if (streamed != rep.objects) throw Error(Errc::InvariantViolation, "streamed object count mismatch");
    }
  } else {
    std::uint64_t streamed = 0;
    lhs = lhs_streamed(r, id, rep.lambda, n, opts.variants, streamed);
    if (streamed != rep.objects) throw Error(Errc::InvariantViolation, "streamed object count mismatch");
  }
  const auto rhs = rhs_value(r, id, mu, n);
  rep.equal = true;
  for (int lane = 0; lane < opts.trials; ++lane) {
    if (lhs[lane] == rhs[lane]) continue;
    rep.equal = false;
    Counterexample cx;
    cx.lane = lane;
    cx.point = r.point(lane);
    cx.lhs_value = lhs[lane];
    cx.rhs_value = rhs[lane];
    rep.counterexample = cx;
    break;
  }
  rep.millis = millis_since(start);
  return rep;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("SPTOK_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<VerificationReport> verify_sweep(IdentityId id, int n, int max_weight, const VerifyOptions& opts,
                                             unsigned threads) {
  const auto mus = partitions_up_to(n, max_weight);
  std::vector<VerificationReport> out(mus.size());
  std::vector<std::exception_ptr> errors(mus.size());
  if (threads == 0) threads = default_thread_count();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(mus.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < mus.size(); i = next++) {
      try {
        out[i] = verify(id, mus[i], n, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<AmbiguityFinding> resolve_ambiguities(int n, int max_weight, unsigned threads) {
  std::vector<AmbiguityFinding> out;
  auto run = [&](std::string question, std::string candidate, IdentityId id, Variants var) {
    VerifyOptions opts;
    opts.variants = var;
    AmbiguityFinding f{std::move(question), std::move(candidate), true, verify_sweep(id, n, max_weight, opts, threads)};
    for (const auto& r : f.reports) f.satisfies = f.satisfies && r.equal;
    out.push_back(std::move(f));
  };
  for (NormConstant c0 : {NormConstant::FullPower, NormConstant::Literal}) {
    Variants v;
    v.cpm_q = CpmQWeighting::Normalised;
    v.c0 = c0;
    run("normalised CPM q-weighting constant", c0 == NormConstant::FullPower ? "(1+q)^n/q^(n(n+1)/2)"
                                                                             : "(1+q)/q^(n(n+1)/2)",
        IdentityId::COR_UASM_Q, v);
  }
  for (QNeighbour nb : {QNeighbour::Below, QNeighbour::Above}) {
    Variants v;
    v.q_neighbour = nb;
    run("q-tableau weight neighbour", std::string(to_string(nb)), IdentityId::COR_ST_Q, v);
  }
  for (LeCount le : {LeCount::ProofSum, LeCount::SetBuilder}) {
    Variants v;
    v.le = le;
    run("L_e summation range", le == LeCount::ProofSum ? "1<=j<=k" : "1<=j<=k-1", IdentityId::COR_GT_QX, v);
  }
  return out;
}

}  // namespace sptok
