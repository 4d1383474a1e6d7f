#pragma once

// Generating functions, product sides and the verification engine for the
// Tokuyama-type identities. Every identity compares a weighted sum over one
// object family (left side) with an explicit product times sp_μ (right side).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sptok/algebra.hpp"
#include "sptok/shapes.hpp"
#include "sptok/weights.hpp"

namespace sptok {

enum class IdentityId { PROP_T, COR_Q, THM_ST, COR_UASM, COR_GT, COR_ST_Q, COR_UASM_Q, COR_GT_Q, COR_GT_QX };

std::string_view to_string(IdentityId id) noexcept;
/// Throws UnknownIdentity.
IdentityId parse_identity(std::string_view text);
const std::vector<IdentityId>& all_identities();

enum class Family { T, ST, QT, UASM, GTP };
std::string_view to_string(Family f) noexcept;
/// Family summed on the left side of `id`.
Family lhs_family(IdentityId id) noexcept;

enum class Mode { Symbolic, Modular };
std::string_view to_string(Mode m) noexcept;

/// How the left side is summed in modular mode. Auto streams objects when
/// their number is within the stream cap and otherwise falls back to the
/// row-transfer sum, which exists for the shifted-tableau identities only.
enum class Accumulation { Auto, Streamed, RowTransfer };
std::string_view to_string(Accumulation a) noexcept;

enum class CpmXyWeighting { Standard, Alternative };  // CPM_XY or CPM_XY_ALT
enum class CpmQWeighting { Plain, Normalised };       // CPM_Q_PLAIN or CPM_Q_NORM

struct Variants {
  CpmXyWeighting cpm_xy = CpmXyWeighting::Standard;
  CpmQWeighting cpm_q = CpmQWeighting::Plain;
  NormConstant c0 = NormConstant::FullPower;
  QNeighbour q_neighbour = QNeighbour::Below;
  LeCount le = LeCount::ProofSum;
};

struct VerifyOptions {
  Mode mode = Mode::Symbolic;
  int trials = 20;
  std::uint64_t seed = 42;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t symbolic_cap = 1'000'000;
  std::uint64_t stream_cap = 250'000'000;
  Accumulation accumulation = Accumulation::Auto;
  Variants variants;
};

struct Counterexample {
  // symbolic: first monomial (canonical order) whose coefficients differ
  std::string monomial;
  std::string lhs_coeff;
  std::string rhs_coeff;
  // modular: first disagreeing lane
  int lane = -1;
  Assignment point;
  std::uint64_t lhs_value = 0;
  std::uint64_t rhs_value = 0;
};

struct VerificationReport {
  IdentityId identity = IdentityId::THM_ST;
  int n = 0;
  Partition mu;
  StrictPartition lambda;
  Mode mode = Mode::Symbolic;
  std::uint64_t objects = 0;
  std::optional<std::size_t> lhs_terms;  // symbolic only
  std::optional<std::size_t> rhs_terms;
  bool equal = false;
  std::optional<Counterexample> counterexample;
  double millis = 0;
  Accumulation accumulation = Accumulation::Streamed;
  Variants variants;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::optional<LaurentPoly> lhs;  // symbolic only
  std::optional<LaurentPoly> rhs;
};

/// Σ_T wgt(T) over T^μ(n). Throws RankTooSmall when ℓ(μ) > n.
LaurentPoly sp_mu(const Partition& mu, int n, bool deformed);
/// Σ_QT wgt(QT) over all primings of ST^λ(n). Throws BadLength.
LaurentPoly q_lambda(const StrictPartition& lambda, int n, bool deformed);
/// Π_{i≤j} (x_i + y_j)(1 + t² x_i⁻¹ y_j⁻¹), t = 1 unless deformed.
LaurentPoly q_delta_product(int n, bool deformed);
/// Right side of `id` including the sp_μ factor.
LaurentPoly rhs_product(IdentityId id, const Partition& mu, int n);

/// Variables the identity lives in: x and y (plus t for PROP_T), or x and q.
std::vector<VarId> variable_universe(IdentityId id, int n);

/// |ST^λ(n)|, computed by row transfer without enumerating.
std::uint64_t count_shifted_tableaux(const StrictPartition& lambda, int n);
/// Number of objects in the left-side family of `id` for λ = μ + δ.
std::uint64_t count_lhs_objects(IdentityId id, const StrictPartition& lambda, int n);

/// Throws ScaleExceeded when the object count exceeds the applicable cap,
/// RankTooSmall for ℓ(μ) > n, InvalidInput for bad options.
VerificationReport verify(IdentityId id, const Partition& mu, int n, const VerifyOptions& opts = {});

/// verify() for every μ with ℓ(μ) ≤ n and |μ| ≤ max_weight, in the order of
/// partitions_up_to. `threads` = 0 reads SPTOK_THREADS and otherwise uses the
/// hardware concurrency; the result order never depends on it.
std::vector<VerificationReport> verify_sweep(IdentityId id, int n, int max_weight, const VerifyOptions& opts = {},
                                             unsigned threads = 0);

unsigned default_thread_count();

/// Reports settling the readings that are ambiguous as printed, at rank `n`
/// for all μ with |μ| ≤ max_weight: both constants of the normalised CPM
/// q-weighting, both q-neighbour conventions of the q-tableau weight, and
/// both ranges of L_e in the statistics form.
struct AmbiguityFinding {
  std::string question;
  std::string candidate;
  bool satisfies = false;  // every report equal
  std::vector<VerificationReport> reports;
};
std::vector<AmbiguityFinding> resolve_ambiguities(int n = 2, int max_weight = 2, unsigned threads = 0);

}  // namespace sptok
