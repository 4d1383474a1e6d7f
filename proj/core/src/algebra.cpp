#include "sptok/algebra.hpp"

#include <cctype>
#include <limits>

#include "sptok/error.hpp"

namespace sptok {

std::string to_string(VarId v) {
  switch (v.kind) {
    case VarKind::X: return "x" + std::to_string(v.index);
    case VarKind::Y: return "y" + std::to_string(v.index);
    case VarKind::T: return "t";
    case VarKind::Q: return "q";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

int Monomial::slot(VarId v) {
  switch (v.kind) {
    case VarKind::X:
    case VarKind::Y:
      if (v.index < 1 || v.index > kMaxRank)
        throw Error(Errc::InvalidInput, "variable index out of range: " + std::to_string(v.index));
      return (v.kind == VarKind::X ? 0 : kMaxRank) + v.index - 1;
    case VarKind::T: return 2 * kMaxRank;
    case VarKind::Q: return 2 * kMaxRank + 1;
  }
  throw Error(Errc::InvalidInput, "bad variable kind");
}

VarId Monomial::var_of_slot(int s) {
  if (s < kMaxRank) return VarId::x(s + 1);
  if (s < 2 * kMaxRank) return VarId::y(s - kMaxRank + 1);
  return s == 2 * kMaxRank ? VarId::t() : VarId::q();
}

namespace {

std::int16_t checked_exponent(long e) {
  if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min())
    throw Error(Errc::ExponentOverflow, "exponent " + std::to_string(e));
  return static_cast<std::int16_t>(e);
}

}  // namespace

Monomial::Monomial(VarId v, int exponent) {
  exps_.fill(0);
  exps_[slot(v)] = checked_exponent(exponent);
}

void Monomial::set_exponent(VarId v, int exponent) { exps_[slot(v)] = checked_exponent(exponent); }

bool Monomial::is_one() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (int s = 0; s < kSlots; ++s) exps_[s] = checked_exponent(long{exps_[s]} + other.exps_[s]);
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) r.exps_[s] = checked_exponent(-long{exps_[s]});
  return r;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

LaurentPoly::LaurentPoly(const Monomial& m, Coeff c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

LaurentPoly::Coeff LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const std::map<VarId, Monomial>& images) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial out;
    m.for_each([&](VarId v, int e) {
      auto it = images.find(v);
      if (it == images.end()) {
        out *= Monomial(v, e);
      } else {
        Monomial img;
        it->second.for_each([&](VarId w, int f) { img.set_exponent(w, f * e); });
        out *= img;
      }
    });
    r.add_term(out, c);
  }
  return r;
}

std::vector<VarId> LaurentPoly::variables() const {
  std::array<bool, Monomial::kSlots> seen{};
  for (const auto& [m, c] : terms_) m.for_each([&](VarId v, int) { seen[Monomial::slot(v)] = true; });
  std::vector<VarId> out;
  for (int s = 0; s < Monomial::kSlots; ++s)
    if (seen[s]) out.push_back(Monomial::var_of_slot(s));
  return out;
}

// ---------------------------------------------------------- text round trip

namespace {

std::string format_poly(const LaurentPoly& p, bool pretty) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::vector<std::string> factors;
    if (!pretty || m.is_one() || mag != 1) factors.push_back(mag.get_str());
    m.for_each([&](VarId v, int e) {
      std::string f = to_string(v);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    });
    const char* sep = pretty ? "*" : " * ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += sep;
      out += factors[i];
    }
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    for (;;) {
      auto [m, c] = parse_term();
      result.add_term(m, negative ? -c : c);
      skip_ws();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', got '") + op + "'");
      negative = op == '-';
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<Monomial, mpz_class> parse_term() {
    Monomial m;
    mpz_class c = 1;
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= mpz_class(read_digits());
      } else if (ch == 'x' || ch == 'y' || ch == 't' || ch == 'q') {
        get();
        VarId v;
        if (ch == 'x' || ch == 'y') {
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("missing variable index");
          int idx = std::stoi(read_digits());
          v = ch == 'x' ? VarId::x(idx) : VarId::y(idx);
        } else {
          v = ch == 't' ? VarId::t() : VarId::q();
        }
        long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          bool neg = false;
          if (!at_end() && (peek() == '-' || peek() == '+')) neg = get() == '-';
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("missing exponent");
          e = std::stol(read_digits());
          if (neg) e = -e;
        }
        Monomial f;
        f.set_exponent(v, static_cast<int>(e));
        m *= f;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {m, c};
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p) { return format_poly(p, false); }
std::string to_pretty_string(const LaurentPoly& p) { return format_poly(p, true); }
LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ------------------------------------------------------------- PrimeField

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (prime >= (std::uint64_t{1} << 32) || !is_prime(prime))
    throw Error(Errc::InvalidInput, "modulus must be a prime below 2^32: " + std::to_string(prime));
  mersenne31_ = prime == kDefaultPrime;
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % p_;
  base %= p_;
  while (e) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error(Errc::NonInvertiblePoint, "zero has no inverse mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const mpz_class& c) const {
  return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p_));
}

std::uint64_t PrimeField::reduce(long long c) const {
  long long r = c % static_cast<long long>(p_);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p_) : r);
}

std::uint64_t eval_mod(const LaurentPoly& p, const Assignment& assignment, std::uint64_t prime) {
  PrimeField f(prime);
  std::array<std::uint64_t, Monomial::kSlots> value{};
  std::array<std::uint64_t, Monomial::kSlots> inverse{};
  std::array<bool, Monomial::kSlots> have_inverse{};
  for (VarId v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw Error(Errc::UnassignedVariable, to_string(v));
    value[Monomial::slot(v)] = it->second % prime;
  }
  std::uint64_t acc = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t term = f.reduce(c);
    m.for_each([&](VarId v, int e) {
      int s = Monomial::slot(v);
      std::uint64_t base = value[s];
      if (e < 0) {
        if (!have_inverse[s]) {
          if (base == 0)
            throw Error(Errc::NonInvertiblePoint, to_string(v) + " is 0 but appears with a negative exponent");
          inverse[s] = f.inv(base);
          have_inverse[s] = true;
        }
        base = inverse[s];
      }
      term = f.mul(term, f.pow(base, static_cast<std::uint64_t>(e < 0 ? -e : e)));
    });
    acc = f.add(acc, term);
  }
  return acc;
}

}  // namespace sptok
