#include "rankext/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rankext {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace poly {

void normalize(Polynomial& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Polynomial& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

Polynomial mod(Polynomial f, const Polynomial& g, std::uint32_t p) {
  normalize(f);
  const int dg = degree(g);
  while (degree(f) >= dg) {
    const int df = degree(f);
    const std::uint32_t lead = f[df];
    const int shift = df - dg;
    for (int i = 0; i <= dg; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
      f[i + shift] = static_cast<std::uint32_t>((f[i + shift] + p - sub) % p);
    }
    normalize(f);
  }
  return f;
}

Polynomial mul(const Polynomial& f, const Polynomial& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Polynomial out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p);
    }
  }
  normalize(out);
  return out;
}

Polynomial monic_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
  Polynomial f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Polynomial& f, std::uint32_t p) {
  const int d = degree(f);
  if (d < 1) return false;
  for (int dg = 1; dg <= d / 2; ++dg) {
    const std::uint64_t count = saturating_pow(p, static_cast<std::uint64_t>(dg));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Polynomial g = monic_from_index(idx, static_cast<std::uint32_t>(dg), p);
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

namespace {

const std::map<std::uint32_t, Polynomial>& builtin_moduli() {
  static const std::map<std::uint32_t, Polynomial> table = {
      {4, {1, 1, 1}},           // x^2 + x + 1
      {8, {1, 1, 0, 1}},        // x^3 + x + 1
      {9, {2, 1, 1}},           // x^2 + x + 2
      {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1
      {25, {2, 1, 1}},          // x^2 + x + 2
      {27, {1, 2, 0, 1}},       // x^3 + 2x + 1
      {32, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1
  };
  return table;
}

Polynomial decode(std::uint32_t value, std::uint32_t p, std::uint32_t k) {
  Polynomial f(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    f[i] = value % p;
    value /= p;
  }
  return f;
}

std::uint32_t encode(const Polynomial& f, std::uint32_t p, std::uint32_t k) {
  std::uint32_t value = 0;
  for (std::uint32_t i = k; i > 0; --i) {
    value = value * p + (i - 1 < f.size() ? f[i - 1] : 0);
  }
  return value;
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t k, std::optional<Polynomial> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (k < 1) {
    throw Error(ErrorCode::UnsupportedField, "extension degree must be at least 1");
  }
  const std::uint64_t q = saturating_pow(p, k);
  if (q > kMaxFieldOrder) {
    throw Error(ErrorCode::FieldTooLarge,
                "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds 2^16 elements");
  }
  if (k == 1) {
    return FieldPtr(new Field(p, 1, Polynomial{0, 1}));
  }
  if (!modulus) {
    const auto& table = builtin_moduli();
    auto it = table.find(static_cast<std::uint32_t>(q));
    if (it == table.end()) {
      throw Error(ErrorCode::UnsupportedField,
                  "no built-in modulus for q = " + std::to_string(q) + "; supply one");
    }
    modulus = it->second;
  }
  Polynomial f = *modulus;
  if (f.size() != k + 1 || f.back() != 1 ||
      std::any_of(f.begin(), f.end(), [p](std::uint32_t c) { return c >= p; })) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be a monic list of k+1 coefficients in 0..p-1");
  }
  if (!poly::is_irreducible(f, p)) {
    throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  return FieldPtr(new Field(p, k, std::move(f)));
}

Field::Field(std::uint32_t p, std::uint32_t k, Polynomial modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(saturating_pow(p, k))), modulus_(std::move(modulus)) {
  neg_table_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_table_[a] = k_ == 1 ? static_cast<FieldElement>((p_ - a) % p_)
                            : digitwise(0, static_cast<FieldElement>(a), true);
  }
  if (p_ != 2 && k_ > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] =
            digitwise(static_cast<FieldElement>(a), static_cast<FieldElement>(b), false);
      }
    }
  }

  // Raw multiplication for building the log/exp tables.
  auto raw_mul = [this](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    return encode(poly::mod(poly::mul(decode(a, p_, k_), decode(b, p_, k_), p_), modulus_, p_), p_, k_);
  };

  const std::uint32_t order = q_ - 1;
  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  std::vector<std::uint32_t> powers(order);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t n = 0;
    do {
      powers[n++] = x;
      x = raw_mul(x, g);
    } while (x != 1 && n < order);
    if (x == 1 && n == order) break;
  }
  for (std::uint32_t i = 0; i < order; ++i) {
    log_[powers[i]] = i;
    exp_[i] = static_cast<FieldElement>(powers[i]);
    exp_[i + order] = static_cast<FieldElement>(powers[i]);
  }
  exp_[2 * static_cast<std::size_t>(order)] = exp_[0];
}

FieldElement Field::digitwise(FieldElement a, FieldElement b, bool negate_b) const noexcept {
  std::uint32_t x = a;
  std::uint32_t y = b;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t dx = x % p_;
    const std::uint32_t dy = y % p_;
    const std::uint32_t d = negate_b ? (dx + p_ - dy) % p_ : (dx + dy) % p_;
    out += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return static_cast<FieldElement>(out);
}

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % order)) % order;
  if (r < 0) r += order;
  return exp_[r];
}

FieldElement Field::apply(Op op, FieldElement a, std::optional<std::int64_t> b) const {
  auto operand = [&]() -> FieldElement {
    if (!b || *b < 0 || !is_element(static_cast<std::uint64_t>(*b))) {
      throw Error(ErrorCode::InvalidElement, "second operand missing or out of range");
    }
    return static_cast<FieldElement>(*b);
  };
  if (!is_element(a)) throw Error(ErrorCode::InvalidElement, "operand out of range");
  switch (op) {
    case Op::add: return add(a, operand());
    case Op::sub: return sub(a, operand());
    case Op::mul: return mul(a, operand());
    case Op::div: return div(a, operand());
    case Op::neg: return neg(a);
    case Op::inv: return inv(a);
    case Op::pow:
      if (!b) throw Error(ErrorCode::InvalidElement, "pow needs an exponent");
      return pow(a, *b);
  }
  return 0;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(q_);
  std::iota(out.begin(), out.end(), FieldElement{0});
  return out;
}

}  // namespace rankext
