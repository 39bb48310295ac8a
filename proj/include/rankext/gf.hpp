#pragma once

// Exact arithmetic in GF(p^k), q = p^k <= 2^16.
//
// An element is encoded as the integer sum_i c_i p^i where c_0..c_{k-1} are
// the coefficients of its polynomial representative modulo the field's
// modulus (constant term first). GF(p) elements are plain residues.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rankext/error.hpp"

namespace rankext {

using FieldElement = std::uint16_t;

// Polynomials over GF(p) as ascending coefficient lists.
using Polynomial = std::vector<std::uint32_t>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field {
 public:
  enum class Op { add, sub, mul, div, neg, inv, pow };

  // Validates p, k and the modulus. For k > 1 and no modulus, a built-in
  // irreducible polynomial is used when q is in {4, 8, 9, 16, 25, 27, 32}.
  static FieldPtr make(std::uint32_t p, std::uint32_t k,
                       std::optional<Polynomial> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  // Monic modulus of degree k; for prime fields this is x (unused).
  const Polynomial& modulus() const noexcept { return modulus_; }

  bool is_element(std::uint64_t value) const noexcept { return value < q_; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return static_cast<FieldElement>(a ^ b);
    if (k_ == 1) return static_cast<FieldElement>((a + b) % p_);
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return digitwise(a, b, false);
  }
  FieldElement neg(FieldElement a) const noexcept { return neg_table_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Throws DivisionByZero for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  // a^e for any integer e; negative exponents require a != 0.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  // Generic dispatcher; `b` is the second operand (or the exponent for pow).
  FieldElement apply(Op op, FieldElement a, std::optional<std::int64_t> b = std::nullopt) const;

  // Elements 0, 1, ..., q-1 in encoded order.
  std::vector<FieldElement> elements() const;

  // Fixed generator of the multiplicative group (the smallest primitive element).
  FieldElement primitive_element() const noexcept { return exp_[1]; }

  // Structural identity: same p, k and modulus.
  friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
    return lhs.p_ == rhs.p_ && lhs.k_ == rhs.k_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, Polynomial modulus);
  FieldElement digitwise(FieldElement a, FieldElement b, bool negate_b) const noexcept;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  Polynomial modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<FieldElement> exp_;  // doubled so exp_[log a + log b] needs no reduction
  std::vector<FieldElement> neg_table_;
  std::vector<FieldElement> add_table_;  // only for 2 < p, k > 1, q <= 256
};

// Same field (pointer identity or structural equality).
inline bool same_field(const FieldPtr& lhs, const FieldPtr& rhs) noexcept {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

// Convenience wrapper matching make_field(p, k, modulus).
inline FieldPtr make_field(std::uint32_t p, std::uint32_t k,
                           std::optional<Polynomial> modulus = std::nullopt) {
  return Field::make(p, k, std::move(modulus));
}

bool is_prime(std::uint64_t n) noexcept;

namespace poly {

// Strips trailing zero coefficients; the zero polynomial becomes empty.
void normalize(Polynomial& f);
int degree(const Polynomial& f);
// Remainder of f modulo a monic g over GF(p).
Polynomial mod(Polynomial f, const Polynomial& g, std::uint32_t p);
Polynomial mul(const Polynomial& f, const Polynomial& g, std::uint32_t p);
// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Polynomial& f, std::uint32_t p);

// Monic polynomial of degree `degree` with lower coefficients taken from the
// base-p digits of `index` (constant term least significant).
Polynomial monic_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p);

}  // namespace poly

}  // namespace rankext
