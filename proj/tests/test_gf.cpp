#include <gtest/gtest.h>

#include <set>

#include "rankext/gf.hpp"
#include "support/helpers.hpp"

using namespace rankext;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(Field, PrimeFieldBasics) {
  const FieldPtr f = make_field(3, 1);
  EXPECT_EQ(f->q(), 3U);
  EXPECT_EQ(f->add(1, 2), 0);
  EXPECT_EQ(f->inv(2), 2);
  EXPECT_EQ(f->neg(1), 2);
  EXPECT_EQ(f->elements(), (std::vector<FieldElement>{0, 1, 2}));
}

TEST(Field, GF4ProductOfTheGenerator) {
  // x * x = x + 1 modulo x^2 + x + 1.
  const FieldPtr f = make_field(2, 2, Polynomial{1, 1, 1});
  EXPECT_EQ(f->mul(2, 2), 3);
  EXPECT_EQ(f->elements(), (std::vector<FieldElement>{0, 1, 2, 3}));
}

TEST(Field, Errors) {
  EXPECT_EQ(code_of([] { make_field(4, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_field(2, 2, Polynomial{1, 0, 1}); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { make_field(2, 2, Polynomial{1, 1, 0}); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { make_field(2, 2, Polynomial{1, 1}); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { make_field(7, 2); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code_of([] { make_field(2, 17); }), ErrorCode::FieldTooLarge);
  EXPECT_EQ(code_of([] { make_field(3, 0); }), ErrorCode::UnsupportedField);
  const FieldPtr f = make_field(5, 1);
  EXPECT_EQ(code_of([&] { f->inv(0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { f->div(3, 0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { f->pow(0, -1); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { f->apply(Field::Op::add, 7, 1); }), ErrorCode::InvalidElement);
}

TEST(Field, UserModulusForLargerExtension) {
  // x^2 + 1 is irreducible over GF(7) since -1 is a non-residue mod 7.
  const FieldPtr f = make_field(7, 2, Polynomial{1, 0, 1});
  EXPECT_EQ(f->q(), 49U);
  for (FieldElement a = 1; a < 49; ++a) EXPECT_EQ(f->mul(a, f->inv(a)), 1);
}

TEST(Field, ApplyDispatch) {
  const FieldPtr f = make_field(2, 3);
  EXPECT_EQ(f->apply(Field::Op::add, 5, 3), f->add(5, 3));
  EXPECT_EQ(f->apply(Field::Op::mul, 5, 3), f->mul(5, 3));
  EXPECT_EQ(f->apply(Field::Op::div, 5, 3), f->div(5, 3));
  EXPECT_EQ(f->apply(Field::Op::sub, 5, 3), f->sub(5, 3));
  EXPECT_EQ(f->apply(Field::Op::neg, 5), f->neg(5));
  EXPECT_EQ(f->apply(Field::Op::inv, 5), f->inv(5));
  EXPECT_EQ(f->apply(Field::Op::pow, 5, -2), f->inv(f->mul(5, 5)));
}

// Multiplication agrees with schoolbook polynomial products on every pair.
TEST(FieldOracle, MulAddAgreeWithNaivePolynomials) {
  for (auto [p, k] : testing_support::small_fields()) {
    const FieldPtr f = make_field(p, k);
    const oracle::NaiveField nf = testing_support::naive(*f);
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        const auto x = static_cast<FieldElement>(a);
        const auto y = static_cast<FieldElement>(b);
        ASSERT_EQ(f->mul(x, y), nf.mul(a, b)) << "q=" << f->q() << " a=" << a << " b=" << b;
        ASSERT_EQ(f->add(x, y), nf.add(a, b));
        ASSERT_EQ(f->sub(x, y), nf.sub(a, b));
      }
    }
  }
}

TEST(FieldProperties, ExhaustiveAxiomsUpTo16) {
  for (auto [p, k] : testing_support::small_fields()) {
    const FieldPtr f = make_field(p, k);
    if (f->q() > 16) continue;
    const auto q = static_cast<FieldElement>(f->q());
    for (FieldElement a = 0; a < q; ++a) {
      for (FieldElement b = 0; b < q; ++b) {
        ASSERT_EQ(f->add(a, b), f->add(b, a));
        ASSERT_EQ(f->mul(a, b), f->mul(b, a));
        for (FieldElement c = 0; c < q; ++c) {
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST(FieldProperties, InversesPowersAndEnumeration) {
  for (auto [p, k] : testing_support::small_fields()) {
    const FieldPtr f = make_field(p, k);
    const auto elems = f->elements();
    ASSERT_EQ(elems.size(), f->q());
    ASSERT_EQ(std::set<FieldElement>(elems.begin(), elems.end()).size(), f->q());
    for (FieldElement a : elems) {
      EXPECT_EQ(f->add(a, f->neg(a)), 0);
      if (a == 0) continue;
      EXPECT_EQ(f->mul(a, f->inv(a)), 1);
      EXPECT_EQ(f->pow(a, f->q() - 1), 1);
      EXPECT_EQ(f->pow(a, -1), f->inv(a));
    }
    // The primitive element generates the multiplicative group.
    std::set<FieldElement> powers;
    for (std::uint32_t e = 0; e + 1 < f->q(); ++e) powers.insert(f->pow(f->primitive_element(), e));
    EXPECT_EQ(powers.size(), f->q() - 1);
  }
}

TEST(Polynomials, IrreducibilityByRootCount) {
  // Degree 2 and 3 polynomials are irreducible iff they have no roots.
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (std::uint32_t d : {2U, 3U}) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Polynomial f = poly::monic_from_index(idx, d, p);
        bool root = false;
        for (std::uint32_t x = 0; x < p; ++x) {
          std::uint64_t v = 0;
          for (std::uint32_t i = d + 1; i > 0; --i) v = (v * x + f[i - 1]) % p;
          root = root || v == 0;
        }
        EXPECT_EQ(poly::is_irreducible(f, p), !root) << "p=" << p << " idx=" << idx;
      }
    }
  }
}

TEST(Polynomials, IrreducibleCountsOverGF2) {
  // Number of monic irreducibles of degree d over GF(2): 2, 1, 2, 3, 6, 9.
  const std::vector<int> expected{2, 1, 2, 3, 6, 9};
  for (std::uint32_t d = 1; d <= 6; ++d) {
    int count = 0;
    for (std::uint64_t idx = 0; idx < (1ULL << d); ++idx) {
      count += poly::is_irreducible(poly::monic_from_index(idx, d, 2), 2);
    }
    EXPECT_EQ(count, expected[d - 1]) << "degree " << d;
  }
}
