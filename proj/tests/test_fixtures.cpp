#include <gtest/gtest.h>

#include <set>

#include "rankext/fixtures.hpp"
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

// Order by repeated naive products, independent of the library's power().
std::uint64_t naive_order(const FieldPtr& f, const MatrixFq& m, std::uint64_t limit) {
  const oracle::NaiveField nf = testing_support::naive(*f);
  const oracle::Mat start = testing_support::to_mat(m);
  oracle::Mat cur = start;
  const oracle::Mat id = testing_support::to_mat(MatrixFq::identity(f, m.rows()));
  for (std::uint64_t e = 1; e <= limit; ++e) {
    if (cur == id) return e;
    cur = oracle::mat_mul(nf, cur, start);
  }
  return 0;
}

}  // namespace

TEST(Fixtures, CatalogueIsComplete) {
  const std::set<std::string> expected{"bg-transpose-2x3",       "bg-block-4x4",
                                       "rowspace-mismatch-2x3",  "singer-cycle",
                                       "non-multiplicative-3x3", "rank-one-nonextendable-2x3",
                                       "rank-one-family-n",      "scalar-rank-one-2x4",
                                       "arrow-irreducible",      "path-demo-3x5",
                                       "chain-demo-3x3"};
  std::set<std::string> names;
  for (const auto& d : list_examples()) names.insert(d.name);
  EXPECT_EQ(names, expected);
}

TEST(Fixtures, AllPassOnDefaults) {
  for (const auto& d : list_examples()) {
    const FixtureReport r = run_example(d.name);
    EXPECT_TRUE(r.pass) << d.name << ": " << to_json(r).dump();
    EXPECT_EQ(r.computed, r.expected) << d.name;
    EXPECT_EQ(r.params, d.defaults);
  }
}

TEST(Fixtures, ParameterSweeps) {
  for (std::int64_t n = 4; n <= 6; ++n) EXPECT_TRUE(run_example("rank-one-family-n", {{"n", n}}).pass) << n;
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (std::int64_t n = 2; n <= 6; ++n) {
      const FixtureReport r = run_example("arrow-irreducible", {{"m", m}, {"n", n}});
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.computed["support_size"], m + n - 1);
    }
  }
  EXPECT_TRUE(run_example("singer-cycle", {{"q", 5}, {"n", 2}}).pass);
  EXPECT_TRUE(run_example("singer-cycle", {{"q", 3}, {"n", 3}}).pass);
  EXPECT_TRUE(run_example("scalar-rank-one-2x4", {{"q", 5}, {"alpha", 3}}).pass);
}

// Over GF(5) the scalar 2x4 map is no isometry. Frozen from an independent
// brute force over all 5^5 coefficient tuples: x = (1, 1, 2, 3, 3) gives a
// rank-2 codeword whose image has rank 1 when alpha = 3.
TEST(Fixtures, ScalarRankOneBreaksBeyondGF3) {
  const FixtureReport r3 = run_example("scalar-rank-one-2x4");
  EXPECT_EQ(r3.computed["is_isometry"], true);
  const FixtureReport r5 = run_example("scalar-rank-one-2x4", {{"q", 5}, {"alpha", 3}});
  EXPECT_EQ(r5.computed["is_isometry"], false);
  EXPECT_TRUE(r5.details.contains("rank_violation"));
  const FieldPtr f = make_field(5, 1);
  // x1 C1 + x2 C2 + x3 C3 + x4 C4 + x5 C5 with x = (1, 1, 2, 3, 3), then x5 -> 3 x5.
  const MatrixFq c(f, {{1, 0, 2, 3}, {3, 4, 2, 1}});
  const MatrixFq image(f, {{1, 0, 2, 3}, {4, 0, 3, 2}});
  EXPECT_EQ(oracle::rank_by_span(testing_support::naive(*f), testing_support::to_mat(c)), 2);
  EXPECT_EQ(oracle::rank_by_span(testing_support::naive(*f), testing_support::to_mat(image)), 1);
}

TEST(Fixtures, Errors) {
  EXPECT_EQ(code_of([] { run_example("no-such-example"); }), ErrorCode::UnknownFixture);
  EXPECT_EQ(code_of([] { run_example("singer-cycle", {{"q", 2}}); }), ErrorCode::UnsupportedParams);
  EXPECT_EQ(code_of([] { run_example("bg-transpose-2x3", {{"bogus", 1}}); }), ErrorCode::UnsupportedParams);
  EXPECT_EQ(code_of([] { run_example("arrow-irreducible", {{"m", 4}, {"n", 5}, {"k", 1}}); }),
            ErrorCode::UnsupportedParams);
}

TEST(Fixtures, ArrowDefaults) {
  const FixtureReport r = run_example("arrow-irreducible");
  EXPECT_EQ(r.computed["support_size"], 8);
  EXPECT_EQ(r.computed["irreducible"], true);
}

TEST(Companion, Primitive) {
  const FieldPtr f3 = make_field(3, 1);
  const MatrixFq c = primitive_companion(f3, 2);
  // x^2 + x + 2 is the first primitive quadratic over GF(3).
  EXPECT_EQ(c, MatrixFq(f3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(naive_order(f3, c, 100), 8U);
  EXPECT_EQ(multiplicative_order(c, 100), 8U);

  const FieldPtr f2 = make_field(2, 1);
  EXPECT_EQ(naive_order(f2, primitive_companion(f2, 3), 100), 7U);
  EXPECT_EQ(primitive_companion(f2, 1), MatrixFq(f2, {{1}}));
  EXPECT_EQ(naive_order(make_field(5, 1), primitive_companion(make_field(5, 1), 2), 100), 24U);
  EXPECT_EQ(code_of([] { primitive_companion(make_field(2, 2), 2); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code_of([] { primitive_companion(make_field(2, 1), 21); }), ErrorCode::SearchSpaceTooLarge);
  EXPECT_EQ(multiplicative_order(MatrixFq(f2, {{1, 1}, {0, 0}}), 50), std::nullopt);
}

// F_q[P] for a Singer cycle P: every nonzero element is invertible.
TEST(CompanionProperties, PolynomialAlgebraIsAField) {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
    const FieldPtr f = make_field(q, 1);
    const MatrixFq p = primitive_companion(f, n);
    std::vector<MatrixFq> gens;
    for (int i = 0; i < n; ++i) gens.push_back(power(p, static_cast<std::uint64_t>(i)));
    const RankCode code(f, n, n, gens);
    ASSERT_EQ(code.dim(), n);
    EXPECT_EQ(min_distance(code), n);
    // Closed under multiplication by P.
    for (const MatrixFq& g : gens) EXPECT_TRUE(code.contains(mul(p, g)));
  }
}
