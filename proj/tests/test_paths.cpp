#include <gtest/gtest.h>

#include <algorithm>

#include "rankext/paths.hpp"
#include "support/helpers.hpp"

using namespace rankext;
using testing_support::cells;
using testing_support::mask_of;
using testing_support::support_of_mask;

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

// 1-based positions, the usual matrix notation.
std::vector<Position> ps(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Position> out;
  for (auto [i, j] : list) out.push_back({i - 1, j - 1});
  return out;
}

Support demo() { return Support(3, 5, ps({{1, 1}, {1, 4}, {2, 2}, {2, 4}, {3, 1}, {3, 2}})); }

Support arrow(int m, int n) {
  std::vector<Position> out;
  for (int j = 0; j < n; ++j) out.push_back({0, j});
  for (int i = 1; i < m; ++i) out.push_back({i, 0});
  return Support(m, n, out);
}

Support chain_demo() { return Support(3, 3, ps({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})); }

}  // namespace

TEST(Support, Examples) {
  const FieldPtr f = make_field(2, 1);
  EXPECT_TRUE(support(MatrixFq(f, 2, 3)).empty());
  EXPECT_EQ(support(MatrixFq::elementary(f, 2, 3, 0, 1)).positions(), ps({{1, 2}}));
  const MatrixFq m(f, {{1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {1, 1, 0, 0, 0}});
  EXPECT_EQ(support(m), demo());
  EXPECT_EQ(Support::of(demo().indicator(f)), demo());
  EXPECT_EQ(code_of([] { Support(2, 2, ps({{3, 1}})); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { Support(2, 2, ps({{1, 1}, {1, 1}})); }), ErrorCode::DuplicatePosition);
}

TEST(ValidatePath, Examples) {
  const auto demo_path = ps({{1, 1}, {1, 4}, {2, 4}, {2, 2}, {3, 2}, {3, 1}});
  const auto c = validate_path(demo(), demo_path);
  EXPECT_EQ(c.kind, PathKind::closed_simple);
  EXPECT_TRUE(c.closed && c.simple);

  const auto row = validate_path(Support::full(2, 3), ps({{1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(row.kind, PathKind::open_path);
  EXPECT_FALSE(row.simple);

  const auto zero = validate_path(demo(), ps({{1, 1}, {1, 2}}));
  EXPECT_EQ(zero.kind, PathKind::invalid);
  EXPECT_FALSE(zero.reason.empty());

  EXPECT_EQ(validate_path(Support::full(2, 2), ps({{1, 1}, {1, 2}, {2, 2}})).kind, PathKind::simple_open);
  EXPECT_EQ(validate_path(Support::full(2, 2), ps({{1, 1}, {2, 2}})).kind, PathKind::invalid);
  EXPECT_EQ(validate_path(Support::full(2, 2), ps({{1, 1}, {1, 2}, {1, 1}})).kind, PathKind::invalid);
  // Closed but three positions share row 1.
  EXPECT_EQ(validate_path(Support::full(2, 3), ps({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 1}})).kind, PathKind::closed);
}

TEST(FindPath, Examples) {
  const auto p = find_closed_simple_path(Support::full(2, 2));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(canonical_form(*p).positions, ps({{1, 1}, {1, 2}, {2, 2}, {2, 1}}));
  EXPECT_FALSE(find_closed_simple_path(arrow(3, 4)).has_value());
  const Support mprime = demo().without({0, 0});
  EXPECT_FALSE(find_closed_simple_path(mprime).has_value());
  const auto d = find_closed_simple_path(demo());
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(canonical_form(*d).positions, canonical_form(Path{ps({{1, 1}, {1, 4}, {2, 4}, {2, 2}, {3, 2}, {3, 1}})}).positions);
}

TEST(EnumeratePaths, Counts) {
  EXPECT_EQ(enumerate_closed_simple_paths(Support::full(2, 2)).size(), 1U);
  EXPECT_EQ(enumerate_closed_simple_paths(arrow(3, 3)).size(), 0U);
  EXPECT_EQ(enumerate_closed_simple_paths(Support::full(2, 3)).size(), 3U);
  EXPECT_EQ(code_of([] { enumerate_closed_simple_paths(Support::full(5, 5)); }), ErrorCode::SearchSpaceTooLarge);
}

TEST(Irreducible, Examples) {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      EXPECT_TRUE(is_irreducible(arrow(m, n)));
      EXPECT_EQ(arrow(m, n).size(), static_cast<std::size_t>(m + n - 1));
    }
  }
  EXPECT_FALSE(is_irreducible(Support::full(2, 2)));
  EXPECT_TRUE(is_irreducible(demo().without({0, 3})));
}

TEST(Reduce, Examples) {
  const Support m1 = reduce_at(demo(), {0, 0});
  EXPECT_EQ(m1, Support(3, 5, ps({{1, 4}, {2, 2}, {2, 4}, {3, 1}, {3, 2}})));
  const Support m2 = reduce_at(demo(), {0, 3});
  EXPECT_EQ(m2, Support(3, 5, ps({{1, 1}, {2, 2}, {2, 4}, {3, 1}, {3, 2}})));
  EXPECT_EQ(code_of([] { reduce_at(arrow(3, 3), {0, 0}); }), ErrorCode::NotOnClosedSimplePath);
  EXPECT_EQ(code_of([] { reduce_at(demo(), {0, 1}); }), ErrorCode::NotInSupport);
}

TEST(Chains, Examples) {
  EXPECT_EQ(reduction_chain(arrow(3, 3)).length(), 1U);
  EXPECT_EQ(reduction_chain(Support::full(2, 2)).length(), 2U);
  const ReductionChain c = reduction_chain(chain_demo());
  EXPECT_EQ(c.length(), 3U);
  EXPECT_TRUE(is_valid_chain(c));
  const auto lengths = enumerate_all_chains(chain_demo());
  ASSERT_EQ(lengths.size(), 1U);
  EXPECT_EQ(lengths.begin()->first, 3U);
  const auto arrows = enumerate_all_chains(arrow(3, 3));
  EXPECT_EQ(arrows, (std::map<std::size_t, std::uint64_t>{{1, 1}}));
  const auto full = enumerate_all_chains(Support::full(3, 3));
  ASSERT_EQ(full.size(), 1U);
  EXPECT_EQ(full.begin()->first, static_cast<std::size_t>(oracle::cycle_rank(mask_of(Support::full(3, 3)), 3, 3) + 1));

  EXPECT_TRUE(replay_chain(chain_demo(), ps({{1, 1}, {3, 3}})).has_value());
  // The first deletion is not on any closed simple path after stopping early.
  EXPECT_FALSE(replay_chain(chain_demo(), ps({{1, 1}})).has_value());
  EXPECT_FALSE(replay_chain(chain_demo(), ps({{1, 3}})).has_value());
}

TEST(CanonicalForm, RotationsAndReflections) {
  const Path p{ps({{2, 2}, {2, 1}, {1, 1}, {1, 2}})};
  EXPECT_EQ(canonical_form(p).positions, ps({{1, 1}, {1, 2}, {2, 2}, {2, 1}}));
}

// ---- property tests against the subset/graph oracles ----

TEST(PathProperties, FoundPathsAreClosedSimpleByDefinition) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 2 + static_cast<int>(rng() % 4);
    const Support s = testing_support::random_support(rng, m, n, 0.5);
    const auto p = find_closed_simple_path(s);
    const std::uint64_t mask = mask_of(s);
    ASSERT_EQ(p.has_value(), oracle::has_cycle_by_subsets(mask, m, n));
    if (!p) {
      ASSERT_LE(s.size(), static_cast<std::size_t>(m + n - 1));
      continue;
    }
    ASSERT_TRUE(oracle::closed_simple_by_definition(cells(p->positions), mask, n));
    // Two positions per touched line, as many rows as columns.
    std::map<int, int> rows;
    std::map<int, int> cols;
    for (const Position& q : p->positions) {
      ++rows[q.row];
      ++cols[q.col];
    }
    for (auto [r, c] : rows) ASSERT_EQ(c, 2);
    for (auto [r, c] : cols) ASSERT_EQ(c, 2);
    ASSERT_EQ(rows.size(), cols.size());
  }
}

TEST(PathProperties, CycleCountMatchesSubsetOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 3);
    const Support s = testing_support::random_support(rng, m, n, 0.6);
    const auto paths = enumerate_closed_simple_paths(s);
    ASSERT_EQ(paths.size(), oracle::count_cycles_by_subsets(mask_of(s), m, n));
    for (const Path& p : paths) {
      ASSERT_EQ(canonical_form(p), p);
      ASSERT_EQ(validate_path(s, p.positions).kind, PathKind::closed_simple);
    }
    ASSERT_TRUE(std::is_sorted(paths.begin(), paths.end(),
                               [](const Path& a, const Path& b) { return a.positions < b.positions; }));
  }
}

TEST(PathProperties, ThroughPositionAgreesWithEnumeration) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Support s = testing_support::random_support(rng, 3, 4, 0.6);
    const auto paths = enumerate_closed_simple_paths(s);
    for (const Position& p : s.positions()) {
      const bool on_some =
          std::any_of(paths.begin(), paths.end(), [&](const Path& path) {
            return std::find(path.positions.begin(), path.positions.end(), p) != path.positions.end();
          });
      const auto through = closed_simple_path_through(s, p);
      ASSERT_EQ(through.has_value(), on_some);
      if (through) {
        ASSERT_EQ(validate_path(s, through->positions).kind, PathKind::closed_simple);
        ASSERT_NE(std::find(through->positions.begin(), through->positions.end(), p), through->positions.end());
      }
    }
  }
}

TEST(PathProperties, ExhaustiveThreeByThree) {
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    const Support s = support_of_mask(mask, 3, 3);
    const bool irreducible = is_irreducible(s);
    ASSERT_EQ(irreducible, support_graph_is_forest(s));
    ASSERT_EQ(irreducible, oracle::cycle_rank(mask, 3, 3) == 0);
    ASSERT_EQ(irreducible, !oracle::has_cycle_by_subsets(mask, 3, 3));
    const ReductionChain c = reduction_chain(s);
    ASSERT_TRUE(is_valid_chain(c));
    ASSERT_EQ(c.length(), static_cast<std::size_t>(oracle::cycle_rank(mask, 3, 3) + 1));
    const auto all = enumerate_all_chains(s);
    ASSERT_EQ(all.size(), 1U) << "mask " << mask;
    ASSERT_EQ(all.begin()->first, c.length());
  }
}

TEST(PathProperties, DeletionPermutationsReplay) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Support s = testing_support::random_support(rng, 3, 4, 0.6);
    const ReductionChain c = reduction_chain(s);
    if (c.deleted.size() > 4) continue;
    std::vector<Position> perm = c.deleted;
    std::sort(perm.begin(), perm.end());
    do {
      ASSERT_TRUE(replay_chain(s, perm).has_value());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
