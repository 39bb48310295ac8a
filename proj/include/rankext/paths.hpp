#pragma once

// Paths on matrix supports: closed simple paths, path-reductions,
// irreducibility and path-reduction chains.
//
// Everything here depends only on the zero/nonzero pattern, so operations
// take a Support; overloads accepting a MatrixFq project to its support.
// Positions are 0-based in memory; the JSON/CLI layer shows them 1-based.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankext/matrix.hpp"

namespace rankext {

struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

class Support {
 public:
  Support(int m, int n) : m_(m), n_(n) {}
  Support(int m, int n, std::vector<Position> positions);
  static Support of(const MatrixFq& m);
  // Every position of an m x n matrix.
  static Support full(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  // Sorted lexicographically, no repeats.
  const std::vector<Position>& positions() const noexcept { return positions_; }
  bool contains(Position p) const noexcept;
  Support without(Position p) const;

  // 0/1 matrix over the given field with this support.
  MatrixFq indicator(const FieldPtr& field) const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  int m_;
  int n_;
  std::vector<Position> positions_;
};

Support support(const MatrixFq& m);

struct Path {
  std::vector<Position> positions;
  std::size_t length() const noexcept { return positions.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

enum class PathKind { invalid, open_path, simple_open, closed, closed_simple };
std::string_view path_kind_name(PathKind kind) noexcept;

struct PathClassification {
  PathKind kind = PathKind::invalid;
  bool closed = false;
  bool simple = false;
  std::string reason;
};

PathClassification validate_path(const Support& s, std::span<const Position> seq);
PathClassification validate_path(const MatrixFq& m, std::span<const Position> seq);

// Among all rotations and both directions, the lexicographically smallest
// sequence.
Path canonical_form(const Path& path);

// Prune-then-walk: delete lines carrying at most one position until every
// surviving line has two, then walk from the smallest surviving position,
// first along its row, alternating rows and columns and always taking the
// smallest admissible next position, until a line repeats. nullopt iff the
// support is irreducible.
std::optional<Path> find_closed_simple_path(const Support& s);
std::optional<Path> find_closed_simple_path(const MatrixFq& m);

// A closed simple path through p (a shortest one), or nullopt.
std::optional<Path> closed_simple_path_through(const Support& s, Position p);

// Every closed simple path once, in canonical form, sorted. Throws
// SearchSpaceTooLarge when the support has more than 24 positions.
std::vector<Path> enumerate_closed_simple_paths(const Support& s);
std::vector<Path> enumerate_closed_simple_paths(const MatrixFq& m);

// No closed simple path. Asserts the bound |support| <= m + n - 1 on the way.
bool is_irreducible(const Support& s);
bool is_irreducible(const MatrixFq& m);

// Union-find test that the row/column bipartite graph (one edge per
// position) has no cycle.
bool support_graph_is_forest(const Support& s);

// Throws NotInSupport / NotOnClosedSimplePath.
Support reduce_at(const Support& s, Position p);

struct ReductionChain {
  std::vector<Support> supports;  // M_1, ..., M_l
  std::vector<Position> deleted;  // alpha_1, ..., alpha_{l-1}
  std::size_t length() const noexcept { return supports.size(); }
};

// Greedy chain: always delete the smallest position lying on a closed
// simple path.
ReductionChain reduction_chain(const Support& s);
ReductionChain reduction_chain(const MatrixFq& m);

// Replays a deletion sequence from s; nullopt unless every step is a
// reduction and the end is irreducible.
std::optional<ReductionChain> replay_chain(const Support& s, std::span<const Position> deletions);
bool is_valid_chain(const ReductionChain& chain);

// Exhaustive depth-first enumeration over every legal deletion at every
// step, memoized on the remaining support. Maps chain length to the number
// of chains of that length. Throws SearchSpaceTooLarge above 16 positions.
std::map<std::size_t, std::uint64_t> enumerate_all_chains(const Support& s);

// Explicit deletion sequences of all chains, up to max_chains of them
// (throws SearchSpaceTooLarge when exceeded).
std::vector<std::vector<Position>> enumerate_chain_sequences(const Support& s, std::size_t max_chains);

}  // namespace rankext
