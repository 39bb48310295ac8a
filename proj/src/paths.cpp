#include "rankext/paths.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace rankext {

namespace {

std::string show(Position p) { return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")"; }

bool share_line(Position a, Position b) noexcept { return a.row == b.row || a.col == b.col; }

// Minimal union-find over row/column vertices.
class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Support positions indexed 0..k-1 with subsets as bitmasks; used by the
// exhaustive chain searches.
struct MaskGraph {
  int m;
  int n;
  std::vector<Position> positions;

  bool on_cycle(std::uint32_t mask, std::size_t idx) const {
    DisjointSets ds(m + n);
    for (std::size_t e = 0; e < positions.size(); ++e) {
      if (e == idx || !(mask >> e & 1U)) continue;
      ds.unite(positions[e].row, m + positions[e].col);
    }
    return ds.find(positions[idx].row) == ds.find(m + positions[idx].col);
  }

  std::vector<std::size_t> legal_deletions(std::uint32_t mask) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < positions.size(); ++e) {
      if ((mask >> e & 1U) && on_cycle(mask, e)) out.push_back(e);
    }
    return out;
  }
};

MaskGraph mask_graph(const Support& s, std::size_t cap) {
  if (s.size() > cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "support has " + std::to_string(s.size()) + " positions; the cap is " + std::to_string(cap));
  }
  return {s.m(), s.n(), s.positions()};
}

}  // namespace

Support::Support(int m, int n, std::vector<Position> positions) : m_(m), n_(n), positions_(std::move(positions)) {
  for (const Position& p : positions_) {
    if (p.row < 0 || p.row >= m_ || p.col < 0 || p.col >= n_) {
      throw Error(ErrorCode::DimensionMismatch, "position " + show(p) + " outside the matrix");
    }
  }
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
    throw Error(ErrorCode::DuplicatePosition, "support lists a position twice");
  }
}

Support Support::of(const MatrixFq& m) {
  std::vector<Position> ps;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) ps.push_back({i, j});
    }
  }
  return Support(m.rows(), m.cols(), std::move(ps));
}

Support Support::full(int m, int n) {
  std::vector<Position> ps;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) ps.push_back({i, j});
  }
  return Support(m, n, std::move(ps));
}

bool Support::contains(Position p) const noexcept {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

Support Support::without(Position p) const {
  Support out = *this;
  auto it = std::lower_bound(out.positions_.begin(), out.positions_.end(), p);
  if (it != out.positions_.end() && *it == p) out.positions_.erase(it);
  return out;
}

MatrixFq Support::indicator(const FieldPtr& field) const {
  MatrixFq out(field, m_, n_);
  for (const Position& p : positions_) out.set(p.row, p.col, 1);
  return out;
}

Support support(const MatrixFq& m) { return Support::of(m); }

std::string_view path_kind_name(PathKind kind) noexcept {
  switch (kind) {
    case PathKind::invalid: return "invalid";
    case PathKind::open_path: return "open-path";
    case PathKind::simple_open: return "simple-open";
    case PathKind::closed: return "closed";
    case PathKind::closed_simple: return "closed-simple";
  }
  return "invalid";
}

PathClassification validate_path(const Support& s, std::span<const Position> seq) {
  PathClassification out;
  if (seq.empty()) {
    out.reason = "empty sequence";
    return out;
  }
  std::set<Position> seen;
  for (std::size_t h = 0; h < seq.size(); ++h) {
    const Position p = seq[h];
    if (p.row < 0 || p.row >= s.m() || p.col < 0 || p.col >= s.n()) {
      out.reason = "position " + show(p) + " is outside the matrix";
      return out;
    }
    if (!s.contains(p)) {
      out.reason = "position " + show(p) + " is a zero entry";
      return out;
    }
    if (!seen.insert(p).second) {
      out.reason = "position " + show(p) + " repeats";
      return out;
    }
    if (h > 0 && !share_line(seq[h - 1], p)) {
      out.reason = "consecutive positions " + show(seq[h - 1]) + " and " + show(p) + " share no line";
      return out;
    }
  }
  std::map<int, int> per_row;
  std::map<int, int> per_col;
  for (const Position& p : seq) {
    ++per_row[p.row];
    ++per_col[p.col];
  }
  out.simple = std::all_of(per_row.begin(), per_row.end(), [](auto& kv) { return kv.second <= 2; }) &&
               std::all_of(per_col.begin(), per_col.end(), [](auto& kv) { return kv.second <= 2; });
  out.closed = seq.size() >= 4 && share_line(seq.front(), seq.back());
  if (out.closed && out.simple) {
    out.kind = PathKind::closed_simple;
  } else if (out.closed) {
    out.kind = PathKind::closed;
    out.reason = "three positions share a line";
  } else if (out.simple) {
    out.kind = PathKind::simple_open;
    out.reason = seq.size() < 4 ? "shorter than 4" : "endpoints share no line";
  } else {
    out.kind = PathKind::open_path;
    out.reason = "three positions share a line";
  }
  return out;
}

PathClassification validate_path(const MatrixFq& m, std::span<const Position> seq) {
  return validate_path(support(m), seq);
}

Path canonical_form(const Path& path) {
  const std::size_t len = path.positions.size();
  if (len == 0) return path;
  Path best = path;
  std::vector<Position> reversed(path.positions.rbegin(), path.positions.rend());
  const std::vector<Position>* bases[] = {&path.positions, &reversed};
  for (const std::vector<Position>* base : bases) {
    for (std::size_t shift = 0; shift < len; ++shift) {
      std::vector<Position> cand(len);
      for (std::size_t i = 0; i < len; ++i) cand[i] = (*base)[(i + shift) % len];
      if (cand < best.positions) best.positions = std::move(cand);
    }
  }
  return best;
}

std::optional<Path> find_closed_simple_path(const Support& s) {
  const int m = s.m();
  const int n = s.n();
  // Line ids: rows 0..m-1, columns m..m+n-1.
  std::vector<char> alive(s.size(), 1);
  std::vector<int> degree(static_cast<std::size_t>(m + n), 0);
  for (const Position& p : s.positions()) {
    ++degree[p.row];
    ++degree[m + p.col];
  }
  std::vector<char> line_alive(static_cast<std::size_t>(m + n), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int line = 0; line < m + n; ++line) {
      if (!line_alive[line] || degree[line] > 1) continue;
      line_alive[line] = 0;
      changed = true;
      for (std::size_t e = 0; e < s.size(); ++e) {
        const Position& p = s.positions()[e];
        if (!alive[e] || (p.row != line && m + p.col != line)) continue;
        alive[e] = 0;
        --degree[p.row];
        --degree[m + p.col];
      }
    }
  }
  auto first_alive = std::find(alive.begin(), alive.end(), 1);
  if (first_alive == alive.end()) return std::nullopt;

  auto other_end = [m](const Position& p, int line) { return line == p.row ? m + p.col : p.row; };
  auto on_line = [m](const Position& p, int line) { return p.row == line || m + p.col == line; };

  std::vector<Position> edges;
  edges.push_back(s.positions()[static_cast<std::size_t>(first_alive - alive.begin())]);
  std::vector<int> visited_at(static_cast<std::size_t>(m + n), -1);
  visited_at[m + edges[0].col] = 0;
  int current = edges[0].row;
  visited_at[current] = 1;
  for (int step = 1;; ++step) {
    // Pruned lines carry at least two alive positions, so the walk never stalls.
    const Position& last = edges.back();
    std::optional<Position> next;
    for (std::size_t e = 0; e < s.size(); ++e) {
      const Position& p = s.positions()[e];
      if (alive[e] && on_line(p, current) && p != last) {
        next = p;
        break;
      }
    }
    if (!next) throw std::logic_error("prune-then-walk stalled on a line with fewer than two entries");
    edges.push_back(*next);
    const int reached = other_end(*next, current);
    if (visited_at[reached] >= 0) {
      Path path;
      path.positions.assign(edges.begin() + visited_at[reached], edges.end());
      return path;
    }
    visited_at[reached] = step + 1;
    current = reached;
  }
}

std::optional<Path> find_closed_simple_path(const MatrixFq& m) { return find_closed_simple_path(support(m)); }

std::optional<Path> closed_simple_path_through(const Support& s, Position target) {
  if (!s.contains(target)) return std::nullopt;
  const int m = s.m();
  const int n = s.n();
  // BFS over lines from the target's row to its column, avoiding the target.
  std::vector<int> via(static_cast<std::size_t>(m + n), -1);
  std::vector<char> seen(static_cast<std::size_t>(m + n), 0);
  std::deque<int> queue{target.row};
  seen[target.row] = 1;
  const int goal = m + target.col;
  while (!queue.empty() && !seen[goal]) {
    const int line = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < s.size(); ++e) {
      const Position& p = s.positions()[e];
      if (p == target) continue;
      int other = -1;
      if (p.row == line) {
        other = m + p.col;
      } else if (m + p.col == line) {
        other = p.row;
      } else {
        continue;
      }
      if (seen[other]) continue;
      seen[other] = 1;
      via[other] = static_cast<int>(e);
      queue.push_back(other);
    }
  }
  if (!seen[goal]) return std::nullopt;
  std::vector<Position> back;
  for (int line = goal; line != target.row;) {
    const Position& p = s.positions()[static_cast<std::size_t>(via[line])];
    back.push_back(p);
    line = line == m + p.col ? p.row : m + p.col;
  }
  Path path;
  path.positions.push_back(target);
  path.positions.insert(path.positions.end(), back.rbegin(), back.rend());
  return path;
}

std::vector<Path> enumerate_closed_simple_paths(const Support& s) {
  constexpr std::size_t kCap = 24;
  if (s.size() > kCap) {
    throw Error(ErrorCode::SearchSpaceTooLarge, "closed-path enumeration is capped at 24 positions");
  }
  const int m = s.m();
  const int n = s.n();
  const int lines = m + n;
  // adjacency: line -> (neighbour line, position)
  std::vector<std::vector<std::pair<int, Position>>> adj(static_cast<std::size_t>(lines));
  for (const Position& p : s.positions()) {
    adj[p.row].push_back({m + p.col, p});
    adj[m + p.col].push_back({p.row, p});
  }
  std::set<std::vector<Position>> found;
  std::vector<char> on_stack(static_cast<std::size_t>(lines), 0);
  std::vector<Position> edge_stack;

  // Cycles whose smallest line is `start`; each is met once per direction.
  auto dfs = [&](auto&& self, int start, int line, int depth) -> void {
    for (const auto& [next, pos] : adj[line]) {
      if (next == start && depth >= 3) {
        edge_stack.push_back(pos);
        found.insert(canonical_form(Path{edge_stack}).positions);
        edge_stack.pop_back();
        continue;
      }
      if (next <= start || on_stack[next]) continue;
      on_stack[next] = 1;
      edge_stack.push_back(pos);
      self(self, start, next, depth + 1);
      edge_stack.pop_back();
      on_stack[next] = 0;
    }
  };
  for (int start = 0; start < lines; ++start) {
    on_stack[start] = 1;
    dfs(dfs, start, start, 0);
    on_stack[start] = 0;
  }
  std::vector<Path> out;
  out.reserve(found.size());
  for (const auto& seq : found) out.push_back(Path{seq});
  return out;
}

std::vector<Path> enumerate_closed_simple_paths(const MatrixFq& m) { return enumerate_closed_simple_paths(support(m)); }

bool is_irreducible(const Support& s) {
  const bool irreducible = !find_closed_simple_path(s).has_value();
  if (irreducible && s.size() > static_cast<std::size_t>(s.m() + s.n() - 1)) {
    throw std::logic_error("irreducible support exceeds m + n - 1 positions");
  }
  return irreducible;
}

bool is_irreducible(const MatrixFq& m) { return is_irreducible(support(m)); }

bool support_graph_is_forest(const Support& s) {
  DisjointSets ds(s.m() + s.n());
  for (const Position& p : s.positions()) {
    if (!ds.unite(p.row, s.m() + p.col)) return false;
  }
  return true;
}

Support reduce_at(const Support& s, Position p) {
  if (!s.contains(p)) throw Error(ErrorCode::NotInSupport, "position " + show(p) + " is a zero entry");
  if (!closed_simple_path_through(s, p)) {
    throw Error(ErrorCode::NotOnClosedSimplePath, "position " + show(p) + " lies on no closed simple path");
  }
  return s.without(p);
}

ReductionChain reduction_chain(const Support& s) {
  ReductionChain chain;
  chain.supports.push_back(s);
  while (true) {
    const Support& cur = chain.supports.back();
    std::optional<Position> pick;
    for (const Position& p : cur.positions()) {
      if (closed_simple_path_through(cur, p)) {
        pick = p;
        break;
      }
    }
    if (!pick) break;
    Support next = cur.without(*pick);
    chain.deleted.push_back(*pick);
    chain.supports.push_back(std::move(next));
  }
  return chain;
}

ReductionChain reduction_chain(const MatrixFq& m) { return reduction_chain(support(m)); }

std::optional<ReductionChain> replay_chain(const Support& s, std::span<const Position> deletions) {
  ReductionChain chain;
  chain.supports.push_back(s);
  for (const Position& p : deletions) {
    const Support& cur = chain.supports.back();
    if (!cur.contains(p) || !closed_simple_path_through(cur, p)) return std::nullopt;
    Support next = cur.without(p);
    chain.deleted.push_back(p);
    chain.supports.push_back(std::move(next));
  }
  if (!is_irreducible(chain.supports.back())) return std::nullopt;
  return chain;
}

bool is_valid_chain(const ReductionChain& chain) {
  if (chain.supports.empty() || chain.deleted.size() + 1 != chain.supports.size()) return false;
  for (std::size_t i = 0; i < chain.deleted.size(); ++i) {
    const Support& cur = chain.supports[i];
    const Position p = chain.deleted[i];
    if (!cur.contains(p) || !closed_simple_path_through(cur, p)) return false;
    if (!(chain.supports[i + 1] == cur.without(p))) return false;
  }
  return is_irreducible(chain.supports.back());
}

std::map<std::size_t, std::uint64_t> enumerate_all_chains(const Support& s) {
  const MaskGraph g = mask_graph(s, 16);
  std::unordered_map<std::uint32_t, std::map<std::size_t, std::uint64_t>> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> const std::map<std::size_t, std::uint64_t>& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::map<std::size_t, std::uint64_t> lengths;
    const auto legal = g.legal_deletions(mask);
    if (legal.empty()) {
      lengths[1] = 1;
    } else {
      for (std::size_t e : legal) {
        for (const auto& [len, count] : self(self, mask & ~(1U << e))) lengths[len + 1] += count;
      }
    }
    return memo.emplace(mask, std::move(lengths)).first->second;
  };
  const std::uint32_t all = s.size() == 32 ? ~0U : ((1U << s.size()) - 1U);
  return rec(rec, all);
}

std::vector<std::vector<Position>> enumerate_chain_sequences(const Support& s, std::size_t max_chains) {
  const MaskGraph g = mask_graph(s, 16);
  std::vector<std::vector<Position>> out;
  std::vector<Position> current;
  auto rec = [&](auto&& self, std::uint32_t mask) -> void {
    const auto legal = g.legal_deletions(mask);
    if (legal.empty()) {
      if (out.size() >= max_chains) {
        throw Error(ErrorCode::SearchSpaceTooLarge, "more than " + std::to_string(max_chains) + " chains");
      }
      out.push_back(current);
      return;
    }
    for (std::size_t e : legal) {
      current.push_back(g.positions[e]);
      self(self, mask & ~(1U << e));
      current.pop_back();
    }
  };
  rec(rec, (1U << s.size()) - 1U);
  return out;
}

}  // namespace rankext
