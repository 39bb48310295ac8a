#pragma once

// Slow, independent reference implementations. Nothing here calls the
// library's elimination, enumeration or graph code; field arithmetic goes
// through NaiveField, which multiplies digit polynomials by schoolbook.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;
using Mat = std::vector<Vec>;

struct NaiveField {
  std::uint32_t p;
  std::uint32_t k;
  Vec modulus;  // monic, ascending, size k + 1

  std::uint32_t q() const {
    std::uint32_t out = 1;
    for (std::uint32_t i = 0; i < k; ++i) out *= p;
    return out;
  }
  Vec digits(std::uint32_t a) const {
    Vec d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i, a /= p) d[i] = a % p;
    return d;
  }
  std::uint32_t pack(const Vec& d) const {
    std::uint32_t out = 0;
    for (std::uint32_t i = k; i > 0; --i) out = out * p + d[i - 1];
    return out;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Vec x = digits(a);
    const Vec y = digits(b);
    for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    Vec x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return pack(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Vec x = digits(a);
    const Vec y = digits(b);
    Vec prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    // Reduce from the top using x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
    for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
      const std::uint32_t c = prod[d];
      if (c != 0) {
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
          prod[d - k + i] = (prod[d - k + i] + (p - (c * modulus[i]) % p)) % p;
        }
      }
      if (d == k) break;
    }
    prod.resize(k);
    return pack(prod);
  }
};

// Rank through the size of the row span: |span| = q^rank.
template <typename F>
int rank_by_span(const F& f, const Mat& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::set<Vec> span{Vec(cols, 0)};
  for (const Vec& row : m) {
    std::set<Vec> next;
    for (const Vec& v : span) {
      for (std::uint32_t c = 0; c < f.q(); ++c) {
        Vec w = v;
        for (std::size_t j = 0; j < cols; ++j) w[j] = f.add(w[j], f.mul(c, row[j]));
        next.insert(std::move(w));
      }
    }
    span = std::move(next);
  }
  int r = 0;
  for (std::size_t size = span.size(); size > 1; size /= f.q()) ++r;
  return r;
}

// Leibniz expansion over all permutations.
template <typename F>
std::uint32_t det_leibniz(const F& f, const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::uint32_t total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::uint32_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m[i][perm[i]]);
    total = inversions % 2 == 0 ? f.add(total, term) : f.sub(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <typename F>
Mat mat_mul(const F& f, const Mat& a, const Mat& b) {
  Mat out(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      for (std::size_t l = 0; l < b.size(); ++l) out[i][j] = f.add(out[i][j], f.mul(a[i][l], b[l][j]));
    }
  }
  return out;
}

// All n x n matrices in row-major lexicographic order, filtered by a nonzero
// Leibniz determinant.
template <typename F>
std::vector<Mat> gl_by_filter(const F& f, int n) {
  std::vector<Mat> out;
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= f.q();
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat m(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
    std::uint64_t rest = code;
    for (std::size_t c = cells; c > 0; --c, rest /= f.q()) m[(c - 1) / n][(c - 1) % n] = rest % f.q();
    if (det_leibniz(f, m) != 0) out.push_back(std::move(m));
  }
  return out;
}

// ---- supports as bitmasks over positions, cell index i * n + j ----

struct Cell {
  int row;
  int col;
};

inline std::vector<Cell> cells_of(std::uint64_t mask, int m, int n) {
  std::vector<Cell> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1U) out.push_back({i, j});
    }
  }
  return out;
}

// Number of connected components among the lines touched by the cells.
inline int touched_components(const std::vector<Cell>& cells, int m, int n, int& touched) {
  std::vector<int> parent(static_cast<std::size_t>(m + n));
  for (int v = 0; v < m + n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::vector<char> used(static_cast<std::size_t>(m + n), 0);
  for (const Cell& c : cells) {
    used[c.row] = used[m + c.col] = 1;
    parent[find(c.row)] = find(m + c.col);
  }
  touched = 0;
  int comps = 0;
  for (int v = 0; v < m + n; ++v) {
    if (!used[v]) continue;
    ++touched;
    if (find(v) == v) ++comps;
  }
  return comps;
}

// |E| - |V| + components of the row/column graph.
inline int cycle_rank(std::uint64_t mask, int m, int n) {
  const auto cells = cells_of(mask, m, n);
  int touched = 0;
  const int comps = touched_components(cells, m, n, touched);
  return static_cast<int>(cells.size()) - touched + comps;
}

// Sub-supports that are one cycle: every touched line holds exactly two
// cells and the touched lines are connected.
inline bool is_single_cycle(std::uint64_t sub, int m, int n) {
  const auto cells = cells_of(sub, m, n);
  if (cells.size() < 4) return false;
  std::vector<int> count(static_cast<std::size_t>(m + n), 0);
  for (const Cell& c : cells) {
    ++count[c.row];
    ++count[m + c.col];
  }
  for (int v : count) {
    if (v != 0 && v != 2) return false;
  }
  int touched = 0;
  return touched_components(cells, m, n, touched) == 1;
}

inline std::uint64_t count_cycles_by_subsets(std::uint64_t mask, int m, int n) {
  std::uint64_t count = 0;
  for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) count += is_single_cycle(sub, m, n);
  return count;
}

inline bool has_cycle_by_subsets(std::uint64_t mask, int m, int n) {
  for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
    if (is_single_cycle(sub, m, n)) return true;
  }
  return false;
}

// Definition check of a closed simple path, written from scratch.
inline bool closed_simple_by_definition(const std::vector<Cell>& seq, std::uint64_t mask, int n) {
  const std::size_t k = seq.size();
  if (k < 4) return false;
  for (std::size_t a = 0; a < k; ++a) {
    if (!((mask >> (seq[a].row * n + seq[a].col)) & 1U)) return false;
    for (std::size_t b = a + 1; b < k; ++b) {
      if (seq[a].row == seq[b].row && seq[a].col == seq[b].col) return false;
    }
  }
  auto share = [](const Cell& x, const Cell& y) { return x.row == y.row || x.col == y.col; };
  for (std::size_t a = 0; a < k; ++a) {
    if (!share(seq[a], seq[(a + 1) % k])) return false;
  }
  // No three positions on one line.
  for (std::size_t a = 0; a < k; ++a) {
    int same_row = 0;
    int same_col = 0;
    for (std::size_t b = 0; b < k; ++b) {
      same_row += seq[b].row == seq[a].row;
      same_col += seq[b].col == seq[a].col;
    }
    if (same_row > 2 || same_col > 2) return false;
  }
  return true;
}

}  // namespace oracle
