#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "rankext/extend.hpp"

namespace testing_support {

using rankext::FieldElement;
using rankext::FieldPtr;
using rankext::MatrixFq;
using rankext::Position;
using rankext::Support;

inline oracle::NaiveField naive(const rankext::Field& f) {
  oracle::Vec modulus;
  if (f.k() == 1) {
    modulus = {0, 1};
  } else {
    modulus.assign(f.modulus().begin(), f.modulus().end());
  }
  return {f.p(), f.k(), modulus};
}

inline oracle::Mat to_mat(const MatrixFq& m) {
  oracle::Mat out(static_cast<std::size_t>(m.rows()), oracle::Vec(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline MatrixFq from_mat(const FieldPtr& f, const oracle::Mat& m) {
  MatrixFq out(f, static_cast<int>(m.size()), static_cast<int>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[0].size(); ++j) out.set(static_cast<int>(i), static_cast<int>(j), m[i][j]);
  }
  return out;
}

inline FieldElement random_element(std::mt19937& rng, const rankext::Field& f) {
  return static_cast<FieldElement>(std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng));
}

inline FieldElement random_nonzero(std::mt19937& rng, const rankext::Field& f) {
  return static_cast<FieldElement>(std::uniform_int_distribution<std::uint32_t>(1, f.q() - 1)(rng));
}

inline MatrixFq random_matrix(std::mt19937& rng, const FieldPtr& f, int rows, int cols) {
  MatrixFq out(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.set(i, j, random_element(rng, *f));
  }
  return out;
}

inline MatrixFq random_invertible(std::mt19937& rng, const FieldPtr& f, int n) {
  for (;;) {
    MatrixFq m = random_matrix(rng, f, n, n);
    if (rankext::rank(m) == n) return m;
  }
}

inline std::uint64_t mask_of(const Support& s) {
  std::uint64_t mask = 0;
  for (const Position& p : s.positions()) mask |= std::uint64_t{1} << (p.row * s.n() + p.col);
  return mask;
}

inline Support support_of_mask(std::uint64_t mask, int m, int n) {
  std::vector<Position> positions;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1U) positions.push_back({i, j});
    }
  }
  return Support(m, n, std::move(positions));
}

inline Support random_support(std::mt19937& rng, int m, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Position> positions;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (coin(rng)) positions.push_back({i, j});
    }
  }
  return Support(m, n, std::move(positions));
}

// Random support with exactly `count` positions.
inline Support random_support_of_size(std::mt19937& rng, int m, int n, int count) {
  std::vector<Position> all;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) all.push_back({i, j});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(count));
  return Support(m, n, std::move(all));
}

inline std::vector<oracle::Cell> cells(const std::vector<Position>& ps) {
  std::vector<oracle::Cell> out;
  for (const Position& p : ps) out.push_back({p.row, p.col});
  return out;
}

inline const std::vector<std::pair<std::uint32_t, std::uint32_t>>& small_fields() {
  static const std::vector<std::pair<std::uint32_t, std::uint32_t>> list = {
      {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}};
  return list;
}

}  // namespace testing_support
