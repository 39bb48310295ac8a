#pragma once

// F_q-linear rank-metric codes inside GF(q)^{m x n}.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rankext/matrix.hpp"

namespace rankext {

using Coordinates = std::vector<FieldElement>;

class RankCode {
 public:
  // Keeps the generator list as supplied and computes a reduced basis of the
  // span over the row-major flattening. An empty or all-zero generator list
  // gives the zero code.
  RankCode(FieldPtr field, int m, int n, std::vector<MatrixFq> generators);

  const FieldPtr& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  const std::vector<MatrixFq>& generators() const noexcept { return generators_; }

  // Basis as stacked flattened rows (dim x mn), reduced row-echelon.
  const Entries& basis_rows() const noexcept { return basis_; }
  MatrixFq basis_element(int index) const;
  std::vector<MatrixFq> basis() const;

  // Coefficients over the basis, or nullopt when m is not a codeword.
  std::optional<Coordinates> coordinates(const MatrixFq& m) const;
  bool contains(const MatrixFq& m) const { return coordinates(m).has_value(); }
  MatrixFq combine(std::span<const FieldElement> coords) const;

  // q^dim, saturating.
  std::uint64_t size() const noexcept;

  // Visits every codeword once: coefficient tuples in lexicographic order
  // (last coordinate fastest), starting with the zero word. Stops early when
  // fn returns false. Throws CodeTooLarge when q^dim > 10^6.
  void for_each_codeword(const std::function<bool(const Coordinates&, const MatrixFq&)>& fn) const;
  std::vector<MatrixFq> codewords() const;

 private:
  FieldPtr field_;
  int m_;
  int n_;
  std::vector<MatrixFq> generators_;
  Entries basis_;
  std::vector<int> pivots_;
};

// Minimum rank over nonzero codewords. Throws ZeroCode / CodeTooLarge.
int min_distance(const RankCode& code);

// Span of all codeword row spaces (in GF(q)^n) and column spaces (in GF(q)^m).
LineSpaces code_line_spaces(const RankCode& code);

// dim-many independent rank-one codewords spanning the code, or nullopt when
// the rank-one codewords span a proper subspace. Stated generators are tried
// first, then the enumeration order.
std::optional<std::vector<MatrixFq>> rank_one_basis(const RankCode& code);

}  // namespace rankext
