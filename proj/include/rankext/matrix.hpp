#pragma once

// Dense matrices over GF(q): algebra, exact row reduction, row/column
// spaces, rank distance and lazy enumeration of GL_n(GF(q)).

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "rankext/gf.hpp"

namespace rankext {

using Entries = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class MatrixFq {
 public:
  MatrixFq() = default;
  // Zero matrix; rows, cols >= 1.
  MatrixFq(FieldPtr field, int rows, int cols);
  // Validates every entry against the field.
  MatrixFq(FieldPtr field, Entries entries);
  MatrixFq(FieldPtr field, std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  // Skips entry validation; for internal hot paths whose entries are field
  // results by construction.
  struct Trusted {};
  MatrixFq(Trusted, FieldPtr field, Entries entries) noexcept
      : field_(std::move(field)), entries_(std::move(entries)) {}

  static MatrixFq zero(FieldPtr field, int rows, int cols) { return {std::move(field), rows, cols}; }
  static MatrixFq identity(FieldPtr field, int n);
  // E_{i,j} with 0-based indices.
  static MatrixFq elementary(FieldPtr field, int rows, int cols, int i, int j);
  static MatrixFq diagonal(FieldPtr field, std::span<const FieldElement> diag);

  const FieldPtr& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }
  int rows() const noexcept { return static_cast<int>(entries_.rows()); }
  int cols() const noexcept { return static_cast<int>(entries_.cols()); }
  const Entries& entries() const noexcept { return entries_; }

  FieldElement operator()(int i, int j) const { return entries_(i, j); }
  // Builder-style mutation; validated.
  void set(int i, int j, FieldElement value);

  bool is_zero() const noexcept;

  // Row-major flattening into a single row of length rows*cols.
  Entries flattened() const;
  static MatrixFq unflatten(FieldPtr field, int rows, int cols, const Entries& flat_row, int row_index = 0);

  friend bool operator==(const MatrixFq& lhs, const MatrixFq& rhs) noexcept;
  // Lexicographic order of the row-major flattening (shapes compared first).
  friend std::strong_ordering operator<=>(const MatrixFq& lhs, const MatrixFq& rhs) noexcept;

 private:
  FieldPtr field_;
  Entries entries_;
};

MatrixFq add(const MatrixFq& a, const MatrixFq& b);
MatrixFq sub(const MatrixFq& a, const MatrixFq& b);
MatrixFq scale(FieldElement s, const MatrixFq& a);
MatrixFq mul(const MatrixFq& a, const MatrixFq& b);
MatrixFq transpose(const MatrixFq& a);

inline MatrixFq operator+(const MatrixFq& a, const MatrixFq& b) { return add(a, b); }
inline MatrixFq operator-(const MatrixFq& a, const MatrixFq& b) { return sub(a, b); }
inline MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) { return mul(a, b); }
inline MatrixFq operator*(FieldElement s, const MatrixFq& a) { return scale(s, a); }

// Repeated multiplication; e >= 0, square matrices only.
MatrixFq power(const MatrixFq& a, std::uint64_t e);

int rank(const MatrixFq& m);
int rank_distance(const MatrixFq& a, const MatrixFq& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<MatrixFq> inverse(const MatrixFq& m);

// Subspace of GF(q)^ambient held as the nonzero rows of a reduced row-echelon
// form, so equal spaces have identical bases.
class SubspaceBasis {
 public:
  SubspaceBasis(FieldPtr field, int ambient);
  // Reduces the given rows (any number, possibly dependent).
  static SubspaceBasis span_of_rows(FieldPtr field, const Entries& rows);

  const FieldPtr& field() const noexcept { return field_; }
  int ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(rows_.rows()); }
  const Entries& vectors() const noexcept { return rows_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  // Membership of a length-`ambient` row vector.
  bool contains(const Entries& row_vector) const;
  bool contains_all(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& lhs, const SubspaceBasis& rhs) noexcept {
    // Eigen's == needs equal shapes; reduced bases are unique, so equal
    // spaces have equal dimensions.
    return lhs.ambient_ == rhs.ambient_ && lhs.rows_.rows() == rhs.rows_.rows() && lhs.rows_ == rhs.rows_;
  }

 private:
  FieldPtr field_;
  int ambient_;
  Entries rows_;
  std::vector<int> pivots_;
};

SubspaceBasis row_space(const MatrixFq& m);
SubspaceBasis column_space(const MatrixFq& m);

struct LineSpaces {
  SubspaceBasis rowspace;
  SubspaceBasis colspace;
};
LineSpaces line_spaces(const MatrixFq& m);

enum class SubspaceRelation { equal, first_in_second, second_in_first, incomparable };

struct SubspaceComparison {
  SubspaceRelation relation;
  int intersection_dim;
};

// Throws AmbientMismatch when the ambient dimensions differ.
SubspaceComparison subspace_relate(const SubspaceBasis& u, const SubspaceBasis& v);
SubspaceBasis subspace_sum(const SubspaceBasis& u, const SubspaceBasis& v);

// Product formula prod_{i<n}(q^n - q^i), saturating.
std::uint64_t gl_order(std::uint32_t q, int n) noexcept;

// Lazy enumeration of GL_n(GF(q)). Matrices are built row by row, each row
// ranging over the nonzero vectors in increasing encoded order (first
// coordinate most significant) and skipping those in the span of the rows
// above it. The resulting sequence is the lexicographic order of the
// row-major flattening restricted to invertible matrices.
//
// A single enumerator is a single-consumer cursor. Parallel searches
// partition by first row: the enumerator restricted to first-row codes in
// [first_row_begin, first_row_end) yields a contiguous block of the global
// order.
class GLEnumerator {
 public:
  // Throws SearchSpaceTooLarge when |GL_n| exceeds search_cap().
  GLEnumerator(FieldPtr field, int n);
  GLEnumerator(FieldPtr field, int n, std::uint64_t first_row_begin, std::uint64_t first_row_end);

  // Advances to the next matrix; false when exhausted.
  bool next(MatrixFq& out);
  std::uint64_t total() const noexcept { return gl_order(field_->q(), n_); }

 private:
  bool advance_row(int r);
  bool fill_from(int r);
  Entries vector_from_code(std::uint64_t code) const;

  FieldPtr field_;
  int n_;
  std::uint64_t vectors_;
  std::uint64_t first_begin_;
  std::uint64_t first_end_;
  std::vector<std::uint64_t> row_codes_;
  std::vector<SubspaceBasis> spans_;  // spans_[r] = span of rows 0..r-1
  Entries current_;
  bool started_ = false;
  bool done_ = false;
};

// Calls fn(A) for every A in GL_n order until fn returns false.
template <typename Fn>
void for_each_gl(const FieldPtr& field, int n, Fn&& fn) {
  GLEnumerator gl(field, n);
  MatrixFq a;
  while (gl.next(a)) {
    if (!fn(static_cast<const MatrixFq&>(a))) return;
  }
}

std::vector<MatrixFq> enumerate_gl(const FieldPtr& field, int n);

namespace detail {

// In-place reduced row-echelon form with leftmost-pivot, first-nonzero-row
// selection. Returns pivot columns.
std::vector<int> rref_in_place(const Field& f, Entries& m);
int rank_in_place(const Field& f, Entries& m);
void check_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace detail

}  // namespace rankext
