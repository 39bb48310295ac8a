#include "rankext/matrix.hpp"

#include <string>
#include <utility>

namespace rankext {

namespace detail {

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw Error(ErrorCode::FieldMismatch, "operands live over different fields");
}

std::vector<int> rref_in_place(const Field& f, Entries& m) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index sel = row;
    while (sel < rows && m(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const FieldElement scale = f.inv(m(row, col));
    if (scale != 1) {
      for (Eigen::Index c = col; c < cols; ++c) m(row, c) = f.mul(m(row, c), scale);
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row) continue;
      const FieldElement factor = m(r, col);
      if (factor == 0) continue;
      for (Eigen::Index c = col; c < cols; ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int rank_in_place(const Field& f, Entries& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index sel = row;
    while (sel < rows && m(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const FieldElement pivot_inv = f.inv(m(row, col));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      const FieldElement factor = f.mul(m(r, col), pivot_inv);
      for (Eigen::Index c = col; c < cols; ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace detail

namespace {

void check_shape(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

void check_same_shape(const MatrixFq& a, const MatrixFq& b) {
  detail::check_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

}  // namespace

MatrixFq::MatrixFq(FieldPtr field, int rows, int cols) : field_(std::move(field)) {
  check_shape(rows, cols);
  entries_ = Entries::Zero(rows, cols);
}

MatrixFq::MatrixFq(FieldPtr field, Entries entries) : field_(std::move(field)), entries_(std::move(entries)) {
  check_shape(static_cast<int>(entries_.rows()), static_cast<int>(entries_.cols()));
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    if (!field_->is_element(entries_.data()[i])) {
      throw Error(ErrorCode::InvalidElement, "entry outside 0..q-1");
    }
  }
}

MatrixFq::MatrixFq(FieldPtr field, std::initializer_list<std::initializer_list<std::uint32_t>> rows)
    : field_(std::move(field)) {
  const int m = static_cast<int>(rows.size());
  const int n = m > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  check_shape(m, n);
  entries_ = Entries::Zero(m, n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    int j = 0;
    for (std::uint32_t v : row) {
      if (!field_->is_element(v)) throw Error(ErrorCode::InvalidElement, "entry outside 0..q-1");
      entries_(i, j++) = static_cast<FieldElement>(v);
    }
    ++i;
  }
}

MatrixFq MatrixFq::identity(FieldPtr field, int n) {
  MatrixFq out(std::move(field), n, n);
  for (int i = 0; i < n; ++i) out.entries_(i, i) = 1;
  return out;
}

MatrixFq MatrixFq::elementary(FieldPtr field, int rows, int cols, int i, int j) {
  MatrixFq out(std::move(field), rows, cols);
  if (i < 0 || i >= rows || j < 0 || j >= cols) throw Error(ErrorCode::DimensionMismatch, "position out of range");
  out.entries_(i, j) = 1;
  return out;
}

MatrixFq MatrixFq::diagonal(FieldPtr field, std::span<const FieldElement> diag) {
  const int n = static_cast<int>(diag.size());
  MatrixFq out(std::move(field), n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, diag[i]);
  return out;
}

void MatrixFq::set(int i, int j, FieldElement value) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) throw Error(ErrorCode::DimensionMismatch, "position out of range");
  if (!field_->is_element(value)) throw Error(ErrorCode::InvalidElement, "entry outside 0..q-1");
  entries_(i, j) = value;
}

bool MatrixFq::is_zero() const noexcept { return (entries_.array() == 0).all(); }

Entries MatrixFq::flattened() const {
  Entries flat(1, entries_.size());
  for (Eigen::Index i = 0; i < entries_.size(); ++i) flat(0, i) = entries_.data()[i];
  return flat;
}

MatrixFq MatrixFq::unflatten(FieldPtr field, int rows, int cols, const Entries& flat_row, int row_index) {
  Entries e(rows, cols);
  for (int i = 0; i < rows * cols; ++i) e.data()[i] = flat_row(row_index, i);
  return MatrixFq(Trusted{}, std::move(field), std::move(e));
}

bool operator==(const MatrixFq& lhs, const MatrixFq& rhs) noexcept {
  return same_field(lhs.field_, rhs.field_) && lhs.entries_.rows() == rhs.entries_.rows() &&
         lhs.entries_.cols() == rhs.entries_.cols() && lhs.entries_ == rhs.entries_;
}

std::strong_ordering operator<=>(const MatrixFq& lhs, const MatrixFq& rhs) noexcept {
  if (auto c = lhs.rows() <=> rhs.rows(); c != 0) return c;
  if (auto c = lhs.cols() <=> rhs.cols(); c != 0) return c;
  for (Eigen::Index i = 0; i < lhs.entries_.size(); ++i) {
    if (auto c = lhs.entries_.data()[i] <=> rhs.entries_.data()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MatrixFq add(const MatrixFq& a, const MatrixFq& b) {
  check_same_shape(a, b);
  const Field& f = a.f();
  Entries out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = f.add(a.entries().data()[i], b.entries().data()[i]);
  return MatrixFq(MatrixFq::Trusted{}, a.field(), std::move(out));
}

MatrixFq sub(const MatrixFq& a, const MatrixFq& b) {
  check_same_shape(a, b);
  const Field& f = a.f();
  Entries out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = f.sub(a.entries().data()[i], b.entries().data()[i]);
  return MatrixFq(MatrixFq::Trusted{}, a.field(), std::move(out));
}

MatrixFq scale(FieldElement s, const MatrixFq& a) {
  const Field& f = a.f();
  if (!f.is_element(s)) throw Error(ErrorCode::InvalidElement, "scalar outside 0..q-1");
  Entries out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = f.mul(s, a.entries().data()[i]);
  return MatrixFq(MatrixFq::Trusted{}, a.field(), std::move(out));
}

MatrixFq mul(const MatrixFq& a, const MatrixFq& b) {
  detail::check_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  const Field& f = a.f();
  const Entries& x = a.entries();
  const Entries& y = b.entries();
  Entries out = Entries::Zero(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      const FieldElement s = x(i, l);
      if (s == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(s, y(l, j)));
      }
    }
  }
  return MatrixFq(MatrixFq::Trusted{}, a.field(), std::move(out));
}

MatrixFq transpose(const MatrixFq& a) {
  Entries t = a.entries().transpose();
  return MatrixFq(MatrixFq::Trusted{}, a.field(), std::move(t));
}

MatrixFq power(const MatrixFq& a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  MatrixFq result = MatrixFq::identity(a.field(), a.rows());
  MatrixFq base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

int rank(const MatrixFq& m) {
  Entries work = m.entries();
  return detail::rank_in_place(m.f(), work);
}

int rank_distance(const MatrixFq& a, const MatrixFq& b) { return rank(sub(a, b)); }

std::optional<MatrixFq> inverse(const MatrixFq& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const int n = m.rows();
  Entries aug = Entries::Zero(n, 2 * n);
  aug.leftCols(n) = m.entries();
  for (int i = 0; i < n; ++i) aug(i, n + i) = 1;
  const auto pivots = detail::rref_in_place(m.f(), aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Entries inv = aug.rightCols(n);
  return MatrixFq(MatrixFq::Trusted{}, m.field(), std::move(inv));
}

SubspaceBasis::SubspaceBasis(FieldPtr field, int ambient)
    : field_(std::move(field)), ambient_(ambient), rows_(0, ambient) {}

SubspaceBasis SubspaceBasis::span_of_rows(FieldPtr field, const Entries& rows) {
  SubspaceBasis out(std::move(field), static_cast<int>(rows.cols()));
  Entries work = rows;
  out.pivots_ = detail::rref_in_place(*out.field_, work);
  out.rows_ = work.topRows(static_cast<Eigen::Index>(out.pivots_.size()));
  return out;
}

bool SubspaceBasis::contains(const Entries& row_vector) const {
  if (row_vector.cols() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient");
  const Field& f = *field_;
  Entries v = row_vector;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const FieldElement c = v(0, pivots_[i]);
    if (c == 0) continue;
    for (int col = pivots_[i]; col < ambient_; ++col) {
      v(0, col) = f.sub(v(0, col), f.mul(c, rows_(static_cast<Eigen::Index>(i), col)));
    }
  }
  return (v.array() == 0).all();
}

bool SubspaceBasis::contains_all(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "ambient dimensions differ");
  for (Eigen::Index i = 0; i < other.rows_.rows(); ++i) {
    if (!contains(other.rows_.row(i))) return false;
  }
  return true;
}

SubspaceBasis row_space(const MatrixFq& m) { return SubspaceBasis::span_of_rows(m.field(), m.entries()); }

SubspaceBasis column_space(const MatrixFq& m) {
  return SubspaceBasis::span_of_rows(m.field(), Entries(m.entries().transpose()));
}

LineSpaces line_spaces(const MatrixFq& m) { return {row_space(m), column_space(m)}; }

SubspaceBasis subspace_sum(const SubspaceBasis& u, const SubspaceBasis& v) {
  if (u.ambient() != v.ambient()) throw Error(ErrorCode::AmbientMismatch, "ambient dimensions differ");
  detail::check_same_field(u.field(), v.field());
  Entries stacked(u.dim() + v.dim(), u.ambient());
  stacked.topRows(u.dim()) = u.vectors();
  stacked.bottomRows(v.dim()) = v.vectors();
  return SubspaceBasis::span_of_rows(u.field(), stacked);
}

SubspaceComparison subspace_relate(const SubspaceBasis& u, const SubspaceBasis& v) {
  const SubspaceBasis total = subspace_sum(u, v);
  const int inter = u.dim() + v.dim() - total.dim();
  SubspaceRelation rel = SubspaceRelation::incomparable;
  if (u == v) {
    rel = SubspaceRelation::equal;
  } else if (total.dim() == v.dim()) {
    rel = SubspaceRelation::first_in_second;
  } else if (total.dim() == u.dim()) {
    rel = SubspaceRelation::second_in_first;
  }
  return {rel, inter};
}

std::uint64_t gl_order(std::uint32_t q, int n) noexcept {
  const std::uint64_t qn = saturating_pow(q, static_cast<std::uint64_t>(n));
  std::uint64_t total = 1;
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    total = saturating_mul(total, qn - qi);
    qi = saturating_mul(qi, q);
  }
  return total;
}

GLEnumerator::GLEnumerator(FieldPtr field, int n)
    : GLEnumerator(field, n, 0, saturating_pow(field->q(), static_cast<std::uint64_t>(n))) {}

GLEnumerator::GLEnumerator(FieldPtr field, int n, std::uint64_t first_row_begin, std::uint64_t first_row_end)
    : field_(std::move(field)),
      n_(n),
      vectors_(saturating_pow(field_->q(), static_cast<std::uint64_t>(n))),
      first_begin_(first_row_begin),
      first_end_(std::min(first_row_end, vectors_)),
      row_codes_(static_cast<std::size_t>(n), 0),
      current_(Entries::Zero(n, n)) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "GL_n needs n >= 1");
  if (gl_order(field_->q(), n) > search_cap()) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "|GL_" + std::to_string(n) + "(GF(" + std::to_string(field_->q()) + "))| exceeds the search cap");
  }
  spans_.reserve(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) spans_.emplace_back(field_, n);
}

Entries GLEnumerator::vector_from_code(std::uint64_t code) const {
  Entries v(1, n_);
  const std::uint32_t q = field_->q();
  for (int c = n_ - 1; c >= 0; --c) {
    v(0, c) = static_cast<FieldElement>(code % q);
    code /= q;
  }
  return v;
}

bool GLEnumerator::advance_row(int r) {
  const std::uint64_t limit = r == 0 ? first_end_ : vectors_;
  for (std::uint64_t code = row_codes_[r] + 1; code < limit; ++code) {
    Entries v = vector_from_code(code);
    if (spans_[r].contains(v)) continue;
    row_codes_[r] = code;
    current_.row(r) = v;
    spans_[r + 1] = SubspaceBasis::span_of_rows(field_, current_.topRows(r + 1));
    return true;
  }
  return false;
}

bool GLEnumerator::fill_from(int r) {
  for (int row = r; row < n_; ++row) {
    // Start one before the first candidate; unsigned wrap-around gives 0.
    row_codes_[row] = (row == 0 ? first_begin_ : 0) - 1;
    if (!advance_row(row)) return false;
  }
  return true;
}

bool GLEnumerator::next(MatrixFq& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!fill_from(0)) {
      done_ = true;
      return false;
    }
  } else {
    int r = n_ - 1;
    while (r >= 0 && !advance_row(r)) --r;
    if (r < 0 || !fill_from(r + 1)) {
      done_ = true;
      return false;
    }
  }
  out = MatrixFq(MatrixFq::Trusted{}, field_, current_);
  return true;
}

std::vector<MatrixFq> enumerate_gl(const FieldPtr& field, int n) {
  std::vector<MatrixFq> out;
  out.reserve(static_cast<std::size_t>(gl_order(field->q(), n)));
  for_each_gl(field, n, [&](const MatrixFq& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace rankext
