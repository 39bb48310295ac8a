#include "rankext/code.hpp"

#include <string>

namespace rankext {

RankCode::RankCode(FieldPtr field, int m, int n, std::vector<MatrixFq> generators)
    : field_(std::move(field)), m_(m), n_(n), generators_(std::move(generators)) {
  if (m < 1 || n < 1) throw Error(ErrorCode::DimensionMismatch, "code shape must be positive");
  Entries stacked(static_cast<Eigen::Index>(generators_.size()), m * n);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const MatrixFq& gen = generators_[g];
    detail::check_same_field(field_, gen.field());
    if (gen.rows() != m || gen.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + std::to_string(g) + " is not " + std::to_string(m) + "x" + std::to_string(n));
    }
    stacked.row(static_cast<Eigen::Index>(g)) = gen.flattened();
  }
  pivots_ = detail::rref_in_place(*field_, stacked);
  basis_ = stacked.topRows(static_cast<Eigen::Index>(pivots_.size()));
}

MatrixFq RankCode::basis_element(int index) const { return MatrixFq::unflatten(field_, m_, n_, basis_, index); }

std::vector<MatrixFq> RankCode::basis() const {
  std::vector<MatrixFq> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out.push_back(basis_element(i));
  return out;
}

std::optional<Coordinates> RankCode::coordinates(const MatrixFq& m) const {
  detail::check_same_field(field_, m.field());
  if (m.rows() != m_ || m.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix shape differs from code");
  const Field& f = *field_;
  Entries v = m.flattened();
  Coordinates coords(pivots_.size(), 0);
  // Reduced echelon basis: the coordinate on basis row i is the entry at its pivot.
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const FieldElement c = v(0, pivots_[i]);
    coords[i] = c;
    if (c == 0) continue;
    for (int col = pivots_[i]; col < m_ * n_; ++col) {
      v(0, col) = f.sub(v(0, col), f.mul(c, basis_(static_cast<Eigen::Index>(i), col)));
    }
  }
  if (!(v.array() == 0).all()) return std::nullopt;
  return coords;
}

MatrixFq RankCode::combine(std::span<const FieldElement> coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate count differs from dim");
  const Field& f = *field_;
  Entries flat = Entries::Zero(1, m_ * n_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const FieldElement c = coords[i];
    if (c == 0) continue;
    for (int col = 0; col < m_ * n_; ++col) {
      flat(0, col) = f.add(flat(0, col), f.mul(c, basis_(static_cast<Eigen::Index>(i), col)));
    }
  }
  return MatrixFq::unflatten(field_, m_, n_, flat);
}

std::uint64_t RankCode::size() const noexcept { return saturating_pow(field_->q(), static_cast<std::uint64_t>(dim())); }

void RankCode::for_each_codeword(const std::function<bool(const Coordinates&, const MatrixFq&)>& fn) const {
  if (size() > kCodewordCap) {
    throw Error(ErrorCode::CodeTooLarge, "code has more than 10^6 codewords");
  }
  const std::uint32_t q = field_->q();
  const int k = dim();
  Coordinates coords(static_cast<std::size_t>(k), 0);
  const int mn = m_ * n_;
  const Field& f = *field_;
  Entries flat = Entries::Zero(1, mn);
  while (true) {
    if (!fn(coords, MatrixFq::unflatten(field_, m_, n_, flat))) return;
    // Odometer on coordinates, updating the flattened word incrementally.
    // Element codes are not integers mod q in extension fields, so each
    // step adds (new - old) times the basis row.
    int pos = k - 1;
    while (pos >= 0) {
      const auto i = static_cast<Eigen::Index>(pos);
      const FieldElement old = coords[pos];
      const bool wrap = old + 1u >= q;
      coords[pos] = wrap ? 0 : static_cast<FieldElement>(old + 1);
      const FieldElement delta = f.sub(coords[pos], old);
      for (int col = 0; col < mn; ++col) flat(0, col) = f.add(flat(0, col), f.mul(delta, basis_(i, col)));
      if (!wrap) break;
      --pos;
    }
    if (pos < 0) return;
  }
}

std::vector<MatrixFq> RankCode::codewords() const {
  std::vector<MatrixFq> out;
  for_each_codeword([&](const Coordinates&, const MatrixFq& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

int min_distance(const RankCode& code) {
  if (code.dim() == 0) throw Error(ErrorCode::ZeroCode, "minimum distance of the zero code is undefined");
  int best = std::min(code.m(), code.n());
  code.for_each_codeword([&](const Coordinates&, const MatrixFq& c) {
    if (c.is_zero()) return true;
    best = std::min(best, rank(c));
    return best > 1;
  });
  return best;
}

LineSpaces code_line_spaces(const RankCode& code) {
  const int k = code.dim();
  const int m = code.m();
  const int n = code.n();
  Entries rows(static_cast<Eigen::Index>(k) * m, n);
  Entries cols(static_cast<Eigen::Index>(k) * n, m);
  for (int b = 0; b < k; ++b) {
    const MatrixFq e = code.basis_element(b);
    rows.middleRows(static_cast<Eigen::Index>(b) * m, m) = e.entries();
    cols.middleRows(static_cast<Eigen::Index>(b) * n, n) = e.entries().transpose();
  }
  return {SubspaceBasis::span_of_rows(code.field(), rows), SubspaceBasis::span_of_rows(code.field(), cols)};
}

std::optional<std::vector<MatrixFq>> rank_one_basis(const RankCode& code) {
  const int k = code.dim();
  std::vector<MatrixFq> chosen;
  if (k == 0) return chosen;
  const int mn = code.m() * code.n();
  SubspaceBasis span(code.field(), mn);
  auto consider = [&](const MatrixFq& c) {
    if (rank(c) != 1) return;
    const Entries flat = c.flattened();
    if (span.contains(flat)) return;
    chosen.push_back(c);
    Entries stacked(span.dim() + 1, mn);
    stacked.topRows(span.dim()) = span.vectors();
    stacked.bottomRows(1) = flat;
    span = SubspaceBasis::span_of_rows(code.field(), stacked);
  };
  for (const MatrixFq& g : code.generators()) {
    if (static_cast<int>(chosen.size()) == k) break;
    consider(g);
  }
  if (static_cast<int>(chosen.size()) < k) {
    code.for_each_codeword([&](const Coordinates&, const MatrixFq& c) {
      consider(c);
      return static_cast<int>(chosen.size()) < k;
    });
  }
  if (static_cast<int>(chosen.size()) < k) return std::nullopt;
  return chosen;
}

}  // namespace rankext
