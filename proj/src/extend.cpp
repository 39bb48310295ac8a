#include "rankext/extend.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankext {

namespace {

std::string show(Position p) { return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")"; }

MatrixFq oriented(const MatrixFq& c, bool transposed) { return transposed ? transpose(c) : c; }

// GL_n member minimizing the row-major flattening among the solutions of a
// linear system, enumerating the affine solution space.
struct LinearSystem {
  Entries reduced;  // RREF of [coefficients | rhs]
  std::vector<int> pivots;
  int unknowns = 0;
};

std::optional<LinearSystem> solve_system(const Field& f, Entries aug, int unknowns) {
  LinearSystem sys;
  sys.pivots = detail::rref_in_place(f, aug);
  if (!sys.pivots.empty() && sys.pivots.back() == unknowns) return std::nullopt;
  sys.reduced = std::move(aug);
  sys.unknowns = unknowns;
  return sys;
}

std::vector<int> free_columns(const LinearSystem& sys) {
  std::vector<int> out;
  std::size_t pi = 0;
  for (int c = 0; c < sys.unknowns; ++c) {
    if (pi < sys.pivots.size() && sys.pivots[pi] == c) {
      ++pi;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

ScalarAssignment::ScalarAssignment(FieldPtr field, int m, int n, std::vector<Position> positions,
                                   std::vector<FieldElement> scalars)
    : field_(std::move(field)), m_(m), n_(n), positions_(std::move(positions)), scalars_(std::move(scalars)) {
  if (m < 1 || n < 1) throw Error(ErrorCode::DimensionMismatch, "shape must be positive");
  if (positions_.size() != scalars_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "need exactly one scalar per position");
  }
  for (std::size_t h = 0; h < positions_.size(); ++h) {
    const Position p = positions_[h];
    if (p.row < 0 || p.row >= m || p.col < 0 || p.col >= n) {
      throw Error(ErrorCode::DimensionMismatch, "position " + show(p) + " outside the matrix");
    }
    if (!field_->is_element(scalars_[h])) throw Error(ErrorCode::InvalidElement, "scalar outside 0..q-1");
    if (scalars_[h] == 0) throw Error(ErrorCode::ZeroScalar, "scalar at " + show(p) + " is zero");
  }
  std::vector<Position> sorted = positions_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicatePosition, "positions must be distinct");
  }
}

std::optional<FieldElement> ScalarAssignment::scalar_at(Position p) const {
  for (std::size_t h = 0; h < positions_.size(); ++h) {
    if (positions_[h] == p) return scalars_[h];
  }
  return std::nullopt;
}

CodeMap ScalarAssignment::to_code_map() const {
  std::vector<MatrixFq> gens;
  std::vector<MatrixFq> images;
  for (std::size_t h = 0; h < positions_.size(); ++h) {
    MatrixFq e = MatrixFq::elementary(field_, m_, n_, positions_[h].row, positions_[h].col);
    images.push_back(scale(scalars_[h], e));
    gens.push_back(std::move(e));
  }
  return CodeMap(RankCode(field_, m_, n_, std::move(gens)), std::move(images));
}

bool ExtensionWitness::reproduces(const CodeMap& phi, const MatrixFq& A, const MatrixFq& B, bool transposed) {
  const RankCode& dom = phi.domain();
  const int m = dom.m();
  const int n = dom.n();
  if (transposed && m != n) return false;
  if (A.rows() != m || A.cols() != m || B.rows() != n || B.cols() != n) return false;
  for (int i = 0; i < dom.dim(); ++i) {
    if (!(mul(mul(A, oriented(dom.basis_element(i), transposed)), B) == phi.basis_image(i))) return false;
  }
  return inverse(A).has_value() && inverse(B).has_value();
}

ExtensionWitness ExtensionWitness::verified(const CodeMap& phi, MatrixFq A, MatrixFq B, bool transposed) {
  if (!reproduces(phi, A, B, transposed)) {
    throw Error(ErrorCode::WitnessInvalid, "the pair does not reproduce the map on the domain");
  }
  return ExtensionWitness(std::move(A), std::move(B), transposed);
}

ExtensionWitness ExtensionWitness::verified(const ScalarAssignment& assignment, MatrixFq A, MatrixFq B) {
  const int m = assignment.m();
  const int n = assignment.n();
  if (A.rows() != m || A.cols() != m || B.rows() != n || B.cols() != n || !inverse(A) || !inverse(B)) {
    throw Error(ErrorCode::WitnessInvalid, "witness matrices are not invertible of the right sizes");
  }
  for (std::size_t h = 0; h < assignment.positions().size(); ++h) {
    const Position p = assignment.positions()[h];
    const MatrixFq e = MatrixFq::elementary(assignment.field(), m, n, p.row, p.col);
    if (!(mul(mul(A, e), B) == scale(assignment.scalars()[h], e))) {
      throw Error(ErrorCode::WitnessInvalid, "the pair does not reproduce the scalar at " + show(p));
    }
  }
  return ExtensionWitness(std::move(A), std::move(B), false);
}

MatrixFq ExtensionWitness::apply(const MatrixFq& c) const { return mul(mul(A_, oriented(c, transposed_)), B_); }

FieldElement rank_drop_value(const FieldPtr& field, int m, int n, const Path& path,
                             std::span<const FieldElement> coeffs) {
  const Support on_path(m, n, path.positions);
  if (validate_path(on_path, path.positions).kind != PathKind::closed_simple) {
    throw Error(ErrorCode::NotClosedSimple, "the sequence is not a closed simple path");
  }
  const std::size_t k = path.length();
  if (coeffs.size() + 1 != k && coeffs.size() != k) {
    throw Error(ErrorCode::DimensionMismatch, "need k-1 (or k) coefficients for a path of length k");
  }
  MatrixFq base(field, m, n);
  for (std::size_t h = 0; h + 1 < k; ++h) {
    if (!field->is_element(coeffs[h])) throw Error(ErrorCode::InvalidElement, "coefficient outside 0..q-1");
    if (coeffs[h] == 0) throw Error(ErrorCode::ZeroScalar, "path coefficients must be nonzero");
    base.set(path.positions[h].row, path.positions[h].col, coeffs[h]);
  }
  const int full = static_cast<int>(k / 2);
  const Position last = path.positions.back();
  std::optional<FieldElement> drop;
  for (FieldElement a : field->elements()) {
    MatrixFq ma = base;
    ma.set(last.row, last.col, a);
    const int r = rank(ma);
    if (r == full - 1) {
      if (drop) throw Error(ErrorCode::NoDropValue, "more than one value drops the rank");
      drop = a;
    } else if (r != full) {
      throw Error(ErrorCode::NoDropValue, "rank outside {k/2 - 1, k/2}");
    }
  }
  if (!drop) throw Error(ErrorCode::NoDropValue, "no value drops the rank");
  return *drop;
}

DiagonalPair build_diagonal_pair(const FieldPtr& field, std::span<const Position> positions,
                                 std::span<const FieldElement> scalars, int m, int n) {
  if (positions.size() != scalars.size()) throw Error(ErrorCode::DimensionMismatch, "one scalar per position");
  for (FieldElement s : scalars) {
    if (s == 0) throw Error(ErrorCode::ZeroScalar, "scalars must be nonzero");
  }
  const Support supp(m, n, std::vector<Position>(positions.begin(), positions.end()));
  if (!support_graph_is_forest(supp)) {
    throw Error(ErrorCode::NotIrreducible, "the support contains a closed simple path");
  }
  const Field& f = *field;
  // Process in lexicographic position order.
  std::vector<std::size_t> order(positions.size());
  for (std::size_t h = 0; h < order.size(); ++h) order[h] = h;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return positions[x] < positions[y]; });

  std::vector<std::optional<FieldElement>> a(static_cast<std::size_t>(m));
  std::vector<std::optional<FieldElement>> b(static_cast<std::size_t>(n));
  std::vector<char> done(positions.size(), 0);
  for (std::size_t round = 0; round < positions.size(); ++round) {
    std::optional<std::size_t> pick;
    for (std::size_t h : order) {
      if (!done[h] && (a[positions[h].row] || b[positions[h].col])) {
        pick = h;
        break;
      }
    }
    if (pick) {
      const Position p = positions[*pick];
      const FieldElement s = scalars[*pick];
      if (a[p.row]) {
        b[p.col] = f.mul(f.inv(*a[p.row]), s);
      } else {
        a[p.row] = f.mul(f.inv(*b[p.col]), s);
      }
    } else {
      for (std::size_t h : order) {
        if (!done[h]) {
          pick = h;
          break;
        }
      }
      const Position p = positions[*pick];
      a[p.row] = 1;
      b[p.col] = scalars[*pick];
    }
    done[*pick] = 1;
  }
  std::vector<FieldElement> da(static_cast<std::size_t>(m));
  std::vector<FieldElement> db(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) da[i] = a[i].value_or(1);
  for (int j = 0; j < n; ++j) db[j] = b[j].value_or(1);
  for (std::size_t h = 0; h < positions.size(); ++h) {
    if (f.mul(da[positions[h].row], db[positions[h].col]) != scalars[h]) {
      throw std::logic_error("diagonal propagation broke a_i b_j = s on a forest support");
    }
  }
  return {MatrixFq::diagonal(field, da), MatrixFq::diagonal(field, db)};
}

NotAnIsometryError::NotAnIsometryError(Position position, FieldElement assigned, FieldElement induced)
    : Error(ErrorCode::NotAnIsometry,
            "assignment is not an isometry: position " + show(position) + " carries " + std::to_string(assigned) +
                " but the reduced tail forces " + std::to_string(induced)),
      position_(position),
      assigned_(assigned),
      induced_(induced) {}

ElementaryExtension extend_elementary(const ScalarAssignment& assignment) {
  const FieldPtr& field = assignment.field();
  const Field& f = *field;
  ReductionChain chain = reduction_chain(assignment.support());
  const Support& tail = chain.supports.back();
  std::vector<FieldElement> tail_scalars;
  tail_scalars.reserve(tail.size());
  for (const Position& p : tail.positions()) tail_scalars.push_back(*assignment.scalar_at(p));
  DiagonalPair pair = build_diagonal_pair(field, tail.positions(), tail_scalars, assignment.m(), assignment.n());

  for (std::size_t h = 0; h < assignment.positions().size(); ++h) {
    const Position p = assignment.positions()[h];
    const FieldElement induced = f.mul(pair.A(p.row, p.row), pair.B(p.col, p.col));
    if (induced != assignment.scalars()[h]) throw NotAnIsometryError(p, assignment.scalars()[h], induced);
  }
  return {ExtensionWitness::verified(assignment, std::move(pair.A), std::move(pair.B)), std::move(chain)};
}

ExtensionWitness extend_rank_one_f2(const CodeMap& phi, const PropertyPWitness& witness) {
  const RankCode& dom = phi.domain();
  if (dom.field()->q() != 2) throw Error(ErrorCode::WrongField, "the rank-one extension needs GF(2)");
  const auto basis = rank_one_basis(dom);
  if (!basis) throw Error(ErrorCode::NotRankOneGenerated, "the domain is not generated by rank-one codewords");
  if (!verify_property_p(phi, witness.A, witness.B)) {
    throw Error(ErrorCode::WitnessInvalid, "the pair does not satisfy Property 1");
  }
  for (const MatrixFq& c : *basis) {
    if (!(phi.apply(c) == mul(mul(witness.A, c), witness.B))) {
      throw Error(ErrorCode::VerificationFailed, "phi(C) != A C B on a rank-one generator");
    }
  }
  if (dom.size() <= kCodewordCap) {
    bool ok = true;
    dom.for_each_codeword([&](const Coordinates& coords, const MatrixFq& c) {
      ok = phi.apply_coordinates(coords) == mul(mul(witness.A, c), witness.B);
      return ok;
    });
    if (!ok) throw Error(ErrorCode::VerificationFailed, "phi(C) != A C B on some codeword");
  }
  return ExtensionWitness::verified(phi, witness.A, witness.B, false);
}

namespace {

std::optional<MatrixFq> full_rank_codeword(const RankCode& code) {
  if (code.m() != code.n()) return std::nullopt;
  for (int i = 0; i < code.dim(); ++i) {
    MatrixFq b = code.basis_element(i);
    if (rank(b) == code.n()) return b;
  }
  if (code.size() > kCodewordCap) return std::nullopt;
  std::optional<MatrixFq> found;
  code.for_each_codeword([&](const Coordinates&, const MatrixFq& c) {
    if (rank(c) == code.n()) {
      found = c;
      return false;
    }
    return true;
  });
  return found;
}

// Lexicographically smallest invertible solution B of A src(b_j) B = phi(b_j).
// Returns {found B, true} or {nullopt, true} when decided, {nullopt, false}
// when the solution space is too large to enumerate.
std::pair<std::optional<MatrixFq>, bool> smallest_b_by_solving(const CodeMap& phi, const MatrixFq& A,
                                                               bool transposed, std::uint64_t enumeration_limit) {
  const RankCode& dom = phi.domain();
  const FieldPtr& field = dom.field();
  const Field& f = *field;
  const int m = dom.m();
  const int n = dom.n();
  const int unknowns = n * n;
  Entries aug = Entries::Zero(static_cast<Eigen::Index>(dom.dim()) * m * n, unknowns + 1);
  Eigen::Index row = 0;
  for (int j = 0; j < dom.dim(); ++j) {
    const MatrixFq d = mul(A, oriented(dom.basis_element(j), transposed));
    const MatrixFq target = phi.basis_image(j);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c, ++row) {
        for (int l = 0; l < n; ++l) aug(row, l * n + c) = d(r, l);
        aug(row, unknowns) = target(r, c);
      }
    }
  }
  const auto sys = solve_system(f, std::move(aug), unknowns);
  if (!sys) return {std::nullopt, true};
  const std::vector<int> free = free_columns(*sys);
  const std::uint64_t count = saturating_pow(f.q(), free.size());
  if (count > enumeration_limit) return {std::nullopt, false};

  std::optional<MatrixFq> best;
  std::vector<FieldElement> t(free.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = free.size(); i > 0; --i) {
      t[i - 1] = static_cast<FieldElement>(rest % f.q());
      rest /= f.q();
    }
    Entries x = Entries::Zero(n, n);
    for (std::size_t i = 0; i < free.size(); ++i) x.data()[free[i]] = t[i];
    for (std::size_t i = 0; i < sys->pivots.size(); ++i) {
      const auto pr = static_cast<Eigen::Index>(i);
      FieldElement v = sys->reduced(pr, unknowns);
      for (std::size_t fi = 0; fi < free.size(); ++fi) {
        v = f.sub(v, f.mul(sys->reduced(pr, free[fi]), t[fi]));
      }
      x.data()[sys->pivots[i]] = v;
    }
    MatrixFq cand(MatrixFq::Trusted{}, field, std::move(x));
    if (best && !(cand < *best)) continue;
    if (rank(cand) == n) best = std::move(cand);
  }
  return {best, true};
}

}  // namespace

OracleResult oracle_extension(const CodeMap& phi, const OracleOptions& options) {
  const RankCode& dom = phi.domain();
  const FieldPtr& field = dom.field();
  const int m = dom.m();
  const int n = dom.n();
  const std::uint32_t q = field->q();
  const std::uint64_t gl_m = gl_order(q, m);
  const std::uint64_t gl_n = gl_order(q, n);
  OracleResult result;
  std::vector<bool> branches{false};
  if (options.allow_transpose && m == n) branches.push_back(true);

  auto require_product_cap = [&] {
    if (saturating_mul(saturating_mul(gl_m, gl_n), branches.size()) > search_cap()) {
      throw Error(ErrorCode::SearchSpaceTooLarge, "|GL_m| * |GL_n| exceeds the search cap");
    }
  };
  if (options.strategy == OracleStrategy::exhaustive) require_product_cap();

  for (bool transposed : branches) {
    // Only set when the non-transposed branch came up empty.
    result.transpose_searched = result.transpose_searched || transposed;
    if (options.strategy == OracleStrategy::exhaustive) {
      result.strategies.emplace_back("exhaustive");
      for_each_gl(field, m, [&](const MatrixFq& a) {
        for_each_gl(field, n, [&](const MatrixFq& b) {
          ++result.candidates;
          if (ExtensionWitness::reproduces(phi, a, b, transposed)) {
            result.witness = ExtensionWitness::verified(phi, a, b, transposed);
            return false;
          }
          return true;
        });
        return !result.witness;
      });
      if (result.witness) return result;
      continue;
    }

    if (const auto c0 = full_rank_codeword(dom)) {
      result.strategies.emplace_back("full-rank-codeword");
      const MatrixFq image = phi.apply(*c0);
      const MatrixFq source = oriented(*c0, transposed);
      for_each_gl(field, m, [&](const MatrixFq& a) {
        ++result.candidates;
        // phi(C0) = A src(C0) B fixes B.
        const MatrixFq b = mul(*inverse(mul(a, source)), image);
        if (ExtensionWitness::reproduces(phi, a, b, transposed)) {
          result.witness = ExtensionWitness::verified(phi, a, b, transposed);
          return false;
        }
        return true;
      });
      if (result.witness) return result;
      continue;
    }

    result.strategies.emplace_back("linear-solve");
    const std::uint64_t limit = std::max<std::uint64_t>(gl_n, 1U << 16);
    for_each_gl(field, m, [&](const MatrixFq& a) {
      ++result.candidates;
      auto [b, decided] = smallest_b_by_solving(phi, a, transposed, limit);
      if (!decided) {
        require_product_cap();
        for_each_gl(field, n, [&](const MatrixFq& cand) {
          ++result.candidates;
          if (ExtensionWitness::reproduces(phi, a, cand, transposed)) {
            b = cand;
            return false;
          }
          return true;
        });
      }
      if (b) {
        result.witness = ExtensionWitness::verified(phi, a, *b, transposed);
        return false;
      }
      return true;
    });
    if (result.witness) return result;
  }
  return result;
}

bool alternating_product_criterion(const ScalarAssignment& assignment) {
  const Field& f = *assignment.field();
  for (const Path& path : enumerate_closed_simple_paths(assignment.support())) {
    FieldElement product = 1;
    for (std::size_t h = 0; h < path.length(); ++h) {
      const FieldElement alpha = *assignment.scalar_at(path.positions[h]);
      product = h % 2 == 0 ? f.mul(product, alpha) : f.mul(product, f.inv(alpha));
    }
    if (product != 1) return false;
  }
  return true;
}

}  // namespace rankext
