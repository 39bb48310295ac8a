#pragma once

// Extension of isometries to the ambient space GF(q)^{m x n}.
//
// An ambient isometry has the form M -> A M B, or M -> A M^t B when m = n.
// This module builds such pairs constructively for codes generated by
// elementary matrices (path-reduction chain + diagonal pair), checks the
// GF(2) rank-one case from a Property 1 witness, and decides extendability of
// arbitrary maps by exhaustive search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankext/isometry.hpp"
#include "rankext/paths.hpp"

namespace rankext {

// phi(E_h) = scalars[h] * E_h on the code spanned by E_{positions[h]}.
class ScalarAssignment {
 public:
  // Throws DuplicatePosition, ZeroScalar, DimensionMismatch, InvalidElement.
  ScalarAssignment(FieldPtr field, int m, int n, std::vector<Position> positions, std::vector<FieldElement> scalars);

  const FieldPtr& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<Position>& positions() const noexcept { return positions_; }
  const std::vector<FieldElement>& scalars() const noexcept { return scalars_; }
  std::optional<FieldElement> scalar_at(Position p) const;
  Support support() const { return Support(m_, n_, positions_); }

  // The assignment as a CodeMap on <E_h>.
  CodeMap to_code_map() const;

 private:
  FieldPtr field_;
  int m_;
  int n_;
  std::vector<Position> positions_;
  std::vector<FieldElement> scalars_;
};

class ExtensionWitness {
 public:
  // Verified constructors: throw WitnessInvalid unless the pair reproduces
  // the map on every domain basis element (hence on the whole code).
  static ExtensionWitness verified(const CodeMap& phi, MatrixFq A, MatrixFq B, bool transposed);
  static ExtensionWitness verified(const ScalarAssignment& assignment, MatrixFq A, MatrixFq B);
  static bool reproduces(const CodeMap& phi, const MatrixFq& A, const MatrixFq& B, bool transposed);

  const MatrixFq& A() const noexcept { return A_; }
  const MatrixFq& B() const noexcept { return B_; }
  bool transposed() const noexcept { return transposed_; }
  MatrixFq apply(const MatrixFq& c) const;

 private:
  ExtensionWitness(MatrixFq A, MatrixFq B, bool transposed)
      : A_(std::move(A)), B_(std::move(B)), transposed_(transposed) {}

  MatrixFq A_;
  MatrixFq B_;
  bool transposed_;
};

// M_a = sum_{h<k} coeffs[h] E_h + a E_k for a closed simple path of even
// length k; returns the unique a with rank(M_a) = k/2 - 1. `coeffs` holds
// the fixed coefficients on the path's first k-1 positions; a k-th entry is
// accepted and ignored since position k carries the unknown.
// Throws NotClosedSimple, ZeroScalar, NoDropValue.
FieldElement rank_drop_value(const FieldPtr& field, int m, int n, const Path& path,
                             std::span<const FieldElement> coeffs);

struct DiagonalPair {
  MatrixFq A;
  MatrixFq B;
};

// Diagonal A, B with a_i * b_j = s_h at every (i, j) = positions[h]. The
// support must be irreducible. Seeds a_i = 1 at the smallest unvisited
// position of each component, propagates along shared lines, and sets every
// untouched diagonal entry to 1. Throws NotIrreducible, ZeroScalar.
DiagonalPair build_diagonal_pair(const FieldPtr& field, std::span<const Position> positions,
                                 std::span<const FieldElement> scalars, int m, int n);

// Thrown by extend_elementary when the assignment is not an isometry.
class NotAnIsometryError : public Error {
 public:
  NotAnIsometryError(Position position, FieldElement assigned, FieldElement induced);
  Position position() const noexcept { return position_; }
  FieldElement assigned() const noexcept { return assigned_; }
  // Scalar a_i * b_j forced at the position by the reduced tail.
  FieldElement induced() const noexcept { return induced_; }

 private:
  Position position_;
  FieldElement assigned_;
  FieldElement induced_;
};

struct ElementaryExtension {
  ExtensionWitness witness;
  ReductionChain chain;
};

// Greedy chain of sum E_h, diagonal pair on its irreducible tail, then a
// check of A E_h B = alpha_h E_h on every position. Failure certifies that
// the assignment is no isometry (throws NotAnIsometryError).
ElementaryExtension extend_elementary(const ScalarAssignment& assignment);

// Over GF(2), a Property 1 witness of a map on a rank-one generated code is
// itself an extension. Throws WrongField, NotRankOneGenerated,
// WitnessInvalid, VerificationFailed.
ExtensionWitness extend_rank_one_f2(const CodeMap& phi, const PropertyPWitness& witness);

enum class OracleStrategy {
  automatic,   // full-rank-codeword pruning if possible, else solve for B per A
  exhaustive,  // plain double loop over GL_m x GL_n
};

struct OracleOptions {
  bool allow_transpose = false;
  OracleStrategy strategy = OracleStrategy::automatic;
};

struct OracleResult {
  std::optional<ExtensionWitness> witness;
  // "full-rank-codeword", "linear-solve" or "exhaustive" per branch searched.
  std::vector<std::string> strategies;
  std::uint64_t candidates = 0;
  bool transpose_searched = false;
};

// Exact extendability decision. The witness is the minimal one in
// (transposed, A, B) order with the non-transposed branch first; the
// transposed branch runs only when m = n and allowed.
OracleResult oracle_extension(const CodeMap& phi, const OracleOptions& options = {});

// Experimental: for every closed simple path of the support, the
// alternating product alpha_1 alpha_2^{-1} alpha_3 ... along the path is 1.
// Validated against extend_elementary by brute force only.
bool alternating_product_criterion(const ScalarAssignment& assignment);

}  // namespace rankext
