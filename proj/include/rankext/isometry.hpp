#pragma once

// Linear maps between rank-metric codes, isometry checks and Property 1
// (row/column space compatibility with a fixed pair A, B).

#include <optional>
#include <string_view>
#include <vector>

#include "rankext/code.hpp"

namespace rankext {

class CodeMap {
 public:
  // images[i] is the image of domain.generators()[i]. The codomain is the
  // span of the images. Rejects assignments that break a linear relation
  // among the generators and maps that are not injective.
  CodeMap(RankCode domain, std::vector<MatrixFq> images);
  // Same, with an explicit codomain that must contain every image.
  CodeMap(RankCode domain, std::vector<MatrixFq> images, const RankCode& codomain);

  const RankCode& domain() const noexcept { return domain_; }
  const RankCode& codomain() const noexcept { return codomain_; }
  const std::vector<MatrixFq>& images() const noexcept { return images_; }
  // Flattened images of the domain basis (dim x mn).
  const Entries& basis_images() const noexcept { return basis_images_; }
  MatrixFq basis_image(int index) const;

  // Throws NotInCode when c is not a domain codeword.
  MatrixFq apply(const MatrixFq& c) const;
  MatrixFq apply_coordinates(std::span<const FieldElement> coords) const;

 private:
  RankCode domain_;
  RankCode codomain_;
  std::vector<MatrixFq> images_;
  Entries basis_images_;
};

// First codeword (in enumeration order) whose rank changes under phi.
// Checking a basis alone is not enough: rank is not linear.
std::optional<MatrixFq> find_rank_violation(const CodeMap& phi);
bool is_isometry(const CodeMap& phi);

struct PropertyPWitness {
  MatrixFq A;
  MatrixFq B;
};

// rowsp(phi(C)) = rowsp(C B) and colsp(phi(C)) = colsp(A C) on every
// codeword when the domain is enumerable, on the basis otherwise.
bool verify_property_p(const CodeMap& phi, const MatrixFq& A, const MatrixFq& B);

// Exhaustive search over (A, B) in GL_m x GL_n, A outer and B inner, both in
// GL enumeration order; returns the first hit. The two conditions decouple
// (columns constrain only A, rows only B), so the first hit is the pair of
// the first admissible A and the first admissible B.
std::optional<PropertyPWitness> property_p_witness(const CodeMap& phi);

enum class RefutationKind { row_dimension, column_dimension, row_inclusion, column_inclusion };
std::string_view refutation_kind_name(RefutationKind kind) noexcept;

struct PropertyPRefutation {
  RefutationKind kind;
  // Code-level dimension mismatch (row_dimension / column_dimension).
  int domain_dim = 0;
  int image_dim = 0;
  // Codeword pair for the inclusion kinds: the line space of `smaller` lies
  // inside that of `larger`, while the images' spaces are not nested.
  std::optional<MatrixFq> smaller;
  std::optional<MatrixFq> larger;
};

// Cheap one-sided refutation of Property 1. Absence proves nothing.
std::optional<PropertyPRefutation> refute_property_p(const CodeMap& phi);

// Checks that a stated pair (c, c_prime) refutes Property 1 on the given side.
bool is_inclusion_refutation(const CodeMap& phi, const MatrixFq& c, const MatrixFq& c_prime, bool rows);

}  // namespace rankext
