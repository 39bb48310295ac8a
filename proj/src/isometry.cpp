#include "rankext/isometry.hpp"

#include <set>
#include <string>

namespace rankext {

namespace {

RankCode span_of(const RankCode& like, const std::vector<MatrixFq>& mats) {
  return RankCode(like.field(), like.m(), like.n(), mats);
}

// X * Y over the field for raw entry blocks.
Entries mul_entries(const Field& f, const Entries& x, const Entries& y) {
  Entries out = Entries::Zero(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index l = 0; l < x.cols(); ++l) {
      const FieldElement s = x(i, l);
      if (s == 0) continue;
      for (Eigen::Index j = 0; j < y.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(s, y(l, j)));
    }
  }
  return out;
}

std::vector<FieldElement> key_of(const SubspaceBasis& a, const SubspaceBasis& b) {
  std::vector<FieldElement> key;
  key.reserve(static_cast<std::size_t>(a.vectors().size() + b.vectors().size() + 2));
  key.push_back(static_cast<FieldElement>(a.dim()));
  key.insert(key.end(), a.vectors().data(), a.vectors().data() + a.vectors().size());
  key.push_back(static_cast<FieldElement>(b.dim()));
  key.insert(key.end(), b.vectors().data(), b.vectors().data() + b.vectors().size());
  return key;
}

// Distinct (space of C, space of phi(C)) pairs over nonzero codewords, with
// the first codeword realizing each pair.
struct SpacePair {
  SubspaceBasis source;
  SubspaceBasis image;
  MatrixFq representative;
};

struct SpacePairs {
  std::vector<SpacePair> rows;
  std::vector<SpacePair> cols;
};

SpacePairs collect_space_pairs(const CodeMap& phi) {
  SpacePairs out;
  std::set<std::vector<FieldElement>> seen_rows;
  std::set<std::vector<FieldElement>> seen_cols;
  phi.domain().for_each_codeword([&](const Coordinates& coords, const MatrixFq& c) {
    if (c.is_zero()) return true;
    const MatrixFq image = phi.apply_coordinates(coords);
    SubspaceBasis rs = row_space(c);
    SubspaceBasis rs_img = row_space(image);
    if (seen_rows.insert(key_of(rs, rs_img)).second) {
      out.rows.push_back({std::move(rs), std::move(rs_img), c});
    }
    SubspaceBasis cs = column_space(c);
    SubspaceBasis cs_img = column_space(image);
    if (seen_cols.insert(key_of(cs, cs_img)).second) {
      out.cols.push_back({std::move(cs), std::move(cs_img), c});
    }
    return true;
  });
  return out;
}

bool pairs_compatible(const Field& f, const FieldPtr& field, const std::vector<SpacePair>& pairs,
                      const Entries& right_factor) {
  for (const SpacePair& pair : pairs) {
    if (pair.source.dim() != pair.image.dim()) return false;
    const SubspaceBasis moved =
        SubspaceBasis::span_of_rows(field, mul_entries(f, pair.source.vectors(), right_factor));
    if (!(moved == pair.image)) return false;
  }
  return true;
}

}  // namespace

CodeMap::CodeMap(RankCode domain, std::vector<MatrixFq> images)
    : domain_(std::move(domain)), codomain_(span_of(domain_, images)), images_(std::move(images)) {
  const auto& gens = domain_.generators();
  if (gens.size() != images_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "need exactly one image per domain generator");
  }
  for (const MatrixFq& img : images_) {
    detail::check_same_field(domain_.field(), img.field());
    if (img.rows() != domain_.m() || img.cols() != domain_.n()) {
      throw Error(ErrorCode::DimensionMismatch, "image shape differs from the domain shape");
    }
  }
  // Row-reduce [coordinates | image] over the generators. The coordinate block
  // has rank dim, so its leading rows read off the image of each basis element;
  // any pivot in the image block is a violated linear relation.
  const int k = domain_.dim();
  const int mn = domain_.m() * domain_.n();
  Entries aug = Entries::Zero(static_cast<Eigen::Index>(gens.size()), k + mn);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto row = static_cast<Eigen::Index>(g);
    const Coordinates coords = *domain_.coordinates(gens[g]);
    for (int j = 0; j < k; ++j) aug(row, j) = coords[static_cast<std::size_t>(j)];
    aug.block(row, k, 1, mn) = images_[g].flattened();
  }
  const auto pivots = detail::rref_in_place(*domain_.field(), aug);
  if (static_cast<int>(pivots.size()) > k) {
    throw Error(ErrorCode::InconsistentAssignment, "images violate a linear relation among the generators");
  }
  basis_images_ = aug.block(0, k, k, mn);
  if (codomain_.dim() != k) {
    throw Error(ErrorCode::NotInjective, "the map sends a nonzero codeword to zero");
  }
}

CodeMap::CodeMap(RankCode domain, std::vector<MatrixFq> images, const RankCode& codomain)
    : CodeMap(std::move(domain), std::move(images)) {
  detail::check_same_field(domain_.field(), codomain.field());
  if (codomain.m() != domain_.m() || codomain.n() != domain_.n()) {
    throw Error(ErrorCode::DimensionMismatch, "codomain shape differs from the domain shape");
  }
  for (const MatrixFq& img : images_) {
    if (!codomain.contains(img)) throw Error(ErrorCode::ImageNotInCodomain, "an image lies outside the codomain");
  }
  codomain_ = codomain;
}

MatrixFq CodeMap::basis_image(int index) const {
  return MatrixFq::unflatten(domain_.field(), domain_.m(), domain_.n(), basis_images_, index);
}

MatrixFq CodeMap::apply_coordinates(std::span<const FieldElement> coords) const {
  if (static_cast<int>(coords.size()) != domain_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate count differs from dim");
  }
  const Field& f = *domain_.field();
  const int mn = domain_.m() * domain_.n();
  Entries flat = Entries::Zero(1, mn);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const FieldElement c = coords[i];
    if (c == 0) continue;
    for (int col = 0; col < mn; ++col) {
      flat(0, col) = f.add(flat(0, col), f.mul(c, basis_images_(static_cast<Eigen::Index>(i), col)));
    }
  }
  return MatrixFq::unflatten(domain_.field(), domain_.m(), domain_.n(), flat);
}

MatrixFq CodeMap::apply(const MatrixFq& c) const {
  const auto coords = domain_.coordinates(c);
  if (!coords) throw Error(ErrorCode::NotInCode, "matrix is not a codeword of the domain");
  return apply_coordinates(*coords);
}

std::optional<MatrixFq> find_rank_violation(const CodeMap& phi) {
  std::optional<MatrixFq> violation;
  phi.domain().for_each_codeword([&](const Coordinates& coords, const MatrixFq& c) {
    if (rank(c) != rank(phi.apply_coordinates(coords))) {
      violation = c;
      return false;
    }
    return true;
  });
  return violation;
}

bool is_isometry(const CodeMap& phi) { return !find_rank_violation(phi).has_value(); }

bool verify_property_p(const CodeMap& phi, const MatrixFq& A, const MatrixFq& B) {
  const RankCode& dom = phi.domain();
  if (A.rows() != dom.m() || A.cols() != dom.m() || B.rows() != dom.n() || B.cols() != dom.n()) {
    throw Error(ErrorCode::DimensionMismatch, "witness shapes do not match the code");
  }
  if (!inverse(A) || !inverse(B)) return false;
  auto holds = [&](const MatrixFq& c, const MatrixFq& image) {
    return row_space(image) == row_space(mul(c, B)) && column_space(image) == column_space(mul(A, c));
  };
  for (int i = 0; i < dom.dim(); ++i) {
    if (!holds(dom.basis_element(i), phi.basis_image(i))) return false;
  }
  if (dom.size() > kCodewordCap) return true;
  bool ok = true;
  dom.for_each_codeword([&](const Coordinates& coords, const MatrixFq& c) {
    ok = holds(c, phi.apply_coordinates(coords));
    return ok;
  });
  return ok;
}

std::optional<PropertyPWitness> property_p_witness(const CodeMap& phi) {
  const RankCode& dom = phi.domain();
  const FieldPtr& field = dom.field();
  const std::uint32_t q = field->q();
  if (saturating_mul(gl_order(q, dom.m()), gl_order(q, dom.n())) > search_cap()) {
    throw Error(ErrorCode::SearchSpaceTooLarge, "|GL_m| * |GL_n| exceeds the search cap");
  }
  const SpacePairs pairs = collect_space_pairs(phi);
  const Field& f = *field;

  // colsp basis rows are transposed columns, so A acts as v -> v A^t.
  std::optional<MatrixFq> a_found;
  for_each_gl(field, dom.m(), [&](const MatrixFq& a) {
    if (pairs_compatible(f, field, pairs.cols, transpose(a).entries())) {
      a_found = a;
      return false;
    }
    return true;
  });
  if (!a_found) return std::nullopt;

  std::optional<MatrixFq> b_found;
  for_each_gl(field, dom.n(), [&](const MatrixFq& b) {
    if (pairs_compatible(f, field, pairs.rows, b.entries())) {
      b_found = b;
      return false;
    }
    return true;
  });
  if (!b_found) return std::nullopt;
  return PropertyPWitness{*a_found, *b_found};
}

std::string_view refutation_kind_name(RefutationKind kind) noexcept {
  switch (kind) {
    case RefutationKind::row_dimension: return "row_dimension";
    case RefutationKind::column_dimension: return "column_dimension";
    case RefutationKind::row_inclusion: return "row_inclusion";
    case RefutationKind::column_inclusion: return "column_inclusion";
  }
  return "unknown";
}

std::optional<PropertyPRefutation> refute_property_p(const CodeMap& phi) {
  const RankCode image_code = span_of(phi.domain(), phi.images());
  const LineSpaces dom_spaces = code_line_spaces(phi.domain());
  const LineSpaces img_spaces = code_line_spaces(image_code);
  if (dom_spaces.rowspace.dim() != img_spaces.rowspace.dim()) {
    return PropertyPRefutation{RefutationKind::row_dimension, dom_spaces.rowspace.dim(),
                               img_spaces.rowspace.dim(), std::nullopt, std::nullopt};
  }
  if (dom_spaces.colspace.dim() != img_spaces.colspace.dim()) {
    return PropertyPRefutation{RefutationKind::column_dimension, dom_spaces.colspace.dim(),
                               img_spaces.colspace.dim(), std::nullopt, std::nullopt};
  }

  const SpacePairs pairs = collect_space_pairs(phi);
  auto search = [](const std::vector<SpacePair>& list, RefutationKind kind) -> std::optional<PropertyPRefutation> {
    if (saturating_mul(list.size(), list.size()) > search_cap()) {
      throw Error(ErrorCode::CodeTooLarge, "too many distinct space pairs for the inclusion search");
    }
    for (const SpacePair& small : list) {
      for (const SpacePair& large : list) {
        if (&small == &large) continue;
        if (large.source.contains_all(small.source) && !large.image.contains_all(small.image)) {
          return PropertyPRefutation{kind, 0, 0, small.representative, large.representative};
        }
      }
    }
    return std::nullopt;
  };
  if (auto r = search(pairs.rows, RefutationKind::row_inclusion)) return r;
  return search(pairs.cols, RefutationKind::column_inclusion);
}

bool is_inclusion_refutation(const CodeMap& phi, const MatrixFq& c, const MatrixFq& c_prime, bool rows) {
  const MatrixFq img = phi.apply(c);
  const MatrixFq img_prime = phi.apply(c_prime);
  if (rows) {
    return row_space(c_prime).contains_all(row_space(c)) && !row_space(img_prime).contains_all(row_space(img));
  }
  return column_space(c_prime).contains_all(column_space(c)) &&
         !column_space(img_prime).contains_all(column_space(img));
}

}  // namespace rankext
