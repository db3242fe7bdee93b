#include "coarsehh/algebra.hpp"
#include "coarsehh/error.hpp"

#include <map>

namespace coarsehh {

namespace {

SparseCoords normalized(std::map<Index, Scalar> acc, const Coefficients& field) {
  SparseCoords out;
  for (auto& [k, v] : acc) {
    Scalar r = field.normalize(v);
    if (r != 0) out.emplace_back(k, std::move(r));
  }
  return out;
}

}  // namespace

LinearCategory::LinearCategory(Coefficients field, std::vector<std::vector<std::size_t>> hom_dims)
    : field_(field), hom_dims_(std::move(hom_dims)) {
  const std::size_t m = hom_dims_.size();
  for (const auto& row : hom_dims_)
    if (row.size() != m) throw InvalidInput("hom dimension table must be square");
  composition_.resize(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) composition_[triple(i, j, k)].resize(hom_dims_[i][j] * hom_dims_[j][k]);
  identity_.resize(m);
}

void LinearCategory::set_compose(std::size_t i, std::size_t j, std::size_t k, std::size_t a, std::size_t b,
                                 SparseCoords c) {
  composition_[triple(i, j, k)][a * hom_dims_[j][k] + b] = std::move(c);
}

std::string LinearCategory::check_laws() const {
  const std::size_t m = object_count();
  auto compose_coords = [&](std::size_t i, std::size_t j, std::size_t k, const SparseCoords& x,
                            const SparseCoords& y) {
    std::map<Index, Scalar> acc;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (const auto& [c, cc] : compose(i, j, k, a, b)) acc[c] += ca * cb * cc;
    return normalized(std::move(acc), field_);
  };
  auto unit_vec = [](std::size_t a) { return SparseCoords{{static_cast<Index>(a), Scalar(1)}}; };

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < hom_dim(i, j); ++a) {
        if (compose_coords(i, i, j, identity(i), unit_vec(a)) != unit_vec(a))
          return "left unit law fails on Hom(" + std::to_string(j) + "->" + std::to_string(i) + ") basis " +
                 std::to_string(a);
        if (compose_coords(i, j, j, unit_vec(a), identity(j)) != unit_vec(a))
          return "right unit law fails on Hom(" + std::to_string(j) + "->" + std::to_string(i) + ") basis " +
                 std::to_string(a);
      }
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t a = 0; a < hom_dim(i, j); ++a)
            for (std::size_t b = 0; b < hom_dim(j, k); ++b)
              for (std::size_t c = 0; c < hom_dim(k, l); ++c) {
                const auto left = compose_coords(i, k, l, compose(i, j, k, a, b), unit_vec(c));
                const auto right = compose_coords(i, j, l, unit_vec(a), compose(j, k, l, b, c));
                if (left != right)
                  return "associativity fails on objects (" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + "," + std::to_string(l) + ")";
              }
    }
  return {};
}

void FiniteAlgebra::validate() const {
  if (structure.size() != dim * dim * dim || unit.size() != dim)
    throw InvalidInput("algebra structure constants have the wrong size");
  const std::string failure = as_category().check_laws();
  if (!failure.empty()) throw InvalidInput("algebra is not associative and unital: " + failure);
}

LinearCategory FiniteAlgebra::as_category() const {
  LinearCategory cat(field, {{dim}});
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      SparseCoords c;
      for (std::size_t k = 0; k < dim; ++k) {
        Scalar v = field.normalize(constant(a, b, k));
        if (v != 0) c.emplace_back(static_cast<Index>(k), std::move(v));
      }
      cat.set_compose(0, 0, 0, a, b, std::move(c));
    }
  SparseCoords u;
  for (std::size_t k = 0; k < dim; ++k) {
    Scalar v = field.normalize(unit[k]);
    if (v != 0) u.emplace_back(static_cast<Index>(k), std::move(v));
  }
  cat.set_identity(0, std::move(u));
  return cat;
}

}  // namespace coarsehh
