#pragma once

// Finite k-linear categories given by structure constants. This is the
// input of the cyclic nerve; a finite algebra is the one-object case.

#include "coarsehh/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coarsehh {

using SparseCoords = std::vector<std::pair<Index, Scalar>>;

/// Objects 0..m-1; Hom(j -> i) has a finite basis. Composition and identities
/// are stored as coordinates in those bases.
class LinearCategory {
 public:
  LinearCategory() = default;
  LinearCategory(Coefficients field, std::vector<std::vector<std::size_t>> hom_dims);

  const Coefficients& field() const { return field_; }
  std::size_t object_count() const { return hom_dims_.size(); }
  /// dim Hom(source -> target).
  std::size_t hom_dim(std::size_t target, std::size_t source) const { return hom_dims_[target][source]; }

  /// a in Hom(j -> i), b in Hom(k -> j); coordinates of a o b in Hom(k -> i).
  const SparseCoords& compose(std::size_t i, std::size_t j, std::size_t k, std::size_t a, std::size_t b) const {
    return composition_[triple(i, j, k)][a * hom_dims_[j][k] + b];
  }
  void set_compose(std::size_t i, std::size_t j, std::size_t k, std::size_t a, std::size_t b, SparseCoords c);

  const SparseCoords& identity(std::size_t i) const { return identity_[i]; }
  void set_identity(std::size_t i, SparseCoords c) { identity_[i] = std::move(c); }

  /// Associativity and unit laws on all basis triples; returns a description
  /// of the first failure, or an empty string.
  std::string check_laws() const;

 private:
  std::size_t triple(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t m = object_count();
    return (i * m + j) * m + k;
  }
  Coefficients field_ = Coefficients::rationals();
  std::vector<std::vector<std::size_t>> hom_dims_;
  std::vector<std::vector<SparseCoords>> composition_;
  std::vector<SparseCoords> identity_;
};

struct FiniteAlgebra {
  Coefficients field = Coefficients::rationals();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// e_a * e_b = sum_c structure[(a * dim + b) * dim + c] e_c
  std::vector<Scalar> structure;
  std::vector<Scalar> unit;

  Scalar constant(std::size_t a, std::size_t b, std::size_t c) const { return structure[(a * dim + b) * dim + c]; }
  /// Throws InvalidInput unless associative and unital.
  void validate() const;
  LinearCategory as_category() const;
};

}  // namespace coarsehh
