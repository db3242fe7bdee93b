#include "coarsehh/error.hpp"
#include "coarsehh/linalg.hpp"

namespace coarsehh {

HomologyResult homology_at(const Matrix& d_out, const Matrix& d_in, const Coefficients& coeffs, int degree) {
  if (d_out.cols() != d_in.rows())
    throw InvalidInput("dimension mismatch at degree " + std::to_string(degree) + ": d_out has " +
                       std::to_string(d_out.cols()) + " columns, d_in has " + std::to_string(d_in.rows()) +
                       " rows");
  if (!(d_out * d_in).reduced(coeffs).is_zero())
    throw InvalidInput("not a complex at degree " + std::to_string(degree));

  HomologyResult h;
  h.degree = degree;
  const std::size_t dim = d_out.cols();
  if (coeffs.is_field()) {
    const std::size_t r_out = rank(d_out, coeffs);
    const std::size_t r_in = rank(d_in, coeffs);
    h.betti = dim - r_out - r_in;
    return h;
  }
  const auto f_out = invariant_factors(d_out);
  const auto f_in = invariant_factors(d_in);
  h.betti = dim - f_out.size() - f_in.size();
  for (const auto& f : f_in)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

}  // namespace coarsehh
