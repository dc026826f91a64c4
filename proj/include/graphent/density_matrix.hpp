#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphent/state.hpp"

namespace graphent {

/// Dense d x d complex matrix, row-major, used for reduced states.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::size_t dimension);
  DensityMatrix(std::size_t dimension, std::vector<Complex> entries);

  /// I/d.
  static DensityMatrix maximally_mixed(std::size_t dimension);
  /// |v><v| for a (not necessarily normalized) vector v.
  static DensityMatrix projector(std::span<const Complex> v);

  std::size_t dimension() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  Complex trace() const;
  /// tr(rho^2), real part.
  double purity() const;
  /// Largest |rho_rc - conj(rho_cr)|.
  double hermiticity_error() const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Reduced state on `keep`; keep[k] becomes bit k of the reduced index.
/// Throws std::invalid_argument for an empty or repeated keep set and
/// std::out_of_range for a bad qubit index. At most 10 kept qubits.
DensityMatrix partial_trace(const PureState& state, std::span<const Vertex> keep);

/// sqrt(½ tr[(a-b)†(a-b)]). Throws std::invalid_argument on mismatched sizes.
double hs_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Eigenvalues of a Hermitian matrix in ascending order. Closed form for
/// d = 2; cyclic Jacobi on the real symmetric 2d x 2d embedding otherwise.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

/// -Σ λ ln λ with 0 ln 0 = 0. Throws std::domain_error if an eigenvalue is
/// below -1e-8.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace graphent
