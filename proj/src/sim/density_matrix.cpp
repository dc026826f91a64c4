#include "graphent/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace graphent {

namespace {

constexpr std::size_t kMaxKeptQubits = 10;

// Cyclic Jacobi sweeps on a dense real symmetric matrix (row-major, n x n).
// Returns the diagonal once the off-diagonal mass is negligible.
std::vector<double> jacobi_eigenvalues(std::vector<double> m, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * n + c]; };
  double scale = 0.0;
  for (double v : m) scale += v * v;
  const double threshold = 1e-30 * std::max(scale, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
    if (off <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  return diag;
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t dimension)
    : dim_(dimension), data_(dimension * dimension) {
  if (dimension == 0) throw std::invalid_argument("empty density matrix");
}

DensityMatrix::DensityMatrix(std::size_t dimension, std::vector<Complex> entries)
    : dim_(dimension), data_(std::move(entries)) {
  if (dimension == 0 || data_.size() != dimension * dimension) {
    throw std::invalid_argument("density matrix entries do not match dimension");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dimension) {
  DensityMatrix rho(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    rho(i, i) = 1.0 / static_cast<double>(dimension);
  }
  return rho;
}

DensityMatrix DensityMatrix::projector(std::span<const Complex> v) {
  DensityMatrix rho(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) rho(r, c) = v[r] * std::conj(v[c]);
  return rho;
}

Complex DensityMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::purity() const {
  // tr(rho^2) = Σ rho_rc rho_cr
  Complex t = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t += (*this)(r, c) * (*this)(c, r);
  return t.real();
}

double DensityMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

DensityMatrix partial_trace(const PureState& state,
                            std::span<const Vertex> keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace keeps no qubits");
  if (keep.size() > kMaxKeptQubits) {
    throw std::invalid_argument("partial trace keeps too many qubits");
  }
  std::size_t keep_mask = 0;
  for (Vertex v : keep) {
    if (v >= state.num_qubits()) {
      throw std::out_of_range("qubit " + std::to_string(v) + " out of range");
    }
    const std::size_t bit = std::size_t{1} << v;
    if (keep_mask & bit) throw std::invalid_argument("repeated qubit in keep set");
    keep_mask |= bit;
  }

  const std::size_t dim = std::size_t{1} << keep.size();
  // scatter[r]: the full-register bits that reduced index r selects.
  std::vector<std::size_t> scatter(dim, 0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t k = 0; k < keep.size(); ++k)
      if (r & (std::size_t{1} << k)) scatter[r] |= std::size_t{1} << keep[k];

  const auto amps = state.amplitudes();
  DensityMatrix rho(dim);
  for (std::size_t rest = 0; rest < amps.size(); ++rest) {
    if (rest & keep_mask) continue;
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex ar = amps[rest | scatter[r]];
      if (ar == Complex{}) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        rho(r, c) += ar * std::conj(amps[rest | scatter[c]]);
      }
    }
  }
  return rho;
}

double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("Hilbert-Schmidt distance of mismatched sizes");
  }
  // tr[D†D] is the squared Frobenius norm of D.
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dimension(); ++r)
    for (std::size_t c = 0; c < a.dimension(); ++c)
      sum += std::norm(a(r, c) - b(r, c));
  return std::sqrt(0.5 * sum);
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  const std::size_t d = rho.dimension();
  if (d == 1) return {rho(0, 0).real()};
  if (d == 2) {
    const double a = rho(0, 0).real();
    const double b = rho(1, 1).real();
    const double half_trace = 0.5 * (a + b);
    const double radius =
        std::sqrt(0.25 * (a - b) * (a - b) + std::norm(rho(0, 1)));
    return {half_trace - radius, half_trace + radius};
  }
  // H = A + iB  ->  [[A, -B], [B, A]]; each eigenvalue of H appears twice.
  const std::size_t n = 2 * d;
  std::vector<double> real(n * n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const Complex h = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      real[r * n + c] = h.real();
      real[(r + d) * n + (c + d)] = h.real();
      real[r * n + (c + d)] = -h.imag();
      real[(r + d) * n + c] = h.imag();
    }
  }
  std::vector<double> doubled = jacobi_eigenvalues(std::move(real), n);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> values(d);
  for (std::size_t i = 0; i < d; ++i) values[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return values;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda < -1e-8) {
      throw std::domain_error("negative eigenvalue " + std::to_string(lambda) +
                              ": not a density matrix");
    }
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  // An eigenvalue rounded just above 1 would leave a tiny negative total.
  return std::max(entropy, 0.0);
}

}  // namespace graphent
