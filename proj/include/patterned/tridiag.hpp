#pragma once

// Real symmetric tridiagonal matrices and their full eigendecomposition.

#include <cstddef>
#include <span>
#include <vector>

namespace patterned::dynamics {

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off; // off[i] couples i and i+1; size = diag.size() - 1

  std::size_t size() const { return diag.size(); }
  double trace() const;
  /// Max absolute column sum.
  double norm1() const;
  /// y = H x
  std::vector<double> multiply(std::span<const double> x) const;
};

struct Spectrum {
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // eigenvectors[j] pairs with eigenvalues[j]
  std::vector<double> participation_ratios;
};

/// Implicit-shift QL (tql2 lineage). Eigenvectors are orthonormal and
/// sign-normalised so their largest-magnitude entry is positive.
/// Throws NumericalFailure (message echoes the matrix) when an eigenvalue
/// does not converge within max_sweeps QL sweeps.
Spectrum eigensystem(const SymTridiagonal& h, int max_sweeps = 60);

/// 1 / sum v_i^4 for a unit vector. Throws InvalidInput if |v| differs from 1
/// by more than 1e-8.
double participation_ratio(std::span<const double> v);

/// ||H v - lambda v||_2
double residual_norm(const SymTridiagonal& h, double lambda, std::span<const double> v);

/// max_{i,j} |<v_i, v_j> - delta_ij|
double orthonormality_error(const std::vector<std::vector<double>>& vectors);

} // namespace patterned::dynamics
