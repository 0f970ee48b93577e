#pragma once

#include <optional>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// Dense symmetric real matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  /// Throws Error(precondition) unless `values` is an exactly symmetric n x n array.
  SymMatrix(int n, std::vector<double> values);

  int n() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return a_[i * n_ + j]; }
  void set(int i, int j, double v) noexcept {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  const std::vector<double>& values() const noexcept { return a_; }

 private:
  int n_;
  std::vector<double> a_;
};

inline constexpr double kDefaultSolverTol = 1e-10;
inline constexpr int kDefaultMaxSweeps = 100;

/// A[v][w] / d. Throws Error(precondition) for a directed graph.
SymMatrix normalized_adjacency(const RegularMultigraph& g);

/// All eigenvalues by cyclic Jacobi rotations (row-major upper-triangle pivot
/// order), sweeping until the off-diagonal Frobenius norm drops below `tol`.
/// Sorted descending. Throws Error(solver_failure) after `max_sweeps`.
std::vector<double> sym_eigenvalues(const SymMatrix& m,
                                    double tol = kDefaultSolverTol,
                                    int max_sweeps = kDefaultMaxSweeps);

struct SpectrumResult {
  std::vector<double> t;       // descending
  std::vector<double> lambda;  // 1 - t, ascending
  int trivial_multiplicity = 0;
  // Extremes of t_2..t_n (one copy of the top eigenvalue removed); empty
  // for a single vertex.
  std::optional<double> nontrivial_max;
  std::optional<double> nontrivial_min;
  double tol = kDefaultSolverTol;

  /// More than one eigenvalue at 1: the graph is disconnected.
  bool disconnected() const noexcept { return trivial_multiplicity > 1; }
  /// Second smallest Laplacian eigenvalue, if n >= 2.
  std::optional<double> lambda2() const {
    if (lambda.size() < 2) return std::nullopt;
    return lambda[1];
  }
};

SpectrumResult spectrum(const RegularMultigraph& g, double tol = kDefaultSolverTol);

}  // namespace tcg
