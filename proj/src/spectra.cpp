#include "tcg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tcg/error.hpp"

namespace tcg {

SymMatrix::SymMatrix(int n, std::vector<double> values)
    : n_(n), a_(std::move(values)) {
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::precondition, "matrix data has the wrong size");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (a_[i * n_ + j] != a_[j * n_ + i])
        throw Error(ErrorKind::precondition,
                    "matrix is not symmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
}

SymMatrix normalized_adjacency(const RegularMultigraph& g) {
  if (!is_undirected(g))
    throw Error(ErrorKind::precondition,
                "normalized adjacency needs an undirected graph");
  const int n = g.n();
  const double d = g.d();
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) values[i] = g.adjacency()[i] / d;
  return SymMatrix(n, std::move(values));
}

std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol,
                                    int max_sweeps) {
  if (!(tol > 0)) throw Error(ErrorKind::precondition, "solver tolerance must be > 0");
  const int n = m.n();
  std::vector<double> a = m.values();
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2 * s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (off_norm() < tol) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          at(r, p) = at(p, r) = new_rp;
          at(r, q) = at(q, r) = new_rq;
        }
      }
    }
  }
  if (!converged)
    throw Error(ErrorKind::solver_failure,
                "Jacobi iteration did not converge in " +
                    std::to_string(max_sweeps) + " sweeps");

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

SpectrumResult spectrum(const RegularMultigraph& g, double tol) {
  SpectrumResult r;
  r.tol = tol;
  r.t = sym_eigenvalues(normalized_adjacency(g), tol);
  r.lambda.reserve(r.t.size());
  for (auto it = r.t.rbegin(); it != r.t.rend(); ++it) r.lambda.push_back(1.0 - *it);
  std::sort(r.lambda.begin(), r.lambda.end());
  for (double x : r.t)
    if (std::abs(x - 1.0) <= tol) ++r.trivial_multiplicity;
  if (r.t.size() >= 2) {
    r.nontrivial_max = r.t[1];
    r.nontrivial_min = r.t.back();
  }
  return r;
}

}  // namespace tcg
