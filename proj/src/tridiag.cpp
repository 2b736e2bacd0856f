#include "patterned/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "patterned/errors.hpp"

namespace patterned::dynamics {

double SymTridiagonal::trace() const { return std::accumulate(diag.begin(), diag.end(), 0.0); }

double SymTridiagonal::norm1() const {
  double best = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double col = std::abs(diag[i]);
    if (i > 0) col += std::abs(off[i - 1]);
    if (i < off.size()) col += std::abs(off[i]);
    best = std::max(best, col);
  }
  return best;
}

std::vector<double> SymTridiagonal::multiply(std::span<const double> x) const {
  const std::size_t n = diag.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += off[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

namespace {

void validate(const SymTridiagonal& h) {
  if (h.diag.empty()) throw InvalidInput("eigensystem of an empty matrix");
  if (h.off.size() + 1 != h.diag.size())
    throw InvalidInput(fmt::format("off-diagonal length {} does not match dimension {}", h.off.size(),
                                   h.diag.size()));
  for (double v : h.diag)
    if (!std::isfinite(v)) throw InvalidInput("non-finite diagonal entry");
  for (double v : h.off)
    if (!std::isfinite(v)) throw InvalidInput("non-finite off-diagonal entry");
}

} // namespace

Spectrum eigensystem(const SymTridiagonal& h, int max_sweeps) {
  validate(h);
  const std::size_t n = h.size();

  std::vector<double> d = h.diag;
  std::vector<double> e(n, 0.0);
  std::copy(h.off.begin(), h.off.end(), e.begin());

  // z[k][i]: component k of eigenvector i (columns are eigenvectors).
  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  double shift_total = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    // Find small subdiagonal element.
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > max_sweeps)
          throw NumericalFailure(fmt::format(
              "tridiagonal QL did not converge for eigenvalue {} after {} sweeps; diag=[{}] off=[{}]", l,
              max_sweeps, fmt::join(h.diag, ", "), fmt::join(h.off, ", ")));

        // Wilkinson-style implicit shift.
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double hh = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= hh;
        shift_total += hh;

        // Implicit QL transformation.
        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          hh = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = hh + s * (c * g + s * d[ii]);
          for (std::size_t k = 0; k < n; ++k) {
            hh = z[k][ii + 1];
            z[k][ii + 1] = s * z[k][ii] + c * hh;
            z[k][ii] = c * z[k][ii] - s * hh;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += shift_total;
    e[l] = 0.0;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  Spectrum out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  out.participation_ratios.reserve(n);
  for (std::size_t idx : order) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = z[k][idx];
    std::size_t big = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(v[k]) > std::abs(v[big]) + 1e-12) big = k;
    if (v[big] < 0)
      for (double& x : v) x = -x;
    out.eigenvalues.push_back(d[idx]);
    out.participation_ratios.push_back(participation_ratio(v));
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

double participation_ratio(std::span<const double> v) {
  if (v.empty()) throw InvalidInput("participation ratio of an empty vector");
  double norm2 = 0.0, quartic = 0.0;
  for (double x : v) {
    const double x2 = x * x;
    norm2 += x2;
    quartic += x2 * x2;
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
    throw InvalidInput(fmt::format("participation ratio needs a unit vector, |v| = {:.12g}", std::sqrt(norm2)));
  return 1.0 / quartic;
}

double residual_norm(const SymTridiagonal& h, double lambda, std::span<const double> v) {
  const auto hv = h.multiply(v);
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = hv[i] - lambda * v[i];
    acc += r * r;
  }
  return std::sqrt(acc);
}

double orthonormality_error(const std::vector<std::vector<double>>& vectors) {
  double worst = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const double dot =
          std::inner_product(vectors[i].begin(), vectors[i].end(), vectors[j].begin(), 0.0);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

} // namespace patterned::dynamics
