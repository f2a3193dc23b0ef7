#include "sgn/spatial_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sgn {

std::vector<double> central_flux_diff(std::span<const double> F, double dx) {
  const std::size_t n = F.size();
  std::vector<double> out(n, 0.0);
  const double inv = 1.0 / (2.0 * dx);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (F[i + 1] - F[i - 1]) * inv;
  return out;
}

namespace {

inline double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

}  // namespace

FaceValues muscl_reconstruct(std::span<const double> v, double /*dx*/, bool limit) {
  const std::size_t n = v.size();
  FaceValues out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  if (n < 4) return out;
  // v_i' * dx / 2 for cells 1 .. n-2
  std::vector<double> half_jump(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double central = 0.25 * (v[i + 1] - v[i - 1]);
    half_jump[i] = limit ? 0.5 * minmod(v[i] - v[i - 1], v[i + 1] - v[i]) : central;
  }
  for (std::size_t f = 1; f + 2 < n; ++f) {
    out.minus[f] = v[f] + half_jump[f];
    out.plus[f] = v[f + 1] - half_jump[f + 1];
  }
  return out;
}

FaceValues piecewise_constant_faces(std::span<const double> v) {
  const std::size_t n = v.size();
  FaceValues out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t f = 0; f + 1 < n; ++f) {
    out.minus[f] = v[f];
    out.plus[f] = v[f + 1];
  }
  return out;
}

FaceValues reconstruct(std::span<const double> v, double dx, int order, bool limit) {
  return order >= 2 ? muscl_reconstruct(v, dx, limit) : piecewise_constant_faces(v);
}

namespace {

// Plain Thomas elimination on (a, b, c, d); throws on a vanishing pivot.
std::vector<double> thomas(std::span<const double> a, std::span<const double> b,
                           std::span<const double> c, std::span<const double> d) {
  const std::size_t n = b.size();
  std::vector<double> cp(n, 0.0), dp(n, 0.0), x(n, 0.0);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(a[i]) + std::abs(b[i]) + std::abs(c[i]));
  }
  const double tiny = 1e-14 * (scale > 0.0 ? scale : 1.0);
  double pivot = b[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) pivot = b[i] - a[i] * cp[i - 1];
    if (!(std::abs(pivot) > tiny)) {
      std::ostringstream msg;
      msg << "tridiagonal solve: zero pivot " << pivot << " in row " << i;
      throw Error(ErrorCode::SingularPivot, msg.str());
    }
    cp[i] = (i + 1 < n) ? c[i] / pivot : 0.0;
    dp[i] = (d[i] - (i > 0 ? a[i] * dp[i - 1] : 0.0)) / pivot;
  }
  x[n - 1] = dp[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
  return x;
}

}  // namespace

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
  const std::size_t n = sys.size();
  if (n == 0) return {};
  if (sys.lower.size() != n || sys.upper.size() != n || sys.rhs.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "tridiagonal system arrays differ in length");
  }
  if (!sys.periodic) {
    std::vector<double> a = sys.lower, c = sys.upper;
    a[0] = 0.0;
    c[n - 1] = 0.0;
    return thomas(a, sys.diag, c, sys.rhs);
  }
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "periodic tridiagonal systems need n >= 3");
  }
  // A = A' + u v^T with u = (gamma, 0, .., upper[n-1]), v = (1, 0, .., lower[0]/gamma)
  const double alpha = sys.lower[0];     // A[0][n-1]
  const double beta = sys.upper[n - 1];  // A[n-1][0]
  const double gamma = sys.diag[0] != 0.0 ? -sys.diag[0] : -1.0;
  std::vector<double> a = sys.lower, b = sys.diag, c = sys.upper;
  a[0] = 0.0;
  c[n - 1] = 0.0;
  b[0] -= gamma;
  b[n - 1] -= alpha * beta / gamma;
  const std::vector<double> y = thomas(a, b, c, sys.rhs);
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = beta;
  const std::vector<double> z = thomas(a, b, c, u);
  const double vy = y[0] + alpha / gamma * y[n - 1];
  const double vz = z[0] + alpha / gamma * z[n - 1];
  const double denom = 1.0 + vz;
  if (!(std::abs(denom) > 1e-12 * std::max(1.0, std::abs(vz)))) {
    throw Error(ErrorCode::SingularPivot,
                "periodic tridiagonal solve: matrix is singular (rank-one correction "
                "denominator vanishes)");
  }
  const double factor = vy / denom;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
  return x;
}

double tridiagonal_residual(const TridiagonalSystem& sys, std::span<const double> x) {
  const std::size_t n = sys.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ax = sys.diag[i] * x[i];
    if (i > 0) ax += sys.lower[i] * x[i - 1];
    else if (sys.periodic) ax += sys.lower[0] * x[n - 1];
    if (i + 1 < n) ax += sys.upper[i] * x[i + 1];
    else if (sys.periodic) ax += sys.upper[n - 1] * x[0];
    worst = std::max(worst, std::abs(ax - sys.rhs[i]));
  }
  return worst;
}

std::vector<double> solve_banded(const BandedSystem& sys) {
  const std::size_t n = sys.n;
  if (sys.band.size() != n * (sys.lower + sys.upper + 1) || sys.rhs.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "banded system storage has the wrong size");
  }
  if (n == 0) return {};
  // pivoting can push fill up to lower + upper above the diagonal
  const std::size_t kl = sys.lower;
  const std::size_t ku = sys.lower + sys.upper;
  const std::size_t width = kl + ku + 1;
  std::vector<double> a(n * width, 0.0);
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * width + j + kl - i]; };
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i >= kl ? i - kl : 0; j <= std::min(n - 1, i + sys.upper); ++j) {
      A(i, j) = sys.at(i, j);
      scale = std::max(scale, std::abs(A(i, j)));
    }
  }
  std::vector<double> b = sys.rhs;
  const double tiny = 1e-14 * (scale > 0.0 ? scale : 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t last_row = std::min(n - 1, k + kl);
    std::size_t piv = k;
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      if (std::abs(A(r, k)) > std::abs(A(piv, k))) piv = r;
    }
    if (!(std::abs(A(piv, k)) > tiny)) {
      std::ostringstream msg;
      msg << "banded solve: zero pivot in column " << k;
      throw Error(ErrorCode::SingularPivot, msg.str());
    }
    const std::size_t last_col = std::min(n - 1, k + ku);
    if (piv != k) {
      for (std::size_t j = k; j <= last_col; ++j) std::swap(A(k, j), A(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      const double f = A(r, k) / A(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j <= last_col; ++j) A(r, j) -= f * A(k, j);
      b[r] -= f * b[k];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double v = b[k];
    for (std::size_t j = k + 1; j <= std::min(n - 1, k + ku); ++j) v -= A(k, j) * x[j];
    x[k] = v / A(k, k);
  }
  return x;
}

double banded_residual(const BandedSystem& sys, std::span<const double> x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < sys.n; ++i) {
    double ax = 0.0;
    const std::size_t j0 = i >= sys.lower ? i - sys.lower : 0;
    for (std::size_t j = j0; j <= std::min(sys.n - 1, i + sys.upper); ++j) ax += sys.at(i, j) * x[j];
    worst = std::max(worst, std::abs(ax - sys.rhs[i]));
  }
  return worst;
}

}  // namespace sgn
