#include "bpv/kernels.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace bpv::kernels {

namespace {

inline void arakawa_row(const Grid& g, const double* a, const double* b, double* out, int j,
                        double inv) {
  const int nx = g.nx(), ny = g.ny();
  const int jn = (j + 1) % ny, js = (j + ny - 1) % ny;
  const double* rows_a[3] = {a + static_cast<std::size_t>(js) * nx, a + static_cast<std::size_t>(j) * nx,
                             a + static_cast<std::size_t>(jn) * nx};
  const double* rows_b[3] = {b + static_cast<std::size_t>(js) * nx, b + static_cast<std::size_t>(j) * nx,
                             b + static_cast<std::size_t>(jn) * nx};
  for (int i = 0; i < nx; ++i) {
    const int col[3] = {(i + nx - 1) % nx, i, (i + 1) % nx};
    auto av = [&](int di, int dj) { return rows_a[dj + 1][col[di + 1]]; };
    auto bv = [&](int di, int dj) { return rows_b[dj + 1][col[di + 1]]; };
    out[static_cast<std::size_t>(j) * nx + i] = arakawa_stencil_sum(av, bv) * inv;
  }
}

inline double row_sum(const double* v, int nx) {
  double s = 0.0;
  for (int i = 0; i < nx; ++i) s += v[i];
  return s;
}

inline double row_dot(const double* a, const double* b, int nx) {
  double s = 0.0;
  for (int i = 0; i < nx; ++i) s += a[i] * b[i];
  return s;
}

double ordered_total(const std::vector<double>& partial) {
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

}  // namespace

void arakawa_jacobian(const Grid& g, const double* a, const double* b, double* out) {
  const double inv = 1.0 / (12.0 * g.dx() * g.dy());
  const int ny = g.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) arakawa_row(g, a, b, out, j, inv);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

void scale(double s, std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) y[k] *= s;
}

double sum(const Grid& g, std::span<const double> v) {
  std::vector<double> partial(g.ny());
  const int nx = g.nx(), ny = g.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) partial[j] = row_sum(v.data() + static_cast<std::size_t>(j) * nx, nx);
  return ordered_total(partial);
}

double dot(const Grid& g, std::span<const double> a, std::span<const double> b) {
  std::vector<double> partial(g.ny());
  const int nx = g.nx(), ny = g.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) {
    const std::size_t off = static_cast<std::size_t>(j) * nx;
    partial[j] = row_dot(a.data() + off, b.data() + off, nx);
  }
  return ordered_total(partial);
}

namespace reference {

void arakawa_jacobian(const Grid& g, const double* a, const double* b, double* out) {
  const int nx = g.nx(), ny = g.ny();
  const double inv = 1.0 / (12.0 * g.dx() * g.dy());
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      auto at = [&](const double* f, int di, int dj) {
        const int ii = (i + di + nx) % nx, jj = (j + dj + ny) % ny;
        return f[static_cast<std::size_t>(jj) * nx + ii];
      };
      auto av = [&](int di, int dj) { return at(a, di, dj); };
      auto bv = [&](int di, int dj) { return at(b, di, dj); };
      out[static_cast<std::size_t>(j) * nx + i] = arakawa_stencil_sum(av, bv) * inv;
    }
  }
}

double sum(const Grid& g, std::span<const double> v) {
  double total = 0.0;
  for (int j = 0; j < g.ny(); ++j) total += row_sum(v.data() + static_cast<std::size_t>(j) * g.nx(), g.nx());
  return total;
}

double dot(const Grid& g, std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    const std::size_t off = static_cast<std::size_t>(j) * g.nx();
    total += row_dot(a.data() + off, b.data() + off, g.nx());
  }
  return total;
}

}  // namespace reference

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

ThreadCountScope::ThreadCountScope(int n) : previous_(max_threads()) {
#if defined(_OPENMP)
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

ThreadCountScope::~ThreadCountScope() {
#if defined(_OPENMP)
  omp_set_num_threads(previous_);
#endif
}

}  // namespace bpv::kernels
