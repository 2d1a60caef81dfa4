#include "uihier/kernels.hpp"

#include <cassert>

namespace uihier::kernels {

void matvec_serial(std::span<const double> w, std::size_t rows, std::size_t cols,
                   std::span<const double> x, std::span<double> y) {
  assert(w.size() == rows * cols && x.size() == cols && y.size() == rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* wr = w.data() + i * cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += wr[j] * x[j];
    y[i] = acc;
  }
}

void matvec_omp(std::span<const double> w, std::size_t rows, std::size_t cols,
                std::span<const double> x, std::span<double> y) {
  assert(w.size() == rows * cols && x.size() == cols && y.size() == rows);
  const double* wd = w.data();
  const double* xd = x.data();
  double* yd = y.data();
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(rows); ++i) {
    const double* wr = wd + static_cast<std::size_t>(i) * cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += wr[j] * xd[j];
    yd[i] = acc;
  }
}

void matvec(std::span<const double> w, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y) {
  if (rows * cols >= kParallelCutoff)
    matvec_omp(w, rows, cols, x, y);
  else
    matvec_serial(w, rows, cols, x, y);
}

void matvec_t_acc_serial(std::span<const double> w, std::size_t rows, std::size_t cols,
                         std::span<const double> dy, std::span<double> dx) {
  assert(w.size() == rows * cols && dy.size() == rows && dx.size() == cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) acc += w[i * cols + j] * dy[i];
    dx[j] += acc;
  }
}

void matvec_t_acc_omp(std::span<const double> w, std::size_t rows, std::size_t cols,
                      std::span<const double> dy, std::span<double> dx) {
  assert(w.size() == rows * cols && dy.size() == rows && dx.size() == cols);
  const double* wd = w.data();
  const double* dyd = dy.data();
  double* dxd = dx.data();
#pragma omp parallel for schedule(static)
  for (long j = 0; j < static_cast<long>(cols); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) acc += wd[i * cols + j] * dyd[i];
    dxd[j] += acc;
  }
}

void matvec_t_acc(std::span<const double> w, std::size_t rows, std::size_t cols,
                  std::span<const double> dy, std::span<double> dx) {
  if (rows * cols >= kParallelCutoff)
    matvec_t_acc_omp(w, rows, cols, dy, dx);
  else
    matvec_t_acc_serial(w, rows, cols, dy, dx);
}

void outer_acc_serial(std::span<const double> dy, std::span<const double> x,
                      std::span<double> dw) {
  assert(dw.size() == dy.size() * x.size());
  for (std::size_t i = 0; i < dy.size(); ++i) {
    double* dwr = dw.data() + i * x.size();
    const double d = dy[i];
    for (std::size_t j = 0; j < x.size(); ++j) dwr[j] += d * x[j];
  }
}

void outer_acc_omp(std::span<const double> dy, std::span<const double> x,
                   std::span<double> dw) {
  assert(dw.size() == dy.size() * x.size());
  const double* dyd = dy.data();
  const double* xd = x.data();
  double* dwd = dw.data();
  const std::size_t cols = x.size();
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(dy.size()); ++i) {
    double* dwr = dwd + static_cast<std::size_t>(i) * cols;
    const double d = dyd[i];
    for (std::size_t j = 0; j < cols; ++j) dwr[j] += d * xd[j];
  }
}

void outer_acc(std::span<const double> dy, std::span<const double> x, std::span<double> dw) {
  if (dw.size() >= kParallelCutoff)
    outer_acc_omp(dy, x, dw);
  else
    outer_acc_serial(dy, x, dw);
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace uihier::kernels
