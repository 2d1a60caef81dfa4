#pragma once

#include <cstddef>
#include <span>

namespace uihier::kernels {

// Dense kernels behind the recurrent scorer. Each has a serial reference
// implementation and an OpenMP variant that partitions independent output
// elements across threads, so both produce bit-identical results; the
// unqualified entry points dispatch on problem size. bench_kernels compares
// the two variants.

// y = W x + y0-less; W is row-major (rows x cols), x has cols entries.
void matvec_serial(std::span<const double> w, std::size_t rows, std::size_t cols,
                   std::span<const double> x, std::span<double> y);
void matvec_omp(std::span<const double> w, std::size_t rows, std::size_t cols,
                std::span<const double> x, std::span<double> y);
void matvec(std::span<const double> w, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y);

// dx += W^T dy; per-column accumulation, independent per output entry.
void matvec_t_acc_serial(std::span<const double> w, std::size_t rows, std::size_t cols,
                         std::span<const double> dy, std::span<double> dx);
void matvec_t_acc_omp(std::span<const double> w, std::size_t rows, std::size_t cols,
                      std::span<const double> dy, std::span<double> dx);
void matvec_t_acc(std::span<const double> w, std::size_t rows, std::size_t cols,
                  std::span<const double> dy, std::span<double> dx);

// dW += dy x^T; row i of dW owned by one thread.
void outer_acc_serial(std::span<const double> dy, std::span<const double> x,
                      std::span<double> dw);
void outer_acc_omp(std::span<const double> dy, std::span<const double> x,
                   std::span<double> dw);
void outer_acc(std::span<const double> dy, std::span<const double> x, std::span<double> dw);

double dot(std::span<const double> a, std::span<const double> b);

// flop count below which the serial path is always taken
inline constexpr std::size_t kParallelCutoff = 64 * 1024;

}  // namespace uihier::kernels
