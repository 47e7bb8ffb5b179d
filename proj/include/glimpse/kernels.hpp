#pragma once

#include <cmath>
#include <cstddef>

// Dense kernels behind the autodiff primitives. Every kernel has a serial
// reference implementation and an OpenMP one; both perform the identical
// per-element arithmetic (parallelism only across independent outputs), so
// results are bit-identical and the serial build stays the test oracle.
namespace glimpse::kernels {

// Global worker count. 1 selects the serial reference path.
void set_jobs(int jobs);
int jobs();

namespace serial {
void matvec(const double* a, const double* x, double* y, int m, int k, bool accumulate);
void matvec_transposed(const double* a, const double* adj, double* dx, int m, int k);
void outer_accumulate(const double* u, const double* v, double* a, int m, int k);
void matmul(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);
void matmul_at(const double* a, const double* c, double* b, int m, int k, int n);
void matmul_bt(const double* c, const double* b, double* a, int m, int k, int n);
void map_sigmoid(const double* x, double* y, std::size_t n);
void map_tanh(const double* x, double* y, std::size_t n);
}  // namespace serial

namespace omp {
void matvec(const double* a, const double* x, double* y, int m, int k, bool accumulate);
void matvec_transposed(const double* a, const double* adj, double* dx, int m, int k);
void outer_accumulate(const double* u, const double* v, double* a, int m, int k);
void matmul(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);
void matmul_at(const double* a, const double* c, double* b, int m, int k, int n);
void matmul_bt(const double* c, const double* b, double* a, int m, int k, int n);
void map_sigmoid(const double* x, double* y, std::size_t n);
void map_tanh(const double* x, double* y, std::size_t n);
}  // namespace omp

// Dispatch on the global job count.
void matvec(const double* a, const double* x, double* y, int m, int k, bool accumulate);
void matvec_transposed(const double* a, const double* adj, double* dx, int m, int k);
void outer_accumulate(const double* u, const double* v, double* a, int m, int k);
void matmul(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);
void matmul_at(const double* a, const double* c, double* b, int m, int k, int n);
void matmul_bt(const double* c, const double* b, double* a, int m, int k, int n);
void map_sigmoid(const double* x, double* y, std::size_t n);
void map_tanh(const double* x, double* y, std::size_t n);

// Numerically stable logistic; shared by both lanes.
inline double sigmoid_scalar(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace glimpse::kernels
