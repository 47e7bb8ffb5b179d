#include "glimpse/kernels.hpp"

#include <atomic>

namespace glimpse::kernels {

namespace {
std::atomic<int> g_jobs{1};
}

void set_jobs(int jobs) { g_jobs.store(jobs < 1 ? 1 : jobs); }
int jobs() { return g_jobs.load(); }

#define GLIMPSE_DISPATCH(fn, ...)    \
  if (jobs() > 1) {                  \
    omp::fn(__VA_ARGS__);            \
  } else {                           \
    serial::fn(__VA_ARGS__);         \
  }

void matvec(const double* a, const double* x, double* y, int m, int k, bool accumulate) {
  GLIMPSE_DISPATCH(matvec, a, x, y, m, k, accumulate)
}
void matvec_transposed(const double* a, const double* adj, double* dx, int m, int k) {
  GLIMPSE_DISPATCH(matvec_transposed, a, adj, dx, m, k)
}
void outer_accumulate(const double* u, const double* v, double* a, int m, int k) {
  GLIMPSE_DISPATCH(outer_accumulate, u, v, a, m, k)
}
void matmul(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate) {
  GLIMPSE_DISPATCH(matmul, a, b, c, m, k, n, accumulate)
}
void matmul_at(const double* a, const double* c, double* b, int m, int k, int n) {
  GLIMPSE_DISPATCH(matmul_at, a, c, b, m, k, n)
}
void matmul_bt(const double* c, const double* b, double* a, int m, int k, int n) {
  GLIMPSE_DISPATCH(matmul_bt, c, b, a, m, k, n)
}
void map_sigmoid(const double* x, double* y, std::size_t n) {
  GLIMPSE_DISPATCH(map_sigmoid, x, y, n)
}
void map_tanh(const double* x, double* y, std::size_t n) {
  GLIMPSE_DISPATCH(map_tanh, x, y, n)
}

#undef GLIMPSE_DISPATCH

}  // namespace glimpse::kernels
