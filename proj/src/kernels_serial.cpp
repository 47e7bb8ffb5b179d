#include "glimpse/kernels.hpp"

namespace glimpse::kernels::serial {

void matvec(const double* a, const double* x, double* y, int m, int k, bool accumulate) {
  for (int i = 0; i < m; ++i) {
    const double* row = a + static_cast<std::size_t>(i) * k;
    double acc = 0.0;
    for (int j = 0; j < k; ++j) acc += row[j] * x[j];
    y[i] = accumulate ? y[i] + acc : acc;
  }
}

void matvec_transposed(const double* a, const double* adj, double* dx, int m, int k) {
  // dx[j] += sum_i a[i][j] * adj[i]; loop order keeps per-output accumulation serial.
  for (int j = 0; j < k; ++j) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += a[static_cast<std::size_t>(i) * k + j] * adj[i];
    dx[j] += acc;
  }
}

void outer_accumulate(const double* u, const double* v, double* a, int m, int k) {
  for (int i = 0; i < m; ++i) {
    double* row = a + static_cast<std::size_t>(i) * k;
    const double ui = u[i];
    for (int j = 0; j < k; ++j) row[j] += ui * v[j];
  }
}

void matmul(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate) {
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<std::size_t>(i) * k;
    double* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += arow[t] * b[static_cast<std::size_t>(t) * n + j];
      crow[j] = accumulate ? crow[j] + acc : acc;
    }
  }
}

void matmul_at(const double* a, const double* c, double* b, int m, int k, int n) {
  // b[t][j] += sum_i a[i][t] * c[i][j]
  for (int t = 0; t < k; ++t) {
    double* brow = b + static_cast<std::size_t>(t) * n;
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int i = 0; i < m; ++i)
        acc += a[static_cast<std::size_t>(i) * k + t] * c[static_cast<std::size_t>(i) * n + j];
      brow[j] += acc;
    }
  }
}

void matmul_bt(const double* c, const double* b, double* a, int m, int k, int n) {
  // a[i][t] += sum_j c[i][j] * b[t][j]
  for (int i = 0; i < m; ++i) {
    double* arow = a + static_cast<std::size_t>(i) * k;
    const double* crow = c + static_cast<std::size_t>(i) * n;
    for (int t = 0; t < k; ++t) {
      const double* brow = b + static_cast<std::size_t>(t) * n;
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += crow[j] * brow[j];
      arow[t] += acc;
    }
  }
}

void map_sigmoid(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = sigmoid_scalar(x[i]);
}

void map_tanh(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

}  // namespace glimpse::kernels::serial
