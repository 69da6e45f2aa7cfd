#pragma once

#include <string>

namespace gonet::kernels {

// Dense linear-algebra inner loops behind the iterative solvers. A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it (override with set_backend or the
// GONET_KERNELS env var: "scalar", "avx2", "auto").
enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
Backend active_backend();
bool avx2_supported();
void set_backend(Backend b);  // throws NumericError if unsupported on this CPU
void reset_backend();         // re-run auto-detection (incl. env override)

// y = A x with A dense column-major n x n.
void matvec(double* y, const double* a, const double* x, int n);
double l1_norm(const double* x, int n);
double l1_diff(const double* x, const double* y, int n);
double l2_norm(const double* x, int n);
double dot(const double* x, const double* y, int n);
void scale(double* x, int n, double s);
// y += alpha * x
void axpy(double* y, const double* x, int n, double alpha);

namespace scalar {
void matvec(double* y, const double* a, const double* x, int n);
double l1_norm(const double* x, int n);
double l1_diff(const double* x, const double* y, int n);
double l2_norm(const double* x, int n);
double dot(const double* x, const double* y, int n);
void scale(double* x, int n, double s);
void axpy(double* y, const double* x, int n, double alpha);
}  // namespace scalar

#ifdef GONET_HAVE_AVX2
namespace avx2 {
void matvec(double* y, const double* a, const double* x, int n);
double l1_norm(const double* x, int n);
double l1_diff(const double* x, const double* y, int n);
double l2_norm(const double* x, int n);
double dot(const double* x, const double* y, int n);
void scale(double* x, int n, double s);
void axpy(double* y, const double* x, int n, double alpha);
}  // namespace avx2
#endif

}  // namespace gonet::kernels
