#include "gonet/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "gonet/types.hpp"

namespace gonet::kernels {

namespace scalar {

void matvec(double* y, const double* a, const double* x, int n) {
    std::memset(y, 0, sizeof(double) * n);
    for (int j = 0; j < n; ++j) {
        const double xj = x[j];
        const double* col = a + static_cast<size_t>(j) * n;
        for (int i = 0; i < n; ++i)
            y[i] += xj * col[i];
    }
}

double l1_norm(const double* x, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        s += std::fabs(x[i]);
    return s;
}

double l1_diff(const double* x, const double* y, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        s += std::fabs(x[i] - y[i]);
    return s;
}

double l2_norm(const double* x, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        s += x[i] * x[i];
    return std::sqrt(s);
}

double dot(const double* x, const double* y, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

void scale(double* x, int n, double s) {
    for (int i = 0; i < n; ++i)
        x[i] *= s;
}

void axpy(double* y, const double* x, int n, double alpha) {
    for (int i = 0; i < n; ++i)
        y[i] += alpha * x[i];
}

}  // namespace scalar

namespace {

struct Ops {
    void (*matvec)(double*, const double*, const double*, int);
    double (*l1_norm)(const double*, int);
    double (*l1_diff)(const double*, const double*, int);
    double (*l2_norm)(const double*, int);
    double (*dot)(const double*, const double*, int);
    void (*scale)(double*, int, double);
    void (*axpy)(double*, const double*, int, double);
};

constexpr Ops kScalarOps{scalar::matvec, scalar::l1_norm, scalar::l1_diff,
                         scalar::l2_norm, scalar::dot,     scalar::scale,
                         scalar::axpy};

#ifdef GONET_HAVE_AVX2
constexpr Ops kAvx2Ops{avx2::matvec, avx2::l1_norm, avx2::l1_diff, avx2::l2_norm,
                       avx2::dot,    avx2::scale,   avx2::axpy};
#endif

Backend g_backend = Backend::Scalar;
const Ops* g_ops = &kScalarOps;
bool g_initialized = false;

bool cpu_has_avx2() {
#if defined(GONET_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

void apply(Backend b) {
    if (b == Backend::Avx2) {
#ifdef GONET_HAVE_AVX2
        g_ops = &kAvx2Ops;
#else
        throw NumericError("AVX2 kernels not compiled in");
#endif
    } else {
        g_ops = &kScalarOps;
    }
    g_backend = b;
    g_initialized = true;
}

void autodetect() {
    Backend b = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
    if (const char* env = std::getenv("GONET_KERNELS")) {
        std::string choice = env;
        if (choice == "scalar")
            b = Backend::Scalar;
        else if (choice == "avx2") {
            if (!cpu_has_avx2())
                throw NumericError("GONET_KERNELS=avx2 but this CPU lacks AVX2/FMA");
            b = Backend::Avx2;
        }
    }
    apply(b);
}

const Ops& ops() {
    if (!g_initialized)
        autodetect();
    return *g_ops;
}

}  // namespace

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

Backend active_backend() {
    ops();
    return g_backend;
}

bool avx2_supported() {
    return cpu_has_avx2();
}

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !cpu_has_avx2())
        throw NumericError("AVX2 backend requested but unavailable on this CPU");
    apply(b);
}

void reset_backend() {
    autodetect();
}

void matvec(double* y, const double* a, const double* x, int n) { ops().matvec(y, a, x, n); }
double l1_norm(const double* x, int n) { return ops().l1_norm(x, n); }
double l1_diff(const double* x, const double* y, int n) { return ops().l1_diff(x, y, n); }
double l2_norm(const double* x, int n) { return ops().l2_norm(x, n); }
double dot(const double* x, const double* y, int n) { return ops().dot(x, y, n); }
void scale(double* x, int n, double s) { ops().scale(x, n, s); }
void axpy(double* y, const double* x, int n, double alpha) { ops().axpy(y, x, n, alpha); }

}  // namespace gonet::kernels
