#include "iugehp/specfun.hpp"

#include <array>
#include <cmath>

#include "iugehp/errors.hpp"

namespace iugehp {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

#if defined(__SIZEOF_FLOAT128__)
using xreal = __float128;
#else
using xreal = long double;
#endif

// Lanczos, g = 7, 9 coefficients.
const double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("ln_gamma requires x > 0, got " + std::to_string(x));
    }
    if (x < 0.5) {
        // reflection keeps the Lanczos argument away from the poles
        return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double erfi(double x) {
    // all terms positive, no cancellation: erfi(x) = 2/sqrt(pi) sum x^{2k+1}/(k!(2k+1))
    const double ax = std::abs(x);
    double term = ax;
    double s = ax;
    const double xx = x * x;
    for (int k = 1; k < 400; ++k) {
        term *= xx / k;
        const double add = term / (2 * k + 1);
        s += add;
        if (add < 1e-17 * s) break;
    }
    const double v = 2.0 / kSqrtPi * s;
    return x >= 0.0 ? v : -v;
}

namespace {

std::complex<double> erf_maclaurin(std::complex<double> z) {
    std::complex<double> term = z;
    std::complex<double> s = z;
    const std::complex<double> zz = z * z;
    for (int k = 1; k < 200; ++k) {
        term = -term * zz / static_cast<double>(k);
        const std::complex<double> add = term / static_cast<double>(2 * k + 1);
        s += add;
        if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(s))) break;
    }
    return 2.0 / kSqrtPi * s;
}

// Rational approximation of the Faddeeva function w(z), valid for Im z >= 0
// (Weideman-style, N = 64 terms; coefficients from a discrete Fourier
// transform of exp(-t^2)(L^2 + t^2) sampled along L tan(theta/2)).
struct FaddeevaTable {
    static constexpr int N = 64;
    double L;
    std::array<double, N> a;

    FaddeevaTable() {
        L = std::sqrt(N / std::sqrt(2.0));
        const int M = 2 * N;          // 128
        const int M2 = 2 * M;         // 256 samples
        std::array<double, 256> f{};
        for (int i = 0; i < M2; ++i) {
            const int k = i - M;  // -M .. M-1
            const double th = k * M_PI / M;
            const double tt = L * std::tan(th / 2.0);
            double v = std::exp(-tt * tt) * (L * L + tt * tt);
            f[i] = std::isfinite(v) ? v : 0.0;
        }
        // a_j = Re(DFT(fftshift f))_j / (2M), polynomial uses a_N..a_1
        for (int j = 1; j <= N; ++j) {
            double re = 0.0;
            for (int i = 0; i < M2; ++i) {
                const double g = f[(i + M) % M2];
                re += g * std::cos(2.0 * M_PI * j * i / M2);
            }
            a[N - j] = re / M2;  // descending powers for Horner
        }
    }
};

std::complex<double> faddeeva_upper(std::complex<double> z) {
    static const FaddeevaTable tab;
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> denom = tab.L - iz;
    const std::complex<double> lz = (tab.L + iz) / denom;
    std::complex<double> p = 0.0;
    for (int i = 0; i < FaddeevaTable::N; ++i) p = p * lz + tab.a[i];
    return 2.0 * p / (denom * denom) + (1.0 / kSqrtPi) / denom;
}

}  // namespace

std::complex<double> erf_complex(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("erf_complex requires finite input");
    }
    if (std::abs(z) > 30.0) {
        throw DomainError("erf_complex argument too large: |z| > 30");
    }
    if (z.imag() == 0.0) return {std::erf(z.real()), 0.0};
    if (z.real() == 0.0) return {0.0, erfi(z.imag())};
    if (std::abs(z) <= 3.0) return erf_maclaurin(z);
    if (z.real() < 0.0) return -erf_complex(-z);
    // Re z > 0: erf(z) = 1 - exp(-z^2) w(iz), and Im(iz) = Re(z) > 0
    const std::complex<double> iz(-z.imag(), z.real());
    return 1.0 - std::exp(-z * z) * faddeeva_upper(iz);
}

double hyp2f1_terminating(int n, double b, double c, double x) {
    if (n < 0) {
        throw DomainError("hyp2f1_terminating requires n >= 0");
    }
    // (c)_k pole guard: c + k == 0 for some k in [0, n-1]
    if (c <= 0.0 && c == std::floor(c) && c > -static_cast<double>(n)) {
        throw DomainError("hyp2f1_terminating: Pochhammer pole in (c)_k at c = " +
                          std::to_string(c));
    }
    // The alternating partial sums cancel (condition number grows to ~1e12 by
    // n = 20); extended-precision accumulation keeps the rounded result exact
    // in double.
    xreal s = 1.0;
    xreal term = 1.0;
    const xreal xb = b, xc = c, xx = x;
    for (int k = 0; k < n; ++k) {
        term *= (xreal(-n + k) * (xb + k)) * xx / ((xc + k) * xreal(k + 1));
        s += term;
    }
    return static_cast<double>(s);
}

}  // namespace iugehp
