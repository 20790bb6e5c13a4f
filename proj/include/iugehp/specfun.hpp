#pragma once
#include <complex>

namespace iugehp {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
// Relative accuracy better than 1e-12 on (0, 170].
double ln_gamma(double x);

// erf on the real line's imaginary counterpart: erfi(x) = -i erf(ix), real x.
double erfi(double x);

// erf(z) for complex z, |z| <= 30, componentwise relative accuracy ~1e-13.
// Region split: real axis -> std::erf; imaginary axis -> erfi series;
// |z| <= 3 -> Maclaurin series; otherwise rational Faddeeva approximation
// through erf(z) = 1 - e^{-z^2} w(iz) with odd reflection into Re z > 0.
std::complex<double> erf_complex(std::complex<double> z);

// Terminating Gauss hypergeometric polynomial
//   sum_{k=0..n} [(-n)_k (b)_k / ((c)_k k!)] x^k,
// with the Pochhammer ratios accumulated multiplicatively term to term.
// The partial sums can cancel severely (condition number up to ~1e12 for
// n = 20), so accumulation runs in extended precision internally and the
// result is rounded once at the end. c must not hit 0, -1, ..., -(n-1).
double hyp2f1_terminating(int n, double b, double c, double x);

}  // namespace iugehp
