#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "iugehp/spectrum.hpp"

namespace iugehp {

namespace {

// Extended-precision scalar for the jet recurrences: the determinant values
// shrink through heavy cancellation near a root, double loses the sign there.
#if defined(__SIZEOF_FLOAT128__)
using xreal = __float128;
#else
using xreal = long double;
#endif

inline xreal xabs(xreal v) { return v < 0 ? -v : v; }

// Newton refinement from the double sqrt; two steps saturate the precision.
inline xreal xsqrt(xreal v) {
    if (v <= 0) return 0;
    xreal x = static_cast<xreal>(std::sqrt(static_cast<double>(v)));
    x = (x + v / x) / 2;
    x = (x + v / x) / 2;
    return x;
}

using Jet = std::vector<xreal>;  // Taylor coefficients around h0

Jet jet_derivative(const Jet& a) {
    Jet out(a.size(), 0);
    for (size_t j = 0; j + 1 < a.size(); ++j) out[j] = a[j + 1] * xreal(j + 1);
    return out;
}

Jet jet_product(const Jet& a, const Jet& b) {
    Jet out(a.size(), 0);
    for (size_t j = 0; j < a.size(); ++j) {
        xreal acc = 0;
        for (size_t i = 0; i <= j; ++i) acc += a[i] * b[j - i];
        out[j] = acc;
    }
    return out;
}

// delta_k(h0) = lambda_k s_{k+1} - lambda_{k+1} s_k, with
// lambda_0 = -(2H+1)/h + 2J/(1-h), s_0 = ((H+J)^2 - S1)/(h(1-h)),
// H = sqrt(eps + ups0), S1 = eps + v0 - v2 + v3 + u1.
// Each level is normalized by max(|lambda|, |s|) at h0; that rescales
// consecutive deltas by positive factors only, so roots are preserved.
double aim_delta(double eps, int k_target, const DimensionlessSet& dim,
                 const SpectrumCoefficients& coeffs, double h0, int len) {
    const xreal H = xsqrt(xreal(eps) + xreal(coeffs.upsilon0));
    const xreal J = coeffs.j_tilde;
    const xreal S1 = xreal(eps) + xreal(dim.v0) - xreal(dim.v2) +
                     xreal(dim.v3) + xreal(dim.u1);
    const xreal x0 = h0;
    const xreal one = xreal(1) - x0;

    Jet inv_h(len), inv_1mh(len);
    {
        // 1/h = sum (-1)^j (h-h0)^j / h0^{j+1}; 1/(1-h) analogous
        xreal ph = 1 / x0, pm = 1 / one;
        for (int j = 0; j < len; ++j) {
            inv_h[j] = (j % 2 == 0) ? ph : -ph;
            inv_1mh[j] = pm;
            ph /= x0;
            pm /= one;
        }
    }
    Jet lam0(len), s0(len);
    const xreal s0_num = (H + J) * (H + J) - S1;
    for (int j = 0; j < len; ++j) {
        lam0[j] = -(2 * H + 1) * inv_h[j] + 2 * J * inv_1mh[j];
        s0[j] = s0_num * (inv_h[j] + inv_1mh[j]);
    }

    Jet lam = lam0, s = s0;
    xreal prev_lam0 = lam[0], prev_s0 = s[0];
    for (int kk = 1; kk <= k_target + 1; ++kk) {
        Jet dl = jet_derivative(lam);
        Jet ds = jet_derivative(s);
        Jet ll = jet_product(lam0, lam);
        Jet sl = jet_product(s0, lam);
        for (int j = 0; j < len; ++j) {
            lam[j] = dl[j] + s[j] + ll[j];
            s[j] = ds[j] + sl[j];
        }
        xreal scale = xabs(lam[0]) > xabs(s[0]) ? xabs(lam[0]) : xabs(s[0]);
        if (scale == 0) scale = 1;
        for (int j = 0; j < len; ++j) {
            lam[j] /= scale;
            s[j] /= scale;
        }
        if (kk == k_target) {
            prev_lam0 = lam[0];
            prev_s0 = s[0];
        }
    }
    return static_cast<double>(prev_lam0 * s[0] - lam[0] * prev_s0);
}

}  // namespace

double aim_solve(int n, const DimensionlessSet& dim,
                 const SpectrumCoefficients& coeffs, const AimOptions& options) {
    if (!(options.h0 > 0.0 && options.h0 < 1.0)) {
        throw ConfigError("aim_solve evaluation point must satisfy 0 < h0 < 1");
    }
    if (options.k_max < n + 2) {
        throw ConfigError("aim_solve requires k_max >= n + 2");
    }
    const double eps_center = epsilon_nm(n, coeffs, dim);
    // H = sqrt(eps + ups0) must stay real on the scan
    const double lo_bound = -coeffs.upsilon0 + 1e-9;
    const double lo = std::max(eps_center - options.window, lo_bound);
    const double hi = eps_center + options.window;
    if (!(hi > lo)) {
        throw NotBracketed("aim_solve scan window is empty");
    }

    double prev_root = std::numeric_limits<double>::quiet_NaN();
    for (int k = n + 2; k < options.k_max; ++k) {
        const int len = k + 4;
        const int steps = options.scan_steps;
        std::vector<double> vals(steps + 1);
        for (int i = 0; i <= steps; ++i) {
            const double e = lo + (hi - lo) * i / steps;
            vals[i] = aim_delta(e, k, dim, coeffs, options.h0, len);
        }
        std::vector<double> roots;
        for (int i = 0; i < steps; ++i) {
            if (!(vals[i] == 0.0 || vals[i] * vals[i + 1] < 0.0)) continue;
            double x0 = lo + (hi - lo) * i / steps;
            double x1 = lo + (hi - lo) * (i + 1) / steps;
            double f0 = vals[i];
            for (int it = 0; it < 80 && x1 - x0 > 1e-13; ++it) {
                const double xm = 0.5 * (x0 + x1);
                const double fm = aim_delta(xm, k, dim, coeffs, options.h0, len);
                if (f0 * fm <= 0.0) {
                    x1 = xm;
                } else {
                    x0 = xm;
                    f0 = fm;
                }
            }
            roots.push_back(0.5 * (x0 + x1));
        }
        if (roots.empty()) {
            throw NotBracketed(
                "quantization determinant has no sign change in the scan window at k = " +
                std::to_string(k));
        }
        double root = roots[0];
        for (double r : roots) {
            if (std::abs(r - eps_center) < std::abs(root - eps_center)) root = r;
        }
        if (std::isfinite(prev_root) && std::abs(root - prev_root) < options.tol) {
            return root;
        }
        prev_root = root;
    }
    throw ConvergenceError("aim_solve did not stabilize by k_max = " +
                           std::to_string(options.k_max) +
                           ", last root = " + std::to_string(prev_root));
}

}  // namespace iugehp
