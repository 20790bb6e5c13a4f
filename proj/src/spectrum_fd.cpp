#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "iugehp/potential.hpp"
#include "iugehp/spectrum.hpp"

namespace iugehp {

namespace {

// Eigenvalues of the symmetric tridiagonal (diag, constant off) by Sturm
// bisection. count_below(x) is the LDL pivot sign count.
struct SturmSolver {
    const Eigen::ArrayXd& diag;
    double off2;  // off-diagonal squared

    int count_below(double x) const {
        int cnt = 0;
        double q = diag[0] - x;
        if (q < 0.0) ++cnt;
        for (Eigen::Index i = 1; i < diag.size(); ++i) {
            if (std::abs(q) < 1e-300) q = q < 0.0 ? -1e-300 : 1e-300;
            q = diag[i] - x - off2 / q;
            if (q < 0.0) ++cnt;
        }
        return cnt;
    }

    // k-th smallest eigenvalue (k = 0 is the ground state)
    double eigenvalue(int k, double lo, double hi) const {
        while (hi - lo > 1e-14 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(mid) >= k + 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return 0.5 * (lo + hi);
    }
};

// Lowest `count` eigenvalues of -(hbar^2/2mu) u'' + V u on (0, r_box),
// Dirichlet both ends, interior points r_i = i dr.
std::vector<double> fd_eigs(const PotentialParams& params, const FieldConfig& fields,
                            const UnitSystem& units, int m, bool approximate,
                            double r_box, int n_grid, int count) {
    const double dr = r_box / n_grid;
    Eigen::ArrayXd r = dr * Eigen::ArrayXd::LinSpaced(n_grid - 1, 1.0, n_grid - 1.0);
    const double t = units.hbar * units.hbar / (2.0 * units.mu * dr * dr);
    const Eigen::ArrayXd diag =
        2.0 * t + eval_effective_grid(r, params, fields, units, m, approximate);

    const double off_abs = t;
    const double lo0 = diag.minCoeff() - 2.0 * off_abs;  // Gershgorin
    const double hi0 = diag.maxCoeff() + 2.0 * off_abs;
    SturmSolver solver{diag, t * t};
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) out[k] = solver.eigenvalue(k, lo0, hi0);
    return out;
}

double max_rel_move(const std::vector<double>& a, const std::vector<double>& b,
                    const std::vector<double>& ref) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst,
                         std::abs(a[i] - b[i]) / std::max(std::abs(ref[i]), 1e-30));
    }
    return worst;
}

}  // namespace

FdResult ode_eigensolve(const PotentialParams& params, const FieldConfig& fields,
                        const UnitSystem& units, int m, FdMode mode, int count,
                        const FdOptions& options) {
    if (count < 1) throw ConfigError("ode_eigensolve needs count >= 1");
    if (!(options.r_box0 > 0.0) || options.n_grid0 < 16) {
        throw ConfigError("ode_eigensolve box/grid options out of range");
    }
    const bool approximate = mode == FdMode::approximated;
    const double w = params.w();
    if (!(w > 0.0)) {
        throw DomainError("ode_eigensolve requires w > 0");
    }

    // grow the box until the low eigenvalues stop moving; the grid count grows
    // with the box so the spacing stays fixed and the comparison sees pure
    // box-truncation error, not re-discretization noise
    double r_box = options.r_box0;
    int n = options.n_grid0;
    std::vector<double> prev;
    for (int stage = 0; stage < 10; ++stage) {
        n = static_cast<int>(std::lround(options.n_grid0 * r_box / options.r_box0));
        std::vector<double> e =
            fd_eigs(params, fields, units, m, approximate, r_box, n, count);
        if (!prev.empty() && max_rel_move(e, prev, e) < 10.0 * options.tol) {
            prev = e;
            break;
        }
        prev = e;
        if (stage < 9) r_box *= 1.5;
    }

    // refine the grid at fixed box; one Richardson level on the h^2 error
    std::vector<double> e1 = prev;
    std::vector<double> rich;
    bool converged = false;
    for (int stage = 0; stage < 8; ++stage) {
        n *= 2;
        std::vector<double> e2 =
            fd_eigs(params, fields, units, m, approximate, r_box, n, count);
        rich.resize(e2.size());
        for (size_t i = 0; i < e2.size(); ++i) rich[i] = (4.0 * e2[i] - e1[i]) / 3.0;
        if (max_rel_move(e2, e1, rich) < options.tol) {
            converged = true;
            break;
        }
        e1 = e2;
    }
    if (!converged) {
        throw ConvergenceError("ode_eigensolve grid refinement did not stabilize");
    }

    // discard box-continuum levels: a bound state lies below the r -> infinity
    // limit of the effective potential (the K offset for the exact 1/r form;
    // the inverse-r replacements leave finite 2w-sized remnants)
    const double xi = flux_ratio(fields.phi_ab, fields.phi0);
    const double eta = eta_m(m, xi);
    double v_inf = params.k;
    if (approximate) {
        v_inf += 2.0 * w * (2.0 * params.g - (params.d / 2.0) * (1.0 + params.tau)) +
                 2.0 * units.hbar * units.hbar * eta * w * w / units.mu;
    }
    FdResult result;
    result.r_box = r_box;
    result.grid_points = n;
    const double margin = 1e-12 * std::max(1.0, std::abs(v_inf));
    for (double e : rich) {
        if (e < v_inf - margin) result.energies.push_back(e);
    }
    result.shortfall = static_cast<int>(result.energies.size()) < count;
    return result;
}

}  // namespace iugehp
