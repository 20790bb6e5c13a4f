#include <cmath>

#include "iugehp/specfun.hpp"
#include "iugehp/spectrum.hpp"

namespace iugehp {

SpectrumCoefficients coefficients(const DimensionlessSet& dim,
                                  const PotentialParams& params,
                                  const UnitSystem& units, EnergyVariant variant) {
    const double rad =
        0.25 + dim.v0 + dim.v1 + dim.v5 + dim.u0 + dim.u1 + dim.eta;
    if (rad < 0.0) {
        throw NoRealSolution("level exponent", rad);
    }
    const double w = params.w();
    double scale = units.hbar * units.hbar * w * w / units.mu;
    if (variant == EnergyVariant::rescaled) scale *= 2.0;

    SpectrumCoefficients co;
    co.j_tilde = 0.5 + std::sqrt(rad);
    co.upsilon0 = dim.eta - dim.v4 + dim.v5;
    co.upsilon1 = dim.v0 - dim.v2 + dim.v3 + dim.v4 + dim.v5 + dim.u1 - dim.eta;
    co.p1 = scale / 4.0;
    co.p0 = params.k + scale * co.upsilon0;
    co.n_max_real = co.upsilon1 >= 0.0
                        ? std::sqrt(co.upsilon1) - co.j_tilde
                        : std::numeric_limits<double>::quiet_NaN();
    co.n_max = (std::isfinite(co.n_max_real) && co.n_max_real >= 0.0)
                   ? static_cast<int>(std::floor(co.n_max_real))
                   : 0;
    return co;
}

double epsilon_nm(int n, const SpectrumCoefficients& coeffs,
                  const DimensionlessSet& dim) {
    const double rho = n + coeffs.j_tilde;
    if (!(rho > 0.0)) {
        throw DomainError("epsilon_nm requires n + J > 0");
    }
    const double br = (coeffs.upsilon1 - rho * rho) / rho;
    return dim.v4 - dim.v5 - dim.eta + 0.25 * br * br;
}

EnergyLevel energy(int n, int m, const PotentialParams& params,
                   const FieldConfig& fields, const UnitSystem& units,
                   EnergyVariant variant) {
    const DimensionlessSet dim = reduce_to_dimensionless(params, fields, units, m);
    const SpectrumCoefficients co = coefficients(dim, params, units, variant);
    const double eps = epsilon_nm(n, co, dim);
    const double w = params.w();
    double scale = units.hbar * units.hbar * w * w / units.mu;
    if (variant == EnergyVariant::rescaled) scale *= 2.0;
    return {n, m, params.k - scale * eps, eps, variant};
}

NMaxRules n_max_rules(const SpectrumCoefficients& coeffs) {
    if (coeffs.upsilon1 < 0.0) {
        throw NoBoundStates("no bound states: ups1 = " +
                            std::to_string(coeffs.upsilon1) + " < 0");
    }
    NMaxRules rules;
    rules.extremum_rule = std::sqrt(coeffs.upsilon1) - coeffs.j_tilde;
    const double inner = coeffs.p0 - coeffs.upsilon1;
    if (coeffs.p0 >= 0.0 && inner >= 0.0) {
        rules.printed_rule = -coeffs.j_tilde + std::sqrt(coeffs.p0) + std::sqrt(inner);
        rules.printed_rule_real = true;
    } else {
        rules.printed_rule = std::numeric_limits<double>::quiet_NaN();
        rules.printed_rule_real = false;
    }
    return rules;
}

AimCanonicalForm aim_canonical_form(double epsilon, const DimensionlessSet& dim,
                                    const SpectrumCoefficients& coeffs) {
    const double h_rad = epsilon + coeffs.upsilon0;
    if (h_rad < 0.0) {
        throw NoRealSolution("wavefunction exponent", h_rad);
    }
    const double h_exp = std::sqrt(h_rad);
    const double j = coeffs.j_tilde;
    const double s1 = epsilon + dim.v0 - dim.v2 + dim.v3 + dim.u1;
    AimCanonicalForm form;
    form.a = j;
    form.b = 1.0;
    form.m_const = j - 0.5;
    form.n_const = -1.0;
    form.w_const = s1 - (h_exp + j) * (h_exp + j);
    form.sigma = 2.0 * h_exp + 1.0;
    form.t = 2.0 * (h_exp + j);
    return form;
}

RadialWavefunction radial_wavefunction(int n, int m,
                                       const PotentialParams& params,
                                       const FieldConfig& fields,
                                       const UnitSystem& units,
                                       const Eigen::ArrayXd& r_grid) {
    if (r_grid.size() < 2) {
        throw ConfigError("radial_wavefunction needs at least two grid points");
    }
    const DimensionlessSet dim = reduce_to_dimensionless(params, fields, units, m);
    const SpectrumCoefficients co =
        coefficients(dim, params, units, EnergyVariant::printed);
    const double eps = epsilon_nm(n, co, dim);
    const double h_rad = eps + co.upsilon0;
    if (h_rad < 0.0) {
        throw NonNormalizable("wavefunction exponent radicand negative: " +
                              std::to_string(h_rad));
    }
    const double h_exp = std::sqrt(h_rad);
    const double j = co.j_tilde;
    const double w = params.w();
    const double t = 2.0 * (h_exp + j);
    const double sigma = 2.0 * h_exp + 1.0;

    auto profile = [&](double r) {
        const double h = std::exp(-2.0 * w * r);
        return std::pow(h, h_exp) * std::pow(1.0 - h, j) *
               hyp2f1_terminating(n, t + n, sigma, h);
    };

    RadialWavefunction wf;
    wf.n = n;
    wf.m = m;
    wf.exponents = {h_exp, j};
    wf.beyond_n_max =
        !(std::isfinite(co.n_max_real) && n <= co.n_max_real);
    wf.r = r_grid;
    wf.values.resize(r_grid.size());
    for (Eigen::Index i = 0; i < r_grid.size(); ++i) {
        wf.values[i] = profile(r_grid[i]);
    }

    // trapezoid of R^2 on the grid, then adaptive tail extension
    double integral = 0.0;
    for (Eigen::Index i = 0; i + 1 < r_grid.size(); ++i) {
        integral += 0.5 * (r_grid[i + 1] - r_grid[i]) *
                    (wf.values[i] * wf.values[i] + wf.values[i + 1] * wf.values[i + 1]);
    }
    const double dr = r_grid[r_grid.size() - 1] - r_grid[r_grid.size() - 2];
    double r_edge = r_grid[r_grid.size() - 1];
    double f_edge = wf.values[r_grid.size() - 1];
    bool tail_done = false;
    for (int chunk = 0; chunk < 4000 && !tail_done; ++chunk) {
        double tail = 0.0;
        for (int i = 0; i < 256; ++i) {
            const double r_next = r_edge + dr;
            const double f_next = profile(r_next);
            tail += 0.5 * dr * (f_edge * f_edge + f_next * f_next);
            r_edge = r_next;
            f_edge = f_next;
        }
        integral += tail;
        tail_done = tail < 1e-8 * integral;
    }
    if (!tail_done) {
        throw ConvergenceError("wavefunction tail did not decay within the extension budget");
    }
    if (!(integral > 0.0)) {
        throw NonNormalizable("wavefunction norm integral is not positive");
    }
    wf.normalization = 1.0 / std::sqrt(integral);
    wf.values *= wf.normalization;

    int flips = 0;
    double prev_sign = 0.0;
    for (Eigen::Index i = 0; i < wf.values.size(); ++i) {
        const double v = wf.values[i];
        if (v == 0.0) continue;
        const double sign = v > 0.0 ? 1.0 : -1.0;
        if (prev_sign != 0.0 && sign != prev_sign) ++flips;
        prev_sign = sign;
    }
    wf.node_count = flips;
    return wf;
}

}  // namespace iugehp
