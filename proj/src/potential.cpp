#include "iugehp/potential.hpp"

#include <cmath>
#include <string>

namespace iugehp {

namespace {
void require_r_positive(double r) {
    if (!(r > 0.0)) {
        throw DomainError("radius must be positive, got " + std::to_string(r));
    }
}
}  // namespace

GreeneAldrich greene_aldrich(double r, double w) {
    require_r_positive(r);
    if (!(w > 0.0)) {
        throw DomainError("screening w must be positive, got " + std::to_string(w));
    }
    const double approx = 2.0 * w / (1.0 - std::exp(-2.0 * w * r));
    return {approx, (approx - 1.0 / r) * r};
}

double eval_raw(double r, const PotentialParams& params) {
    require_r_positive(r);
    const double w = params.w();
    const double e2 = std::exp(-2.0 * w * r);
    const double inv_r = 1.0 / r;
    double v = (params.a * e2 * e2 + params.b * e2) * inv_r * inv_r;
    v += params.c * e2 * inv_r;
    v -= params.d * (std::exp(-w * r) * std::cosh(w * r) + params.tau / 2.0) * inv_r;
    v += params.g * std::exp(w * r) / std::cosh(w * r) * inv_r;
    return v + params.k;
}

EffectiveTermBreakdown eval_effective(double r, const PotentialParams& params,
                                      const FieldConfig& fields,
                                      const UnitSystem& units, int m,
                                      bool approximate_inverse_r) {
    require_r_positive(r);
    const double w = params.w();
    if (!(w > 0.0)) {
        throw DomainError("screening w must be positive, got " + std::to_string(w));
    }
    const double h = std::exp(-2.0 * w * r);
    const double one = 1.0 - h;
    double inv_r, inv_r2;
    if (approximate_inverse_r) {
        inv_r = 2.0 * w / one;
        inv_r2 = inv_r * inv_r;
    } else {
        inv_r = 1.0 / r;
        inv_r2 = inv_r * inv_r;
    }
    const double xi = flux_ratio(fields.phi_ab, fields.phi0);
    const double eta = eta_m(m, xi);

    EffectiveTermBreakdown t;
    t.a_term = params.a * h * h * inv_r2;
    t.b_term = params.b * h * inv_r2;
    t.c_term = params.c * h * inv_r;
    t.d_screened_term = -(params.d / 2.0) * h * inv_r;
    t.d_coulomb_term = -(params.d / 2.0) * (1.0 + params.tau) * inv_r;
    t.g_term = 2.0 * params.g / one * inv_r;
    t.k_term = params.k;
    if (!fields.freeze_coupling) {
        t.field_linear = units.hbar * units.e * fields.b_field * (m + xi) /
                         (units.mu * units.c) * h / one * inv_r;
        const double eb = units.e * fields.b_field;
        t.field_quadratic =
            eb * eb / (2.0 * units.mu * units.c * units.c) * h * h / (one * one);
    }
    t.centrifugal = units.hbar * units.hbar * eta / (2.0 * units.mu) * inv_r2;
    t.total = t.a_term + t.b_term + t.c_term + t.d_screened_term +
              t.d_coulomb_term + t.g_term + t.k_term + t.field_linear +
              t.field_quadratic + t.centrifugal;
    return t;
}

Eigen::ArrayXd eval_effective_grid(const Eigen::ArrayXd& r,
                                   const PotentialParams& params,
                                   const FieldConfig& fields,
                                   const UnitSystem& units, int m,
                                   bool approximate_inverse_r) {
    const double w = params.w();
    if (!(w > 0.0)) {
        throw DomainError("screening w must be positive, got " + std::to_string(w));
    }
    if (r.size() > 0 && !(r.minCoeff() > 0.0)) {
        throw DomainError("radius grid must be strictly positive");
    }
    const Eigen::ArrayXd h = (-2.0 * w * r).exp();
    const Eigen::ArrayXd one = 1.0 - h;
    Eigen::ArrayXd inv_r, inv_r2;
    if (approximate_inverse_r) {
        inv_r = 2.0 * w / one;
        inv_r2 = inv_r.square();
    } else {
        inv_r = r.inverse();
        inv_r2 = inv_r.square();
    }
    const double xi = flux_ratio(fields.phi_ab, fields.phi0);
    const double eta = eta_m(m, xi);

    Eigen::ArrayXd v = (params.a * h.square() + params.b * h) * inv_r2;
    v += (params.c * h - (params.d / 2.0) * h -
          (params.d / 2.0) * (1.0 + params.tau) + 2.0 * params.g / one) *
         inv_r;
    if (!fields.freeze_coupling) {
        const double eb = units.e * fields.b_field;
        v += units.hbar * eb * (m + xi) / (units.mu * units.c) * h / one * inv_r;
        v += eb * eb / (2.0 * units.mu * units.c * units.c) * h.square() / one.square();
    }
    v += units.hbar * units.hbar * eta / (2.0 * units.mu) * inv_r2;
    return v + params.k;
}

DecompositionResidual decomposition_residual(double r, const PotentialParams& params) {
    require_r_positive(r);
    const double w = params.w();
    const double inv_r = 1.0 / r;
    const double h = std::exp(-2.0 * w * r);

    const double d_raw =
        -params.d * (std::exp(-w * r) * std::cosh(w * r) + params.tau / 2.0) * inv_r;
    const double d_split =
        -(params.d / 2.0) * h * inv_r - (params.d / 2.0) * (1.0 + params.tau) * inv_r;

    const double g_raw = params.g * std::exp(w * r) / std::cosh(w * r) * inv_r;
    const double g_eff = 2.0 * params.g / (1.0 - h) * inv_r;

    return {d_raw - d_split, g_raw - g_eff};
}

}  // namespace iugehp
