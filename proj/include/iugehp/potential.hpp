#pragma once
#include <Eigen/Core>

#include "iugehp/core_model.hpp"

namespace iugehp {

struct GreeneAldrich {
    double approx;     // 2w / (1 - e^{-2wr})
    double rel_error;  // relative to 1/r
};

// Short-range replacement for 1/r; valid for small w*r. r > 0, w > 0.
GreeneAldrich greene_aldrich(double r, double w);

// Direct evaluation of the raw potential
//   V(r) = [A e^{-4wr} + B e^{-2wr}]/r^2
//        + [C e^{-2wr} - D(e^{-wr} cosh(wr) + tau/2) + G sech(wr) e^{wr}]/r + K
// with the sech and cosh factors taken verbatim. r > 0; w = 0 is allowed here.
double eval_raw(double r, const PotentialParams& params);

// Term-by-term value of the effective radial interaction actually solved,
// potential-energy convention. The D term is already split via
// e^{-x} cosh x = (1 + e^{-2x})/2 into a screened and a Coulomb-like piece.
struct EffectiveTermBreakdown {
    double a_term = 0.0;           // A h^2 / r^2
    double b_term = 0.0;           // B h / r^2
    double c_term = 0.0;           // C h / r
    double d_screened_term = 0.0;  // -(D/2) h / r
    double d_coulomb_term = 0.0;   // -(D/2)(1+tau) / r
    double g_term = 0.0;           // 2G / ((1-h) r)
    double k_term = 0.0;           // K
    double field_linear = 0.0;     // hbar e Bf (m+xi)/(mu c) * h/((1-h) r)
    double field_quadratic = 0.0;  // e^2 Bf^2/(2 mu c^2) * h^2/(1-h)^2
    double centrifugal = 0.0;      // hbar^2 eta_m / (2 mu r^2)
    double total = 0.0;
};

// h = e^{-2wr}. With approximate_inverse_r the Greene-Aldrich replacements
// 1/r -> 2w/(1-h), 1/r^2 -> 4w^2/(1-h)^2 are applied to every term, giving
// the exact operator the closed-form spectrum diagonalizes; otherwise the
// 1/r, 1/r^2 factors are kept exact. r > 0, w > 0.
EffectiveTermBreakdown eval_effective(double r, const PotentialParams& params,
                                      const FieldConfig& fields,
                                      const UnitSystem& units, int m,
                                      bool approximate_inverse_r = false);

// Vectorized total of eval_effective over a radius grid, same conventions.
Eigen::ArrayXd eval_effective_grid(const Eigen::ArrayXd& r,
                                   const PotentialParams& params,
                                   const FieldConfig& fields,
                                   const UnitSystem& units, int m,
                                   bool approximate_inverse_r = false);

// Consistency audit between the raw potential and the effective one:
// d_residual = (raw D term) - (effective D terms), zero by the cosh identity;
// g_residual = (raw G term) - (effective G term), generically nonzero because
// the two printed G denominators differ (1 + e^{-2wr} vs 1 - e^{-2wr}).
struct DecompositionResidual {
    double d_residual;
    double g_residual;
};

DecompositionResidual decomposition_residual(double r, const PotentialParams& params);

}  // namespace iugehp
