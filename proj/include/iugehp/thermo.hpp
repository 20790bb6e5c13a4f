#pragma once
#include <complex>
#include <functional>

#include "iugehp/core_model.hpp"
#include "iugehp/spectrum.hpp"

namespace iugehp {

enum class Route { sum, quadrature, closed };

// Exponent convention of the continuum partition integral.
//   canonical: exp(-beta E(rho)) with E(rho) = P0 - P1 [(ups1 - rho^2)/rho]^2
//   mirrored:  exp(-beta (P1 rho^2 + R0/rho^2 + R1)), which expands to
//              exp(+beta E(rho)) -- the exponent sign is mirrored.
enum class Integrand { canonical, mirrored };

// Constants of the mirrored exponent and the integration window:
// r0 = ups1^2 p1, r1 = -(2 p1 ups1 + p0), rho in [J~, n_max_real + J~].
struct ThermoIntegrand {
    double r0;
    double r1;
    double rho_lo;
    double rho_hi;
};

ThermoIntegrand make_integrand(const ModelConfig& config);

// Adaptive Gauss-Kronrod (G7, K15) integration to a relative tolerance.
// Throws QuadratureError if the subdivision budget is exhausted first.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol);

// --- partition function, three routes ---

// Discrete sum over n = 0 .. floor(n_max_real) of exp(-beta E_n).
// Throws EmptySpectrum when no bound level exists (n_max_real < 0).
double partition_sum(double beta, const ModelConfig& config);

struct QuadratureResult {
    double value;
    bool degenerate;  // zero-width integration window, value forced to 0
};

// Continuum integral over rho in [J~, n_max_real + J~], adaptive to 1e-10
// relative. The real-valued (unfloored) n_max_real keeps the limit smooth in
// b_field and beta, which the derivative stencils rely on.
QuadratureResult partition_quadrature(double beta, const ModelConfig& config,
                                      Integrand integrand = Integrand::canonical);

// Same integral on raw constants; the config route wraps this.
QuadratureResult quadrature_partition_raw(double beta, double p0, double p1,
                                          double ups1, double rho_lo, double rho_hi,
                                          Integrand integrand, double rel_tol = 1e-10);

struct ClosedFormResult {
    std::complex<double> value;
    double imaginary_residual;  // |Im| of the assembled expression
};

// Error-function closed form of the canonical integral, assembled from
// erf terms with purely imaginary arguments sqrt(-P1 beta) rho +- sqrt(-R0 beta)/rho.
// beta > 0, P1 > 0, R0 >= 0.
ClosedFormResult partition_closed(double beta, const ModelConfig& config);

// Raw-constants version (any nonzero beta accepted; used by the tests).
ClosedFormResult closed_partition_raw(double beta, double p0, double p1,
                                      double ups1, double rho_lo, double rho_hi);

// --- properties ---

struct ThermoResult {
    double z = 0.0;
    double f = 0.0;      // -ln Z / beta
    double u = 0.0;      // -d ln Z / d beta
    double s = 0.0;      // ln Z - beta d ln Z / d beta   (k_B = 1)
    double c = 0.0;      // beta^2 d^2 ln Z / d beta^2
    double m_mag = 0.0;  // (1/beta) d ln Z / d b_field
    double chi = 0.0;    // d m_mag / d b_field
    Route route = Route::quadrature;
};

// beta derivatives: central differences, step max(1e-4 beta, 1e-6), one
// Richardson level. Throws InvalidRoute if Z <= 0 anywhere on the stencil.
ThermoResult thermo_props(double beta, const ModelConfig& config, Route route);

struct DerivativeValue {
    double value;
    bool one_sided;  // stencil would cross b_field < 0; one-sided fallback used
};

// b_field derivatives: plain central differences, step max(1e-4 B, 1e-4).
// The sum route holds the level count fixed across the stencil.
DerivativeValue magnetization(double beta, const ModelConfig& config, Route route);
DerivativeValue susceptibility(double beta, const ModelConfig& config, Route route);

// Independent scheme for chi: (1/beta) * second difference of ln Z in b_field.
double susceptibility_crosscheck(double beta, const ModelConfig& config, Route route);

// Z for the route as a plain function of (beta, b_field) offsets; exposed so
// the property tests can drive the differentiation machinery with synthetic
// spectra as well.
double partition_value(double beta, const ModelConfig& config, Route route);

// Derivative machinery on an arbitrary ln Z(beta): same stencil and Richardson
// schedule as thermo_props; lets analytic few-level systems act as oracles.
ThermoResult thermo_props_from_lnz(double beta,
                                   const std::function<double(double)>& ln_z);

}  // namespace iugehp
