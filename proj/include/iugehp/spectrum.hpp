#pragma once
#include <Eigen/Core>
#include <vector>

#include "iugehp/core_model.hpp"

namespace iugehp {

// J~ = 1/2 + sqrt(1/4 + v0 + v1 + v5 + u0 + u1 + eta)
// ups0 = eta - v4 + v5
// ups1 = v0 - v2 + v3 + v4 + v5 + u1 - eta
// p1 = hbar^2 w^2 / (4 mu) (doubled for the rescaled variant),
// p0 = K + (hbar^2 w^2 / mu) ups0 (same doubling).
// n_max_real is the stationary point sqrt(ups1) - J~ of E(n); NaN if ups1 < 0.
struct SpectrumCoefficients {
    double j_tilde = 0.0;
    double upsilon0 = 0.0;
    double upsilon1 = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
    double n_max_real = 0.0;
    int n_max = 0;  // floor(n_max_real) clamped at 0
};

SpectrumCoefficients coefficients(const DimensionlessSet& dim,
                                  const PotentialParams& params,
                                  const UnitSystem& units,
                                  EnergyVariant variant = EnergyVariant::printed);

// eps = v4 - v5 - eta + (1/4) [(ups1 - rho^2)/rho]^2 with rho = n + J~ > 0.
double epsilon_nm(int n, const SpectrumCoefficients& coeffs,
                  const DimensionlessSet& dim);

struct EnergyLevel {
    int n = 0;
    int m = 0;
    double energy = 0.0;
    double epsilon = 0.0;
    EnergyVariant variant = EnergyVariant::printed;
};

// printed: E = K - (hbar^2 w^2 / mu) eps; rescaled: both prefactors doubled.
EnergyLevel energy(int n, int m, const PotentialParams& params,
                   const FieldConfig& fields, const UnitSystem& units,
                   EnergyVariant variant);

// extremum_rule = -J~ + sqrt(ups1), the stationary point of E(n); returned
// even when negative. printed_rule = -J~ + sqrt(P0) + sqrt(P0 - ups1)
// evaluated verbatim for comparison despite its unit inconsistency; it is
// frequently non-real, flagged by printed_rule_real.
struct NMaxRules {
    double extremum_rule;
    double printed_rule;
    bool printed_rule_real;
};

// Throws NoBoundStates when ups1 < 0 (extremum rule undefined).
NMaxRules n_max_rules(const SpectrumCoefficients& coeffs);

// Exponents of the bound-state profile R(h) = N h^H (1-h)^J ...
struct WavefunctionExponents {
    double h_exp;  // H = sqrt(eps + ups0)
    double j_exp;  // J~
};

struct RadialWavefunction {
    int n = 0;
    int m = 0;
    WavefunctionExponents exponents{0.0, 0.0};
    double normalization = 0.0;
    Eigen::ArrayXd r;
    Eigen::ArrayXd values;
    int node_count = 0;
    bool beyond_n_max = false;  // n exceeded the extremum rule; value still computed
};

// Samples N h^H (1-h)^J 2F1(-n, 2(H+J)+n; 2H+1; h), h = e^{-2wr}, on r_grid.
// N is fixed by trapezoid quadrature of R^2 on the grid, extended adaptively
// to larger r until the tail contributes < 1e-8 of the integral.
RadialWavefunction radial_wavefunction(int n, int m,
                                       const PotentialParams& params,
                                       const FieldConfig& fields,
                                       const UnitSystem& units,
                                       const Eigen::ArrayXd& r_grid);

// Constants of the canonical second-order form the quantization condition
// solves, recorded per state: y'' = 2(a x^{N+1}/(1 - b x^{N+2}) - (M+1)/x) y'
// - W x^N/(1 - b x^{N+2}) y with N = -1, b = 1, M = J - 1/2, t = 2(H+J),
// sigma = 2H + 1, a = J and W the quantization numerator S1 - (H+J)^2.
struct AimCanonicalForm {
    double a;
    double b;
    double m_const;
    double n_const;
    double w_const;
    double sigma;
    double t;
};

AimCanonicalForm aim_canonical_form(double epsilon, const DimensionlessSet& dim,
                                    const SpectrumCoefficients& coeffs);

struct AimOptions {
    double h0 = 0.5;       // evaluation point in (0, 1)
    int k_max = 60;
    double window = 5.0;   // eps scan half-width around the closed-form value
    int scan_steps = 200;
    double tol = 1e-10;    // |root_k - root_{k-1}| stopping rule
};

// Numerically root-finds eps such that the quantization determinant
// delta_k = lambda_k s_{k+1} - lambda_{k+1} s_k vanishes at h0, iterating
// lambda_k = lambda'_{k-1} + s_{k-1} + lambda_0 lambda_{k-1},
// s_k = s'_{k-1} + s_0 lambda_{k-1}
// as Taylor jets around h0 in extended precision. The closed form seeds only
// the scan bracket, not the value. Throws NotBracketed when no sign change is
// found, ConvergenceError when k_max is exhausted.
double aim_solve(int n, const DimensionlessSet& dim,
                 const SpectrumCoefficients& coeffs, const AimOptions& options = {});

enum class FdMode { approximated, exact };

struct FdOptions {
    double r_box0 = 40.0;
    int n_grid0 = 2000;
    double tol = 1e-8;  // relative eigenvalue movement between refinements
};

struct FdResult {
    std::vector<double> energies;  // Richardson-extrapolated, ascending
    bool shortfall = false;        // fewer genuine bound states than requested
    double r_box = 0.0;
    int grid_points = 0;
};

// Independent oracle: lowest `count` eigenvalues of
// -(hbar^2/2mu) d^2/dr^2 + V_eff(r) on (0, R_box], Dirichlet ends, by
// second-order finite differences and Sturm bisection on the tridiagonal
// matrix. mode == approximated applies the inverse-r replacements so the
// operator is the one the closed form solves; mode == exact keeps 1/r, 1/r^2.
// The box grows by 1.5x until stable, then the grid is halved with one
// Richardson extrapolation level until eigenvalues move < tol relative.
FdResult ode_eigensolve(const PotentialParams& params, const FieldConfig& fields,
                        const UnitSystem& units, int m, FdMode mode, int count,
                        const FdOptions& options = {});

}  // namespace iugehp
