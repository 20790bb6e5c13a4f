#pragma once
#include <cmath>

#include "iugehp/errors.hpp"

namespace iugehp {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Strengths A..G, offset K, screening exponents alpha/delta, control knob tau.
// Only the combination w = alpha + delta enters the formulas; the two are kept
// separate for config fidelity.
struct PotentialParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double g = 0.0;
    double k = 0.0;
    double alpha = 0.0;
    double delta = 0.0;
    double tau = 0.0;

    double w() const { return alpha + delta; }
};

// Uniform magnetic field strength plus the solenoid flux; phi0 is the flux
// quantum. freeze_coupling zeroes the field couplings u0, u1 while leaving
// b_field in place; used by derivative stencils that must hold the coupling
// fixed (a frozen configuration has exactly zero magnetization).
struct FieldConfig {
    double b_field = 0.0;
    double phi_ab = 0.0;
    double phi0 = kTwoPi;
    bool freeze_coupling = false;
};

struct UnitSystem {
    double hbar = 1.0;
    double mu = 1.0;
    double e = 1.0;
    double c = 1.0;  // speed of light
};

// The ten dimensionless quantities the closed-form spectrum is written in.
struct DimensionlessSet {
    double v0 = 0.0, v1 = 0.0, v2 = 0.0, v3 = 0.0, v4 = 0.0, v5 = 0.0;
    double u0 = 0.0, u1 = 0.0;
    double eta = 0.0;  // (m + xi)^2 - 1/4
    double xi = 0.0;   // phi_ab / phi0
};

enum class EnergyVariant { printed, rescaled };

// One physical scenario: potential + external fields + units + magnetic
// quantum number + the epsilon -> E mapping in use.
struct ModelConfig {
    PotentialParams potential;
    FieldConfig fields;
    UnitSystem units;
    int m = 0;
    EnergyVariant variant = EnergyVariant::printed;
};

// xi = phi_ab / phi0. phi0 must be positive.
double flux_ratio(double phi_ab, double phi0);

// eta_m = (m + xi)^2 - 1/4
double eta_m(int m, double xi);

// v0 = 2 mu A / hbar^2, v1 = 2 mu B / hbar^2,
// v2 = mu C / (hbar^2 w), v3 = mu (D/2) / (hbar^2 w),
// v4 = mu (D/2)(1+tau) / (hbar^2 w), v5 = 2 mu G / (hbar^2 w),
// u0 = e Bf (m+xi) / (hbar w c), u1 = (e Bf / (2 hbar w c))^2.
// Requires w = alpha + delta > 0.
DimensionlessSet reduce_to_dimensionless(const PotentialParams& params,
                                         const FieldConfig& fields,
                                         const UnitSystem& units, int m);

}  // namespace iugehp
