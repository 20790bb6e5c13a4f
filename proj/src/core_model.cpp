#include "iugehp/core_model.hpp"

namespace iugehp {

double flux_ratio(double phi_ab, double phi0) {
    if (!(phi0 > 0.0)) {
        throw ConfigError("flux quantum phi0 must be positive, got " +
                          std::to_string(phi0));
    }
    return phi_ab / phi0;
}

double eta_m(int m, double xi) {
    const double s = m + xi;
    return s * s - 0.25;
}

DimensionlessSet reduce_to_dimensionless(const PotentialParams& params,
                                         const FieldConfig& fields,
                                         const UnitSystem& units, int m) {
    const double w = params.w();
    if (!(w > 0.0)) {
        throw ConfigError("screening w = alpha + delta must be positive, got " +
                          std::to_string(w));
    }
    const double hb2 = units.hbar * units.hbar;
    const double xi = flux_ratio(fields.phi_ab, fields.phi0);

    DimensionlessSet dim;
    dim.xi = xi;
    dim.eta = eta_m(m, xi);
    dim.v0 = 2.0 * units.mu * params.a / hb2;
    dim.v1 = 2.0 * units.mu * params.b / hb2;
    dim.v2 = units.mu * params.c / (hb2 * w);
    dim.v3 = units.mu * (params.d / 2.0) / (hb2 * w);
    dim.v4 = units.mu * (params.d / 2.0) * (1.0 + params.tau) / (hb2 * w);
    dim.v5 = 2.0 * units.mu * params.g / (hb2 * w);
    if (fields.freeze_coupling) {
        dim.u0 = 0.0;
        dim.u1 = 0.0;
    } else {
        const double coupling = units.e * fields.b_field / (units.hbar * w * units.c);
        dim.u0 = coupling * (m + xi);
        dim.u1 = 0.25 * coupling * coupling;
    }
    return dim;
}

}  // namespace iugehp
