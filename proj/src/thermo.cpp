#include "iugehp/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "iugehp/specfun.hpp"

namespace iugehp {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411;

// E(rho) = P0 - P1 [(ups1 - rho^2)/rho]^2, the level curve with rho = n + J~
double level_curve(double rho, double p0, double p1, double ups1) {
    const double q = (ups1 - rho * rho) / rho;
    return p0 - p1 * q * q;
}

struct SpectrumData {
    DimensionlessSet dim;
    SpectrumCoefficients coeffs;
};

SpectrumData spectrum_data(const ModelConfig& config) {
    SpectrumData out;
    out.dim = reduce_to_dimensionless(config.potential, config.fields, config.units,
                                      config.m);
    out.coeffs = coefficients(out.dim, config.potential, config.units, config.variant);
    return out;
}

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half)
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double acc_k = kWgk[7] * f0;
    double acc_g = kWg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double fl = f(mid - half * kXgk[i]);
        const double fr = f(mid + half * kXgk[i]);
        acc_k += kWgk[i] * (fl + fr);
        if (i % 2 == 1) acc_g += kWg[i / 2] * (fl + fr);
    }
    return {a, b, acc_k * half, std::abs(acc_k - acc_g) * std::abs(half)};
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
    if (!(b > a)) throw ConfigError("integrate_adaptive needs b > a");
    std::vector<Segment> segs{gk15(f, a, b)};
    for (int round = 0; round < 2000; ++round) {
        double total = 0.0, err = 0.0;
        for (const Segment& s : segs) {
            total += s.value;
            err += s.error;
        }
        if (err <= rel_tol * std::max(std::abs(total), 1e-300)) return total;
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i) {
            if (segs[i].error > segs[worst].error) worst = i;
        }
        const Segment s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        if (!(m > s.a && m < s.b)) {
            throw QuadratureError("integrate_adaptive interval collapsed before "
                                  "reaching the tolerance");
        }
        segs[worst] = gk15(f, s.a, m);
        segs.push_back(gk15(f, m, s.b));
    }
    throw QuadratureError("integrate_adaptive subdivision budget exhausted");
}

ThermoIntegrand make_integrand(const ModelConfig& config) {
    const SpectrumData sd = spectrum_data(config);
    ThermoIntegrand out;
    out.r0 = sd.coeffs.p1 * sd.coeffs.upsilon1 * sd.coeffs.upsilon1;
    out.r1 = -(2.0 * sd.coeffs.p1 * sd.coeffs.upsilon1 + sd.coeffs.p0);
    out.rho_lo = sd.coeffs.j_tilde;
    out.rho_hi = sd.coeffs.n_max_real + sd.coeffs.j_tilde;
    return out;
}

double partition_sum(double beta, const ModelConfig& config) {
    const SpectrumData sd = spectrum_data(config);
    if (!(sd.coeffs.n_max_real >= 0.0)) {
        throw EmptySpectrum("partition_sum: no bound level exists");
    }
    const int levels = static_cast<int>(std::floor(sd.coeffs.n_max_real)) + 1;
    double z = 0.0;
    for (int n = 0; n < levels; ++n) {
        z += std::exp(-beta * level_curve(n + sd.coeffs.j_tilde, sd.coeffs.p0,
                                          sd.coeffs.p1, sd.coeffs.upsilon1));
    }
    return z;
}

QuadratureResult quadrature_partition_raw(double beta, double p0, double p1,
                                          double ups1, double rho_lo, double rho_hi,
                                          Integrand integrand, double rel_tol) {
    if (!(rho_hi > rho_lo)) return {0.0, true};
    const double sign = integrand == Integrand::canonical ? -1.0 : 1.0;
    const double value = integrate_adaptive(
        [&](double rho) {
            return std::exp(sign * beta * level_curve(rho, p0, p1, ups1));
        },
        rho_lo, rho_hi, rel_tol);
    return {value, false};
}

QuadratureResult partition_quadrature(double beta, const ModelConfig& config,
                                      Integrand integrand) {
    const SpectrumData sd = spectrum_data(config);
    const ThermoIntegrand ti = make_integrand(config);
    return quadrature_partition_raw(beta, sd.coeffs.p0, sd.coeffs.p1,
                                    sd.coeffs.upsilon1, ti.rho_lo, ti.rho_hi,
                                    integrand, 1e-12);
}

ClosedFormResult closed_partition_raw(double beta, double p0, double p1, double ups1,
                                      double rho_lo, double rho_hi) {
    if (beta == 0.0) throw ConfigError("closed_partition_raw needs beta != 0");
    if (p1 == 0.0) throw ConfigError("closed_partition_raw needs p1 != 0");
    const double r0 = p1 * ups1 * ups1;
    const double r1 = -(2.0 * p1 * ups1 + p0);
    const std::complex<double> pp = std::sqrt(std::complex<double>(-p1 * beta, 0.0));
    const std::complex<double> qq = std::sqrt(std::complex<double>(-r0 * beta, 0.0));

    auto antiderivative = [&](double rho) {
        const std::complex<double> head =
            std::exp(r1 * beta - 2.0 * pp * qq) * kSqrtPi / (4.0 * pp);
        return head * (erf_complex(pp * rho - qq / rho) +
                       std::exp(4.0 * pp * qq) * erf_complex(pp * rho + qq / rho));
    };
    const std::complex<double> value = antiderivative(rho_hi) - antiderivative(rho_lo);
    return {value, std::abs(value.imag())};
}

ClosedFormResult partition_closed(double beta, const ModelConfig& config) {
    const SpectrumData sd = spectrum_data(config);
    const ThermoIntegrand ti = make_integrand(config);
    if (!(ti.rho_hi > ti.rho_lo)) return {{0.0, 0.0}, 0.0};
    return closed_partition_raw(beta, sd.coeffs.p0, sd.coeffs.p1, sd.coeffs.upsilon1,
                                ti.rho_lo, ti.rho_hi);
}

namespace {

// Level count the discrete route uses at the stencil center; held fixed while
// b_field is displaced so the difference quotients see a smooth function.
int center_level_count(const ModelConfig& config) {
    const SpectrumData sd = spectrum_data(config);
    if (!(sd.coeffs.n_max_real >= 0.0)) {
        throw EmptySpectrum("partition sum: no bound level exists");
    }
    return static_cast<int>(std::floor(sd.coeffs.n_max_real)) + 1;
}

double partition_sum_fixed(double beta, const ModelConfig& config, int levels) {
    const SpectrumData sd = spectrum_data(config);
    double z = 0.0;
    for (int n = 0; n < levels; ++n) {
        z += std::exp(-beta * level_curve(n + sd.coeffs.j_tilde, sd.coeffs.p0,
                                          sd.coeffs.p1, sd.coeffs.upsilon1));
    }
    return z;
}

// ln Z at a displaced field value; fixed_levels < 0 means the sum route
// recounts its own levels (only valid at the stencil center).
double lnz_at_field(double beta, const ModelConfig& config, Route route,
                    double b_field, int fixed_levels) {
    ModelConfig shifted = config;
    shifted.fields.b_field = b_field;
    double z = 0.0;
    switch (route) {
        case Route::sum:
            z = fixed_levels < 0 ? partition_sum(beta, shifted)
                                 : partition_sum_fixed(beta, shifted, fixed_levels);
            break;
        case Route::quadrature:
            z = partition_quadrature(beta, shifted).value;
            break;
        case Route::closed:
            z = partition_closed(beta, shifted).value.real();
            break;
    }
    if (!(z > 0.0)) {
        throw InvalidRoute("partition value is not positive at b_field = " +
                           std::to_string(b_field));
    }
    return std::log(z);
}

DerivativeValue dlnz_db(double beta, const ModelConfig& config, Route route,
                        int fixed_levels) {
    const double b0 = config.fields.b_field;
    const double db = std::max(1e-4 * std::abs(b0), 1e-4);
    auto ln = [&](double b) { return lnz_at_field(beta, config, route, b, fixed_levels); };
    if (b0 - db < 0.0) {
        // forward 3-point stencil, second order
        const double d =
            (-3.0 * ln(b0) + 4.0 * ln(b0 + db) - ln(b0 + 2.0 * db)) / (2.0 * db);
        return {d, true};
    }
    return {(ln(b0 + db) - ln(b0 - db)) / (2.0 * db), false};
}

DerivativeValue magnetization_impl(double beta, const ModelConfig& config, Route route,
                                   int fixed_levels) {
    const DerivativeValue d = dlnz_db(beta, config, route, fixed_levels);
    return {d.value / beta, d.one_sided};
}

}  // namespace

double partition_value(double beta, const ModelConfig& config, Route route) {
    switch (route) {
        case Route::sum:
            return partition_sum(beta, config);
        case Route::quadrature:
            return partition_quadrature(beta, config).value;
        case Route::closed:
            return partition_closed(beta, config).value.real();
    }
    throw ConfigError("unknown route");
}

ThermoResult thermo_props_from_lnz(double beta,
                                   const std::function<double(double)>& ln_z) {
    if (!(beta > 0.0)) throw ConfigError("thermo properties need beta > 0");
    const double db = std::max(1e-4 * beta, 1e-6);
    if (!(beta - db > 0.0)) {
        throw ConfigError("beta too small for the derivative stencil");
    }
    auto d1 = [&](double h) { return (ln_z(beta + h) - ln_z(beta - h)) / (2.0 * h); };
    auto d2 = [&](double h) {
        return (ln_z(beta + h) - 2.0 * ln_z(beta) + ln_z(beta - h)) / (h * h);
    };
    const double dd1 = (4.0 * d1(db / 2.0) - d1(db)) / 3.0;
    const double dd2 = (4.0 * d2(db / 2.0) - d2(db)) / 3.0;
    const double lnz0 = ln_z(beta);
    ThermoResult out;
    out.z = std::exp(lnz0);
    out.f = -lnz0 / beta;
    out.u = -dd1;
    out.s = lnz0 - beta * dd1;
    out.c = beta * beta * dd2;
    return out;
}

ThermoResult thermo_props(double beta, const ModelConfig& config, Route route) {
    auto lnz = [&](double b) {
        const double z = partition_value(b, config, route);
        if (!(z > 0.0)) {
            throw InvalidRoute("partition value is not positive at beta = " +
                               std::to_string(b));
        }
        return std::log(z);
    };
    ThermoResult out = thermo_props_from_lnz(beta, lnz);
    out.z = partition_value(beta, config, route);
    out.route = route;
    out.m_mag = magnetization(beta, config, route).value;
    out.chi = susceptibility(beta, config, route).value;
    return out;
}

DerivativeValue magnetization(double beta, const ModelConfig& config, Route route) {
    const int fixed = route == Route::sum ? center_level_count(config) : -1;
    return magnetization_impl(beta, config, route, fixed);
}

DerivativeValue susceptibility(double beta, const ModelConfig& config, Route route) {
    const int fixed = route == Route::sum ? center_level_count(config) : -1;
    const double b0 = config.fields.b_field;
    const double db = std::max(1e-4 * std::abs(b0), 1e-4);
    auto mag_at = [&](double b) {
        ModelConfig shifted = config;
        shifted.fields.b_field = b;
        return magnetization_impl(beta, shifted, route, fixed);
    };
    if (b0 - db < 0.0) {
        const DerivativeValue m0 = mag_at(b0);
        const DerivativeValue m1 = mag_at(b0 + db);
        const DerivativeValue m2 = mag_at(b0 + 2.0 * db);
        return {(-3.0 * m0.value + 4.0 * m1.value - m2.value) / (2.0 * db), true};
    }
    const DerivativeValue hi = mag_at(b0 + db);
    const DerivativeValue lo = mag_at(b0 - db);
    return {(hi.value - lo.value) / (2.0 * db), hi.one_sided || lo.one_sided};
}

double susceptibility_crosscheck(double beta, const ModelConfig& config, Route route) {
    const int fixed = route == Route::sum ? center_level_count(config) : -1;
    const double b0 = config.fields.b_field;
    const double db = std::max(1e-4 * std::abs(b0), 1e-4);
    auto ln = [&](double b) { return lnz_at_field(beta, config, route, b, fixed); };
    return (ln(b0 + db) - 2.0 * ln(b0) + ln(b0 - db)) / (db * db) / beta;
}

}  // namespace iugehp
