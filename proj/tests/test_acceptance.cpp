// Acceptance gate: ./acceptance <1..9> runs one numbered criterion, prints
// [crit-N] PASS or [crit-N] FAIL plus diagnostics, and exits 0/1. Each
// criterion re-derives its expectations from an independent route (finite
// differences, iterative quantization, adaptive quadrature, recurrences,
// analytic few-level systems); tolerances are pinned here, not configurable.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "iugehp/errors.hpp"
#include "iugehp/specfun.hpp"
#include "iugehp/spectrum.hpp"
#include "iugehp/thermo.hpp"

using namespace iugehp;
using testing_support::mixed_err;
using testing_support::rel_err;
using testing_support::source_path;

namespace {

const char* kOracleFixtures[5] = {"oracle1.json", "oracle2.json", "oracle3.json",
                                  "oracle4.json", "oracle5.json"};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

SpectrumCoefficients coeffs_at(const ModelConfig& mc, EnergyVariant variant) {
    const DimensionlessSet dim =
        reduce_to_dimensionless(mc.potential, mc.fields, mc.units, mc.m);
    return coefficients(dim, mc.potential, mc.units, variant);
}

// ---------------------------------------------------------------------------
// 1. The finite-difference eigensolver of the substituted radial operator
//    must match exactly one of the two energy-variant formulas.
bool criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    FdOptions opt;
    opt.r_box0 = 15.0;  // deep wells are short-ranged; the box loop grows it
    opt.n_grid0 = 3000;
    opt.tol = 1e-6;  // refinement target, 100x below the pass tolerance
    const double tol = 1e-5;
    double worst_rescaled = 0.0, worst_printed = 0.0;
    bool solver_clean = true;
    for (const char* fx : kOracleFixtures) {
        const RunConfig rc = load_config(source_path(std::string("fixtures/") + fx));
        for (int m = -1; m <= 1; ++m) {
            FdResult fd;
            try {
                fd = ode_eigensolve(rc.model.potential, rc.model.fields,
                                    rc.model.units, m, FdMode::approximated, 3, opt);
            } catch (const std::exception& e) {
                std::printf("  %s m=%+d eigensolver failed: %s\n", fx, m, e.what());
                solver_clean = false;
                continue;
            }
            if (fd.shortfall || fd.energies.size() < 3) {
                std::printf("  %s m=%+d returned only %zu bound levels\n", fx, m,
                            fd.energies.size());
                solver_clean = false;
                continue;
            }
            double wr = 0.0, wp = 0.0;
            for (int n = 0; n < 3; ++n) {
                const double ep = energy(n, m, rc.model.potential, rc.model.fields,
                                         rc.model.units, EnergyVariant::printed)
                                      .energy;
                const double er = energy(n, m, rc.model.potential, rc.model.fields,
                                         rc.model.units, EnergyVariant::rescaled)
                                      .energy;
                wp = std::max(wp, rel_err(fd.energies[n], ep));
                wr = std::max(wr, rel_err(fd.energies[n], er));
            }
            std::printf("  %s m=%+d box=%.1f grid=%d rescaled=%.3e printed=%.3e\n",
                        fx, m, fd.r_box, fd.grid_points, wr, wp);
            worst_rescaled = std::max(worst_rescaled, wr);
            worst_printed = std::max(worst_printed, wp);
        }
    }
    const double elapsed = seconds_since(t0);
    const bool match_rescaled = worst_rescaled <= tol;
    const bool match_printed = worst_printed <= tol;
    std::printf("  worst residual: rescaled=%.3e printed=%.3e (tolerance %.0e)\n",
                worst_rescaled, worst_printed, tol);
    if (match_rescaled && !match_printed) {
        std::printf("  matched variant: rescaled (doubled energy prefactor)\n");
    } else if (match_printed && !match_rescaled) {
        std::printf("  matched variant: printed\n");
    } else {
        std::printf("  no unambiguous variant match\n");
    }
    std::printf("  elapsed %.1fs (budget 60s)\n", elapsed);
    return solver_clean && (match_rescaled != match_printed) && elapsed <= 60.0;
}

// ---------------------------------------------------------------------------
// 2. The iterative quantization oracle reproduces the closed-form epsilon for
//    n in 0..3 on every fixture, independent of the evaluation point h0.
bool criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const double tol = 1e-8;
    const double h0s[4] = {0.1, 0.3, 0.5, 0.7};
    double worst = 0.0;
    bool clean = true;
    for (const char* fx : kOracleFixtures) {
        const RunConfig rc = load_config(source_path(std::string("fixtures/") + fx));
        const ModelConfig& mc = rc.model;
        const DimensionlessSet dim =
            reduce_to_dimensionless(mc.potential, mc.fields, mc.units, mc.m);
        const SpectrumCoefficients co = coefficients(dim, mc.potential, mc.units);
        double fx_worst = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const double eps = epsilon_nm(n, co, dim);
            for (double h0 : h0s) {
                AimOptions ao;
                ao.h0 = h0;
                double root = 0.0;
                try {
                    root = aim_solve(n, dim, co, ao);
                } catch (const std::exception& e) {
                    std::printf("  %s n=%d h0=%.1f quantization failed: %s\n", fx,
                                n, h0, e.what());
                    clean = false;
                    continue;
                }
                fx_worst = std::max(fx_worst, std::abs(root - eps));
            }
        }
        std::printf("  %s m=%+d worst |root - epsilon| = %.3e\n", fx, mc.m,
                    fx_worst);
        worst = std::max(worst, fx_worst);
    }
    const double elapsed = seconds_since(t0);
    std::printf("  worst residual %.3e (tolerance %.0e), elapsed %.1fs "
                "(budget 10s)\n",
                worst, tol, elapsed);
    return clean && worst <= tol && elapsed <= 10.0;
}

// ---------------------------------------------------------------------------
// 3. Qualitative level patterns on the designated table fixture.
bool criterion3() {
    const RunConfig rc = load_config(source_path("fixtures/table_pattern.json"));
    const ModelConfig& base = rc.model;
    const FieldConfig off{0.0, 0.0, base.fields.phi0, false};
    const FieldConfig b_only{base.fields.b_field, 0.0, base.fields.phi0, false};
    const FieldConfig both = base.fields;

    // (a) E(n=0, m=0, fields off) strictly decreases across tau = -1, 0, +1
    double e_tau[3];
    int i = 0;
    for (double tau : {-1.0, 0.0, 1.0}) {
        PotentialParams p = base.potential;
        p.tau = tau;
        e_tau[i++] = energy(0, 0, p, off, base.units, base.variant).energy;
    }
    const bool a_ok = e_tau[0] > e_tau[1] && e_tau[1] > e_tau[2];
    std::printf("  (a) E(0,0) over tau=-1,0,+1: %.6f > %.6f > %.6f : %s\n",
                e_tau[0], e_tau[1], e_tau[2], a_ok ? "ok" : "violated");

    // (b) switching the magnetic field on alone should drive every grid energy
    //     strongly negative (below -|E_off|), inverting the field-free scale
    bool b_ok = true;
    for (int m = -1; m <= 1; ++m) {
        for (int n = 0; n <= 3; ++n) {
            const double e_off =
                energy(n, m, base.potential, off, base.units, base.variant).energy;
            const double e_on =
                energy(n, m, base.potential, b_only, base.units, base.variant)
                    .energy;
            if (!(e_on < -std::abs(e_off))) {
                std::printf("  (b) n=%d m=%+d: field-free %.6f, field-on %.6f "
                            "(no scale inversion)\n",
                            n, m, e_off, e_on);
                b_ok = false;
            }
        }
    }
    if (!b_ok) {
        // Certificate of why: the field enters the closed form only as a shift
        // of the angular index plus a unit drop of epsilon. At the field value
        // where the shift is exactly one (b_field = 2 here), every field-on
        // epsilon at m = -1 equals the field-free epsilon at m = 0 minus 1, so
        // energies move UP by one scale unit instead of diving negative.
        const FieldConfig unit_shift{2.0, 0.0, base.fields.phi0, false};
        ModelConfig on = base;
        on.fields = unit_shift;
        on.m = -1;
        ModelConfig off_m0 = base;
        off_m0.fields = off;
        off_m0.m = 0;
        const DimensionlessSet don = reduce_to_dimensionless(
            on.potential, on.fields, on.units, on.m);
        const DimensionlessSet doff = reduce_to_dimensionless(
            off_m0.potential, off_m0.fields, off_m0.units, off_m0.m);
        const SpectrumCoefficients con =
            coefficients(don, on.potential, on.units);
        const SpectrumCoefficients coff =
            coefficients(doff, off_m0.potential, off_m0.units);
        double cert = 0.0;
        for (int n = 0; n <= 3; ++n) {
            cert = std::max(cert,
                            std::abs(epsilon_nm(n, con, don) -
                                     (epsilon_nm(n, coff, doff) - 1.0)));
        }
        std::printf("  (b) certificate: at the unit-shift field, "
                    "epsilon_on(n,-1) = epsilon_off(n,0) - 1 to %.2e; the "
                    "field raises energies by one scale unit, it does not "
                    "invert them\n",
                    cert);
    }

    // (c) both fields on: all grid energies pairwise distinct; fields off:
    //     E(n, m) = E(n, -m) exactly
    std::vector<double> e_both;
    for (int m = -1; m <= 1; ++m) {
        for (int n = 0; n <= 3; ++n) {
            e_both.push_back(
                energy(n, m, base.potential, both, base.units, base.variant)
                    .energy);
        }
    }
    double min_gap = 1e300;
    for (size_t p = 0; p < e_both.size(); ++p) {
        for (size_t q = p + 1; q < e_both.size(); ++q) {
            min_gap = std::min(min_gap, std::abs(e_both[p] - e_both[q]));
        }
    }
    bool c_ok = min_gap > 1e-6;
    for (int n = 0; n <= 3 && c_ok; ++n) {
        const double plus =
            energy(n, 1, base.potential, off, base.units, base.variant).energy;
        const double minus =
            energy(n, -1, base.potential, off, base.units, base.variant).energy;
        if (plus != minus) c_ok = false;
    }
    std::printf("  (c) both-fields-on minimum pairwise gap %.3e (> 1e-6); "
                "field-free E(n,m)=E(n,-m) exact: %s\n",
                min_gap, c_ok ? "ok" : "violated");

    std::printf("  sub-results: (a) %s, (b) %s, (c) %s\n", a_ok ? "pass" : "fail",
                b_ok ? "pass" : "fail", c_ok ? "pass" : "fail");
    return a_ok && b_ok && c_ok;
}

// ---------------------------------------------------------------------------
// 4. The error-function closed form against the mirrored-exponent integral.
bool criterion4() {
    const double betas[5] = {0.1, 0.5, 1.0, 2.0, 5.0};
    double worst_mirrored = 0.0, worst_canonical = 0.0, worst_imag = 0.0;
    for (const char* fx : kOracleFixtures) {
        const RunConfig rc = load_config(source_path(std::string("fixtures/") + fx));
        const ModelConfig& mc = rc.model;
        double fx_mir = 0.0;
        for (double beta : betas) {
            const ClosedFormResult cf = partition_closed(beta, mc);
            const QuadratureResult mir =
                partition_quadrature(beta, mc, Integrand::mirrored);
            const QuadratureResult can =
                partition_quadrature(beta, mc, Integrand::canonical);
            fx_mir = std::max(fx_mir, rel_err(cf.value.real(), mir.value));
            worst_canonical =
                std::max(worst_canonical, rel_err(cf.value.real(), can.value));
            worst_imag = std::max(
                worst_imag,
                cf.imaginary_residual / std::max(1e-300, std::abs(cf.value.real())));
        }
        std::printf("  %s worst |closed - mirrored| / mirrored = %.3e\n", fx,
                    fx_mir);
        worst_mirrored = std::max(worst_mirrored, fx_mir);
    }
    std::printf("  worst vs mirrored convention: %.3e (tolerance 1e-8)\n",
                worst_mirrored);
    std::printf("  worst imaginary residual: %.3e of |Z| (tolerance 1e-10)\n",
                worst_imag);
    const bool pass = worst_mirrored <= 1e-8 && worst_imag <= 1e-10;
    if (!pass) {
        std::printf("  diagnostic: the closed form reproduces the canonical "
                    "integral exp(-beta E) to %.3e; the mirrored convention is "
                    "a different integral and stays tens of percent away\n",
                    worst_canonical);
    }
    return pass;
}

// ---------------------------------------------------------------------------
// 5. Thermodynamic identity suite.
bool criterion5() {
    const RunConfig rc = load_config(source_path("fixtures/thermo.json"));
    const ModelConfig& mc = rc.model;
    bool ok = true;
    double worst_identity = 0.0;
    double min_c_sum = 1e300, min_c_quad = 1e300;
    for (int i = 0; i <= 40; ++i) {
        const double beta = 0.01 * std::pow(1000.0, i / 40.0);
        for (Route route : {Route::sum, Route::quadrature}) {
            const ThermoResult tp = thermo_props(beta, mc, route);
            const double identity =
                std::abs(tp.f - (tp.u - tp.s / beta)) / std::max(1e-300, std::abs(tp.f));
            worst_identity = std::max(worst_identity, identity);
            if (identity > 1e-8) ok = false;
            if (tp.c < 0.0) {
                std::printf("  negative heat capacity %.3e at beta=%.4f (%s)\n",
                            tp.c, beta,
                            route == Route::sum ? "sum" : "quadrature");
                ok = false;
            }
            (route == Route::sum ? min_c_sum : min_c_quad) =
                std::min(route == Route::sum ? min_c_sum : min_c_quad, tp.c);
        }
    }
    std::printf("  worst |F - (U - S/beta)| / |F| = %.3e over 41 beta in "
                "[0.01, 10], both routes (tolerance 1e-8)\n",
                worst_identity);
    std::printf("  min heat capacity: sum %.3e, quadrature %.3e (>= 0)\n",
                min_c_sum, min_c_quad);

    double worst_two_level = 0.0;
    for (double gap : {0.01, 1.0, 10.0}) {
        const ThermoResult tp = thermo_props_from_lnz(1.0, [gap](double b) {
            return std::log1p(std::exp(-b * gap));
        });
        const double ex = std::exp(gap);
        const double c_exact = gap * gap * ex / ((ex + 1.0) * (ex + 1.0));
        worst_two_level = std::max(worst_two_level, std::abs(tp.c - c_exact));
    }
    std::printf("  two-level analytic heat capacity worst deviation %.3e "
                "(tolerance 1e-6 absolute)\n",
                worst_two_level);
    return ok && worst_two_level <= 1e-6;
}

// ---------------------------------------------------------------------------
// 6. Magnetic response consistency.
bool criterion6() {
    const RunConfig rc = load_config(source_path("fixtures/thermo.json"));
    const ModelConfig& mc = rc.model;
    bool ok = true;
    for (double beta : {0.05, 0.1, 0.2, 0.5}) {
        const DerivativeValue chi = susceptibility(beta, mc, Route::quadrature);
        const double cc = susceptibility_crosscheck(beta, mc, Route::quadrature);
        const DerivativeValue mag = magnetization(beta, mc, Route::quadrature);
        const double agree = rel_err(chi.value, cc);

        const double dphi = std::max(1e-4 * std::abs(mc.fields.phi_ab), 1e-4);
        ModelConfig hi = mc, lo = mc;
        hi.fields.phi_ab += dphi;
        lo.fields.phi_ab -= dphi;
        const double dm_dphi =
            (magnetization(beta, hi, Route::quadrature).value -
             magnetization(beta, lo, Route::quadrature).value) /
            (2.0 * dphi);

        std::printf("  beta=%.2f chi=%.6f crosscheck=%.6f agree=%.2e M=%.4f "
                    "dM/dflux=%.5f\n",
                    beta, chi.value, cc, agree, mag.value, dm_dphi);
        if (agree > 1e-4) ok = false;
        if (!(chi.value > 0.0)) ok = false;   // paramagnetic slope in b_field
        if (!(mag.value < 0.0)) ok = false;
        if (!(dm_dphi < 0.0)) ok = false;
    }
    ModelConfig frozen = mc;
    frozen.fields.freeze_coupling = true;
    const DerivativeValue m0 = magnetization(0.2, frozen, Route::quadrature);
    std::printf("  frozen-coupling magnetization = %.17g (must be exactly 0)\n",
                m0.value);
    if (m0.value != 0.0) ok = false;
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Coulomb-limit convergence of the printed variant as w -> 0.
bool criterion7() {
    UnitSystem units;
    FieldConfig off;
    bool ok = true;
    for (int n = 0; n <= 2; ++n) {
        const double nu = n + 0.5;
        const double limit = -1.0 * (2.0 + 0.0) * (2.0 + 0.0) / (16.0 * nu * nu);
        double err[3];
        int i = 0;
        for (double w : {1e-2, 1e-3, 1e-4}) {
            PotentialParams p;
            p.d = 1.0;
            p.tau = 0.0;
            p.alpha = 0.5 * w;
            p.delta = 0.5 * w;
            const double e =
                energy(n, 0, p, off, units, EnergyVariant::printed).energy;
            err[i++] = std::abs(e - limit);
        }
        const double r1 = err[0] / err[1];
        const double r2 = err[1] / err[2];
        std::printf("  n=%d limit=%.6f errors %.3e -> %.3e -> %.3e "
                    "(ratios %.1f, %.1f)\n",
                    n, limit, err[0], err[1], err[2], r1, r2);
        if (!(r1 >= 10.0 && r2 >= 10.0)) ok = false;
    }
    std::printf("  note: the w->0 limit is half the exact two-dimensional "
                "Coulomb energy -mu D^2 (1+tau/2)^2 / (2 hbar^2 (n+1/2+|m|)^2); "
                "the factor 2 is a property of the closed form, reported here, "
                "not corrected\n");
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Special-function accuracy against independent references.
double jacobi_route(int n, double t, double c, double x) {
    // 2F1(-n, n+t; c; x) = P_n^{(c-1, t-c)}(1-2x) n! / (c)_n via the three-term
    // recurrence for Jacobi polynomials
    const double al = c - 1.0, be = t - c, u = 1.0 - 2.0 * x;
    double p0 = 1.0, p1 = 0.5 * (al - be) + 0.5 * (al + be + 2.0) * u;
    if (n == 0) return 1.0;
    for (int k = 2; k <= n; ++k) {
        const double a1 = 2.0 * k * (k + al + be) * (2.0 * k + al + be - 2.0);
        const double a2 = (2.0 * k + al + be - 1.0) * (al * al - be * be);
        const double a3 = (2.0 * k + al + be - 1.0) * (2.0 * k + al + be) *
                          (2.0 * k + al + be - 2.0);
        const double a4 = 2.0 * (k + al - 1.0) * (k + be - 1.0) *
                          (2.0 * k + al + be);
        const double p = ((a2 + a3 * u) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p;
    }
    double poch = 1.0;
    for (int k = 0; k < n; ++k) poch *= (c + k) / (1.0 + k);
    return p1 / poch;
}

bool criterion8() {
    std::ifstream in(source_path("tests/data/erf_reference.csv"));
    if (!in) {
        std::printf("  reference cloud tests/data/erf_reference.csv missing\n");
        return false;
    }
    std::string line;
    std::getline(in, line);
    if (line != "re_z,im_z,re_erf,im_erf") {
        std::printf("  reference cloud header unexpected: %s\n", line.c_str());
        return false;
    }
    double worst_erf = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double re_z, im_z, re_e, im_e;
        char comma;
        ss >> re_z >> comma >> im_z >> comma >> re_e >> comma >> im_e;
        const std::complex<double> got = erf_complex({re_z, im_z});
        worst_erf = std::max(worst_erf, mixed_err(got.real(), re_e));
        worst_erf = std::max(worst_erf, mixed_err(got.imag(), im_e));
        ++rows;
    }
    std::printf("  complex error function: %d reference points, worst "
                "deviation %.3e (tolerance 1e-10)\n",
                rows, worst_erf);

    double worst_hyp = 0.0;
    for (int n : {0, 1, 2, 3, 5, 8, 13, 20}) {
        for (double t : {2.7, 5.3, 9.1, 14.8}) {
            for (double c : {0.7, 1.3, 2.6, 4.9}) {
                for (double x : {0.05, 0.15, 0.3, 0.55, 0.8, 0.95}) {
                    const double got = hyp2f1_terminating(n, n + t, c, x);
                    const double ref = jacobi_route(n, t, c, x);
                    worst_hyp = std::max(worst_hyp, mixed_err(got, ref));
                }
            }
        }
    }
    std::printf("  terminating hypergeometric: 768 recurrence cross-checks, "
                "worst deviation %.3e (tolerance 1e-10)\n",
                worst_hyp);
    return rows == 1000 && worst_erf <= 1e-10 && worst_hyp <= 1e-10;
}

// ---------------------------------------------------------------------------
// 9. Plumbing: config round-trip, byte-stable CSV, verify exit codes.
int run_cli(const std::string& args, const std::string& tag) {
    const std::string cmd = std::string(IUGEHP_CLI_PATH) + " " + args +
                            " > acc_cli_" + tag + ".out 2> acc_cli_" + tag +
                            ".err";
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion9() {
    bool ok = true;
    const char* configs[9] = {
        "fixtures/oracle1.json",      "fixtures/oracle2.json",
        "fixtures/oracle3.json",      "fixtures/oracle4.json",
        "fixtures/oracle5.json",      "fixtures/thermo.json",
        "fixtures/table_pattern.json", "tests/data/nmax20.json",
        "tests/data/partition_sum_nmax5.json"};
    int round_trips = 0;
    for (const char* rel : configs) {
        const RunConfig rc = load_config(source_path(rel));
        const nlohmann::json once = config_to_json(rc);
        const nlohmann::json twice = config_to_json(parse_config(once));
        if (once == twice) {
            ++round_trips;
        } else {
            std::printf("  round trip changed %s\n", rel);
            ok = false;
        }
    }
    std::printf("  config round trips stable: %d/9\n", round_trips);

    const std::string cfg = source_path("fixtures/table_pattern.json");
    const int ca = run_cli("--config " + cfg + " --out acc_c9_a.csv energies", "a");
    const int cb = run_cli("--config " + cfg + " --out acc_c9_b.csv energies", "b");
    const std::string bytes_a = read_file("acc_c9_a.csv");
    const std::string bytes_b = read_file("acc_c9_b.csv");
    const bool stable = ca == 0 && cb == 0 && !bytes_a.empty() && bytes_a == bytes_b;
    std::printf("  repeated energy-table runs byte-identical: %s (%zu bytes)\n",
                stable ? "yes" : "NO", bytes_a.size());
    if (!stable) ok = false;
    const std::string committed =
        read_file(source_path("tests/data/energies_table_pattern.csv"));
    std::printf("  matches committed golden table: %s\n",
                bytes_a == committed ? "yes" : "no (diagnostic only)");

    const int pass_code =
        run_cli("--config " + source_path("fixtures/oracle1.json") +
                    " verify quadrature",
                "v0");
    const int breach_code =
        run_cli("--config " + source_path("fixtures/oracle1.json") +
                    " verify quadrature --tolerance 1e-30",
                "v1");
    std::printf("  verify exit codes: all-pass -> %d (want 0), injected "
                "breach -> %d (want 1)\n",
                pass_code, breach_code);
    if (pass_code != 0 || breach_code != 1) ok = false;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }
    const int which = std::atoi(argv[1]);
    bool pass = false;
    switch (which) {
        case 1: pass = criterion1(); break;
        case 2: pass = criterion2(); break;
        case 3: pass = criterion3(); break;
        case 4: pass = criterion4(); break;
        case 5: pass = criterion5(); break;
        case 6: pass = criterion6(); break;
        case 7: pass = criterion7(); break;
        case 8: pass = criterion8(); break;
        case 9: pass = criterion9(); break;
        default:
            std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
            return 2;
    }
    std::printf("[crit-%d] %s\n", which, pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}
