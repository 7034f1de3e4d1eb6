// SPDX-License-Identifier: MIT
/**
    \file
    \brief the binary differential equation of asymptotic curves, its folded
           singularity at the origin, and the inflection branch

    The asymptotic directions of the surface satisfy
        Ω = A dy² + 2B dx dy + C dx² = 0
    with A = bn − cm, 2B = an − cl, C = am − bl built from the half second
    partials (a, …, n).  The discriminant 2B² − 4AC equals the parabolic-curve
    function δ.

    On the slope cover p = dy/dx the equation becomes the surface
        Ω₃(x, y, p) = C p² + 2B p + A = 0,
    carrying the lifted field ξ = pΩ_p ∂x + Ω_p ∂y − (Ω_y + pΩ_x) ∂p, which is
    tangent to {Ω₃ = 0} identically and projects to the asymptotic foliations.
    At the origin of the adapted chart Ω₃ has the double root p = 0 and ξ
    vanishes: a folded singularity, classified by the linearization of ξ
    restricted to {Ω₃ = 0} (saddle / node / focus by determinant and
    eigenvalue discriminant).

    The inflection branch through the origin is cut out by Ω = 0 together with
    the inflection condition Ω_y + pΩ_x = 0; eliminating p and then x gives
    its graph x = c₂y² + ⋯ as an exact power series.
*/

#pragma once

#include <p3c/locus.hpp>
#include <p3c/surface.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Binary Differential Equation
// --------------------------------------------------------------------------------------------------------------------

/// working degree bound: surface jets re-embedded as exact polynomials so that
/// coefficient products keep every term the locus expansions can reach
inline constexpr int bde_lift_bound = surface_degree_bound + 3;

template <scalar k_t>
struct bde_t {
    jet2_t<k_t> acoef{};   ///< A  = bn − cm
    jet2_t<k_t> b2coef{};  ///< 2B = an − cl
    jet2_t<k_t> ccoef{};   ///< C  = am − bl

    static auto from_surface(surface_jet_t<k_t> const& s) -> bde_t
    {
        auto const half = k_t{1} / k_t{2};
        auto const f1 = s.f1.truncated(bde_lift_bound);
        auto const f2 = s.f2.truncated(bde_lift_bound);
        auto const a = half * f1.partial(0).partial(0);
        auto const b = half * f1.partial(0).partial(1);
        auto const c = half * f1.partial(1).partial(1);
        auto const l = half * f2.partial(0).partial(0);
        auto const m = half * f2.partial(0).partial(1);
        auto const n = half * f2.partial(1).partial(1);
        return bde_t{b * n - c * m, a * n - c * l, a * m - b * l};
    }

    /// (2B)² − 4AC; agrees with the parabolic-curve function δ of the surface
    auto discriminant() const -> jet2_t<k_t> { return b2coef * b2coef - k_t{4} * acoef * ccoef; }

    /// the slope-cover surface Ω₃(x, y, p) = C p² + 2B p + A
    auto omega3() const -> jet3_t<k_t>
    {
        auto result = jet3_t<k_t>{bde_lift_bound - 2};
        auto const lift = [&](jet2_t<k_t> const& coef, int pdeg) {
            for (auto const& [exps, value] : coef.terms()) {
                result = result
                    + jet3_t<k_t>::monomial({exps[0], exps[1], pdeg}, value, bde_lift_bound - 2);
            }
        };
        lift(acoef, 0);
        lift(b2coef, 1);
        lift(ccoef, 2);
        return result;
    }
};

/// ξ = pΩ_p ∂x + Ω_p ∂y − (Ω_y + pΩ_x) ∂p as jet components (x, y, p order)
template <scalar k_t>
auto lifted_field(jet3_t<k_t> const& omega) -> std::array<jet3_t<k_t>, 3>
{
    auto const omega_x = omega.partial(0);
    auto const omega_y = omega.partial(1);
    auto const omega_p = omega.partial(2);
    auto const p = jet3_t<k_t>::variable(2, omega_p.degree_bound());
    return {p * omega_p, omega_p, -(omega_y + p * omega_x)};
}

// --------------------------------------------------------------------------------------------------------------------
// Folded Singularity
// --------------------------------------------------------------------------------------------------------------------

enum class folded_type_t {
    folded_saddle,
    folded_node,
    folded_focus,
    non_generic,  ///< within tolerance of a vanishing determinant or eigenvalue discriminant
};

inline auto to_string(folded_type_t type) -> std::string
{
    switch (type) {
        case folded_type_t::folded_saddle: return "FoldedSaddle";
        case folded_type_t::folded_node: return "FoldedNode";
        case folded_type_t::folded_focus: return "FoldedFocus";
        case folded_type_t::non_generic: return "NonGeneric";
    }
    return "?";
}

template <scalar k_t>
struct folded_point_t {
    std::array<std::array<k_t, 2>, 2> linear{};  ///< linearization of ξ on {Ω₃ = 0} in (y, p)
    k_t trace{};
    k_t det{};
    k_t disc{};  ///< trace² − 4·det
    folded_type_t type = folded_type_t::non_generic;
};

/**
    Classify the folded singularity of the asymptotic BDE at the origin of the
    adapted chart.  Requires A, A_y and 2B to vanish at the origin (double
    root p = 0 on the discriminant curve) and C(0) ≠ 0; otherwise the origin
    is not a folded singular point of this chart and a chart_error is raised.
*/
template <scalar k_t>
auto classify_folded(bde_t<k_t> const& eq, double tol = nonzero_gate) -> folded_point_t<k_t>
{
    auto const origin = std::array<k_t, 2>{k_t{0}, k_t{0}};
    auto const a0 = eq.acoef.evaluate(origin);
    auto const ay0 = eq.acoef.partial(1).evaluate(origin);
    auto const b20 = eq.b2coef.evaluate(origin);
    auto const c0 = eq.ccoef.evaluate(origin);
    auto const ax0 = eq.acoef.partial(0).evaluate(origin);
    auto const unit = k_t{1};
    if (!nearly_zero(a0, unit, tol) || !nearly_zero(ay0, unit, tol) || !nearly_zero(b20, unit, tol)) {
        throw chart_error{"classify_folded: origin is not a folded singular point (A, A_y, 2B must vanish)"};
    }
    if (nearly_zero(c0, unit, tol) || nearly_zero(ax0, unit, tol)) {
        throw chart_error{"classify_folded: degenerate slope cover at the origin (C or A_x vanishes)"};
    }

    // ξ restricted to {Ω₃ = 0}: the surface is a graph x = χ(y, p) with
    // dχ(0) = 0, so the restriction is the (y, p) block of the linearization.
    auto out = folded_point_t<k_t>{};
    out.linear[0][0] = eq.b2coef.partial(1).evaluate(origin);
    out.linear[0][1] = k_t{2} * c0;
    out.linear[1][0] = -eq.acoef.partial(1).partial(1).evaluate(origin);
    out.linear[1][1] = -(eq.b2coef.partial(1).evaluate(origin) + ax0);
    out.trace = out.linear[0][0] + out.linear[1][1];
    out.det = out.linear[0][0] * out.linear[1][1] - out.linear[0][1] * out.linear[1][0];
    out.disc = out.trace * out.trace - k_t{4} * out.det;

    auto const det_d = to_double(out.det);
    auto const disc_d = to_double(out.disc);
    auto const scale = std::max({1.0, std::abs(det_d), std::abs(disc_d)});
    if (std::abs(det_d) <= tol * scale || std::abs(disc_d) <= tol * scale) {
        out.type = folded_type_t::non_generic;
    } else if (det_d < 0.0) {
        out.type = folded_type_t::folded_saddle;
    } else if (disc_d > 0.0) {
        out.type = folded_type_t::folded_node;
    } else {
        out.type = folded_type_t::folded_focus;
    }
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Inflection Branch
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct inflection_report_t {
    jet3_t<k_t> x_of_y{};   ///< graph series x(y) of the branch (variables: y only)
    jet3_t<k_t> slope_of_y{};  ///< slope series p(y) along the branch
    k_t c2{};               ///< y² coefficient of x(y)
};

/**
    The inflection branch through the origin: eliminate the slope from
    {Ω₃ = 0, Ω₃_y + pΩ₃_x = 0} and solve for x as a series in y.  Exact over
    rationals.  The two elimination pivots vanishing name the offending
    coefficient locus via non_generic_error.
*/
template <scalar k_t>
auto inflection_locus(surface_jet_t<k_t> const& s) -> inflection_report_t<k_t>
{
    using jet = jet3_t<k_t>;
    auto const eq = bde_t<k_t>::from_surface(s);
    auto const omega = eq.omega3();
    auto const inflection = omega.partial(1) + jet::variable(2, omega.degree_bound() - 1) * omega.partial(0);

    auto slope_xy = jet{};
    try {
        slope_xy = implicit_solve(inflection, 2);
    } catch (singular_implicit_error const&) {
        throw non_generic_error{"inflection_locus: a32 - 6*b33 = 0 (slope-elimination pivot vanishes)"};
    }

    auto const bound = slope_xy.degree_bound();
    auto const var_x = jet::variable(0, bound);
    auto const var_y = jet::variable(1, bound);
    auto const graph_equation = omega.substitute(std::array<jet, 3>{var_x, var_y, slope_xy});

    auto out = inflection_report_t<k_t>{};
    try {
        out.x_of_y = implicit_solve(graph_equation, 0);
    } catch (singular_implicit_error const&) {
        throw non_generic_error{"inflection_locus: a32 = 0 (graph pivot vanishes)"};
    }
    out.slope_of_y = slope_xy.substitute(std::array<jet, 3>{out.x_of_y, var_y, jet{bound}});
    out.c2 = out.x_of_y.coeff({0, 2, 0});
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Phase Portrait
// --------------------------------------------------------------------------------------------------------------------

struct portrait_t {
    std::vector<std::vector<std::array<double, 2>>> curves;  ///< projected integral curves, as polylines
    std::vector<std::array<double, 2>> cusps;                ///< criminant crossings (Ω_p sign changes)
};

namespace detail {

/// one Newton pass in the slope only, returning whether |Ω| was driven under the cap
inline auto project_slope(jet3_t<double> const& omega, jet3_t<double> const& omega_p, double x, double y, double& p)
    -> bool
{
    for (int it = 0; it < 12; ++it) {
        auto const value = omega.evaluate({x, y, p});
        if (std::abs(value) < 1e-13) { return true; }
        auto const dv = omega_p.evaluate({x, y, p});
        if (std::abs(dv) < 1e-10) { return false; }
        p -= value / dv;
    }
    return std::abs(omega.evaluate({x, y, p})) < 1e-10;
}

}  // namespace detail

/**
    Integral curves of the asymptotic foliations near the origin: fixed-step
    RK4 on the lifted field, clipped to the box |x|, |y| ≤ box, with slope
    drift re-projected onto {Ω₃ = 0} and criminant crossings recorded as cusp
    markers.  Seeds below the discriminant (no real slope) are skipped.
*/
inline auto integrate_curves(bde_t<double> const& eq, double box = 0.3, double step = 1e-3,
                             int seeds_per_axis = 7, int max_steps = 1500) -> portrait_t
{
    auto const omega = eq.omega3();
    auto const omega_p = omega.partial(2);
    auto const field = lifted_field(omega);
    auto const velocity = [&](std::array<double, 3> const& z) {
        return std::array<double, 3>{field[0].evaluate(z), field[1].evaluate(z), field[2].evaluate(z)};
    };

    auto out = portrait_t{};
    for (int ix = 0; ix < seeds_per_axis; ++ix) {
        for (int iy = 0; iy < seeds_per_axis; ++iy) {
            auto const sx = -box + 2.0 * box * double(ix) / double(seeds_per_axis - 1);
            auto const sy = -box + 2.0 * box * double(iy) / double(seeds_per_axis - 1);
            auto const aq = eq.acoef.evaluate({sx, sy});
            auto const bq = eq.b2coef.evaluate({sx, sy});
            auto const cq = eq.ccoef.evaluate({sx, sy});
            auto const disc = bq * bq - 4.0 * aq * cq;
            if (disc < 0.0 || std::abs(cq) < 1e-12) { continue; }  // elliptic side or degenerate quadratic
            for (auto const sign : {-1.0, 1.0}) {
                auto const p0 = (-bq + sign * std::sqrt(disc)) / (2.0 * cq);
                for (auto const orientation : {-1.0, 1.0}) {
                    auto z = std::array<double, 3>{sx, sy, p0};
                    auto curve = std::vector<std::array<double, 2>>{{z[0], z[1]}};
                    auto last_omega_p = omega_p.evaluate(z);
                    for (int n = 0; n < max_steps; ++n) {
                        auto const scaled = [&](std::array<double, 3> const& w) {
                            auto v = velocity(w);
                            auto const norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
                            if (norm < 1e-12) { return std::array<double, 3>{0.0, 0.0, 0.0}; }
                            return std::array<double, 3>{orientation * v[0] / norm, orientation * v[1] / norm,
                                                         orientation * v[2] / norm};
                        };
                        auto const k1 = scaled(z);
                        if (k1[0] == 0.0 && k1[1] == 0.0 && k1[2] == 0.0) { break; }  // stagnation point
                        auto const at = [&](double h, std::array<double, 3> const& k) {
                            return std::array<double, 3>{z[0] + h * k[0], z[1] + h * k[1], z[2] + h * k[2]};
                        };
                        auto const k2 = scaled(at(step / 2.0, k1));
                        auto const k3 = scaled(at(step / 2.0, k2));
                        auto const k4 = scaled(at(step, k3));
                        z = {z[0] + step * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]) / 6.0,
                             z[1] + step * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]) / 6.0,
                             z[2] + step * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]) / 6.0};
                        if (std::abs(z[0]) > box || std::abs(z[1]) > box) { break; }
                        if (n % 25 == 24) { detail::project_slope(omega, omega_p, z[0], z[1], z[2]); }
                        auto const now_omega_p = omega_p.evaluate(z);
                        if (last_omega_p * now_omega_p < 0.0) { out.cusps.push_back({z[0], z[1]}); }
                        last_omega_p = now_omega_p;
                        curve.push_back({z[0], z[1]});
                    }
                    if (curve.size() > 5) { out.curves.push_back(std::move(curve)); }
                }
            }
        }
    }
    return out;
}

}  // namespace p3c
