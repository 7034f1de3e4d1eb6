// SPDX-License-Identifier: MIT
/**
    \file
    \brief numerical continuation of the seven curve germs through a P₃(c)
           point, their fitted quadratic invariants, and the closed forms they
           are reconciled against

    Seven labeled curves pass through the origin of the adapted chart, each a
    germ x(y) = c₂y² + ⋯ tangent to the discriminant curve:

      - delta (parabolic) and flecnodal: cut out by δ = 0 and by the
        asymptotic-inflection system {Ω₃ = 0, Ω₃_y + pΩ₃_x = 0};
      - B₂ and S₂: heights where the projection along (u, 1, ·, ·) acquires a
        degenerate cross-cap (local systems in (x̄, u));
      - A₀S₁, A₀S₀|A₁, (A₀S₀)₂: heights where a singular projection point
        pairs with a coincident regular image (bi-local systems in
        (x̄₁, y₁, u)).

    Each label carries an independently derived closed-form c₂.  The oracle
    traces the curve by damped Newton continuation from exact leading-order
    seeds, fits the quadratic coefficient from samples on both sides, and
    reconcile() compares oracle against closed form and checks the pairwise
    difference identities that tie all seven invariants together.
*/

#pragma once

#include <p3c/bde.hpp>
#include <p3c/locus.hpp>
#include <p3c/projection.hpp>
#include <p3c/surface.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Closed Forms
// --------------------------------------------------------------------------------------------------------------------

namespace detail {

template <scalar k_t>
auto require_nonzero(k_t const& value, k_t const& scale, char const* locus) -> void
{
    if (nearly_zero(value, scale, nonzero_gate)) {
        throw non_generic_error{std::string{"closed form undefined: "} + locus + " = 0"};
    }
}

}  // namespace detail

/**
    The quadratic invariant c₂ of a labeled curve germ as a closed form in the
    three controlling coefficients.  Throws non_generic_error naming the
    vanishing denominator when the surface sits on a degeneracy locus.
*/
template <scalar k_t>
auto closed_form_c(locus_label_t label, k_t const& a32, k_t const& a44, k_t const& b33) -> k_t
{
    auto const scale = k_t{1} + a32 * a32 + a44 * a44 + b33 * b33;
    detail::require_nonzero(a32, scale, "a32");

    switch (label) {
        case locus_label_t::parabolic:
            return (k_t{6} * a32 * b33 - k_t{9} * b33 * b33 - k_t{6} * a44) / a32;
        case locus_label_t::a0s02:
            return (k_t{12} * a32 * b33 - k_t{9} * b33 * b33 - k_t{6} * a44) / a32;
        case locus_label_t::b2: {
            auto const den = a32 - k_t{2} * b33;
            detail::require_nonzero(den, scale, "a32 - 2*b33");
            auto const num = k_t{3} * a32 * a32 * a32 * b33 - k_t{4} * a32 * a32 * b33 * b33
                - k_t{3} * a44 * a32 * a32 - k_t{8} * a44 * a32 * b33 + k_t{12} * a44 * b33 * b33
                + k_t{8} * a44 * a44;
            return k_t{2} * num / (a32 * den * den);
        }
        case locus_label_t::s2: {
            auto const den = a32 + k_t{6} * b33;
            detail::require_nonzero(den, scale, "a32 + 6*b33");
            auto const num = a32 * a32 * a32 * b33 + k_t{48} * a32 * a32 * b33 * b33
                - k_t{72} * a32 * b33 * b33 * b33 - a44 * a32 * a32 - k_t{72} * a44 * a32 * b33
                + k_t{36} * a44 * b33 * b33 + k_t{24} * a44 * a44;
            return k_t{6} * num / (a32 * den * den);
        }
        case locus_label_t::flecnodal: {
            auto const den = a32 - k_t{6} * b33;
            detail::require_nonzero(den, scale, "a32 - 6*b33");
            return k_t{6} * (a32 * b33 - a44)
                * (a32 * a32 + k_t{24} * a32 * b33 - k_t{36} * b33 * b33 - k_t{24} * a44)
                / (a32 * den * den);
        }
        case locus_label_t::a0s1: {
            auto const den = k_t{4} * a32 * b33 - k_t{4} * b33 * b33 - k_t{3} * a44;
            detail::require_nonzero(den, scale, "4*a32*b33 - 4*b33^2 - 3*a44");
            return (k_t{3} * a32 * a32 * b33 * b33 - k_t{4} * a32 * a44 * b33
                    + k_t{3} * a44 * b33 * b33 + k_t{2} * a44 * a44)
                / (a32 * den);
        }
        case locus_label_t::a0s0a1: {
            auto const den = a32 * b33 - b33 * b33 - a44;
            detail::require_nonzero(den, scale, "a32*b33 - b33^2 - a44");
            return (k_t{3} * a32 * a32 * b33 * b33 - k_t{16} * a32 * a44 * b33
                    + k_t{12} * a44 * b33 * b33 + k_t{8} * a44 * a44)
                / (k_t{4} * den * a32);
        }
    }
    throw std::invalid_argument{"closed_form_c: unknown label"};
}

template <scalar k_t>
auto closed_form_c(locus_label_t label, surface_jet_t<k_t> const& s) -> k_t
{
    return closed_form_c(label, s.a(3, 2), s.a(4, 4), s.b(3, 3));
}

/// the labeled germ built from the closed form alone (2-jet only; no samples)
template <scalar k_t>
auto closed_form_germ(locus_label_t label, surface_jet_t<k_t> const& s) -> locus_germ_t<k_t>
{
    auto germ = locus_germ_t<k_t>{};
    germ.label = label;
    germ.c1 = k_t{0};
    germ.c2 = closed_form_c(label, s);
    germ.series = jet2_t<k_t>::monomial({0, 2}, germ.c2, surface_degree_bound);
    return germ;
}

// --------------------------------------------------------------------------------------------------------------------
// Leading-Order Seeds
// --------------------------------------------------------------------------------------------------------------------

/// leading coefficients and t-powers of the unknowns: z_i(t) ≈ coeff[i] · t^order[i]
struct seed_info_t {
    std::vector<double> coeff;
    std::vector<int> order;
};

/**
    Exact leading-order branch data for each label's residual system, derived
    from the order-by-order solution of the systems.  These select the branch
    whose on-surface curve carries the label's invariant (every system also
    has spurious branches — e.g. a direction with u = −3b₃₃y reproducing other
    labels' curves — which Newton must be steered away from).
*/
inline auto leading_seed(locus_label_t label, double a32, double a44, double b33) -> seed_info_t
{
    auto const c2 = [&](locus_label_t lab) { return closed_form_c(lab, a32, a44, b33); };
    switch (label) {
        case locus_label_t::parabolic:
            return {{c2(label)}, {2}};
        case locus_label_t::flecnodal: {
            auto const den = a32 - 6.0 * b33;
            detail::require_nonzero(den, 1.0 + std::abs(a32) + std::abs(b33), "a32 - 6*b33");
            return {{c2(label), 12.0 * (a32 * b33 - a44) / den}, {2, 1}};
        }
        case locus_label_t::b2: {
            auto const u1 = 2.0 * (a32 * b33 - 2.0 * a44) / (a32 - 2.0 * b33);
            return {{c2(label) - u1, u1}, {2, 1}};
        }
        case locus_label_t::s2: {
            auto const u1 = 6.0 * (2.0 * a44 - 3.0 * a32 * b33) / (a32 + 6.0 * b33);
            return {{c2(label) - u1, u1}, {2, 1}};
        }
        case locus_label_t::a0s1: {
            auto const l1 = -(a32 * b33 - 2.0 * b33 * b33 - a44)
                / (4.0 * a32 * b33 - 4.0 * b33 * b33 - 3.0 * a44);
            auto const u1 = -b33 * (2.0 * l1 + 1.0);
            auto const x2 = -(3.0 * a44 * l1 * l1 + 2.0 * a32 * l1 * u1 + 2.0 * a44 * l1 + u1 * u1
                              + a32 * u1 + a44)
                / a32;
            return {{x2, l1, u1}, {2, 1, 1}};
        }
        case locus_label_t::a0s0a1: {
            auto const den = -3.0 * a32 * b33 + 2.0 * a44 + 4.0 * b33 * b33;
            detail::require_nonzero(den, 1.0 + std::abs(a32 * b33) + std::abs(a44),
                                    "2*a44 + 4*b33^2 - 3*a32*b33 (branch-slope pivot)");
            auto const l1 = 2.0 * (a32 * b33 - a44 - b33 * b33) / den;
            auto const u1 = -b33 * (2.0 * l1 + 1.0);
            auto const x2 = ((4.0 * a32 * b33 - 3.0 * a44 - 4.0 * b33 * b33) * l1 * l1
                             + (4.0 * a32 * b33 - 2.0 * a44 - 4.0 * b33 * b33) * l1
                             + (a32 * b33 - a44 - b33 * b33))
                / a32;
            return {{x2, l1, u1}, {2, 1, 1}};
        }
        case locus_label_t::a0s02:
            return {{(9.0 * a32 * b33 - 9.0 * b33 * b33 - 6.0 * a44) / a32, 1.0, -3.0 * b33}, {2, 1, 1}};
    }
    throw std::invalid_argument{"leading_seed: unknown label"};
}

// --------------------------------------------------------------------------------------------------------------------
// Damped Newton
// --------------------------------------------------------------------------------------------------------------------

namespace detail {

/// partial-pivot Gaussian elimination, in place; returns false on (near-)singular pivot
inline auto solve_linear(std::vector<std::vector<double>>& matrix, std::vector<double>& rhs) -> bool
{
    auto const n = matrix.size();
    for (std::size_t col = 0; col < n; ++col) {
        auto pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(matrix[row][col]) > std::abs(matrix[pivot][col])) { pivot = row; }
        }
        if (std::abs(matrix[pivot][col]) < 1e-300) { return false; }
        std::swap(matrix[pivot], matrix[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            auto const factor = matrix[row][col] / matrix[col][col];
            for (std::size_t k = col; k < n; ++k) { matrix[row][k] -= factor * matrix[col][k]; }
            rhs[row] -= factor * rhs[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        auto value = rhs[col];
        for (std::size_t k = col + 1; k < n; ++k) { value -= matrix[col][k] * rhs[k]; }
        rhs[col] = value / matrix[col][col];
    }
    return true;
}

inline auto max_abs(std::vector<double> const& v) -> double
{
    auto out = 0.0;
    for (auto const value : v) { out = std::max(out, std::abs(value)); }
    return out;
}

}  // namespace detail

using residual_fn_t = std::function<std::vector<double>(std::vector<double> const&)>;

/**
    Damped Newton with central-difference Jacobian and row equilibration
    (residual rows of a system can have widely different magnitudes along a
    continuation; scaling each row by its largest Jacobian entry keeps the
    solve well posed).  Converges on step size; returns false on breakdown.
*/
inline auto newton_solve(residual_fn_t const& residual, std::vector<double>& z, int max_iterations = 60) -> bool
{
    auto const n = z.size();
    for (int iteration = 0; iteration < max_iterations; ++iteration) {
        auto r = residual(z);
        auto jac = std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0));
        for (std::size_t j = 0; j < n; ++j) {
            auto const h = 1e-6 * std::max(1.0, std::abs(z[j]));
            auto zp = z, zm = z;
            zp[j] += h;
            zm[j] -= h;
            auto const rp = residual(zp);
            auto const rm = residual(zm);
            for (std::size_t i = 0; i < n; ++i) { jac[i][j] = (rp[i] - rm[i]) / (2.0 * h); }
        }
        auto rhs = std::vector<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto row_scale = detail::max_abs(jac[i]);
            if (row_scale < 1e-300) { return false; }
            for (auto& entry : jac[i]) { entry /= row_scale; }
            rhs[i] = -r[i] / row_scale;
        }
        if (!detail::solve_linear(jac, rhs)) { return false; }

        auto const r_norm = detail::max_abs(r);
        auto lambda = 1.0;
        auto accepted = false;
        auto z_next = z;
        for (int halving = 0; halving < 20; ++halving) {
            for (std::size_t i = 0; i < n; ++i) { z_next[i] = z[i] + lambda * rhs[i]; }
            if (detail::max_abs(residual(z_next)) < r_norm || r_norm == 0.0) {
                accepted = true;
                break;
            }
            lambda /= 2.0;
        }
        if (!accepted) {
            // no descent: accept the full step only if already at rounding level
            if (detail::max_abs(rhs) <= 1e-12 * std::max(1.0, detail::max_abs(z))) { return true; }
            return false;
        }
        z = z_next;
        if (lambda * detail::max_abs(rhs) <= 1e-12 * std::max(1.0, detail::max_abs(z))) { return true; }
    }
    return false;
}

// --------------------------------------------------------------------------------------------------------------------
// Continuation Tracer
// --------------------------------------------------------------------------------------------------------------------

namespace detail {

/// least-squares fit of x(y)/y² against {1/s, 1, s, s², s³, s⁴}, s = y/Y, both sides jointly
inline auto fit_quadratic_invariant(std::vector<locus_sample_t> const& samples, double& c1, double& c2,
                                    std::array<double, 6>& coefficients) -> bool
{
    auto y_scale = 0.0;
    for (auto const& sample : samples) { y_scale = std::max(y_scale, std::abs(sample.y)); }
    if (y_scale == 0.0 || samples.size() < 8) { return false; }

    auto normal = std::vector<std::vector<double>>(6, std::vector<double>(6, 0.0));
    auto rhs = std::vector<double>(6, 0.0);
    for (auto const& sample : samples) {
        auto const s = sample.y / y_scale;
        if (s == 0.0) { continue; }
        auto const basis = std::array<double, 6>{1.0 / s, 1.0, s, s * s, s * s * s, s * s * s * s};
        auto const value = sample.x / (sample.y * sample.y);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) { normal[i][j] += basis[i] * basis[j]; }
            rhs[i] += basis[i] * value;
        }
    }
    if (!solve_linear(normal, rhs)) { return false; }
    for (int i = 0; i < 6; ++i) { coefficients[i] = rhs[i]; }
    c1 = y_scale * rhs[0];
    c2 = rhs[1];
    return true;
}

}  // namespace detail

/**
    Trace one labeled locus through the origin by two-sided continuation in
    the height parameter and fit its germ.  The surface must pass the P₃(c)
    detection gate (invalid_moduli_error otherwise, carrying the failing
    condition; a non-versal surface is refused the same way).
*/
template <scalar k_t>
auto trace_locus(locus_label_t label, surface_jet_t<k_t> const& s, double y_range = 0.05, int steps = 50)
    -> locus_germ_t<double>
{
    auto const gate = detect_p3c(s);
    if (!gate.is_p3c) {
        throw invalid_moduli_error{"trace_locus: not a P3(c) point (" + gate.failing_condition + ")"};
    }
    if (!gate.versal) {
        throw invalid_moduli_error{"trace_locus: non-versal point (5*a32*b33 - 6*b33^2 - 4*a44 = 0)"};
    }
    if (steps < 8 || y_range <= 0.0) { throw std::invalid_argument{"trace_locus: bad grid"}; }

    auto const sd = to_double_surface(s);
    auto const a32 = to_double(s.a(3, 2));
    auto const a44 = to_double(s.a(4, 4));
    auto const b33 = to_double(s.b(3, 3));
    auto const seed = leading_seed(label, a32, a44, b33);

    // residual system and sample assembly per label family
    auto fam = std::shared_ptr<projection_family_t>{};
    auto delta6 = jet2_t<double>{};
    auto omega = jet3_t<double>{};
    auto inflect = jet3_t<double>{};
    auto const is_local = label == locus_label_t::b2 || label == locus_label_t::s2;
    auto const is_bigerm =
        label == locus_label_t::a0s1 || label == locus_label_t::a0s0a1 || label == locus_label_t::a0s02;
    if (is_local || is_bigerm) {
        fam = std::make_shared<projection_family_t>(sd);
    } else {
        auto const eq = bde_t<double>::from_surface(sd);
        delta6 = eq.discriminant();
        omega = eq.omega3();
        inflect = omega.partial(1) + jet3_t<double>::variable(2, omega.degree_bound() - 1) * omega.partial(0);
    }

    auto const system = [&](std::vector<double> const& z, double t) -> std::vector<double> {
        switch (label) {
            case locus_label_t::parabolic: return {delta6.evaluate({z[0], t})};
            case locus_label_t::flecnodal:
                return {omega.evaluate({z[0], t, z[1]}), inflect.evaluate({z[0], t, z[1]})};
            case locus_label_t::b2:
            case locus_label_t::s2: {
                auto const r = local_residual(*fam, label, {z[0], z[1]}, t);
                return {r[0], r[1]};
            }
            default: {
                auto const r = bigerm_residual(*fam, label, {z[0], z[1], z[2]}, t);
                return {r[0], r[1], r[2]};
            }
        }
    };

    auto const make_sample = [&](std::vector<double> const& z, double t) -> locus_sample_t {
        auto sample = locus_sample_t{};
        sample.t = t;
        sample.x_chart = z[0];
        switch (label) {
            case locus_label_t::parabolic:
                sample.x = z[0];
                sample.y = t;
                break;
            case locus_label_t::flecnodal:
                sample.u = z[1];  // slope of the asymptotic direction at the sample
                sample.x = z[0];
                sample.y = t;
                break;
            case locus_label_t::b2:
            case locus_label_t::s2: {
                sample.u = z[1];
                auto const [x, y] = assemble_local({z[0], z[1]}, t);
                sample.x = x;
                sample.y = y;
                break;
            }
            default: {
                sample.u = z[2];
                auto const [x, y] = assemble_bigerm(label, {z[0], z[1], z[2]}, t);
                sample.x = x;
                sample.y = y;
                break;
            }
        }
        return sample;
    };

    auto samples = std::vector<locus_sample_t>{};
    for (auto const side : {1.0, -1.0}) {
        auto z = std::vector<double>{};
        auto t_prev = 0.0;
        for (int k = 1; k <= steps; ++k) {
            auto const t = side * y_range * double(k) / double(steps);
            if (z.empty()) {
                for (std::size_t i = 0; i < seed.coeff.size(); ++i) {
                    z.push_back(seed.coeff[i] * std::pow(t, seed.order[i]));
                }
            } else {
                auto const ratio = t / t_prev;
                for (std::size_t i = 0; i < z.size(); ++i) { z[i] *= std::pow(ratio, seed.order[i]); }
            }
            auto const residual = [&](std::vector<double> const& w) { return system(w, t); };
            if (!newton_solve(residual, z)) {
                throw continuation_error{"trace_locus: " + to_string(label) + " continuation stalled at t = "
                                         + std::to_string(t) + " (last good |t| = " + std::to_string(std::abs(t_prev))
                                         + ")"};
            }
            t_prev = t;
            samples.push_back(make_sample(z, t));
        }
    }
    std::sort(samples.begin(), samples.end(), [](auto const& a, auto const& b) { return a.t < b.t; });

    auto germ = locus_germ_t<double>{};
    germ.label = label;
    germ.samples = std::move(samples);
    auto coefficients = std::array<double, 6>{};
    if (!detail::fit_quadratic_invariant(germ.samples, germ.c1, germ.c2, coefficients)) {
        throw continuation_error{"trace_locus: " + to_string(label) + " germ fit failed"};
    }
    auto y_scale = 0.0;
    for (auto const& sample : germ.samples) { y_scale = std::max(y_scale, std::abs(sample.y)); }
    germ.series = jet2_t<double>::monomial({0, 1}, germ.c1, surface_degree_bound)
        + jet2_t<double>::monomial({0, 2}, germ.c2, surface_degree_bound)
        + jet2_t<double>::monomial({0, 3}, coefficients[2] / y_scale, surface_degree_bound)
        + jet2_t<double>::monomial({0, 4}, coefficients[3] / (y_scale * y_scale), surface_degree_bound);
    return germ;
}

// --------------------------------------------------------------------------------------------------------------------
// Difference Identities
// --------------------------------------------------------------------------------------------------------------------

/**
    The twelve pairwise difference identities between the seven invariants in
    normalized moduli (α, β), returned as (name, residual) pairs; every
    residual is identically zero on the admissible moduli plane.  Exact over
    rationals.  Throws non_generic_error if an identity's own denominator
    vanishes at (α, β).
*/
template <scalar k_t>
auto coefficient_identities(k_t const& alpha, k_t const& beta) -> std::vector<std::pair<std::string, k_t>>
{
    auto const one = k_t{1};
    auto const c = [&](locus_label_t label) { return closed_form_c(label, one, alpha, beta); };
    auto const c_p = c(locus_label_t::parabolic);
    auto const c_b = c(locus_label_t::b2);
    auto const c_s = c(locus_label_t::s2);
    auto const c_f = c(locus_label_t::flecnodal);
    auto const c_s1 = c(locus_label_t::a0s1);
    auto const c_s01 = c(locus_label_t::a0s0a1);
    auto const c_s02 = c(locus_label_t::a0s02);

    auto const q = k_t{4} * alpha + k_t{6} * beta * beta - k_t{5} * beta;
    auto const big_k = q * q;
    auto const d2 = k_t{2} * beta - one;          // pole of c_B
    auto const d6m = k_t{6} * beta - one;         // pole of c_F
    auto const d6p = k_t{6} * beta + one;         // pole of c_S
    auto const pole1 = k_t{3} * alpha - k_t{4} * beta + k_t{4} * beta * beta;  // pole of c_s1
    auto const pole0 = alpha + beta * beta - beta;                             // pole of c_s01
    auto const scale = one + alpha * alpha + beta * beta;
    detail::require_nonzero(d2, scale, "2*beta - 1");
    detail::require_nonzero(d6m, scale, "6*beta - 1");
    detail::require_nonzero(d6p, scale, "6*beta + 1");
    detail::require_nonzero(pole1, scale, "3*alpha + 4*beta^2 - 4*beta");
    detail::require_nonzero(pole0, scale, "alpha + beta^2 - beta");

    auto const gamma2 = k_t{48} * beta * beta * alpha - k_t{60} * beta * beta * beta
        + k_t{36} * beta * beta * beta * beta - k_t{38} * beta * alpha + k_t{21} * beta * beta
        + k_t{16} * alpha * alpha;
    auto const gamma3 = gamma2 + k_t{6} * beta * alpha;
    auto const cross = (k_t{4} * alpha + k_t{6} * beta * beta - k_t{9} * beta) * q;

    auto out = std::vector<std::pair<std::string, k_t>>{};
    out.emplace_back("c_P - c_B = -K/(2b-1)^2", c_p - c_b + big_k / (d2 * d2));
    out.emplace_back("c_P - c_S = -9K/(6b+1)^2", c_p - c_s + k_t{9} * big_k / (d6p * d6p));
    out.emplace_back("c_P - c_F = -9K/(6b-1)^2", c_p - c_f + k_t{9} * big_k / (d6m * d6m));
    out.emplace_back("c_B - c_S = 8(6b-1)K/((2b-1)^2(6b+1)^2)",
                     c_b - c_s - k_t{8} * d6m * big_k / (d2 * d2 * d6p * d6p));
    out.emplace_back("c_B - c_F = 8(3b-1)K/((2b-1)^2(6b-1)^2)",
                     c_b - c_f - k_t{8} * (k_t{3} * beta - one) * big_k / (d2 * d2 * d6m * d6m));
    out.emplace_back("c_S - c_F = -216bK/((6b-1)^2(6b+1)^2)",
                     c_s - c_f + k_t{216} * beta * big_k / (d6m * d6m * d6p * d6p));
    out.emplace_back("c_P - c_s02 = -6b", c_p - c_s02 + k_t{6} * beta);
    out.emplace_back("c_P - c_s1 = -g2/(3a+4b^2-4b)", c_p - c_s1 + gamma2 / pole1);
    out.emplace_back("c_P - c_s01 = -g3/(4(a+b^2-b))", c_p - c_s01 + gamma3 / (k_t{4} * pole0));
    out.emplace_back("c_s02 - c_s1 = -(4a+6b^2-9b)(4a+6b^2-5b)/(3a+4b^2-4b)", c_s02 - c_s1 + cross / pole1);
    out.emplace_back("c_s02 - c_s01 = -(4a+6b^2-9b)(4a+6b^2-5b)/(4(a+b^2-b))",
                     c_s02 - c_s01 + cross / (k_t{4} * pole0));
    out.emplace_back("c_s1 - c_s01 = a(4a+6b^2-9b)(4a+6b^2-5b)/(4(3a+4b^2-4b)(a+b^2-b))",
                     c_s1 - c_s01 - alpha * cross / (k_t{4} * pole1 * pole0));
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Reconciliation
// --------------------------------------------------------------------------------------------------------------------

struct reconcile_line_t {
    locus_label_t label = locus_label_t::parabolic;
    double traced_c2 = 0.0;
    double closed_c2 = 0.0;
    double difference = 0.0;
    double linear_term = 0.0;  ///< fitted c₁, must vanish (tangency diagnostic)
    bool pass = false;
};

struct identity_line_t {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct reconcile_report_t {
    std::vector<reconcile_line_t> curves;
    std::vector<identity_line_t> identities;
    std::vector<std::string> notes;
    bool pass = false;
};

/**
    Trace all seven loci, compare every fitted quadratic invariant against its
    closed form, and check the twelve difference identities at the surface's
    normalized moduli (α, β) = (a₄₄/a₃₂², b₃₃/a₃₂).
*/
template <scalar k_t>
auto reconcile(surface_jet_t<k_t> const& s, double y_range = 0.05, int steps = 50, double tolerance = 1e-6)
    -> reconcile_report_t
{
    auto report = reconcile_report_t{};
    report.pass = true;
    for (auto const label : all_locus_labels) {
        auto line = reconcile_line_t{};
        line.label = label;
        line.closed_c2 = to_double(closed_form_c(label, s));
        auto const germ = trace_locus(label, s, y_range, steps);
        line.traced_c2 = germ.c2;
        line.linear_term = germ.c1;
        line.difference = std::abs(line.traced_c2 - line.closed_c2);
        line.pass = line.difference <= tolerance * std::max(1.0, std::abs(line.closed_c2))
            && std::abs(line.linear_term) < 1e-8;
        report.pass = report.pass && line.pass;
        report.curves.push_back(line);
    }

    auto const a32 = to_double(s.a(3, 2));
    auto const alpha = to_double(s.a(4, 4)) / (a32 * a32);
    auto const beta = to_double(s.b(3, 3)) / a32;
    for (auto const& [name, residual] : coefficient_identities(alpha, beta)) {
        auto line = identity_line_t{};
        line.name = name;
        line.residual = std::abs(residual);
        line.pass = line.residual <= 1e-9 * std::max(1.0, std::abs(alpha) + std::abs(beta));
        report.pass = report.pass && line.pass;
        report.identities.push_back(line);
    }
    report.notes.push_back(
        "the fourth-degree coefficient of c_S uses the 48*beta^2 term; the 66*beta^2 variant "
        "fails the exact difference identities and is rejected");
    report.notes.push_back(
        "c_s1 carries a positive leading sign; the negated variant fails the difference identities");
    return report;
}

}  // namespace p3c
