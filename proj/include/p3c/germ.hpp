// SPDX-License-Identifier: MIT
/**
    \file
    \brief recognition of corank-1 map-germs (plane, 0) → (3-space, 0) and the
           model adjacency family for the bi-local singularity conditions

    Recognition runs on the singular-point determinant
        φ = det(ξf, ηf, ηηf)
    where η spans the kernel of df(0) and ξ completes a frame:
      - cross-cap        ⇔ ξφ(0) ≠ 0;
      - S₁⁻              ⇔ ξφ(0) = 0, φ critical at 0, det Hess φ(0) > 0;
      - S₁⁺              ⇔ same but det Hess φ(0) < 0 with ξf(0), ηηf(0)
                           linearly independent;
      - anything else    → more degenerate (outside the recognized list).

    The adjacency model family
        F(x, y) = (x, xy + y³ + a·y, xy² + c·y⁴ + b·y + d·y³)
    realizes, for fixed modulus c, the three bi-local conditions as parameter
    curves in (a, b, d); the residual systems below define them for a Newton
    solver (five equations in x₂, y₁, a, b, d at a fixed singular height y₂).
*/

#pragma once

#include <p3c/jet.hpp>
#include <p3c/locus.hpp>
#include <p3c/number.hpp>

#include <array>
#include <cmath>
#include <string>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Map Germs
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct map_germ3_t {
    std::array<jet2_t<k_t>, 3> component{};

    static auto from_jets(jet2_t<k_t> f1, jet2_t<k_t> f2, jet2_t<k_t> f3) -> map_germ3_t
    {
        return map_germ3_t{{std::move(f1), std::move(f2), std::move(f3)}};
    }
};

enum class germ_label_t { immersion, cross_cap, s1_minus, s1_plus, more_degenerate };

/// raised when the supplied (ξ, η) frame is unusable: η outside ker df(0) or frame degenerate
struct invalid_frame_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline auto to_string(germ_label_t label) -> std::string
{
    switch (label) {
        case germ_label_t::immersion: return "immersion";
        case germ_label_t::cross_cap: return "cross_cap";
        case germ_label_t::s1_minus: return "S1-";
        case germ_label_t::s1_plus: return "S1+";
        case germ_label_t::more_degenerate: return "more_degenerate";
    }
    return "?";
}

namespace detail {

/// directional derivative of each component along a constant field
template <scalar k_t>
auto directional(map_germ3_t<k_t> const& f, std::array<k_t, 2> const& field) -> map_germ3_t<k_t>
{
    auto result = map_germ3_t<k_t>{};
    for (std::size_t i = 0; i < 3; ++i) {
        result.component[i] = field[0] * f.component[i].partial(0) + field[1] * f.component[i].partial(1);
    }
    return result;
}

/// φ = det(ξf, ηf, ηηf) without frame validation (classify_germ builds valid frames itself)
template <scalar k_t>
auto saji_phi_unchecked(map_germ3_t<k_t> const& f, std::array<k_t, 2> const& xi, std::array<k_t, 2> const& eta)
    -> jet2_t<k_t>
{
    auto const fx = detail::directional(f, xi);
    auto const fe = detail::directional(f, eta);
    auto const fee = detail::directional(fe, eta);

    auto const& c0 = fx.component;
    auto const& c1 = fe.component;
    auto const& c2 = fee.component;
    // 3x3 determinant with columns (ξf, ηf, ηηf)
    return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
         - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
         + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

}  // namespace detail

/**
    The recognition determinant φ = det(ξf, ηf, ηηf) for constant frames
    ξ, η.  Each column is the component-wise directional derivative; the
    determinant expands over jets.  Requires η ∈ ker df(0) and a
    nondegenerate frame.
*/
template <scalar k_t>
auto saji_phi(map_germ3_t<k_t> const& f, std::array<k_t, 2> const& xi, std::array<k_t, 2> const& eta) -> jet2_t<k_t>
{
    auto scale = 0.0;
    for (auto const& c : f.component) {
        scale = std::max({scale, std::abs(to_double(c.coeff({1, 0}))), std::abs(to_double(c.coeff({0, 1})))});
    }
    auto const eta_norm = std::max(std::abs(to_double(eta[0])), std::abs(to_double(eta[1])));
    for (auto const& c : f.component) {
        auto const along = c.coeff({1, 0}) * eta[0] + c.coeff({0, 1}) * eta[1];
        if (std::abs(to_double(along)) > 1e-10 * std::max(scale * eta_norm, 1.0)) {
            throw invalid_frame_error{"saji_phi: eta is not in the kernel of df(0)"};
        }
    }
    if (is_exactly_zero(xi[0] * eta[1] - xi[1] * eta[0])) {
        throw invalid_frame_error{"saji_phi: xi and eta are linearly dependent"};
    }
    return detail::saji_phi_unchecked(f, xi, eta);
}

template <scalar k_t>
struct germ_report_t {
    germ_label_t label = germ_label_t::more_degenerate;
    std::array<k_t, 2> eta{};      ///< kernel field used
    std::array<k_t, 2> xi{};       ///< complementary field used
    jet2_t<k_t> phi{};             ///< the recognition determinant
    k_t xi_phi{};                  ///< ξφ(0)
    k_t hessian_det{};             ///< det Hess φ(0), meaningful when φ is critical
};

/**
    Classify a corank-≤1 germ by Saji's criteria.  Thresholds apply after
    unit-scaling by the largest coefficient (absolute gate 1e−10 by default);
    rational instantiations compare exactly.
*/
template <scalar k_t>
auto classify_germ(map_germ3_t<k_t> const& f, double tol = 1e-10) -> germ_report_t<k_t>
{
    auto report = germ_report_t<k_t>{};

    // differential at the origin: rows d[i] = (∂x f_i, ∂y f_i)(0)
    std::array<std::array<k_t, 2>, 3> d{};
    for (std::size_t i = 0; i < 3; ++i) {
        d[i] = {f.component[i].coeff({1, 0}), f.component[i].coeff({0, 1})};
    }

    auto scale = 0.0;
    for (auto const& row : d) {
        for (auto const& v : row) { scale = std::max(scale, std::abs(to_double(v))); }
    }
    auto const zero = [&](k_t const& v, double reference) {
        if constexpr (std::same_as<k_t, rational_t>) { return v == 0; }
        else { return std::abs(v) <= tol * std::max(reference, 1.0); }
    };

    // rank 2 ⇔ some 2x2 minor of the three row pairs survives
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            k_t const minor = d[i][0] * d[j][1] - d[i][1] * d[j][0];
            if (!zero(minor, scale * scale)) {
                report.label = germ_label_t::immersion;
                return report;
            }
        }
    }

    // corank 1: kernel of the dominant row; corank 2 falls through to more_degenerate
    auto dominant = std::size_t{3};
    auto best = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        auto const norm = std::abs(to_double(d[i][0])) + std::abs(to_double(d[i][1]));
        if (norm > best && !(zero(d[i][0], scale) && zero(d[i][1], scale))) {
            best = norm;
            dominant = i;
        }
    }
    if (dominant == 3) { return report; }  // zero differential: outside the corank-1 list

    report.eta = {-d[dominant][1], d[dominant][0]};
    // complete the frame with the coordinate direction most transverse to η
    auto const eta0 = std::abs(to_double(report.eta[0]));
    auto const eta1 = std::abs(to_double(report.eta[1]));
    report.xi = eta0 >= eta1 ? std::array<k_t, 2>{k_t{0}, k_t{1}} : std::array<k_t, 2>{k_t{1}, k_t{0}};

    report.phi = detail::saji_phi_unchecked(f, report.xi, report.eta);
    auto const sigma = std::max(report.phi.max_abs_coeff(), 1.0);

    k_t const phi_x = report.phi.coeff({1, 0});
    k_t const phi_y = report.phi.coeff({0, 1});
    report.xi_phi = report.xi[0] * phi_x + report.xi[1] * phi_y;
    if (!zero(report.xi_phi, sigma)) {
        report.label = germ_label_t::cross_cap;
        return report;
    }

    auto const critical = zero(phi_x, sigma) && zero(phi_y, sigma);
    if (!critical) { return report; }  // ξφ(0)=0 with dφ(0)≠0: not on the recognized list

    k_t const h11 = k_t{2} * report.phi.coeff({2, 0});
    k_t const h12 = report.phi.coeff({1, 1});
    k_t const h22 = k_t{2} * report.phi.coeff({0, 2});
    report.hessian_det = h11 * h22 - h12 * h12;
    if (zero(report.hessian_det, sigma * sigma)) { return report; }

    if (to_double(report.hessian_det) > 0.0) {
        report.label = germ_label_t::s1_minus;
        return report;
    }

    // S₁⁺ additionally needs ξf(0) and ηηf(0) linearly independent
    auto const fx = detail::directional(f, report.xi);
    auto const fee = detail::directional(detail::directional(f, report.eta), report.eta);
    std::array<k_t, 3> va{}, vb{};
    for (std::size_t i = 0; i < 3; ++i) {
        va[i] = fx.component[i].coeff({0, 0});
        vb[i] = fee.component[i].coeff({0, 0});
    }
    k_t const cx = va[1] * vb[2] - va[2] * vb[1];
    k_t const cy = va[2] * vb[0] - va[0] * vb[2];
    k_t const cz = va[0] * vb[1] - va[1] * vb[0];
    auto const vscale = [&] {
        auto m = 0.0;
        for (auto const& v : va) { m = std::max(m, std::abs(to_double(v))); }
        for (auto const& v : vb) { m = std::max(m, std::abs(to_double(v))); }
        return m * m;
    }();
    auto const independent = !(zero(cx, vscale) && zero(cy, vscale) && zero(cz, vscale));
    if (independent) { report.label = germ_label_t::s1_plus; }
    return report;
}

// --------------------------------------------------------------------------------------------------------------------
// Bi-germ Conditions
// --------------------------------------------------------------------------------------------------------------------

/**
    Residuals whose simultaneous vanishing characterizes a bi-local
    configuration of a regular branch and a singular (corank-1) branch.

    Both germs must be presented in adapted charts: first component ≈ x̄,
    kernel of the singular branch along ∂y.  Constant terms carry the image
    position, so two germs "at different points" can be compared.

    Slot layout (6 residuals):
      [0..2]  image coincidence F_reg(0) − F_sing(0)
      [3..4]  singularity of the singular branch: ∂y of components 2, 3 at 0
      [5]     the kind's tangency/degeneracy condition
              (A₀S₁: cross-cap degeneracy R1; A₀S₀|A₁: cross-cap image
              tangent in the regular tangent plane; (A₀S₀)₂: limiting
              double-point-curve tangent in the regular tangent plane)
*/
template <scalar k_t>
auto bigerm_conditions(locus_label_t kind, map_germ3_t<k_t> const& regular, map_germ3_t<k_t> const& singular)
    -> std::array<k_t, 6>
{
    auto const value = [](map_germ3_t<k_t> const& f, int i, int j) {
        return std::array<k_t, 3>{f.component[0].coeff({i, j}), f.component[1].coeff({i, j}),
                                  f.component[2].coeff({i, j})};
    };
    auto const det3 = [](std::array<k_t, 3> const& u, std::array<k_t, 3> const& v, std::array<k_t, 3> const& w) {
        return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1])
            + w[0] * (u[1] * v[2] - u[2] * v[1]);
    };
    auto const scaled = [](std::array<k_t, 3> v, k_t factor) {
        for (auto& e : v) { e = e * factor; }
        return v;
    };

    auto const origin_r = value(regular, 0, 0);
    auto const origin_s = value(singular, 0, 0);
    auto const fy_s = value(singular, 0, 1);
    auto const fx_s = value(singular, 1, 0);
    auto const fyy_s = scaled(value(singular, 0, 2), k_t{2});
    auto const fxy_s = value(singular, 1, 1);
    auto const fyyy_s = scaled(value(singular, 0, 3), k_t{6});

    auto out = std::array<k_t, 6>{};
    for (std::size_t i = 0; i < 3; ++i) { out[i] = origin_r[i] - origin_s[i]; }
    out[3] = fy_s[1];
    out[4] = fy_s[2];

    k_t const r1 = fxy_s[1] * fyy_s[2] - fxy_s[2] * fyy_s[1];
    switch (kind) {
        case locus_label_t::a0s1:
            out[5] = r1;
            break;
        case locus_label_t::a0s0a1:
            out[5] = det3(value(regular, 1, 0), value(regular, 0, 1), fx_s);
            break;
        case locus_label_t::a0s02: {
            k_t const numtau = fyy_s[1] * fyyy_s[2] - fyyy_s[1] * fyy_s[2];
            auto tangent = std::array<k_t, 3>{};
            for (std::size_t i = 0; i < 3; ++i) {
                tangent[i] = k_t{6} * r1 * fyy_s[i] + k_t{2} * numtau * fx_s[i];
            }
            out[5] = det3(value(regular, 1, 0), value(regular, 0, 1), tangent);
            break;
        }
        default:
            throw std::invalid_argument{"bigerm_conditions: kind is not a bi-local label"};
    }
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Model Adjacency Family
// --------------------------------------------------------------------------------------------------------------------

/**
    The versal model F(x,y) = (x, xy + y³ + a·y, xy² + c·y⁴ + b·y + d·y³).
    For a fixed modulus c, each bi-local condition holds along a curve in the
    parameter slice (a, b, d); the Newton systems below cut those curves out.

    Unknowns z = (x₂, y₁, a, b, d) at a fixed singular height y₂:
      [0] ∂y F₂ = 0 at (x₂, y₂)                       (singular point)
      [1] ∂y F₃ = 0 at (x₂, y₂)                       (singular point)
      [2] divided difference of F₂ between y₁ and y₂  (image coincidence)
      [3] divided difference of F₃ between y₁ and y₂  (image coincidence)
      [4] the label's tangency/degeneracy condition
*/
struct adjacency_model_t {
    double c = 0.0;

    /// F₂, F₃ partial data at a point (x, y) for the current parameters
    struct point_data_t {
        double g2_y, g3_y;       // first y-partials
        double g2_yy, g3_yy;     // second
        double g2_yyy, g3_yyy;   // third
        double g2_x, g3_x;       // x-partials (g2_x = y, g3_x = y^2)
        double g2_xy, g3_xy;     // mixed
    };

    auto at(double x, double y, double a, double b, double d) const -> point_data_t
    {
        auto p = point_data_t{};
        p.g2_y = x + 3.0 * y * y + a;
        p.g3_y = 2.0 * x * y + 4.0 * c * y * y * y + b + 3.0 * d * y * y;
        p.g2_yy = 6.0 * y;
        p.g3_yy = 2.0 * x + 12.0 * c * y * y + 6.0 * d * y;
        p.g2_yyy = 6.0;
        p.g3_yyy = 24.0 * c * y + 6.0 * d;
        p.g2_x = y;
        p.g3_x = y * y;
        p.g2_xy = 1.0;
        p.g3_xy = 2.0 * y;
        return p;
    }

    /// cross-cap degeneracy indicator at a singular point
    static auto r1(point_data_t const& p) -> double { return p.g2_xy * p.g3_yy - p.g3_xy * p.g2_yy; }

    /// torsion-like numerator entering the double-point tangent
    static auto numtau(point_data_t const& p) -> double { return p.g2_yy * p.g3_yyy - p.g2_yyy * p.g3_yy; }

    auto residual(locus_label_t label, std::array<double, 5> const& z, double y2) const -> std::array<double, 5>
    {
        auto const [x2, y1, a, b, d] = z;
        auto const qs = at(x2, y2, a, b, d);  // singular point
        auto const qr = at(x2, y1, a, b, d);  // regular partner

        auto out = std::array<double, 5>{};
        out[0] = qs.g2_y;
        out[1] = qs.g3_y;
        // divided differences of F2 = xy + y^3 + ay and F3 = xy^2 + cy^4 + by + dy^3
        out[2] = x2 + (y1 * y1 + y1 * y2 + y2 * y2) + a;
        out[3] = x2 * (y1 + y2) + c * (y1 * y1 * y1 + y1 * y1 * y2 + y1 * y2 * y2 + y2 * y2 * y2) + b
            + d * (y1 * y1 + y1 * y2 + y2 * y2);

        // tangent data in the image: F_x = (1, y, y^2), F_y = (0, g2_y, g3_y), F_yy = (0, g2_yy, g3_yy)
        auto const det3 = [](std::array<double, 3> const& u, std::array<double, 3> const& v,
                             std::array<double, 3> const& w) {
            return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1])
                + w[0] * (u[1] * v[2] - u[2] * v[1]);
        };
        auto const fx_r = std::array<double, 3>{1.0, y1, y1 * y1};
        auto const fy_r = std::array<double, 3>{0.0, qr.g2_y, qr.g3_y};
        auto const fx_s = std::array<double, 3>{1.0, y2, y2 * y2};

        switch (label) {
            case locus_label_t::a0s1:
                // the singular point degenerates past the cross-cap
                out[4] = r1(qs);
                break;
            case locus_label_t::a0s0a1: {
                // regular sheet tangent to the cross-cap image line span F_x(q_s)
                out[4] = det3(fx_r, fy_r, fx_s);
                break;
            }
            case locus_label_t::a0s02: {
                // regular sheet tangent to the double-point curve of the cross-cap:
                // its image tangent is 6·R1·F_yy + 2·numtau·F_x at the singular point
                auto const fyy_s = std::array<double, 3>{0.0, qs.g2_yy, qs.g3_yy};
                auto const tangent = std::array<double, 3>{
                    6.0 * r1(qs) * fyy_s[0] + 2.0 * numtau(qs) * fx_s[0],
                    6.0 * r1(qs) * fyy_s[1] + 2.0 * numtau(qs) * fx_s[1],
                    6.0 * r1(qs) * fyy_s[2] + 2.0 * numtau(qs) * fx_s[2],
                };
                out[4] = det3(fx_r, fy_r, tangent);
                break;
            }
            default:
                throw std::invalid_argument{"adjacency_model_t::residual: label is not a bi-local condition"};
        }
        return out;
    }
};

}  // namespace p3c
