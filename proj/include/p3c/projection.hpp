// SPDX-License-Identifier: MIT
/**
    \file
    \brief the sheared projection family of a surface and the residual systems
           cutting out its singular-value loci

    The surface (x, y, f¹, f²) ⊂ 4-space is projected to 3-space along the
    direction family u ↦ (u, 1, v, w).  In the sheared chart the projection
    reads
        P_u(x̄, ȳ) = (x̄, G²(x̄, ȳ) − v ȳ, G³(x̄, ȳ) − w ȳ),
    with G^h(x̄, ȳ) = f^h(x̄ + u ȳ, ȳ).  The parameters v, w are eliminated
    throughout by the singular-point equations v = G²_y, w = G³_y at the
    marked point, which keeps every system square.

    Partials of G^h are evaluated through the binomial chain rule
        ∂^{dx}_x̄ ∂^{dy}_ȳ G = Σ_j C(dy, j) u^j f^{(dx+j, dy−j)}(x̄ + uȳ, ȳ),
    against a one-time cache of all partial-derivative jets of f¹, f².

    Residual systems (labels from locus.hpp):
      - local (B₂ / S₂): unknowns (x̄, u) at height y; cross-cap degeneracy
        R1 = G²_xy G³_yy − G³_xy G²_yy plus the label's condition;
      - bi-local (A₀S₁ / A₀S₀|A₁ / (A₀S₀)₂): unknowns (x̄₁, y₁, u) at regular
        height t; exact divided-difference image coincidence E₂, E₃ plus the
        label's tangency condition.
*/

#pragma once

#include <p3c/locus.hpp>
#include <p3c/surface.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Projection Family
// --------------------------------------------------------------------------------------------------------------------

class projection_family_t {
public:
    static constexpr int order_cap = surface_degree_bound;  // partials beyond this vanish

    explicit projection_family_t(surface_jet_t<double> const& s)
    {
        partials_[0][0][0] = s.f1;
        partials_[1][0][0] = s.f2;
        for (int h = 0; h < 2; ++h) {
            for (int b = 1; b <= order_cap; ++b) {
                partials_[h][0][b] = partials_[h][0][b - 1].partial(1);
            }
            for (int a = 1; a <= order_cap; ++a) {
                for (int b = 0; a + b <= order_cap; ++b) {
                    partials_[h][a][b] = partials_[h][a - 1][b].partial(0);
                }
            }
        }
    }

    /// ∂^{dx}_x̄ ∂^{dy}_ȳ of G^comp (comp ∈ {2, 3} naming the projection components)
    auto g_partial(int comp, int dx, int dy, double xbar, double y, double u) const -> double
    {
        if (comp < 2 || comp > 3 || dx < 0 || dy < 0 || dx + dy > order_cap) {
            throw std::invalid_argument{"projection_family_t::g_partial: order out of range"};
        }
        auto const h = comp - 2;
        auto const point = std::array<double, 2>{xbar + u * y, y};
        auto result = 0.0;
        auto u_pow = 1.0;
        for (int j = 0; j <= dy; ++j) {
            result += binomial(dy, j) * u_pow * partials_[h][dx + j][dy - j].evaluate(point);
            u_pow *= u;
        }
        return result;
    }

private:
    static auto binomial(int n, int k) -> double
    {
        auto result = 1.0;
        for (int i = 1; i <= k; ++i) { result = result * double(n - k + i) / double(i); }
        return result;
    }

    // partials_[h][a][b] = ∂^a_x ∂^b_y f^{h+1}
    std::array<std::array<std::array<jet2_t<double>, order_cap + 1>, order_cap + 1>, 2> partials_{};
};

// --------------------------------------------------------------------------------------------------------------------
// Residual Systems
// --------------------------------------------------------------------------------------------------------------------

/**
    Local system at height y, unknowns z = (x̄, u):
      [0] R1 = G²_xy G³_yy − G³_xy G²_yy   (the projection point is past a cross-cap)
      [1] B₂: G²_yy G³_yyy − G²_yyy G³_yy
          S₂: the six-term determinant condition
*/
inline auto local_residual(projection_family_t const& fam, locus_label_t label, std::array<double, 2> const& z,
                           double y) -> std::array<double, 2>
{
    auto const [xb, u] = z;
    auto const g = [&](int c, int i, int j) { return fam.g_partial(c, i, j, xb, y, u); };

    auto out = std::array<double, 2>{};
    out[0] = g(2, 1, 1) * g(3, 0, 2) - g(3, 1, 1) * g(2, 0, 2);

    switch (label) {
        case locus_label_t::b2:
            out[1] = g(2, 0, 2) * g(3, 0, 3) - g(2, 0, 3) * g(3, 0, 2);
            break;
        case locus_label_t::s2: {
            auto const g3yy = g(3, 0, 2);
            auto const g3xy = g(3, 1, 1);
            out[1] = -g(2, 2, 1) * g3yy * g3yy * g3yy
                + 2.0 * g3xy * g3yy * g3yy * g(2, 1, 2)
                - 2.0 * g3xy * g3yy * g(2, 0, 2) * g(3, 1, 2)
                + g(2, 0, 2) * g(3, 2, 1) * g3yy * g3yy
                - g3xy * g3xy * g(2, 0, 3) * g3yy
                + g3xy * g3xy * g(2, 0, 2) * g(3, 0, 3);
            break;
        }
        default:
            throw std::invalid_argument{"local_residual: label is not a local projection type"};
    }
    return out;
}

/**
    Bi-local system at regular height t, unknowns z = (x̄₁, y₁, u); the
    singular point sits at q₁ = (x̄₁, y₁), the regular partner at q₂ = (x̄₁, t):
      [0] the label's tangency/degeneracy condition
      [1] E₂ = Σ_{k=2..5} ∂^k_y G²(q₁)/k! · (t − y₁)^{k−2}   (image coincidence)
      [2] E₃, same for G³
*/
inline auto bigerm_residual(projection_family_t const& fam, locus_label_t label, std::array<double, 3> const& z,
                            double t) -> std::array<double, 3>
{
    auto const [x1, y1, u] = z;
    auto const g1 = [&](int c, int i, int j) { return fam.g_partial(c, i, j, x1, y1, u); };  // singular q1
    auto const g2 = [&](int c, int i, int j) { return fam.g_partial(c, i, j, x1, t, u); };   // regular q2
    auto const dy = t - y1;

    auto const coincidence = [&](int comp) {
        static constexpr double inv_factorial[] = {0.0, 0.0, 1.0 / 2, 1.0 / 6, 1.0 / 24, 1.0 / 120};
        auto out = 0.0;
        auto dy_pow = 1.0;
        for (int k = 2; k <= 5; ++k) {
            out += g1(comp, 0, k) * inv_factorial[k] * dy_pow;
            dy_pow *= dy;
        }
        return out;
    };

    auto const det3 = [](std::array<double, 3> const& a, std::array<double, 3> const& b,
                         std::array<double, 3> const& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1])
            + c[0] * (a[1] * b[2] - a[2] * b[1]);
    };

    auto out = std::array<double, 3>{};
    out[1] = coincidence(2);
    out[2] = coincidence(3);

    switch (label) {
        case locus_label_t::a0s1:
            out[0] = g1(2, 1, 1) * g1(3, 0, 2) - g1(3, 1, 1) * g1(2, 0, 2);
            break;
        case locus_label_t::a0s0a1:
        case locus_label_t::a0s02: {
            auto const px2 = std::array<double, 3>{1.0, g2(2, 1, 0), g2(3, 1, 0)};
            auto const py2 = std::array<double, 3>{0.0, g2(2, 0, 1) - g1(2, 0, 1), g2(3, 0, 1) - g1(3, 0, 1)};
            if (label == locus_label_t::a0s0a1) {
                auto const tangent = std::array<double, 3>{1.0, g1(2, 1, 0), g1(3, 1, 0)};
                out[0] = det3(px2, py2, tangent);
            } else {
                auto const r1 = g1(2, 1, 1) * g1(3, 0, 2) - g1(3, 1, 1) * g1(2, 0, 2);
                auto const numtau = g1(2, 0, 2) * g1(3, 0, 3) - g1(2, 0, 3) * g1(3, 0, 2);
                auto const tangent = std::array<double, 3>{
                    2.0 * numtau,
                    6.0 * r1 * g1(2, 0, 2) + 2.0 * numtau * g1(2, 1, 0),
                    6.0 * r1 * g1(3, 0, 2) + 2.0 * numtau * g1(3, 1, 0),
                };
                out[0] = det3(px2, py2, tangent);
            }
            break;
        }
        default:
            throw std::invalid_argument{"bigerm_residual: label is not a bi-local type"};
    }
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Chart Assembly
// --------------------------------------------------------------------------------------------------------------------

/// Monge-chart point of a solved local sample: the sheared chart maps back by x = x̄ + u·y
inline auto assemble_local(std::array<double, 2> const& z, double y) -> std::pair<double, double>
{
    return {z[0] + z[1] * y, y};
}

/**
    Monge-chart point of a solved bi-local sample.  The on-surface point of
    the locus is the regular partner for A₀S₁ (chart change x = x̄ − u·y at
    height t) and the singular point for A₀S₀|A₁ and (A₀S₀)₂ (same chart
    change at height y₁).
*/
inline auto assemble_bigerm(locus_label_t label, std::array<double, 3> const& z, double t)
    -> std::pair<double, double>
{
    auto const [x1, y1, u] = z;
    switch (label) {
        case locus_label_t::a0s1: return {x1 - u * t, t};
        case locus_label_t::a0s0a1:
        case locus_label_t::a0s02: return {x1 - u * y1, y1};
        default: throw std::invalid_argument{"assemble_bigerm: label is not a bi-local type"};
    }
}

}  // namespace p3c
