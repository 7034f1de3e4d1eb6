// SPDX-License-Identifier: MIT
/**
    \file
    \brief cross-ratio invariants of the distinguished tangent lines and the
           recovery of the moduli from them

    At the distinguished point all curve germs x = c₂y² + ⋯ lift to Legendrian
    curves sharing one contact plane; their tangent lines form a pencil
    coordinatized homogeneously by (c₂ : 1), with the vertical line l_g = (1 : 0)
    joining in.  Cross-ratios of four pencil members are projective invariants:

        ρ₁ = (l_P, l_B : l_S, l_F)            = (3β−1)/(6β−1)
        ρ₂ = (l_P, l_g : l_{s01}, l_{s02})    = (c_{s01}−c_P)/(c_{s02}−c_P)
        ρ₃ = (l_P, l_g : l_{s1}, l_{s02})
        ρ₄ = (l_P, l_g : l_B, l_{s02})        = K/(6β(2β−1)²),  K = (4α+6β²−5β)²

    (ρ₁, ρ₂, ρ₃) determine the moduli: β from ρ₁ alone, α from a linear
    elimination between the ρ₂ and ρ₃ relations.  On the curve where that
    elimination degenerates, α satisfies a quadratic whose two roots are told
    apart by ρ₄.
*/

#pragma once

#include <p3c/locus.hpp>
#include <p3c/surface.hpp>
#include <p3c/tracer.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Pencil Lines and Cross-Ratio
// --------------------------------------------------------------------------------------------------------------------

/// a line of the tangent pencil in homogeneous coordinates (p : q)
template <scalar k_t>
struct line_t {
    k_t p{};
    k_t q{};

    /// the line tangent to the lift of a germ with quadratic coefficient c₂
    static auto from_coefficient(k_t const& c2) -> line_t { return {c2, k_t{1}}; }
    /// the vertical member of the pencil
    static auto vertical() -> line_t { return {k_t{1}, k_t{0}}; }
};

/**
    (a, b : c, d) = (d₃₁·d₄₂)/(d₃₂·d₄₁) with d_ij = p_i q_j − p_j q_i.
    Throws degenerate_point_error when the four lines are not pairwise
    distinct enough for the ratio to exist.
*/
template <scalar k_t>
auto cross_ratio(line_t<k_t> const& a, line_t<k_t> const& b, line_t<k_t> const& c, line_t<k_t> const& d) -> k_t
{
    auto const pair_det = [](line_t<k_t> const& u, line_t<k_t> const& v) { return u.p * v.q - v.p * u.q; };
    auto const numerator = pair_det(c, a) * pair_det(d, b);
    auto const denominator = pair_det(c, b) * pair_det(d, a);
    if (nearly_zero(denominator, k_t{1} + numerator * numerator, 1e-12)) {
        throw degenerate_point_error{"cross_ratio: coincident lines"};
    }
    return numerator / denominator;
}

// --------------------------------------------------------------------------------------------------------------------
// The Four Invariants
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct cr_invariants_t {
    k_t rho1{};
    k_t rho2{};
    k_t rho3{};
    k_t rho4{};
};

/// the invariants from the seven closed-form coefficients of a surface
template <scalar k_t>
auto cr_invariants(surface_jet_t<k_t> const& s) -> cr_invariants_t<k_t>
{
    auto const line = [&](locus_label_t label) {
        return line_t<k_t>::from_coefficient(closed_form_c(label, s));
    };
    auto const l_p = line(locus_label_t::parabolic);
    auto const l_b = line(locus_label_t::b2);
    auto const l_s = line(locus_label_t::s2);
    auto const l_f = line(locus_label_t::flecnodal);
    auto const l_s1 = line(locus_label_t::a0s1);
    auto const l_s01 = line(locus_label_t::a0s0a1);
    auto const l_s02 = line(locus_label_t::a0s02);
    auto const l_g = line_t<k_t>::vertical();

    auto out = cr_invariants_t<k_t>{};
    out.rho1 = cross_ratio(l_p, l_b, l_s, l_f);
    out.rho2 = cross_ratio(l_p, l_g, l_s01, l_s02);
    out.rho3 = cross_ratio(l_p, l_g, l_s1, l_s02);
    out.rho4 = cross_ratio(l_p, l_g, l_b, l_s02);
    return out;
}

/// the invariants at normalized moduli (α, β)
template <scalar k_t>
auto cr_invariants(k_t const& alpha, k_t const& beta) -> cr_invariants_t<k_t>
{
    auto const line = [&](locus_label_t label) {
        return line_t<k_t>::from_coefficient(closed_form_c(label, k_t{1}, alpha, beta));
    };
    auto out = cr_invariants_t<k_t>{};
    out.rho1 = cross_ratio(line(locus_label_t::parabolic), line(locus_label_t::b2), line(locus_label_t::s2),
                           line(locus_label_t::flecnodal));
    out.rho2 = cross_ratio(line(locus_label_t::parabolic), line_t<k_t>::vertical(),
                           line(locus_label_t::a0s0a1), line(locus_label_t::a0s02));
    out.rho3 = cross_ratio(line(locus_label_t::parabolic), line_t<k_t>::vertical(), line(locus_label_t::a0s1),
                           line(locus_label_t::a0s02));
    out.rho4 = cross_ratio(line(locus_label_t::parabolic), line_t<k_t>::vertical(), line(locus_label_t::b2),
                           line(locus_label_t::a0s02));
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Moduli Recovery
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct recovered_moduli_t {
    k_t alpha{};
    k_t beta{};
    bool degenerate_branch = false;  ///< the linear elimination vanished; α chosen among quadratic roots by ρ₄
    bool exact = true;               ///< false when a root was taken by floating square root in rational mode
};

namespace detail {

inline auto exact_sqrt(rational_t const& value, rational_t& root) -> bool
{
    if (value < 0) { return false; }
    auto const num = boost::multiprecision::numerator(value);
    auto const den = boost::multiprecision::denominator(value);
    auto const num_root = boost::multiprecision::sqrt(num);
    auto const den_root = boost::multiprecision::sqrt(den);
    if (num_root * num_root != num || den_root * den_root != den) { return false; }
    root = rational_t{num_root} / rational_t{den_root};
    return true;
}

inline auto exact_sqrt(double value, double& root) -> bool
{
    if (value < 0.0) { return false; }
    root = std::sqrt(value);
    return true;
}

/// forward value of ρ₄ at candidate moduli
template <scalar k_t>
auto rho4_at(k_t const& alpha, k_t const& beta) -> k_t
{
    auto const q = k_t{4} * alpha + k_t{6} * beta * beta - k_t{5} * beta;
    auto const two_beta = k_t{2} * beta - k_t{1};
    return q * q / (k_t{6} * beta * two_beta * two_beta);
}

}  // namespace detail

/**
    Invert (ρ₁, ρ₂, ρ₃) → (α, β).  β = (ρ₁−1)/(3(2ρ₁−1)); generically
    α = 4(ρ₂−ρ₃)β(β−1)/(1−4ρ₂+3ρ₃).  When 1−4ρ₂+3ρ₃ = 0 the elimination
    degenerates and α solves
        16α² + (48β² − 32β − 24ρ₂β)α + 36β⁴ − 60β³ + 21β² + 24ρ₂β² − 24ρ₂β³ = 0;
    the root whose forward ρ₄ matches the supplied one (within 1e−8) is
    returned, so ρ₄ is required there (invalid_moduli_error otherwise).
*/
template <scalar k_t>
auto recover_moduli(k_t const& rho1, k_t const& rho2, k_t const& rho3, std::optional<k_t> const& rho4 = {})
    -> recovered_moduli_t<k_t>
{
    auto const one = k_t{1};
    auto const beta_den = k_t{3} * (k_t{2} * rho1 - one);
    if (nearly_zero(k_t{2} * rho1 - one, one + rho1 * rho1, 1e-12)) {
        throw invalid_moduli_error{"recover_moduli: rho1 = 1/2 has no finite preimage"};
    }
    auto out = recovered_moduli_t<k_t>{};
    out.beta = (rho1 - one) / beta_den;

    auto const pivot = one - k_t{4} * rho2 + k_t{3} * rho3;
    auto const pivot_scale = one + rho2 * rho2 + rho3 * rho3;
    if (!nearly_zero(pivot, pivot_scale, 1e-9)) {
        out.alpha = k_t{4} * (rho2 - rho3) * out.beta * (out.beta - one) / pivot;
        return out;
    }

    // degenerate elimination: quadratic in α, two candidate preimages
    out.degenerate_branch = true;
    if (!rho4) {
        throw invalid_moduli_error{"recover_moduli: degenerate invariants; rho4 is required to select the preimage"};
    }
    auto const b = out.beta;
    auto const quad_a = k_t{16};
    auto const quad_b = k_t{48} * b * b - k_t{32} * b - k_t{24} * rho2 * b;
    auto const quad_c = k_t{36} * b * b * b * b - k_t{60} * b * b * b + k_t{21} * b * b
        + k_t{24} * rho2 * b * b - k_t{24} * rho2 * b * b * b;
    auto const discriminant = quad_b * quad_b - k_t{4} * quad_a * quad_c;
    auto root = k_t{};
    if (!detail::exact_sqrt(discriminant, root)) {
        if constexpr (std::is_same_v<k_t, rational_t>) {
            if (discriminant < 0) {
                throw invalid_moduli_error{"recover_moduli: no real preimage (negative discriminant)"};
            }
            root = rational_from_double(std::sqrt(to_double(discriminant)));
            out.exact = false;
        } else {
            throw invalid_moduli_error{"recover_moduli: no real preimage (negative discriminant)"};
        }
    }
    for (auto const& candidate : {(-quad_b + root) / (k_t{2} * quad_a), (-quad_b - root) / (k_t{2} * quad_a)}) {
        auto const forward = detail::rho4_at(candidate, b);
        if (std::abs(to_double(forward - *rho4)) <= 1e-8 * std::max(1.0, std::abs(to_double(*rho4)))) {
            out.alpha = candidate;
            return out;
        }
    }
    throw invalid_moduli_error{"recover_moduli: rho4 matches neither candidate preimage"};
}

// --------------------------------------------------------------------------------------------------------------------
// Historical Reference Expansion
// --------------------------------------------------------------------------------------------------------------------

/**
    The historical reference expansion for α(ρ₁, ρ₂, ρ₃).  Kept verbatim for
    regression comparison (exposed behind the --paper-literal flag): at
    (ρ₁, ρ₂, ρ₃) = (2/5, 1/8, −1/6) it evaluates to 7/2, which is neither of
    the valid preimages (−1 and 3/16) — the derived recovery path above is
    authoritative.
*/
template <scalar k_t>
auto reference_alpha_expansion(k_t const& rho1, k_t const& rho2, k_t const& rho3) -> k_t
{
    auto const one = k_t{1};
    auto const numerator = (k_t{80} * rho2 * rho1 - k_t{32} * rho2 + k_t{20} * rho3 * rho1 - k_t{8} * rho3
                            + k_t{42} * rho1 - k_t{21})
        * (rho1 - one);
    auto const two_rho1 = k_t{2} * rho1 - one;
    auto const denominator = k_t{9} * (k_t{3} * rho3 + one + k_t{12} * rho2) * two_rho1 * two_rho1;
    if (nearly_zero(denominator, one + numerator * numerator, 1e-12)) {
        throw invalid_moduli_error{"reference_alpha_expansion: vanishing denominator"};
    }
    return numerator / denominator;
}

}  // namespace p3c
