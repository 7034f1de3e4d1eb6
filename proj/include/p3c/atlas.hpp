// SPDX-License-Identifier: MIT
/**
    \file
    \brief stratification of the (α, β) moduli plane by the relative positions
           of the seven invariant curve germs

    Three layers, all driven by the closed-form quadratic coefficients in the
    normalized chart (a₃₂ = 1, a₄₄ = α, b₃₃ = β):

      - local ordering: the permutation of (c_P, c_B, c_S, c_F).  Direct
        comparison is authoritative; it provably reduces to a β-interval rule
        (boundaries β = 0, 1/6, 1/3) because every pairwise difference is a
        square multiple of a function of β alone.
      - multi-local region: the permutation of (c_P, c_{s02}, c_{s1}, c_{s01}),
        matched against the published reference table of 22 region patterns.
        The table contains verbatim repeats, so every id whose pattern matches
        is reported; an ordering matching no entry reports as unmatched rather
        than being forced.  Boundaries are the six curves γ₁…γ₆ together with
        the two pole curves of c_{s1} and c_{s01}, across which the ordering
        also jumps.
      - configuration signature: the sign vector of (c_P, c_B, c_S, c_F),
        keying the qualitative picture of each curve against the discriminant;
        degenerate loci of the three coefficient curves are reported both as
        published reference points and as computed singular points.
*/

#pragma once

#include <p3c/surface.hpp>
#include <p3c/tracer.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Boundary Curves
// --------------------------------------------------------------------------------------------------------------------

enum class gamma_curve_t { gamma1, gamma2, gamma3, gamma4, gamma5, gamma6 };

inline constexpr std::array<gamma_curve_t, 6> all_gamma_curves{gamma_curve_t::gamma1, gamma_curve_t::gamma2,
                                                               gamma_curve_t::gamma3, gamma_curve_t::gamma4,
                                                               gamma_curve_t::gamma5, gamma_curve_t::gamma6};

inline auto to_string(gamma_curve_t curve) -> std::string
{
    switch (curve) {
        case gamma_curve_t::gamma1: return "gamma1";
        case gamma_curve_t::gamma2: return "gamma2";
        case gamma_curve_t::gamma3: return "gamma3";
        case gamma_curve_t::gamma4: return "gamma4";
        case gamma_curve_t::gamma5: return "gamma5";
        case gamma_curve_t::gamma6: return "gamma6";
    }
    return "gamma?";
}

/**
    Defining polynomial of a boundary curve:
        γ₁: β
        γ₂: 48β²α − 60β³ + 36β⁴ − 38βα + 21β² + 16α²   (numerator of c_{s1} − c_P)
        γ₃: 48β²α − 60β³ + 36β⁴ − 32βα + 21β² + 16α²   (numerator of c_{s01} − c_P; γ₃ − γ₂ = 6αβ)
        γ₄: 4α + 6β² − 5β                               (versality pivot; K = γ₄²)
        γ₅: 4α + 6β² − 9β
        γ₆: α
*/
template <scalar k_t>
auto gamma_value(gamma_curve_t curve, k_t const& alpha, k_t const& beta) -> k_t
{
    auto const bb = beta * beta;
    switch (curve) {
        case gamma_curve_t::gamma1: return beta;
        case gamma_curve_t::gamma2:
            return k_t{48} * bb * alpha - k_t{60} * bb * beta + k_t{36} * bb * bb - k_t{38} * beta * alpha
                + k_t{21} * bb + k_t{16} * alpha * alpha;
        case gamma_curve_t::gamma3:
            return k_t{48} * bb * alpha - k_t{60} * bb * beta + k_t{36} * bb * bb - k_t{32} * beta * alpha
                + k_t{21} * bb + k_t{16} * alpha * alpha;
        case gamma_curve_t::gamma4: return k_t{4} * alpha + k_t{6} * bb - k_t{5} * beta;
        case gamma_curve_t::gamma5: return k_t{4} * alpha + k_t{6} * bb - k_t{9} * beta;
        case gamma_curve_t::gamma6: return alpha;
    }
    return k_t{};
}

namespace detail {

/// scale for near-zero gating of the boundary polynomials (they have degree ≤ 4)
template <scalar k_t>
auto moduli_scale(k_t const& alpha, k_t const& beta) -> k_t
{
    auto const base = k_t{1} + alpha * alpha + beta * beta;
    return base * base;
}

/// sorted "tag<tag<…" pattern of four labelled values; near-ties join with '='
template <scalar k_t>
auto ordering_pattern(std::array<std::pair<std::string_view, k_t>, 4> entries, k_t const& scale, double tol)
    -> std::string
{
    std::stable_sort(entries.begin(), entries.end(),
                     [](auto const& lhs, auto const& rhs) { return lhs.second < rhs.second; });
    auto out = std::string{entries[0].first};
    for (auto i = std::size_t{1}; i < entries.size(); ++i) {
        out += nearly_zero(entries[i].second - entries[i - 1].second, scale, tol) ? '=' : '<';
        out += entries[i].first;
    }
    return out;
}

template <scalar k_t>
auto format_value(k_t const& value) -> std::string
{
    auto stream = std::ostringstream{};
    stream << value;
    return stream.str();
}

}  // namespace detail

// --------------------------------------------------------------------------------------------------------------------
// Local Ordering
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct local_position_t {
    std::string pattern{};                     ///< direct-comparison ordering, e.g. "P<B<F<S"
    int case_index = 0;                        ///< 1..4 from the β-interval rule; 0 on a boundary
    std::vector<std::string> boundary_flags{};
    std::array<k_t, 4> values{};               ///< c_P, c_B, c_S, c_F
};

/// the β-interval rule: the expected local pattern on each of the four intervals
inline auto local_case_pattern(int case_index) -> std::string_view
{
    switch (case_index) {
        case 1: return "P<B<F<S";   // β < 0
        case 2: return "P<B<S<F";   // 0 < β < 1/6
        case 3: return "P<S<B<F";   // 1/6 < β < 1/3
        case 4: return "P<S<F<B";   // β > 1/3
        default: return "";
    }
}

/**
    Ordering of the four local quadratic coefficients at normalized moduli.
    Boundaries β ∈ {0, 1/6, 1/3} and the versality pivot γ₄ = 0 are flagged;
    the direct comparison is authoritative and the case index is derived from
    β alone (their concordance is a checked invariant).
*/
template <scalar k_t>
auto local_ordering(k_t const& alpha, k_t const& beta, double tol = 1e-9) -> local_position_t<k_t>
{
    auto out = local_position_t<k_t>{};
    auto const scale = detail::moduli_scale(alpha, beta);
    auto const sixth = k_t{1} / k_t{6};
    auto const third = k_t{1} / k_t{3};
    if (nearly_zero(beta, scale, tol)) { out.boundary_flags.push_back("beta = 0"); }
    if (nearly_zero(beta - sixth, scale, tol)) { out.boundary_flags.push_back("beta = 1/6"); }
    if (nearly_zero(beta - third, scale, tol)) { out.boundary_flags.push_back("beta = 1/3"); }
    if (nearly_zero(gamma_value(gamma_curve_t::gamma4, alpha, beta), scale, tol)) {
        out.boundary_flags.push_back("versality (4*alpha + 6*beta^2 - 5*beta = 0)");
    }

    try {
        out.values = {closed_form_c(locus_label_t::parabolic, k_t{1}, alpha, beta),
                      closed_form_c(locus_label_t::b2, k_t{1}, alpha, beta),
                      closed_form_c(locus_label_t::s2, k_t{1}, alpha, beta),
                      closed_form_c(locus_label_t::flecnodal, k_t{1}, alpha, beta)};
    } catch (non_generic_error const& error) {
        out.boundary_flags.push_back(std::string{"pole ("} + error.what() + ")");
        return out;
    }
    out.pattern = detail::ordering_pattern<k_t>(
        {{{"P", out.values[0]}, {"B", out.values[1]}, {"S", out.values[2]}, {"F", out.values[3]}}}, scale, tol);

    if (out.boundary_flags.empty()) {
        if (beta < k_t{0}) {
            out.case_index = 1;
        } else if (beta < sixth) {
            out.case_index = 2;
        } else if (beta < third) {
            out.case_index = 3;
        } else {
            out.case_index = 4;
        }
    }
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Multi-Local Region
// --------------------------------------------------------------------------------------------------------------------

/// published reference table of the 22 region patterns, verbatim including
/// its repeated entries ({1,9}, {8,10,13}, {11,14}, {18,19} are identical as
/// printed); index i holds pattern i+1
inline constexpr std::array<std::string_view, 22> published_region_table{
    "P<s02<s01<s1",   //  1
    "s02<P<s01<s1",   //  2
    "s02<P<s1<s01",   //  3
    "s02<s01<s1<P",   //  4
    "s1<s01<s02<P",   //  5
    "s1<s01<P<s02",   //  6
    "s1<P<s01<s02",   //  7
    "P<s1<s01<s02",   //  8
    "P<s02<s01<s1",   //  9
    "P<s1<s01<s02",   // 10
    "P<s01<s02<s1",   // 11
    "P<s02<s1<s01",   // 12
    "P<s1<s01<s02",   // 13
    "P<s01<s02<s1",   // 14
    "s01<P<s02<s1",   // 15
    "P<s1<s02<s01",   // 16
    "s01<s1<P<s02",   // 17
    "P<s01<s1<s02",   // 18
    "P<s01<s1<s02",   // 19
    "s01<P<s1<s02",   // 20
    "s01<s02<s1<P",   // 21
    "s02<s01<P<s1",   // 22
};

template <scalar k_t>
struct multilocal_position_t {
    std::string pattern{};                     ///< direct-comparison ordering, e.g. "s1<P<s01<s02"
    std::vector<int> region_ids{};             ///< every published id with this pattern; empty ⇒ unmatched
    std::vector<std::string> boundary_flags{};
    std::array<k_t, 4> values{};               ///< c_P, c_{s02}, c_{s1}, c_{s01}
};

/**
    Ordering of the parabolic and the three multi-local quadratic coefficients,
    matched against the published reference table.  Flags proximity to each of
    γ₁…γ₆ and to the two pole curves 3α + 4β² − 4β = 0 (c_{s1}) and
    α + β² − β = 0 (c_{s01}); the ordering jumps across pole curves as well,
    because those coefficients change sign through infinity there.
*/
template <scalar k_t>
auto multilocal_region(k_t const& alpha, k_t const& beta, double tol = 1e-9) -> multilocal_position_t<k_t>
{
    auto out = multilocal_position_t<k_t>{};
    auto const scale = detail::moduli_scale(alpha, beta);
    for (auto const curve : all_gamma_curves) {
        if (nearly_zero(gamma_value(curve, alpha, beta), scale, tol)) {
            out.boundary_flags.push_back(to_string(curve));
        }
    }
    auto const pole_s1 = k_t{3} * alpha + k_t{4} * beta * beta - k_t{4} * beta;
    auto const pole_s01 = alpha + beta * beta - beta;
    if (nearly_zero(pole_s1, scale, tol)) { out.boundary_flags.push_back("pole (3*alpha + 4*beta^2 - 4*beta = 0)"); }
    if (nearly_zero(pole_s01, scale, tol)) { out.boundary_flags.push_back("pole (alpha + beta^2 - beta = 0)"); }

    try {
        out.values = {closed_form_c(locus_label_t::parabolic, k_t{1}, alpha, beta),
                      closed_form_c(locus_label_t::a0s02, k_t{1}, alpha, beta),
                      closed_form_c(locus_label_t::a0s1, k_t{1}, alpha, beta),
                      closed_form_c(locus_label_t::a0s0a1, k_t{1}, alpha, beta)};
    } catch (non_generic_error const& error) {
        out.boundary_flags.push_back(std::string{"pole ("} + error.what() + ")");
        return out;
    }
    out.pattern = detail::ordering_pattern<k_t>(
        {{{"P", out.values[0]}, {"s02", out.values[1]}, {"s1", out.values[2]}, {"s01", out.values[3]}}}, scale,
        tol);
    for (auto id = 0; id < static_cast<int>(published_region_table.size()); ++id) {
        if (published_region_table[static_cast<std::size_t>(id)] == out.pattern) { out.region_ids.push_back(id + 1); }
    }
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Configuration Signature
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct configuration_t {
    std::array<int, 4> sign_vector{};          ///< signs of (c_P, c_B, c_S, c_F); 0 within tolerance of zero
    std::array<k_t, 4> values{};               ///< the coefficients themselves (0 where a pole was hit)
    std::string class_key{};                   ///< e.g. "++++"; '0' marks a vanishing entry, '?' a pole
    bool generic = false;                      ///< all four coefficients exist and clear the tolerance
    std::vector<std::string> degeneracies{};   ///< vanishing coefficients and pole hits
    std::vector<std::string> published_reference_points{};  ///< proximity to published degenerate-locus points
    std::vector<std::string> computed_singular_points{};    ///< proximity to verified singular points
};

namespace detail {

struct special_point_t {
    std::string_view curve;
    double alpha;
    double beta;
};

/// degenerate-locus points as published for the coefficient curves
inline constexpr std::array<special_point_t, 4> published_special_points{{
    {"c_B = 0", 0.25, 0.5},
    {"c_F = 0", 1.0 / 48, 0.0},
    {"c_F = 0", 1.0 / 6, 1.0 / 6},
    {"c_F = 0", -1.0 / 6, -1.0 / 6},
}};

/// singular points verified against the closed forms: value and gradient of
/// the numerator vanish (the c_B = 0 curve is smooth and contributes none)
inline constexpr std::array<special_point_t, 3> computed_special_points{{
    {"c_F = 0", 1.0 / 6, 1.0 / 6},
    {"c_F = 0", -1.0 / 6, -1.0 / 6},
    {"c_S = 0", -0.25, -1.0 / 6},
}};

}  // namespace detail

/**
    Sign vector of (c_P, c_B, c_S, c_F) keying the generic configuration
    classes, with proximity reporting for the degenerate-locus points (both
    the published reference points and the computed singular points).
*/
template <scalar k_t>
auto configuration_signature(k_t const& alpha, k_t const& beta, double tol = 1e-9) -> configuration_t<k_t>
{
    auto out = configuration_t<k_t>{};
    auto const scale = detail::moduli_scale(alpha, beta);
    auto const alpha_d = to_double(alpha);
    auto const beta_d = to_double(beta);
    auto const near_point = [&](detail::special_point_t const& point) {
        return std::abs(alpha_d - point.alpha) <= tol && std::abs(beta_d - point.beta) <= tol;
    };
    for (auto const& point : detail::published_special_points) {
        if (near_point(point)) {
            out.published_reference_points.push_back(std::string{point.curve} + " published reference point ("
                                                     + detail::format_value(point.alpha) + ", "
                                                     + detail::format_value(point.beta) + ")");
        }
    }
    for (auto const& point : detail::computed_special_points) {
        if (near_point(point)) {
            out.computed_singular_points.push_back(std::string{point.curve} + " computed singular point ("
                                                   + detail::format_value(point.alpha) + ", "
                                                   + detail::format_value(point.beta) + ")");
        }
    }

    auto const labels = std::array<std::pair<std::string_view, locus_label_t>, 4>{
        {{"c_P", locus_label_t::parabolic},
         {"c_B", locus_label_t::b2},
         {"c_S", locus_label_t::s2},
         {"c_F", locus_label_t::flecnodal}}};
    out.generic = true;
    for (auto i = std::size_t{0}; i < labels.size(); ++i) {
        try {
            auto const value = closed_form_c(labels[i].second, k_t{1}, alpha, beta);
            out.values[i] = value;
            if (nearly_zero(value, scale, tol)) {
                out.sign_vector[i] = 0;
                out.class_key += '0';
                out.generic = false;
                out.degeneracies.push_back(std::string{labels[i].first} + " = 0 within tolerance");
            } else if (value > k_t{0}) {
                out.sign_vector[i] = 1;
                out.class_key += '+';
            } else {
                out.sign_vector[i] = -1;
                out.class_key += '-';
            }
        } catch (non_generic_error const& error) {
            out.sign_vector[i] = 0;
            out.class_key += '?';
            out.generic = false;
            out.degeneracies.push_back(std::string{labels[i].first} + " pole (" + error.what() + ")");
        }
    }
    return out;
}

// --------------------------------------------------------------------------------------------------------------------
// Combined Report and Grid Sampling
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct region_report_t {
    k_t alpha{};
    k_t beta{};
    local_position_t<k_t> local{};
    multilocal_position_t<k_t> multilocal{};
    configuration_t<k_t> configuration{};
};

/// the full stratification report at normalized moduli
template <scalar k_t>
auto region_report(k_t const& alpha, k_t const& beta, double tol = 1e-9) -> region_report_t<k_t>
{
    auto out = region_report_t<k_t>{};
    out.alpha = alpha;
    out.beta = beta;
    out.local = local_ordering(alpha, beta, tol);
    out.multilocal = multilocal_region(alpha, beta, tol);
    out.configuration = configuration_signature(alpha, beta, tol);
    return out;
}

/**
    Report for a surface in a general chart, through its normalized moduli
    (α, β) = (a₄₄/a₃₂², b₃₃/a₃₂).  Patterns refer to the normalized chart:
    raw coefficients in a chart with a₃₂ < 0 appear in the reversed order,
    but the stratum is a property of the orbit, not of the chart.
*/
template <scalar k_t>
auto region_report(surface_jet_t<k_t> const& s, double tol = 1e-9) -> region_report_t<k_t>
{
    auto const a32 = s.a(3, 2);
    if (nearly_zero(a32, k_t{1}, tol)) { throw non_generic_error{"region_report: a32 = 0"}; }
    return region_report(s.a(4, 4) / (a32 * a32), s.b(3, 3) / a32, tol);
}

/// one grid sample of the multi-local atlas
struct atlas_cell_t {
    double alpha = 0.0;
    double beta = 0.0;
    std::string pattern{};  ///< multi-local ordering (empty at a pole)
    std::string region{};   ///< matching published ids "7" or "8|10|13", "Unmatched", or "boundary:…"
};

/**
    Sample the multi-local stratification on an n×n grid of cell centers over
    [alpha_min, alpha_max] × [beta_min, beta_max].  Cell centers avoid the
    axes for every even n, so boundary flags appear only under a widened
    tolerance.
*/
inline auto sample_atlas(int n, double alpha_min = -2.0, double alpha_max = 2.0, double beta_min = -2.0,
                         double beta_max = 2.0, double tol = 1e-9) -> std::vector<atlas_cell_t>
{
    auto out = std::vector<atlas_cell_t>{};
    if (n <= 0) { return out; }
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto const da = (alpha_max - alpha_min) / n;
    auto const db = (beta_max - beta_min) / n;
    for (auto j = 0; j < n; ++j) {
        for (auto i = 0; i < n; ++i) {
            auto cell = atlas_cell_t{};
            cell.alpha = alpha_min + (i + 0.5) * da;
            cell.beta = beta_min + (j + 0.5) * db;
            auto const position = multilocal_region(cell.alpha, cell.beta, tol);
            cell.pattern = position.pattern;
            if (!position.boundary_flags.empty()) {
                cell.region = "boundary:" + position.boundary_flags.front();
            } else if (position.region_ids.empty()) {
                cell.region = "Unmatched";
            } else {
                auto joined = std::string{};
                for (auto const id : position.region_ids) {
                    if (!joined.empty()) { joined += '|'; }
                    joined += std::to_string(id);
                }
                cell.region = joined;
            }
            out.push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace p3c
