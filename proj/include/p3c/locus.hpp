// SPDX-License-Identifier: MIT
/**
    \file
    \brief labels, sample records, and the curve-germ value type shared by
           the surface module and the locus tracer

    Seven distinguished curves pass through a P₃(c) point, each tangent to
    the discriminant curve Δ.  A locus germ stores the fitted or exact jet
    data x(y) = c₁y + c₂y² + ... of one such curve in the Monge chart,
    together with any traced samples.
*/

#pragma once

#include <p3c/jet.hpp>
#include <p3c/number.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Labels
// --------------------------------------------------------------------------------------------------------------------

enum class locus_label_t {
    parabolic,   ///< the discriminant curve Δ itself
    b2,          ///< projection singularity of local type B₂
    s2,          ///< projection singularity of local type S₂
    flecnodal,   ///< inflections of the asymptotic curves
    a0s02,       ///< bi-local: regular sheet tangent to the double-point curve of a cross-cap
    a0s1,        ///< bi-local: regular sheet through an S₁ point's image
    a0s0a1,      ///< bi-local: regular sheet tangent to a cross-cap, transversal to its double-point curve
};

inline constexpr locus_label_t all_locus_labels[] = {
    locus_label_t::parabolic, locus_label_t::b2, locus_label_t::s2, locus_label_t::flecnodal,
    locus_label_t::a0s02, locus_label_t::a0s1, locus_label_t::a0s0a1,
};

inline auto to_string(locus_label_t label) -> std::string
{
    switch (label) {
        case locus_label_t::parabolic: return "delta";
        case locus_label_t::b2: return "B2";
        case locus_label_t::s2: return "S2";
        case locus_label_t::flecnodal: return "flecnodal";
        case locus_label_t::a0s02: return "A0S0_2";
        case locus_label_t::a0s1: return "A0S1";
        case locus_label_t::a0s0a1: return "A0S0_A1";
    }
    return "?";
}

/// conventional symbol for the quadratic coefficient of each germ (c_P, c_B, ...)
inline auto coefficient_symbol(locus_label_t label) -> std::string
{
    switch (label) {
        case locus_label_t::parabolic: return "c_P";
        case locus_label_t::b2: return "c_B";
        case locus_label_t::s2: return "c_S";
        case locus_label_t::flecnodal: return "c_F";
        case locus_label_t::a0s02: return "c_s02";
        case locus_label_t::a0s1: return "c_s1";
        case locus_label_t::a0s0a1: return "c_s01";
    }
    return "?";
}

// --------------------------------------------------------------------------------------------------------------------
// Curve Germs
// --------------------------------------------------------------------------------------------------------------------

/// one traced point of a locus, in both the solver chart and the Monge chart
struct locus_sample_t {
    double t = 0.0;        ///< continuation parameter
    double x_chart = 0.0;  ///< solved chart coordinate (sheared x for projection loci)
    double u = 0.0;        ///< projection direction parameter at the sample (0 when unused)
    double x = 0.0;        ///< Monge-chart x of the curve point
    double y = 0.0;        ///< Monge-chart y of the curve point
};

/// a labeled curve-germ x(y) = c1*y + c2*y^2 + ... at the origin
template <scalar k_t>
struct locus_germ_t {
    locus_label_t label = locus_label_t::parabolic;
    k_t c1{};                       ///< linear coefficient (zero for curves tangent to Δ)
    k_t c2{};                       ///< quadratic coefficient — the headline invariant
    jet2_t<k_t> series{};           ///< optional fuller series in y (variable index 1)
    std::vector<locus_sample_t> samples{};  ///< traced points when produced by the oracle
};

// --------------------------------------------------------------------------------------------------------------------
// Error Types
// --------------------------------------------------------------------------------------------------------------------

/// a required genericity denominator vanished; carries the offending locus description
struct non_generic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// the surface is not presented in the expected parabolic chart
struct chart_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// a degenerate point where the requested construction breaks down (e.g. a32 = 0)
struct degenerate_point_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// moduli outside the admissible set of the normal form
struct invalid_moduli_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Newton continuation failed to converge; carries the last good parameter
struct continuation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace p3c
