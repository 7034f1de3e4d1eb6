// SPDX-License-Identifier: MIT
/**
    \file
    \brief Monge-form surface jets, point classification, the discriminant δ,
           and detection of P₃(c) points

    A surface in 4-space is carried locally as a pair of degree-5 height jets
        f¹(x,y) = x² + Σ a_{ki} x^{k−i} y^i,   f² = xy + Σ b_{ki} x^{k−i} y^i
    (k = 3..5, 0 ≤ i ≤ k) in the parabolic chart, i.e. with 2-jet (x², xy).

    The second fundamental data is the pair of quadratic forms
        Q₁ = a x² + 2b xy + c y²,   Q₂ = l x² + 2m xy + n y²
    whose pencil discriminant
        δ = (an − cl)² − 4(am − bl)(bn − cm)
    (with a..n the half second partials, promoted to function jets) cuts out
    the discriminant curve Δ.  Points classify by the sign of δ and by the
    rank of the coefficient matrix of (Q₁, Q₂).
*/

#pragma once

#include <p3c/jet.hpp>
#include <p3c/locus.hpp>
#include <p3c/number.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace p3c {

inline constexpr int surface_degree_bound = 5;

// --------------------------------------------------------------------------------------------------------------------
// Surface Jet
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct surface_jet_t {
    jet2_t<k_t> f1{surface_degree_bound};
    jet2_t<k_t> f2{surface_degree_bound};

    /// coefficient a_{ki}: multiplies x^{k−i} y^i in f¹
    auto a(int k, int i) const -> k_t { return f1.coeff({k - i, i}); }
    /// coefficient b_{ki}: multiplies x^{k−i} y^i in f²
    auto b(int k, int i) const -> k_t { return f2.coeff({k - i, i}); }

    using coefficient_table_t = std::map<std::pair<int, int>, k_t>;

    /// build the parabolic-chart surface x² + Σ a_{ki}..., xy + Σ b_{ki}...
    static auto from_coefficients(coefficient_table_t const& a_table, coefficient_table_t const& b_table)
        -> surface_jet_t
    {
        using jet = jet2_t<k_t>;
        auto const check = [](std::pair<int, int> const& ki) {
            auto const [k, i] = ki;
            if (k < 3 || k > surface_degree_bound || i < 0 || i > k) {
                throw std::invalid_argument{"surface coefficients must have 3 <= k <= 5, 0 <= i <= k"};
            }
        };
        auto s = surface_jet_t{};
        s.f1 = jet::monomial({2, 0}, k_t{1}, surface_degree_bound);
        s.f2 = jet::monomial({1, 1}, k_t{1}, surface_degree_bound);
        for (auto const& [ki, value] : a_table) {
            check(ki);
            s.f1 = s.f1 + jet::monomial({ki.first - ki.second, ki.second}, value, surface_degree_bound);
        }
        for (auto const& [ki, value] : b_table) {
            check(ki);
            s.f2 = s.f2 + jet::monomial({ki.first - ki.second, ki.second}, value, surface_degree_bound);
        }
        return s;
    }

    /// true if the 2-jet is exactly (x², xy) up to the float gate
    auto in_parabolic_chart(double tol = nonzero_gate) const -> bool
    {
        auto const two_jet_matches = [&](jet2_t<k_t> const& f, int ex, int ey) {
            auto const scale = 1.0;
            for (int dx = 0; dx <= 2; ++dx) {
                for (int dy = 0; dx + dy <= 2; ++dy) {
                    auto const want = (dx == ex && dy == ey) ? 1.0 : 0.0;
                    if (std::abs(to_double(f.coeff({dx, dy})) - want) > tol * scale) { return false; }
                }
            }
            return true;
        };
        return two_jet_matches(f1, 2, 0) && two_jet_matches(f2, 1, 1);
    }
};

// --------------------------------------------------------------------------------------------------------------------
// Quadratic Pair and Point Classification
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct quadratic_pair_t {
    k_t a{}, b{}, c{};  ///< Q₁ = a x² + 2b xy + c y²
    k_t l{}, m{}, n{};  ///< Q₂ = l x² + 2m xy + n y²

    static auto from_surface(surface_jet_t<k_t> const& s) -> quadratic_pair_t
    {
        auto const half = k_t{1} / k_t{2};
        return quadratic_pair_t{
            s.f1.coeff({2, 0}), half * s.f1.coeff({1, 1}), s.f1.coeff({0, 2}),
            s.f2.coeff({2, 0}), half * s.f2.coeff({1, 1}), s.f2.coeff({0, 2}),
        };
    }

    /// discriminant of the pencil at the point itself
    auto delta0() const -> k_t
    {
        auto const an_cl = a * n - c * l;
        auto const am_bl = a * m - b * l;
        auto const bn_cm = b * n - c * m;
        return an_cl * an_cl - k_t{4} * am_bl * bn_cm;
    }
};

enum class point_kind_t { hyperbolic, elliptic, parabolic, inflection, degenerate_inflection };

inline auto to_string(point_kind_t kind) -> std::string
{
    switch (kind) {
        case point_kind_t::hyperbolic: return "hyperbolic";
        case point_kind_t::elliptic: return "elliptic";
        case point_kind_t::parabolic: return "parabolic";
        case point_kind_t::inflection: return "inflection";
        case point_kind_t::degenerate_inflection: return "degenerate_inflection";
    }
    return "?";
}

/// sub-label for dependent pairs (the single surviving quadratic form)
enum class inflection_form_t { none, real_type, imaginary_type, double_line, flat };

struct point_class_t {
    point_kind_t kind = point_kind_t::parabolic;
    /// 2 / 1 / 0 asymptotic directions for hyperbolic / parabolic / elliptic; empty when the pair is dependent
    std::optional<int> asymptotic_directions{};
    inflection_form_t form = inflection_form_t::none;
};

/**
    Orbit classification of the pair (Q₁, Q₂):
      - independent pair: sign of δ gives hyperbolic (>0), elliptic (<0), parabolic (=0);
      - dependent pair (rank of the 2×3 coefficient matrix ≤ 1): an inflection point,
        sub-labeled by the discriminant of the surviving form; rank 0 and perfect
        squares land in the degenerate classes.
*/
template <scalar k_t>
auto classify_point(quadratic_pair_t<k_t> const& q, double tol = nonzero_gate) -> point_class_t
{
    auto const scale = [&] {
        auto s = 0.0;
        for (auto const& v : {q.a, q.b, q.c, q.l, q.m, q.n}) { s = std::max(s, std::abs(to_double(v))); }
        return s;
    }();
    // gates scaled by coefficient size to the degree of the compared quantity; exact in rational mode
    auto const zero_at = [&](k_t const& v, int degree) {
        if constexpr (std::same_as<k_t, rational_t>) {
            return v == 0;
        } else {
            auto reference = 1.0;
            for (int d = 0; d < degree; ++d) { reference *= std::max(scale, 1.0); }
            return std::abs(v) <= tol * reference;
        }
    };
    auto const zero2 = [&](k_t const& v) { return zero_at(v, 2); };
    auto const zero4 = [&](k_t const& v) { return zero_at(v, 4); };

    // rank of [[a,b,c],[l,m,n]] via its three 2x2 minors
    auto const minor_ab = q.a * q.m - q.b * q.l;
    auto const minor_ac = q.a * q.n - q.c * q.l;
    auto const minor_bc = q.b * q.n - q.c * q.m;
    auto const dependent = zero2(minor_ab) && zero2(minor_ac) && zero2(minor_bc);

    if (!dependent) {
        auto const delta = minor_ac * minor_ac - k_t{4} * minor_ab * minor_bc;
        if (zero4(delta)) { return {point_kind_t::parabolic, 1, inflection_form_t::none}; }
        if (to_double(delta) > 0.0) { return {point_kind_t::hyperbolic, 2, inflection_form_t::none}; }
        return {point_kind_t::elliptic, 0, inflection_form_t::none};
    }

    // dependent family: pick the representative form with the larger coefficient norm
    auto const norm1 = std::abs(to_double(q.a)) + std::abs(to_double(q.b)) + std::abs(to_double(q.c));
    auto const norm2 = std::abs(to_double(q.l)) + std::abs(to_double(q.m)) + std::abs(to_double(q.n));
    auto const [fa, fb, fc] = norm1 >= norm2 ? std::array{q.a, q.b, q.c} : std::array{q.l, q.m, q.n};

    auto const zero1 = [&](k_t const& v) { return zero_at(v, 1); };
    auto const all_zero = zero1(fa) && zero1(fb) && zero1(fc);
    if (all_zero) { return {point_kind_t::degenerate_inflection, std::nullopt, inflection_form_t::flat}; }

    auto const disc = fb * fb - fa * fc;
    if (zero2(disc)) { return {point_kind_t::degenerate_inflection, std::nullopt, inflection_form_t::double_line}; }
    auto const form = to_double(disc) > 0.0 ? inflection_form_t::real_type : inflection_form_t::imaginary_type;
    return {point_kind_t::inflection, std::nullopt, form};
}

// --------------------------------------------------------------------------------------------------------------------
// Fundamental Coefficient Jets and the Discriminant
// --------------------------------------------------------------------------------------------------------------------

/// the six coefficient functions a..n of the second fundamental pair, as jets
template <scalar k_t>
struct fundamental_coefficients_t {
    jet2_t<k_t> a, b, c, l, m, n;

    static auto from_surface(surface_jet_t<k_t> const& s) -> fundamental_coefficients_t
    {
        auto const half = k_t{1} / k_t{2};
        return {
            half * s.f1.partial(0).partial(0), half * s.f1.partial(0).partial(1), half * s.f1.partial(1).partial(1),
            half * s.f2.partial(0).partial(0), half * s.f2.partial(0).partial(1), half * s.f2.partial(1).partial(1),
        };
    }
};

/// δ as a function jet: (an − cl)² − 4(am − bl)(bn − cm) on the coefficient jets
template <scalar k_t>
auto delta_jet(surface_jet_t<k_t> const& s) -> jet2_t<k_t>
{
    auto const f = fundamental_coefficients_t<k_t>::from_surface(s);
    auto const an_cl = f.a * f.n - f.c * f.l;
    auto const am_bl = f.a * f.m - f.b * f.l;
    auto const bn_cm = f.b * f.n - f.c * f.m;
    return an_cl * an_cl - k_t{4} * (am_bl * bn_cm);
}

/**
    Historical reference expansion of the discriminant's two-jet in the
    coefficients a_{ij}, b_{ij}.  The recomputed two-jet of delta_jet differs
    from this transcription in exactly one place: the xy coefficient below
    omits the product a₃₂·b₃₂ (the full product rule gives (2b₃₂+a₃₁)a₃₂
    where this expansion carries (b₃₂+a₃₁)a₃₂).  The acceptance suite checks
    the comparison and reports the deviation; reconcile() records it.
*/
template <scalar k_t>
auto delta_two_jet_reference(surface_jet_t<k_t> const& s) -> jet2_t<k_t>
{
    using jet = jet2_t<k_t>;
    auto const a30 = s.a(3, 0), a31 = s.a(3, 1), a32 = s.a(3, 2), a33 = s.a(3, 3);
    auto const a42 = s.a(4, 2), a43 = s.a(4, 3), a44 = s.a(4, 4);
    auto const b31 = s.b(3, 1), b32 = s.b(3, 2), b33 = s.b(3, 3);

    auto const cx = a32;
    auto const cy = k_t{3} * a33;
    auto const cxx = b32 * b32 - k_t{2} * a31 * b32 + k_t{2} * a32 * b31 + a42
        + (k_t{2} * b31 + k_t{3} * a30) * a32;
    auto const cxy = k_t{6} * b33 * b32 - k_t{6} * a31 * b33 + k_t{6} * a33 * b31 + k_t{3} * a43
        + (b32 + a31) * a32 + (k_t{6} * b31 + k_t{9} * a30) * a33;
    auto const cyy = k_t{3} * (k_t{3} * b33 * b33 - k_t{2} * a32 * b33 + k_t{2} * a33 * b32 + k_t{2} * a44
        + (k_t{2} * b32 + a31) * a33);

    auto const bound = 2;
    return jet::monomial({1, 0}, cx, bound) + jet::monomial({0, 1}, cy, bound)
        + jet::monomial({2, 0}, cxx, bound) + jet::monomial({1, 1}, cxy, bound)
        + jet::monomial({0, 2}, cyy, bound);
}

// --------------------------------------------------------------------------------------------------------------------
// Parabolic Curve
// --------------------------------------------------------------------------------------------------------------------

/**
    The discriminant curve through the origin as a series x(y), obtained by
    implicit inversion of δ (the linear x-coefficient of δ is a₃₂ ≠ 0).
    The quadratic coefficient is the invariant c_P; it is *computed* here,
    never transcribed from a closed form — closed forms live in the tracer
    and serve as the cross-check.
*/
template <scalar k_t>
auto parabolic_series(surface_jet_t<k_t> const& s) -> locus_germ_t<k_t>
{
    if (!s.in_parabolic_chart()) { throw chart_error{"parabolic_series: 2-jet is not (x^2, xy)"}; }
    auto const delta = delta_jet(s);
    jet2_t<k_t> series{};
    try {
        series = implicit_solve(delta, 0);
    } catch (singular_implicit_error const&) {
        throw degenerate_point_error{"parabolic_series: a32 = 0 degenerates the discriminant"};
    }
    auto germ = locus_germ_t<k_t>{};
    germ.label = locus_label_t::parabolic;
    germ.c1 = series.coeff({0, 1});
    germ.c2 = series.coeff({0, 2});
    germ.series = series;
    return germ;
}

// --------------------------------------------------------------------------------------------------------------------
// P₃(c) Detection
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t>
struct p3_report_t {
    bool is_p3c = false;
    bool versal = false;
    k_t modulus_c{};          ///< c = a₄₄ / (b₃₃ a₃₂), meaningful when is_p3c
    k_t versality_value{};    ///< 5a₃₂b₃₃ − 6b₃₃² − 4a₄₄
    std::string failing_condition{};  ///< empty when is_p3c
    /// (α, β) = (a₄₄, b₃₃) when the surface is presented in the normalized shape
    std::optional<std::pair<k_t, k_t>> normalized_moduli{};
};

namespace detail {

/// true if the surface matches the normalized sparsity x² + xy² + αy⁴ / xy + βy³ + (degree ≥ 4 tail)
template <scalar k_t>
auto matches_normalized_shape(surface_jet_t<k_t> const& s, double tol) -> bool
{
    auto const zero = [&](k_t const& v) { return nearly_zero(v, k_t{1}, tol); };
    auto const one = [&](k_t const& v) { return nearly_zero(v - k_t{1}, k_t{1}, tol); };
    if (!one(s.a(3, 2))) { return false; }
    for (auto const i : {0, 1, 3}) {
        if (!zero(s.a(3, i))) { return false; }
    }
    for (auto const i : {0, 1, 2, 3}) {
        if (!zero(s.a(4, i))) { return false; }
    }
    for (int i = 0; i <= 5; ++i) {
        if (!zero(s.a(5, i))) { return false; }
    }
    for (auto const i : {0, 1, 2}) {
        if (!zero(s.b(3, i))) { return false; }
    }
    return true;
}

}  // namespace detail

template <scalar k_t>
auto detect_p3c(surface_jet_t<k_t> const& s, double tol = nonzero_gate) -> p3_report_t<k_t>
{
    if (!s.in_parabolic_chart(tol)) { throw chart_error{"detect_p3c: 2-jet is not (x^2, xy)"}; }

    auto const a32 = s.a(3, 2), a33 = s.a(3, 3), a44 = s.a(4, 4), b33 = s.b(3, 3);
    auto report = p3_report_t<k_t>{};
    report.versality_value = k_t{5} * a32 * b33 - k_t{6} * b33 * b33 - k_t{4} * a44;
    report.versal = !nearly_zero(report.versality_value, k_t{1}, tol);
    if (detail::matches_normalized_shape(s, tol)) { report.normalized_moduli = {{a44, b33}}; }

    auto const fail = [&](std::string reason) {
        report.is_p3c = false;
        report.failing_condition = std::move(reason);
        return report;
    };

    if (!nearly_zero(a33, k_t{1}, tol)) { return fail("a33 != 0"); }
    if (nearly_zero(a32, k_t{1}, tol)) { return fail("a32 = 0"); }
    if (nearly_zero(b33, k_t{1}, tol)) { return fail("b33 = 0"); }
    if (nearly_zero(a44, k_t{1}, tol)) { return fail("a44 = 0"); }

    auto const modulus = a44 / (b33 * a32);
    report.modulus_c = modulus;
    for (auto const& excluded : {k_t{1} / k_t{2}, k_t{1}, k_t{3} / k_t{2}}) {
        if (nearly_zero(modulus - excluded, k_t{1}, tol)) {
            return fail("modulus c = " + std::to_string(to_double(excluded)) + " is excluded");
        }
    }

    report.is_p3c = true;
    return report;
}

// --------------------------------------------------------------------------------------------------------------------
// Normal Form
// --------------------------------------------------------------------------------------------------------------------

/**
    The normalized P₃(c) surface (x² + xy² + αy⁴, xy + βy³ + φ) with an
    optional tail φ of total degree ≥ 4 in the second component.
    Admissibility: 6β² + 4α − 15β + 5 ≠ 0 (chart reduction), plus the modulus
    conditions α ≠ 0, β ≠ 0, α/β ∉ {1/2, 1, 3/2}.
*/
template <scalar k_t>
auto normal_form_surface(k_t const& alpha, k_t const& beta, jet2_t<k_t> const& phi = jet2_t<k_t>{surface_degree_bound})
    -> surface_jet_t<k_t>
{
    using jet = jet2_t<k_t>;
    auto const gate = k_t{6} * beta * beta + k_t{4} * alpha - k_t{15} * beta + k_t{5};
    if (nearly_zero(gate, k_t{1})) {
        throw invalid_moduli_error{"normal_form_surface: 6b^2 + 4a - 15b + 5 = 0 is inadmissible"};
    }
    if (nearly_zero(beta, k_t{1})) { throw invalid_moduli_error{"normal_form_surface: beta = 0 (b33 must not vanish)"}; }
    if (nearly_zero(alpha, k_t{1})) { throw invalid_moduli_error{"normal_form_surface: alpha = 0 (a44 must not vanish)"}; }
    auto const modulus = alpha / beta;
    for (auto const& excluded : {k_t{1} / k_t{2}, k_t{1}, k_t{3} / k_t{2}}) {
        if (nearly_zero(modulus - excluded, k_t{1})) {
            throw invalid_moduli_error{"normal_form_surface: modulus alpha/beta hits an excluded value"};
        }
    }
    for (auto const& [exps, value] : phi.terms()) {
        (void)value;
        if (jet::total_degree(exps) < 4) {
            throw invalid_moduli_error{"normal_form_surface: tail must have total degree >= 4"};
        }
    }

    auto s = surface_jet_t<k_t>{};
    s.f1 = jet::monomial({2, 0}, k_t{1}, surface_degree_bound)
        + jet::monomial({1, 2}, k_t{1}, surface_degree_bound)
        + jet::monomial({0, 4}, alpha, surface_degree_bound);
    s.f2 = jet::monomial({1, 1}, k_t{1}, surface_degree_bound)
        + jet::monomial({0, 3}, beta, surface_degree_bound)
        + phi.truncated(surface_degree_bound);
    return s;
}

/// numeric image of an exact surface, for the floating-point tracer
template <scalar k_t>
auto to_double_surface(surface_jet_t<k_t> const& s) -> surface_jet_t<double>
{
    return surface_jet_t<double>{to_double_jet(s.f1), to_double_jet(s.f2)};
}

}  // namespace p3c
