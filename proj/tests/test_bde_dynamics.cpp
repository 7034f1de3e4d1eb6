// SPDX-License-Identifier: MIT
/**
    @file  test_bde_dynamics.cpp
    @brief asymptotic BDE, lifted field, folded classification, inflection
           branch, and phase portraits

    Mathematical basis:
      - Ω = A dy² + 2B dxdy + C dx² with A = bn−cm, 2B = an−cl, C = am−bl;
        its discriminant (2B)² − 4AC is the parabolic-curve function δ;
      - on the normalized surface (x² + xy² + αy⁴, xy + βy³) the slope-cover
        polynomial is exactly Ω₃ = ½p² + 3βyp − ½x + 3(β−α)y²;
      - the lifted field ξ = pΩ_p∂x + Ω_p∂y − (Ω_y + pΩ_x)∂p satisfies
        ξ·∇Ω₃ ≡ 0 (tangency is an algebraic identity, testable exactly);
      - the folded singularity at the origin has linearization
        [[3β, 1], [6(α−β), ½−3β]] on {Ω₃ = 0}: trace ½, determinant (3/2)q
        with q = 5β − 6β² − 4α; saddle q < 0, node 0 < q < 1/24,
        focus q > 1/24 — the threshold rule must agree with the eigenvalue
        route everywhere off the q ∈ {0, 1/24} bands;
      - the canonical folded models Ω = p² − x + λy² linearize to trace 1,
        det 4λ: saddle λ < 0, node 0 < λ < 1/16, focus λ > 1/16;
      - the inflection branch {Ω₃ = 0, Ω₃_y + pΩ₃_x = 0} eliminates to
        x(y) = c_F y² + ⋯ with slope p = 12(a₃₂b₃₃ − a₄₄)/(a₃₂ − 6b₃₃)·y + ⋯,
        both exact over rationals.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <p3c/bde.hpp>
#include <p3c/tracer.hpp>

#include <cmath>
#include <map>
#include <random>

using namespace p3c;

namespace {

using jet2 = jet2_t<rational_t>;
using jet3 = jet3_t<rational_t>;

auto rat(long long num, long long den = 1) -> rational_t { return rational_t{num} / rational_t{den}; }

auto normal_bde(rational_t const& alpha, rational_t const& beta) -> bde_t<rational_t>
{
    return bde_t<rational_t>::from_surface(normal_form_surface(alpha, beta));
}

/// surface with the normalized controlling coefficients but no admissibility gate
auto plain_surface(double alpha, double beta) -> surface_jet_t<double>
{
    auto a = std::map<std::pair<int, int>, double>{{{3, 2}, 1.0}, {{4, 4}, alpha}};
    auto b = std::map<std::pair<int, int>, double>{{{3, 3}, beta}};
    return surface_jet_t<double>::from_coefficients(a, b);
}

/// the model family Ω = p² − x + λy² (C = 1, B = 0, A = −x + λy²)
auto folded_model(double lambda) -> bde_t<double>
{
    auto const bound = bde_lift_bound - 2;
    auto model = bde_t<double>{};
    model.acoef = jet2_t<double>::monomial({1, 0}, -1.0, bound) + jet2_t<double>::monomial({0, 2}, lambda, bound);
    model.b2coef = jet2_t<double>{bound};
    model.ccoef = jet2_t<double>::constant(1.0, bound);
    return model;
}

auto sign_changes(std::vector<std::array<double, 2>> const& curve, int axis) -> int
{
    auto changes = 0;
    auto last = 0.0;
    for (auto const& point : curve) {
        auto const value = point[static_cast<std::size_t>(axis)];
        if (value == 0.0) { continue; }
        if (last != 0.0 && value * last < 0.0) { ++changes; }
        last = value;
    }
    return changes;
}

}  // namespace

// ── Slope-cover polynomial ──────────────────────────────────────────────────────────────────────────────────────────

TEST_CASE("the normalized slope-cover polynomial is exact")
{
    auto const alpha = rat(-1), beta = rat(1);
    auto const omega = normal_bde(alpha, beta).omega3();
    auto const expected = jet3::monomial({0, 0, 2}, rat(1, 2), 6)
        + jet3::monomial({0, 1, 1}, rat(3) * beta, 6)
        + jet3::monomial({1, 0, 0}, rat(-1, 2), 6)
        + jet3::monomial({0, 2, 0}, rat(3) * (beta - alpha), 6);
    CHECK(omega == expected);
}

TEST_CASE("the BDE discriminant is the parabolic-curve function")
{
    auto rng = std::mt19937{11};
    auto coeff = std::uniform_int_distribution<int>{-5, 5};
    for (int trial = 0; trial < 20; ++trial) {
        auto a = std::map<std::pair<int, int>, rational_t>{};
        auto b = std::map<std::pair<int, int>, rational_t>{};
        for (int k = 3; k <= 5; ++k) {
            for (int i = 0; i <= k; ++i) {
                a[{k, i}] = rat(coeff(rng), 2);
                b[{k, i}] = rat(coeff(rng), 3);
            }
        }
        auto const s = surface_jet_t<rational_t>::from_coefficients(a, b);
        auto const delta = bde_t<rational_t>::from_surface(s).discriminant();
        CHECK(delta.truncated(3) == delta_jet(s));
        CHECK(is_exactly_zero(delta.evaluate({rat(0), rat(0)})));
    }
}

// ── Lifted field ────────────────────────────────────────────────────────────────────────────────────────────────────

TEST_CASE("the lifted field is tangent to the slope cover as an exact identity")
{
    auto rng = std::mt19937{23};
    auto coeff = std::uniform_int_distribution<int>{-4, 4};
    for (int trial = 0; trial < 10; ++trial) {
        auto a = std::map<std::pair<int, int>, rational_t>{{{3, 2}, rat(coeff(rng), 1)}};
        auto b = std::map<std::pair<int, int>, rational_t>{{{3, 3}, rat(coeff(rng), 2)}};
        a[{4, 4}] = rat(coeff(rng), 3);
        a[{4, 1}] = rat(coeff(rng), 2);
        b[{5, 2}] = rat(coeff(rng), 1);
        auto const omega = bde_t<rational_t>::from_surface(surface_jet_t<rational_t>::from_coefficients(a, b)).omega3();
        auto const xi = lifted_field(omega);
        auto const derivative =
            xi[0] * omega.partial(0) + xi[1] * omega.partial(1) + xi[2] * omega.partial(2);
        CHECK_MESSAGE(derivative.is_zero(), "trial " << trial);
    }
}

// ── Folded singularity classification ───────────────────────────────────────────────────────────────────────────────

TEST_CASE("the normalized linearization matches the closed 2x2 block")
{
    auto const alpha = rat(-1), beta = rat(1);
    auto const folded = classify_folded(normal_bde(alpha, beta));
    CHECK(folded.linear[0][0] == rat(3) * beta);
    CHECK(folded.linear[0][1] == rat(1));
    CHECK(folded.linear[1][0] == rat(6) * (alpha - beta));
    CHECK(folded.linear[1][1] == rat(1, 2) - rat(3) * beta);
    CHECK(folded.trace == rat(1, 2));
    auto const q = rat(5) * beta - rat(6) * beta * beta - rat(4) * alpha;
    CHECK(folded.det == rat(3, 2) * q);
}

TEST_CASE("worked points classify as focus, saddle, and node")
{
    CHECK(classify_folded(normal_bde(rat(-1), rat(1))).type == folded_type_t::folded_focus);   // q = 3
    CHECK(classify_folded(normal_bde(rat(2), rat(-1))).type == folded_type_t::folded_saddle);  // q = −19
    auto const node = bde_t<double>::from_surface(plain_surface(-0.255, 1.0));                 // q = 0.02
    CHECK(classify_folded(node).type == folded_type_t::folded_node);
}

TEST_CASE("folded models hit the canonical lambda thresholds")
{
    CHECK(classify_folded(folded_model(-1.0)).type == folded_type_t::folded_saddle);
    CHECK(classify_folded(folded_model(1.0 / 32.0)).type == folded_type_t::folded_node);
    CHECK(classify_folded(folded_model(1.0)).type == folded_type_t::folded_focus);
    auto const report = classify_folded(folded_model(1.0));
    CHECK(report.trace == doctest::Approx(1.0));
    CHECK(report.det == doctest::Approx(4.0));
}

TEST_CASE("threshold rule and eigenvalue route agree on a 50x50 moduli grid")
{
    auto const band = 1e-6;
    auto checked = 0;
    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            auto const alpha = -2.0 + 4.0 * double(i) / 49.0;
            auto const beta = -2.0 + 4.0 * double(j) / 49.0;
            auto const q = 5.0 * beta - 6.0 * beta * beta - 4.0 * alpha;
            if (std::abs(q) < band || std::abs(q - 1.0 / 24.0) < band) { continue; }
            auto const by_threshold = q < 0.0 ? folded_type_t::folded_saddle
                : q < 1.0 / 24.0              ? folded_type_t::folded_node
                                              : folded_type_t::folded_focus;
            auto const folded = classify_folded(bde_t<double>::from_surface(plain_surface(alpha, beta)));
            CHECK_MESSAGE(folded.type == by_threshold,
                          "alpha " << alpha << " beta " << beta << " q " << q << ": " << to_string(folded.type));
            ++checked;
        }
    }
    CHECK(checked > 2400);
}

TEST_CASE("near-degenerate determinants report NonGeneric")
{
    // at β = 1, q = −1 − 4α: the q = 0 and q = 1/24 boundaries sit at α = −1/4 and −25/96
    auto const on_boundary = plain_surface(-0.25, 1.0);
    CHECK(classify_folded(bde_t<double>::from_surface(on_boundary)).type == folded_type_t::non_generic);
    auto const on_disc = plain_surface(-25.0 / 96.0, 1.0);
    CHECK(classify_folded(bde_t<double>::from_surface(on_disc)).type == folded_type_t::non_generic);
}

TEST_CASE("a non-folded origin is refused")
{
    // b₃₃ stays but a₃₃ ≠ 0 moves the double root off p = 0 (A_y(0) ≠ 0)
    auto a = std::map<std::pair<int, int>, rational_t>{{{3, 2}, rat(1)}, {{3, 3}, rat(1)}, {{4, 4}, rat(1)}};
    auto b = std::map<std::pair<int, int>, rational_t>{{{3, 3}, rat(1)}};
    auto const s = surface_jet_t<rational_t>::from_coefficients(a, b);
    CHECK_THROWS_AS((void)classify_folded(bde_t<rational_t>::from_surface(s)), chart_error);
}

// ── Inflection branch ───────────────────────────────────────────────────────────────────────────────────────────────

TEST_CASE("the inflection branch reproduces the closed form exactly")
{
    auto rng = std::mt19937{331};
    auto coeff = std::uniform_int_distribution<int>{-6, 6};
    auto tested = 0;
    while (tested < 25) {
        auto const a32 = rat(coeff(rng), 2), a44 = rat(coeff(rng), 3), b33 = rat(coeff(rng), 2);
        if (is_exactly_zero(a32) || is_exactly_zero(a32 - rat(6) * b33)) { continue; }
        auto a = std::map<std::pair<int, int>, rational_t>{{{3, 2}, a32}, {{4, 4}, a44}};
        auto b = std::map<std::pair<int, int>, rational_t>{{{3, 3}, b33}};
        // independent tails must not disturb the quadratic coefficient
        a[{5, 1}] = rat(coeff(rng), 3);
        b[{4, 2}] = rat(coeff(rng), 2);
        auto const s = surface_jet_t<rational_t>::from_coefficients(a, b);
        auto const branch = inflection_locus(s);
        CHECK(branch.c2 == closed_form_c(locus_label_t::flecnodal, a32, a44, b33));
        auto const slope1 = branch.slope_of_y.coeff({0, 1, 0});
        CHECK(slope1 == rat(12) * (a32 * b33 - a44) / (a32 - rat(6) * b33));
        CHECK(is_exactly_zero(branch.x_of_y.coeff({0, 1, 0})));
        ++tested;
    }
}

TEST_CASE("the inflection elimination names its vanishing pivots")
{
    // a₃₂ = 6b₃₃ degenerates the slope elimination
    auto a = std::map<std::pair<int, int>, rational_t>{{{3, 2}, rat(6)}, {{4, 4}, rat(1)}};
    auto b = std::map<std::pair<int, int>, rational_t>{{{3, 3}, rat(1)}};
    CHECK_THROWS_AS((void)inflection_locus(surface_jet_t<rational_t>::from_coefficients(a, b)), non_generic_error);
}

// ── Phase portraits ─────────────────────────────────────────────────────────────────────────────────────────────────

TEST_CASE("fold-model portrait stays on the hyperbolic side and marks the criminant")
{
    // Ω = p² + y: real slopes need y ≤ 0; cusps sit on the fold line y = 0
    auto const bound = bde_lift_bound - 2;
    auto fold = bde_t<double>{};
    fold.acoef = jet2_t<double>::monomial({0, 1}, 1.0, bound);
    fold.b2coef = jet2_t<double>{bound};
    fold.ccoef = jet2_t<double>::constant(1.0, bound);

    auto const portrait = integrate_curves(fold, 0.3, 1e-3, 7, 1200);
    REQUIRE(!portrait.curves.empty());
    for (auto const& curve : portrait.curves) {
        for (auto const& point : curve) {
            CHECK(std::abs(point[0]) <= 0.3 + 1e-6);
            CHECK(point[1] <= 1e-6);
        }
    }
    REQUIRE(!portrait.cusps.empty());
    for (auto const& cusp : portrait.cusps) { CHECK(std::abs(cusp[1]) < 5e-3); }
}

TEST_CASE("focus-model curves wind; saddle-model curves do not")
{
    auto const focus = integrate_curves(folded_model(1.0), 0.3, 1e-3, 7, 1500);
    auto focus_max_changes = 0;
    for (auto const& curve : focus.curves) {
        focus_max_changes = std::max(focus_max_changes, sign_changes(curve, 1));
    }
    CHECK(focus_max_changes >= 3);

    auto const saddle = integrate_curves(folded_model(-1.0), 0.3, 1e-3, 7, 1500);
    auto saddle_max_changes = 0;
    for (auto const& curve : saddle.curves) {
        saddle_max_changes = std::max(saddle_max_changes, sign_changes(curve, 1));
    }
    CHECK(saddle_max_changes <= 2);
}

TEST_CASE("surface portrait near the worked focus point records curves and cusps")
{
    auto const eq = bde_t<double>::from_surface(plain_surface(-1.0, 1.0));
    auto const portrait = integrate_curves(eq, 0.2, 1e-3, 5, 800);
    CHECK(portrait.curves.size() > 10);
    auto total_points = std::size_t{0};
    for (auto const& curve : portrait.curves) { total_points += curve.size(); }
    CHECK(total_points > 1000);
}
