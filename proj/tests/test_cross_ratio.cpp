// SPDX-License-Identifier: MIT
/**
    @file  test_cross_ratio.cpp
    @brief cross-ratio invariants of the tangent pencil and moduli recovery

    Mathematical basis:
      - the seven curve germs through the distinguished point lift to
        Legendrian curves sharing one contact plane; their tangent lines form
        a pencil coordinatized by the quadratic coefficient, (c₂ : 1), with
        the vertical direction l_g = (1 : 0); cross-ratios of four pencil
        members are the projective invariants ρ₁..ρ₄;
      - closed forms: ρ₁ = (3β−1)/(6β−1) and ρ₄ = K/(6β(2β−1)²) with
        K = (4α+6β²−5β)²; worked points: (α,β) = (−1,1) gives
        ρ = (2/5, 1/8, −1/6, 3/2); (2,−1) gives (4/7, −341/96, −353/84, −361/54);
      - recovery: β = (ρ₁−1)/(3(2ρ₁−1)); generically
        α = 4(ρ₂−ρ₃)β(β−1)/(1−4ρ₂+3ρ₃); the elimination pivot factors as
        −(β−1)(4α+6β²−9β)(4α+6β²−5β) over a nonvanishing denominator, so it
        dies exactly at β = 1 or where the three s-lines coincide; there α
        solves a quadratic whose two roots are told apart by ρ₄ — at the first
        worked point the roots are −1 (ρ₄ = 3/2) and 3/16 (ρ₄ = 49/96);
      - the historical reference expansion for α evaluates to 7/2 at
        (2/5, 1/8, −1/6), matching neither valid preimage; it is kept only
        for regression comparison.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <p3c/cross_ratio.hpp>

#include <cmath>
#include <random>

using namespace p3c;

namespace {

using surface = surface_jet_t<rational_t>;
using line = line_t<rational_t>;

auto rat(long long num, long long den = 1) -> rational_t { return rational_t{num} / rational_t{den}; }

/// random normalized moduli for which all seven closed forms and every
/// cross-ratio exist
auto random_admissible(std::mt19937& rng) -> std::pair<rational_t, rational_t>
{
    auto numerator = std::uniform_int_distribution<int>{-12, 12};
    auto denominator = std::uniform_int_distribution<int>{1, 4};
    while (true) {
        auto const alpha = rational_t{numerator(rng)} / rational_t{denominator(rng)};
        auto const beta = rational_t{numerator(rng)} / rational_t{denominator(rng)};
        if (is_exactly_zero(alpha) || is_exactly_zero(beta)) { continue; }
        try {
            auto const s = normal_form_surface(alpha, beta);
            if (!detect_p3c(s).versal) { continue; }
            (void)cr_invariants(alpha, beta);
            return {alpha, beta};
        } catch (invalid_moduli_error const&) {
        } catch (non_generic_error const&) {
        } catch (degenerate_point_error const&) {
        }
    }
}

auto forward_rho4(rational_t const& alpha, rational_t const& beta) -> rational_t
{
    auto const q = rat(4) * alpha + rat(6) * beta * beta - rat(5) * beta;
    return q * q / (rat(6) * beta * (rat(2) * beta - rat(1)) * (rat(2) * beta - rat(1)));
}

}  // namespace

// ── Cross-ratio of pencil lines ─────────────────────────────────────────────────────────────────────────────────────

TEST_CASE("cross-ratio of finite lines matches the coefficient formula")
{
    auto const of = [](long long c) { return line::from_coefficient(rational_t{c}); };
    // ((c3−c1)(c4−c2)) / ((c3−c2)(c4−c1)) at (0, 1, 2, 3)
    CHECK(cross_ratio(of(0), of(1), of(2), of(3)) == rat(4, 3));
    // a vertical second entry reduces to the simple ratio (c3−c1)/(c4−c1)
    CHECK(cross_ratio(of(5), line::vertical(), of(7), of(11)) == rat(1, 3));
    // swapping the last pair inverts
    CHECK(cross_ratio(of(0), of(1), of(3), of(2)) == rat(3, 4));
}

TEST_CASE("cross-ratio is invariant under projective changes of the pencil")
{
    auto rng = std::mt19937{20260823};
    auto entry = std::uniform_int_distribution<int>{-5, 5};
    auto checked = 0;
    while (checked < 50) {
        auto const lines = std::array<line, 4>{line::from_coefficient(rat(entry(rng), 2)),
                                               line::from_coefficient(rat(entry(rng), 3)),
                                               line::from_coefficient(rat(entry(rng), 5)), line::vertical()};
        auto const m00 = rat(entry(rng)), m01 = rat(entry(rng)), m10 = rat(entry(rng)), m11 = rat(entry(rng));
        if (is_exactly_zero(m00 * m11 - m01 * m10)) { continue; }
        auto mapped = std::array<line, 4>{};
        for (auto i = 0; i < 4; ++i) {
            mapped[static_cast<std::size_t>(i)] = line{m00 * lines[static_cast<std::size_t>(i)].p
                                                           + m01 * lines[static_cast<std::size_t>(i)].q,
                                                       m10 * lines[static_cast<std::size_t>(i)].p
                                                           + m11 * lines[static_cast<std::size_t>(i)].q};
        }
        try {
            auto const before = cross_ratio(lines[0], lines[1], lines[2], lines[3]);
            auto const after = cross_ratio(mapped[0], mapped[1], mapped[2], mapped[3]);
            CHECK(before == after);
            ++checked;
        } catch (degenerate_point_error const&) {
            // coincident draw; redraw
        }
    }
}

TEST_CASE("coincident lines in a denominator slot are refused")
{
    auto const a = line::from_coefficient(rat(0));
    auto const b = line::from_coefficient(rat(1));
    auto const c = line::from_coefficient(rat(2));
    CHECK_THROWS_AS((void)cross_ratio(a, b, c, a), degenerate_point_error);
    CHECK_THROWS_AS((void)cross_ratio(a, b, b, c), degenerate_point_error);
}

// ── The four invariants at the worked points ────────────────────────────────────────────────────────────────────────

TEST_CASE("invariants at the first worked point")
{
    auto const inv = cr_invariants(rat(-1), rat(1));
    CHECK(inv.rho1 == rat(2, 5));
    CHECK(inv.rho2 == rat(1, 8));
    CHECK(inv.rho3 == rat(-1, 6));
    CHECK(inv.rho4 == rat(3, 2));

    // the surface overload agrees on the corresponding normal form
    auto const from_surface = cr_invariants(normal_form_surface(rat(-1), rat(1)));
    CHECK(from_surface.rho1 == inv.rho1);
    CHECK(from_surface.rho2 == inv.rho2);
    CHECK(from_surface.rho3 == inv.rho3);
    CHECK(from_surface.rho4 == inv.rho4);
}

TEST_CASE("invariants at the second worked point")
{
    auto const inv = cr_invariants(rat(2), rat(-1));
    CHECK(inv.rho1 == rat(4, 7));
    CHECK(inv.rho2 == rat(-341, 96));
    CHECK(inv.rho3 == rat(-353, 84));
    CHECK(inv.rho4 == rat(-361, 54));
}

TEST_CASE("invariants agree between general and normalized charts")
{
    // all seven c₂ scale by a₃₂ against the normalized chart while the
    // vertical line is fixed, so every cross-ratio is chart-independent
    auto const a32 = rat(3, 2), a44 = rat(-2), b33 = rat(5, 7);
    auto general = surface::from_coefficients({{{3, 2}, a32}, {{4, 4}, a44}, {{5, 5}, rat(1, 3)}},
                                              {{{3, 3}, b33}, {{4, 2}, rat(-2, 5)}});
    auto const direct = cr_invariants(general);
    auto const normalized = cr_invariants(a44 / (a32 * a32), b33 / a32);
    CHECK(direct.rho1 == normalized.rho1);
    CHECK(direct.rho2 == normalized.rho2);
    CHECK(direct.rho3 == normalized.rho3);
    CHECK(direct.rho4 == normalized.rho4);
}

// ── Closed-form identities for the invariants ───────────────────────────────────────────────────────────────────────

TEST_CASE("rho1, rho4, and the elimination pivot satisfy their closed forms")
{
    auto rng = std::mt19937{424242};
    for (auto trial = 0; trial < 100; ++trial) {
        auto const [alpha, beta] = random_admissible(rng);
        auto const inv = cr_invariants(alpha, beta);
        CHECK_MESSAGE(inv.rho1 == (rat(3) * beta - 1) / (rat(6) * beta - 1),
                      "rho1 at alpha = " << alpha << ", beta = " << beta);
        CHECK_MESSAGE(inv.rho4 == forward_rho4(alpha, beta), "rho4 at alpha = " << alpha << ", beta = " << beta);

        // pivot = −(β−1)(4α+6β²−9β)(4α+6β²−5β) / (6(α+β²−β)(3α+4β²−4β))
        auto const pivot = rat(1) - rat(4) * inv.rho2 + rat(3) * inv.rho3;
        auto const bb = beta * beta;
        auto const expected = -(beta - 1) * (rat(4) * alpha + rat(6) * bb - rat(9) * beta)
            * (rat(4) * alpha + rat(6) * bb - rat(5) * beta)
            / (rat(6) * (alpha + bb - beta) * (rat(3) * alpha + rat(4) * bb - rat(4) * beta));
        CHECK_MESSAGE(pivot == expected, "pivot at alpha = " << alpha << ", beta = " << beta);
    }
}

// ── Moduli recovery ─────────────────────────────────────────────────────────────────────────────────────────────────

TEST_CASE("moduli recovery round-trips random admissible points exactly")
{
    auto rng = std::mt19937{7117};
    auto degenerate_hits = 0;
    for (auto trial = 0; trial < 100; ++trial) {
        auto const [alpha, beta] = random_admissible(rng);
        auto const inv = cr_invariants(alpha, beta);
        auto const rec = recover_moduli(inv.rho1, inv.rho2, inv.rho3, std::optional<rational_t>{inv.rho4});
        CHECK_MESSAGE(rec.beta == beta, "beta at alpha = " << alpha << ", beta = " << beta);
        CHECK(rec.exact);
        if (!rec.degenerate_branch) {
            CHECK_MESSAGE(rec.alpha == alpha, "alpha at alpha = " << alpha << ", beta = " << beta);
        } else {
            ++degenerate_hits;
            // on the degenerate locus recovery may land on any point of the
            // fiber; its forward invariants must reproduce all four ρ exactly
            auto const forward = cr_invariants(rec.alpha, rec.beta);
            CHECK(forward.rho1 == inv.rho1);
            CHECK(forward.rho2 == inv.rho2);
            CHECK(forward.rho3 == inv.rho3);
            CHECK(forward.rho4 == inv.rho4);
        }
    }
    MESSAGE("degenerate-branch draws: " << degenerate_hits << " of 100");
}

TEST_CASE("the degenerate preimage is resolved by rho4")
{
    // at ρ = (2/5, 1/8, −1/6) the quadratic has roots −1 and 3/16
    auto const pick = [](rational_t const& rho4) {
        return recover_moduli(rat(2, 5), rat(1, 8), rat(-1, 6), std::optional<rational_t>{rho4});
    };
    auto const first = pick(rat(3, 2));
    CHECK(first.beta == rat(1));
    CHECK(first.alpha == rat(-1));
    CHECK(first.degenerate_branch);
    CHECK(first.exact);

    auto const second = pick(rat(49, 96));
    CHECK(second.alpha == rat(3, 16));
    CHECK(second.exact);

    CHECK_THROWS_WITH_AS((void)pick(rat(2)), "recover_moduli: rho4 matches neither candidate preimage",
                         invalid_moduli_error);
    CHECK_THROWS_WITH_AS(
        (void)recover_moduli(rat(2, 5), rat(1, 8), rat(-1, 6)),
        "recover_moduli: degenerate invariants; rho4 is required to select the preimage", invalid_moduli_error);
}

TEST_CASE("rho1 = 1/2 has no finite preimage")
{
    CHECK_THROWS_WITH_AS((void)recover_moduli(rat(1, 2), rat(1, 8), rat(-1, 6)),
                         "recover_moduli: rho1 = 1/2 has no finite preimage", invalid_moduli_error);
}

TEST_CASE("irrational preimages are flagged approximate in exact mode")
{
    // β = 1 (ρ₁ = 2/5) with ρ₂ = 1/7, ρ₃ = −1/7 keeps the pivot at zero and
    // makes the quadratic 16α² + (88/7)α − 3, whose discriminant 17152/49 is
    // not a perfect square
    auto const root = (-88.0 / 7 + std::sqrt(17152.0) / 7) / 32.0;
    auto const q = 4.0 * root + 1.0;
    auto const rho4_value = q * q / 6.0;

    auto const approx = recover_moduli(rat(2, 5), rat(1, 7), rat(-1, 7),
                                       std::optional<rational_t>{rational_from_double(rho4_value)});
    CHECK(approx.degenerate_branch);
    CHECK_FALSE(approx.exact);
    CHECK(approx.beta == rat(1));
    CHECK(std::abs(to_double(approx.alpha) - root) < 1e-9);

    // the double-precision path recovers the same root and keeps its flag
    auto const numeric = recover_moduli(0.4, 1.0 / 7, -1.0 / 7, std::optional<double>{rho4_value});
    CHECK(numeric.degenerate_branch);
    CHECK(numeric.exact);
    CHECK(std::abs(numeric.alpha - root) < 1e-12);
    CHECK(std::abs(numeric.beta - 1.0) < 1e-12);
}

// ── Historical reference expansion ──────────────────────────────────────────────────────────────────────────────────

TEST_CASE("the historical reference expansion disagrees with both valid preimages")
{
    auto const literal = reference_alpha_expansion(rat(2, 5), rat(1, 8), rat(-1, 6));
    CHECK(literal == rat(7, 2));
    CHECK(literal != rat(-1));
    CHECK(literal != rat(3, 16));
}
