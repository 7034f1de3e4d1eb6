// SPDX-License-Identifier: MIT
/**
    @file  test_surface_geometry.cpp
    @brief unit and property tests for point classification, δ, and P₃(c) detection

    Mathematical basis:
      - δ = (an−cl)² − 4(am−bl)(bn−cm) classifies: hyperbolic δ>0 (2 asymptotic
        directions), elliptic δ<0 (0), parabolic δ=0 (1); dependent pairs form
        the inflection family, graded by the rank and the surviving form's
        discriminant;
      - the class is a GL(2)×GL(2)-orbit invariant: source changes of (x,y)
        and invertible mixes of (Q₁,Q₂) cannot move it;
      - the discriminant curve through a parabolic origin is x(y) with
        quadratic coefficient (6a₃₂b₃₃ − 9b₃₃² − 6a₄₄)/a₃₂, recovered here by
        series inversion, never transcription;
      - the recomputed two-jet of δ deviates from the historical reference
        expansion by exactly the monomial a₃₂b₃₂·xy (checked as an exact
        polynomial statement at random integer coefficients).
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <p3c/surface.hpp>

#include <array>
#include <random>

using namespace p3c;

namespace {

using jet2 = jet2_t<rational_t>;
using surface = surface_jet_t<rational_t>;
using pair_q = quadratic_pair_t<rational_t>;

auto pair_from_forms(int a, int b2, int c, int l, int m2, int n) -> pair_q
{
    // arguments carry the *full* xy coefficients (2b and 2m)
    auto const half = rational_t{1, 2};
    return pair_q{rational_t{a}, half * rational_t{b2}, rational_t{c},
                  rational_t{l}, half * rational_t{m2}, rational_t{n}};
}

auto random_coefficient_tables(std::mt19937_64& rng)
    -> std::pair<surface::coefficient_table_t, surface::coefficient_table_t>
{
    auto coeff = std::uniform_int_distribution<int>{-9, 9};
    auto a_table = surface::coefficient_table_t{};
    auto b_table = surface::coefficient_table_t{};
    for (int k = 3; k <= 5; ++k) {
        for (int i = 0; i <= k; ++i) {
            a_table[{k, i}] = rational_t{coeff(rng)};
            b_table[{k, i}] = rational_t{coeff(rng)};
        }
    }
    return {a_table, b_table};
}

}  // namespace

// ── δ examples ──────────────────────────────────────────────────────────────

TEST_CASE("delta at the origin: (x^2, xy) chart is parabolic, (x^2, y^2) is hyperbolic")
{
    auto const parabolic = surface::from_coefficients({}, {});
    CHECK(delta_jet(parabolic).coeff({0, 0}) == rational_t{0});

    // hand-built hyperbolic 2-jet (x^2, y^2)
    auto s = surface{};
    s.f1 = jet2::monomial({2, 0}, rational_t{1}, surface_degree_bound);
    s.f2 = jet2::monomial({0, 2}, rational_t{1}, surface_degree_bound);
    CHECK(delta_jet(s).coeff({0, 0}) == rational_t{1});
}

TEST_CASE("two-jet of delta: x^2 coefficient matches the reference expansion at random coefficients")
{
    auto rng = std::mt19937_64{101u};
    for (int trial = 0; trial < 100; ++trial) {
        auto const [a_table, b_table] = random_coefficient_tables(rng);
        auto const s = surface::from_coefficients(a_table, b_table);
        auto const delta = delta_jet(s);

        auto const a30 = s.a(3, 0), a31 = s.a(3, 1), a32 = s.a(3, 2);
        auto const a42 = s.a(4, 2);
        auto const b31 = s.b(3, 1), b32 = s.b(3, 2);
        auto const expected_xx = b32 * b32 - rational_t{2} * a31 * b32 + rational_t{2} * a32 * b31 + a42
            + (rational_t{2} * b31 + rational_t{3} * a30) * a32;
        CHECK(delta.coeff({2, 0}) == expected_xx);
    }
}

TEST_CASE("two-jet of delta: deviation from the reference expansion is exactly a32*b32*xy")
{
    auto rng = std::mt19937_64{202u};
    for (int trial = 0; trial < 150; ++trial) {
        auto const [a_table, b_table] = random_coefficient_tables(rng);
        auto const s = surface::from_coefficients(a_table, b_table);
        auto const computed = delta_jet(s).truncated(2);
        auto const reference = delta_two_jet_reference(s);
        auto const deviation = computed - reference;

        auto const expected = jet2::monomial({1, 1}, s.a(3, 2) * s.b(3, 2), 2);
        CHECK_MESSAGE(deviation == expected, "trial " << trial << ": deviation must be the single monomial a32*b32*xy");
    }
}

// ── point classification ────────────────────────────────────────────────────

TEST_CASE("orbit list: the representative pairs classify as labeled")
{
    // (x^2, y^2) hyperbolic, two asymptotic directions
    auto const hyper = classify_point(pair_from_forms(1, 0, 0, 0, 0, 1));
    CHECK(hyper.kind == point_kind_t::hyperbolic);
    CHECK(hyper.asymptotic_directions == 2);

    // (xy, x^2 - y^2) elliptic, none
    auto const ellip = classify_point(pair_from_forms(0, 1, 0, 1, 0, -1));
    CHECK(ellip.kind == point_kind_t::elliptic);
    CHECK(ellip.asymptotic_directions == 0);

    // (x^2, xy) parabolic, exactly one
    auto const parab = classify_point(pair_from_forms(1, 0, 0, 0, 1, 0));
    CHECK(parab.kind == point_kind_t::parabolic);
    CHECK(parab.asymptotic_directions == 1);

    // (x^2 + y^2, 0) and (x^2 - y^2, 0): dependent pairs, inflection types
    auto const imag = classify_point(pair_from_forms(1, 0, 1, 0, 0, 0));
    CHECK(imag.kind == point_kind_t::inflection);
    CHECK(imag.form == inflection_form_t::imaginary_type);
    CHECK_FALSE(imag.asymptotic_directions.has_value());

    auto const real = classify_point(pair_from_forms(1, 0, -1, 0, 0, 0));
    CHECK(real.kind == point_kind_t::inflection);
    CHECK(real.form == inflection_form_t::real_type);

    // (x^2, 0) and (0, 0): degenerate inflections
    auto const dbl = classify_point(pair_from_forms(1, 0, 0, 0, 0, 0));
    CHECK(dbl.kind == point_kind_t::degenerate_inflection);
    CHECK(dbl.form == inflection_form_t::double_line);

    auto const flat = classify_point(pair_from_forms(0, 0, 0, 0, 0, 0));
    CHECK(flat.kind == point_kind_t::degenerate_inflection);
    CHECK(flat.form == inflection_form_t::flat);
}

TEST_CASE("property: classification is invariant under source changes and target mixing")
{
    auto rng = std::mt19937_64{30303u};
    auto small = std::uniform_int_distribution<int>{-3, 3};
    auto nonzero_det = [&](int& p, int& q, int& r, int& s) {
        do {
            p = small(rng); q = small(rng); r = small(rng); s = small(rng);
        } while (p * s - q * r == 0);
    };

    auto const seeds = std::array{
        pair_from_forms(1, 0, 0, 0, 0, 1),   // hyperbolic
        pair_from_forms(0, 1, 0, 1, 0, -1),  // elliptic
        pair_from_forms(1, 0, 0, 0, 1, 0),   // parabolic
        pair_from_forms(1, 0, 1, 0, 0, 0),   // inflection (imaginary)
        pair_from_forms(1, 0, -1, 0, 0, 0),  // inflection (real)
        pair_from_forms(1, 0, 0, 0, 0, 0),   // degenerate inflection
    };

    for (auto const& seed : seeds) {
        auto const base = classify_point(seed);
        for (int trial = 0; trial < 80; ++trial) {
            int s11{}, s12{}, s21{}, s22{};
            nonzero_det(s11, s12, s21, s22);
            int t11{}, t12{}, t21{}, t22{};
            nonzero_det(t11, t12, t21, t22);

            // source: symmetric congruence S^T Q S on each form
            auto const transform = [&](rational_t const& a, rational_t const& b, rational_t const& c) {
                rational_t const na = a * s11 * s11 + 2 * b * s11 * s21 + c * s21 * s21;
                rational_t const nb = a * s11 * s12 + b * (s11 * s22 + s12 * s21) + c * s21 * s22;
                rational_t const nc = a * s12 * s12 + 2 * b * s12 * s22 + c * s22 * s22;
                return std::array<rational_t, 3>{na, nb, nc};
            };
            auto const q1 = transform(seed.a, seed.b, seed.c);
            auto const q2 = transform(seed.l, seed.m, seed.n);

            // target: invertible mixing of the two forms
            auto moved = pair_q{};
            moved.a = t11 * q1[0] + t12 * q2[0];
            moved.b = t11 * q1[1] + t12 * q2[1];
            moved.c = t11 * q1[2] + t12 * q2[2];
            moved.l = t21 * q1[0] + t22 * q2[0];
            moved.m = t21 * q1[1] + t22 * q2[1];
            moved.n = t21 * q1[2] + t22 * q2[2];

            auto const got = classify_point(moved);
            CHECK(got.kind == base.kind);
            CHECK(got.asymptotic_directions == base.asymptotic_directions);
        }
    }
}

// ── parabolic series ────────────────────────────────────────────────────────

TEST_CASE("parabolic series at the normalized worked points: c_P = 3 and c_P = -27")
{
    auto const golden = normal_form_surface<rational_t>(rational_t{-1}, rational_t{1});
    auto const germ1 = parabolic_series(golden);
    CHECK(germ1.c1 == rational_t{0});
    CHECK(germ1.c2 == rational_t{3});

    auto const second = normal_form_surface<rational_t>(rational_t{2}, rational_t{-1});
    auto const germ2 = parabolic_series(second);
    CHECK(germ2.c1 == rational_t{0});
    CHECK(germ2.c2 == rational_t{-27});
}

TEST_CASE("property: series inversion reproduces (6 a32 b33 - 9 b33^2 - 6 a44)/a32 exactly")
{
    auto rng = std::mt19937_64{40404u};
    for (int trial = 0; trial < 100; ++trial) {
        auto [a_table, b_table] = random_coefficient_tables(rng);
        a_table[{3, 3}] = rational_t{0};  // parabolic-curve setup
        if (a_table[{3, 2}] == 0) { a_table[{3, 2}] = rational_t{1}; }
        auto const s = surface::from_coefficients(a_table, b_table);

        auto const germ = parabolic_series(s);
        auto const a32 = s.a(3, 2), a44 = s.a(4, 4), b33 = s.b(3, 3);
        auto const expected = (rational_t{6} * a32 * b33 - rational_t{9} * b33 * b33 - rational_t{6} * a44) / a32;
        CHECK(germ.c1 == rational_t{0});
        CHECK(germ.c2 == expected);
    }
}

TEST_CASE("parabolic series rejects a32 = 0 as a degenerate point")
{
    auto a_table = surface::coefficient_table_t{};
    a_table[{3, 2}] = rational_t{0};
    a_table[{3, 0}] = rational_t{1};
    auto const s = surface::from_coefficients(a_table, {});
    CHECK_THROWS_AS(parabolic_series(s), degenerate_point_error);
}

// ── P₃(c) detection ─────────────────────────────────────────────────────────

TEST_CASE("detect_p3c on the golden surface: c = -1, versal, normalized moduli reported")
{
    auto const s = normal_form_surface<rational_t>(rational_t{-1}, rational_t{1});
    auto const report = detect_p3c(s);
    CHECK(report.is_p3c);
    CHECK(report.modulus_c == rational_t{-1});
    CHECK(report.versal);
    CHECK(report.versality_value == rational_t{3});
    REQUIRE(report.normalized_moduli.has_value());
    CHECK(report.normalized_moduli->first == rational_t{-1});
    CHECK(report.normalized_moduli->second == rational_t{1});
}

TEST_CASE("detect_p3c rejects the excluded modulus c = 1 and a33 != 0")
{
    // a44 = b33 * a32 makes c = 1
    auto a_table = surface::coefficient_table_t{{{3, 2}, rational_t{2}}, {{4, 4}, rational_t{6}}};
    auto b_table = surface::coefficient_table_t{{{3, 3}, rational_t{3}}};
    auto const s1 = surface::from_coefficients(a_table, b_table);
    auto const r1 = detect_p3c(s1);
    CHECK_FALSE(r1.is_p3c);
    CHECK(r1.failing_condition.find("modulus") != std::string::npos);

    a_table[{3, 3}] = rational_t{1};
    auto const s2 = surface::from_coefficients(a_table, b_table);
    auto const r2 = detect_p3c(s2);
    CHECK_FALSE(r2.is_p3c);
    CHECK(r2.failing_condition == "a33 != 0");
}

// ── normal form gates ───────────────────────────────────────────────────────

TEST_CASE("normal form admissibility: worked point passes, reduction-gate zero rejects")
{
    CHECK_NOTHROW(normal_form_surface<rational_t>(rational_t{-1}, rational_t{1}));

    // 6*4 + 4*(1/4) - 15*2 + 5 = 0 at (alpha, beta) = (1/4, 2)
    CHECK_THROWS_AS(normal_form_surface<rational_t>(rational_t{1, 4}, rational_t{2}), invalid_moduli_error);

    // excluded modulus alpha/beta = 1
    CHECK_THROWS_AS(normal_form_surface<rational_t>(rational_t{2}, rational_t{2}), invalid_moduli_error);

    // tail must be degree >= 4
    auto const low_tail = jet2::monomial({0, 3}, rational_t{1}, surface_degree_bound);
    CHECK_THROWS_AS(normal_form_surface<rational_t>(rational_t{-1}, rational_t{1}, low_tail), invalid_moduli_error);

    // a degree-4 tail lands in f2's quartic part
    auto const tail = jet2::monomial({0, 4}, rational_t{5}, surface_degree_bound);
    auto const s = normal_form_surface<rational_t>(rational_t{-1}, rational_t{1}, tail);
    CHECK(s.b(4, 4) == rational_t{5});
}
