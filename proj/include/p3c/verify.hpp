// SPDX-License-Identifier: MIT
/**
    \file
    \brief The ten release criteria as a library: each check returns a
           structured result with per-assertion detail lines and timing

    One criterion is expected to fail: the computed discriminant 2-jet differs
    from the historical reference expansion by exactly a32*b32*xy.  That
    result carries `documented_fail = true`; it is reported honestly and does
    not count as an unexpected failure.
*/

#pragma once

#include <p3c/germ.hpp>
#include <p3c/report.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Result Type
// --------------------------------------------------------------------------------------------------------------------

struct criterion_result_t {
    int id = 0;
    std::string name;
    bool pass = false;
    bool documented_fail = false;  ///< the failure is expected and recorded; not an unexpected failure
    std::vector<std::string> details;
    double milliseconds = 0.0;
};

inline constexpr unsigned default_verify_seed = 7u;

namespace verify_detail {

inline auto rat(long long num, long long den = 1) -> rational_t { return rational_t{num} / rational_t{den}; }

template <typename value_t>
auto str(value_t const& value) -> std::string
{
    auto stream = std::ostringstream{};
    stream.precision(17);
    stream << value;
    return stream.str();
}

/// accumulates named assertions into the result's detail lines
struct checker_t {
    criterion_result_t* out;

    auto expect(bool condition, std::string const& line) -> void
    {
        out->details.push_back(std::string{condition ? "ok: " : "FAIL: "} + line);
        out->pass = out->pass && condition;
    }

    template <typename value_t>
    auto expect_equal(value_t const& got, value_t const& want, std::string const& label) -> void
    {
        if (got == want) {
            expect(true, label + " = " + str(want));
        } else {
            expect(false, label + " = " + str(got) + " (want " + str(want) + ")");
        }
    }
};

/// admissible random normalized moduli: clears construction gates, detection,
/// every closed-form pole, and the A0S0|A1 continuation seed pivot
inline auto random_admissible(std::mt19937& rng) -> std::pair<rational_t, rational_t>
{
    auto numerator = std::uniform_int_distribution<int>{-12, 12};
    auto denominator = std::uniform_int_distribution<int>{1, 4};
    while (true) {
        auto const alpha = rational_t{numerator(rng)} / rational_t{denominator(rng)};
        auto const beta = rational_t{numerator(rng)} / rational_t{denominator(rng)};
        if (is_exactly_zero(alpha) || is_exactly_zero(beta)) { continue; }
        try {
            auto const s = normal_form_surface(alpha, beta);
            auto const gate = detect_p3c(s);
            if (!gate.is_p3c || !gate.versal) { continue; }
            for (auto const label : all_locus_labels) { (void)closed_form_c(label, s); }
            (void)coefficient_identities(alpha, beta);
            (void)leading_seed(locus_label_t::a0s0a1, 1.0, to_double(alpha), to_double(beta));
            return {alpha, beta};
        } catch (invalid_moduli_error const&) {
        } catch (non_generic_error const&) {
        }
    }
}

/// the normalized controlling coefficients with no admissibility gate (for
/// grid scans that cross excluded values)
inline auto plain_surface(double alpha, double beta) -> surface_jet_t<double>
{
    auto a = std::map<std::pair<int, int>, double>{{{3, 2}, 1.0}, {{4, 4}, alpha}};
    auto b = std::map<std::pair<int, int>, double>{{{3, 3}, beta}};
    return surface_jet_t<double>::from_coefficients(a, b);
}

// --------------------------------------------------------------------------------------------------------------------
// Criteria 1-2: Worked Points
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_1(criterion_result_t& out) -> void
{
    auto check = checker_t{&out};
    auto const s = normal_form_surface(rat(-1), rat(1));
    check.expect_equal(closed_form_c(locus_label_t::parabolic, s), rat(3), "c_P");
    check.expect_equal(closed_form_c(locus_label_t::b2, s), rat(12), "c_B");
    check.expect_equal(closed_form_c(locus_label_t::s2, s), rat(228, 49), "c_S");
    check.expect_equal(closed_form_c(locus_label_t::flecnodal, s), rat(156, 25), "c_F");
    check.expect_equal(closed_form_c(locus_label_t::a0s02, s), rat(9), "c_s02");
    check.expect_equal(closed_form_c(locus_label_t::a0s1, s), rat(2), "c_s1");
    check.expect_equal(closed_form_c(locus_label_t::a0s0a1, s), rat(15, 4), "c_s01");
    auto const inv = cr_invariants(s);
    check.expect_equal(inv.rho1, rat(2, 5), "rho1");
    check.expect_equal(inv.rho2, rat(1, 8), "rho2");
    check.expect_equal(inv.rho3, rat(-1, 6), "rho3");
    auto const folded = classify_folded(bde_t<rational_t>::from_surface(s));
    check.expect_equal(to_string(folded.type), std::string{"FoldedFocus"}, "folded type");
    auto const region = region_report(rat(-1), rat(1));
    check.expect_equal(region.multilocal.pattern, std::string{"s1<P<s01<s02"}, "multilocal pattern");
    out.details.push_back("all values computed in exact rational arithmetic");
}

inline auto criterion_2(criterion_result_t& out) -> void
{
    auto check = checker_t{&out};
    auto const s = normal_form_surface(rat(2), rat(-1));
    check.expect_equal(closed_form_c(locus_label_t::parabolic, s), rat(-27), "c_P");
    check.expect_equal(closed_form_c(locus_label_t::a0s02, s), rat(-33), "c_s02");
    check.expect_equal(closed_form_c(locus_label_t::a0s1, s), rat(-25, 14), "c_s1");
    check.expect_equal(closed_form_c(locus_label_t::a0s0a1, s), rat(-91, 16), "c_s01");
    auto const inv = cr_invariants(s);
    check.expect_equal(inv.rho1, rat(4, 7), "rho1");
    auto const recovered = recover_moduli(inv.rho1, inv.rho2, inv.rho3, std::optional<rational_t>{inv.rho4});
    check.expect_equal(recovered.beta, rat(-1), "recovered beta");
    check.expect(!recovered.degenerate_branch, "recovery takes the generic branch");
    check.expect_equal(recovered.alpha, rat(2), "recovered alpha");
    auto const folded = classify_folded(bde_t<rational_t>::from_surface(s));
    check.expect_equal(to_string(folded.type), std::string{"FoldedSaddle"}, "folded type");
    auto const region = region_report(rat(2), rat(-1));
    check.expect_equal(region.multilocal.pattern, std::string{"s02<P<s01<s1"}, "multilocal pattern");
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 3: Difference Identities
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_3(criterion_result_t& out, unsigned seed) -> void
{
    auto check = checker_t{&out};
    auto rng = std::mt19937{seed};
    auto const points = 100;
    auto nonzero = std::vector<std::string>{};
    auto identity_count = std::size_t{0};
    for (int trial = 0; trial < points; ++trial) {
        auto const [alpha, beta] = random_admissible(rng);
        auto const identities = coefficient_identities(alpha, beta);
        identity_count = identities.size();
        for (auto const& [name, residual] : identities) {
            if (!is_exactly_zero(residual)) {
                nonzero.push_back(name + " at alpha = " + str(alpha) + ", beta = " + str(beta) + ": residual "
                                  + str(residual));
            }
        }
    }
    check.expect(identity_count == 12, "twelve identities evaluated (superset of the required ten)");
    check.expect(nonzero.empty(),
                 "all residuals exactly zero at " + std::to_string(points) + " random admissible moduli");
    for (auto const& line : nonzero) { out.details.push_back("FAIL detail: " + line); }
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 4: Oracle Reconciliation
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_4(criterion_result_t& out, unsigned seed) -> void
{
    auto check = checker_t{&out};
    auto rng = std::mt19937{seed};
    auto const points = 12;
    auto worst_difference = 0.0;
    auto worst_linear = 0.0;
    auto failures = std::vector<std::string>{};
    for (int trial = 0; trial < points; ++trial) {
        auto const [alpha, beta] = random_admissible(rng);
        auto const report = reconcile(normal_form_surface(alpha, beta));
        for (auto const& line : report.curves) {
            auto const difference = std::abs(line.traced_c2 - line.closed_c2);
            worst_difference = std::max(worst_difference, difference);
            worst_linear = std::max(worst_linear, std::abs(line.linear_term));
            if (difference > 1e-6 || std::abs(line.linear_term) >= 1e-8) {
                failures.push_back(to_string(line.label) + " at alpha = " + str(alpha) + ", beta = " + str(beta)
                                   + ": |traced - closed| = " + str(difference) + ", |linear| = "
                                   + str(std::abs(line.linear_term)));
            }
        }
    }
    check.expect(failures.empty(),
                 "all seven fitted quadratics within 1e-6 absolute of the closed forms at "
                     + std::to_string(points) + " random admissible moduli");
    check.expect(worst_linear < 1e-8, "largest fitted linear term " + str(worst_linear) + " < 1e-8 (tangency)");
    out.details.push_back("largest |traced - closed| = " + str(worst_difference));
    for (auto const& line : failures) { out.details.push_back("FAIL detail: " + line); }
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 5: Moduli Round Trip
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_5(criterion_result_t& out, unsigned seed) -> void
{
    auto check = checker_t{&out};
    auto rng = std::mt19937{seed};
    auto const points = 100;
    auto degenerate_hits = 0;
    auto failures = std::vector<std::string>{};
    for (int trial = 0; trial < points; ++trial) {
        auto const [alpha, beta] = random_admissible(rng);
        try {
            auto const inv = cr_invariants(alpha, beta);
            auto const recovered =
                recover_moduli(inv.rho1, inv.rho2, inv.rho3, std::optional<rational_t>{inv.rho4});
            if (recovered.beta != beta) {
                failures.push_back("beta mismatch at alpha = " + str(alpha) + ", beta = " + str(beta));
                continue;
            }
            if (!recovered.degenerate_branch) {
                if (recovered.alpha != alpha) {
                    failures.push_back("generic-branch alpha mismatch at alpha = " + str(alpha) + ", beta = "
                                       + str(beta) + ": got " + str(recovered.alpha));
                }
                continue;
            }
            ++degenerate_hits;
            if (recovered.alpha == alpha) { continue; }
            // the two-candidate fiber can collapse; an exact forward match is
            // the correct outcome there, otherwise hold to 1e-9
            auto const forward = cr_invariants(recovered.alpha, recovered.beta);
            auto const same_fiber = forward.rho1 == inv.rho1 && forward.rho2 == inv.rho2
                && forward.rho3 == inv.rho3 && forward.rho4 == inv.rho4;
            auto const close = std::abs(to_double(recovered.alpha - alpha))
                <= 1e-9 * (1.0 + std::abs(to_double(alpha)));
            if (!same_fiber && !close) {
                failures.push_back("degenerate-branch alpha mismatch at alpha = " + str(alpha) + ", beta = "
                                   + str(beta) + ": got " + str(recovered.alpha));
            }
        } catch (std::exception const& error) {
            failures.push_back(std::string{"round trip threw at alpha = "} + str(alpha) + ", beta = " + str(beta)
                               + ": " + error.what());
        }
    }
    check.expect(failures.empty(), "round trip reproduced (alpha, beta) at " + std::to_string(points)
                                       + " random admissible moduli (exact on the generic branch)");
    out.details.push_back("degenerate-branch draws encountered: " + std::to_string(degenerate_hits));
    for (auto const& line : failures) { out.details.push_back("FAIL detail: " + line); }

    // the known degenerate point: beta = 1 sits on the vanishing-pivot curve,
    // and the quartic invariant selects between the two candidate preimages
    auto const inv = cr_invariants(rat(-1), rat(1));
    check.expect_equal(inv.rho4, rat(3, 2), "rho4 at the known degenerate point");
    auto const first = recover_moduli(inv.rho1, inv.rho2, inv.rho3, std::optional<rational_t>{rat(3, 2)});
    check.expect(first.degenerate_branch, "known degenerate point takes the degenerate branch");
    check.expect_equal(first.alpha, rat(-1), "rho4 = 3/2 selects alpha");
    check.expect_equal(first.beta, rat(1), "recovered beta at the degenerate point");
    auto const second = recover_moduli(inv.rho1, inv.rho2, inv.rho3, std::optional<rational_t>{rat(49, 96)});
    check.expect_equal(second.alpha, rat(3, 16), "rho4 = 49/96 selects the other candidate alpha");
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 6: Folded Classification Concordance
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_6(criterion_result_t& out) -> void
{
    auto check = checker_t{&out};
    auto const band = 1e-6;
    auto checked = 0;
    auto disagreements = std::vector<std::string>{};
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
            auto const by_eigenvalue = folded.det < 0.0 ? folded_type_t::folded_saddle
                : folded.disc > 0.0                     ? folded_type_t::folded_node
                                                        : folded_type_t::folded_focus;
            if (folded.type != by_threshold || by_eigenvalue != by_threshold) {
                disagreements.push_back("alpha = " + str(alpha) + ", beta = " + str(beta) + ", q = " + str(q)
                                        + ": threshold " + to_string(by_threshold) + " vs classified "
                                        + to_string(folded.type));
            }
            ++checked;
        }
    }
    check.expect(disagreements.empty() && checked > 2400,
                 "threshold rule and eigenvalue route agree at " + std::to_string(checked)
                     + " grid points (1e-6 exclusion bands)");
    for (auto const& line : disagreements) { out.details.push_back("FAIL detail: " + line); }

    auto const focus = classify_folded(bde_t<rational_t>::from_surface(normal_form_surface(rat(-1), rat(1))));
    check.expect_equal(to_string(focus.type), std::string{"FoldedFocus"}, "(-1, 1)");
    auto const saddle = classify_folded(bde_t<rational_t>::from_surface(normal_form_surface(rat(2), rat(-1))));
    check.expect_equal(to_string(saddle.type), std::string{"FoldedSaddle"}, "(2, -1)");
    auto const node = classify_folded(bde_t<double>::from_surface(plain_surface(-0.255, 1.0)));
    check.expect_equal(to_string(node.type), std::string{"FoldedNode"}, "(-0.255, 1)");
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 7: Ordering Concordance
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_7(criterion_result_t& out, unsigned seed) -> void
{
    auto check = checker_t{&out};
    auto rng = std::mt19937{seed};
    auto draw = std::uniform_real_distribution<double>{-3.0, 3.0};
    auto const points = 10000;
    auto compared = 0;
    auto counterexamples = std::vector<std::string>{};
    while (compared < points) {
        auto const alpha = draw(rng);
        auto const beta = draw(rng);
        // clear the interval boundaries, the closed-form poles, and versality
        auto const clear = std::abs(beta) > 1e-6 && std::abs(beta - 1.0 / 6.0) > 1e-6
            && std::abs(beta + 1.0 / 6.0) > 1e-6 && std::abs(beta - 1.0 / 3.0) > 1e-6
            && std::abs(beta - 0.5) > 1e-6
            && std::abs(5.0 * beta - 6.0 * beta * beta - 4.0 * alpha) > 1e-6;
        if (!clear) { continue; }
        auto const local = local_ordering(alpha, beta);
        if (!local.boundary_flags.empty()) { continue; }
        auto const expected = std::string{local_case_pattern(local.case_index)};
        if (local.pattern != expected) {
            counterexamples.push_back("alpha = " + str(alpha) + ", beta = " + str(beta) + ": direct "
                                      + local.pattern + " vs interval rule " + expected);
        }
        ++compared;
    }
    check.expect(counterexamples.empty(),
                 "direct comparison matches the interval rule at " + std::to_string(compared)
                     + " random points off boundaries (zero counterexamples)");
    for (auto const& line : counterexamples) { out.details.push_back("FAIL detail: " + line); }
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 8: Model-Family Adjacency Curves
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_8(criterion_result_t& out) -> void
{
    auto check = checker_t{&out};
    auto const heights = [] {
        auto out_heights = std::vector<double>{};
        for (int k = 0; k < 20; ++k) { out_heights.push_back(-0.1 + 0.2 * double(k) / 19.0); }
        return out_heights;
    }();

    auto worst_full = 0.0;     // slot error over the two fully determined labels
    auto worst_reduced = 0.0;  // slot error over the leading-order label's solved slots
    auto worst_obstruction = 0.0;
    auto failures = std::vector<std::string>{};

    for (auto const c : {-1.0, 2.0, 3.0}) {
        auto const model = adjacency_model_t{c};
        for (auto const t : heights) {
            auto const base = std::array<double, 3>{-3.0 * c * t * t, -2.0 * t, (3.0 * c - 3.0) * t * t};
            struct curve_t {
                locus_label_t label;
                double b, d;
            };
            auto const curves = std::array<curve_t, 2>{
                curve_t{locus_label_t::a0s1, (5.0 * c - 6.0) * t * t * t, (2.0 - c) * t},
                curve_t{locus_label_t::a0s0a1, (-4.0 * c + 3.0) * t * t * t, (2.0 * c - 1.0) * t},
            };
            // slot scales for a uniform ~5% perturbation of the seed
            auto const scale = std::array<double, 5>{t * t, std::abs(t), t * t, std::abs(t * t * t), std::abs(t)};

            for (auto const& curve : curves) {
                auto const printed = std::array<double, 5>{base[0], base[1], base[2], curve.b, curve.d};
                auto z = std::vector<double>(5);
                for (int i = 0; i < 5; ++i) { z[i] = printed[i] + 0.05 * scale[i]; }
                auto const residual = [&](std::vector<double> const& w) {
                    auto const r = model.residual(curve.label, {w[0], w[1], w[2], w[3], w[4]}, t);
                    return std::vector<double>{r.begin(), r.end()};
                };
                if (!newton_solve(residual, z)) {
                    failures.push_back(to_string(curve.label) + " stalled at c = " + str(c) + ", t = " + str(t));
                    continue;
                }
                for (int i = 0; i < 5; ++i) {
                    auto const error = std::abs(z[i] - printed[i]);
                    worst_full = std::max(worst_full, error);
                    if (error >= 1e-8) {
                        failures.push_back(to_string(curve.label) + " slot " + std::to_string(i) + " off by "
                                           + str(error) + " at c = " + str(c) + ", t = " + str(t));
                    }
                }
            }

            // the double-tangency label: only the leading order of (b, d) is
            // published; d is pinned there and the four consistent equations
            // determine the rest, while the tangency slot itself carries an
            // irreducible obstruction of order t^6
            auto const d_pinned = (-4.0 * c + 2.0) * t;
            auto const printed = std::array<double, 4>{base[0], base[1], base[2], (14.0 * c - 6.0) * t * t * t};
            auto z = std::vector<double>(4);
            for (int i = 0; i < 4; ++i) { z[i] = printed[i] + 0.05 * scale[i]; }
            auto const reduced = [&](std::vector<double> const& w) {
                auto const r = model.residual(locus_label_t::a0s02, {w[0], w[1], w[2], w[3], d_pinned}, t);
                return std::vector<double>{r[0], r[1], r[2], r[3]};
            };
            if (!newton_solve(reduced, z)) {
                failures.push_back("A0S0_2 stalled at c = " + str(c) + ", t = " + str(t));
                continue;
            }
            for (int i = 0; i < 4; ++i) {
                auto const error = std::abs(z[i] - printed[i]);
                worst_reduced = std::max(worst_reduced, error);
                if (error >= 1e-8) {
                    failures.push_back("A0S0_2 slot " + std::to_string(i) + " off by " + str(error) + " at c = "
                                       + str(c) + ", t = " + str(t));
                }
            }
            auto const type_residual = model.residual(locus_label_t::a0s02, {z[0], z[1], z[2], z[3], d_pinned}, t)[4];
            auto const obstruction = 17496.0 * c * (c - 1.0) * std::pow(t, 6);
            auto const relative = std::abs(type_residual - obstruction) / std::max(1e-300, std::abs(obstruction));
            worst_obstruction = std::max(worst_obstruction, relative);
            if (relative > 1e-6) {
                failures.push_back("A0S0_2 tangency residual " + str(type_residual) + " vs obstruction "
                                   + str(obstruction) + " at c = " + str(c) + ", t = " + str(t));
            }
        }
    }
    check.expect(failures.empty(),
                 "Newton solutions match the published parameter curves at 20 heights for c in {-1, 2, 3}");
    out.details.push_back("largest slot error, fully determined labels: " + str(worst_full));
    out.details.push_back("largest slot error, leading-order label (four solved slots): " + str(worst_reduced));
    out.details.push_back("double-tangency slot equals the known obstruction 17496*c*(c-1)*t^6 to relative "
                          + str(worst_obstruction) + " (leading order only for that label)");
    for (auto const& line : failures) { out.details.push_back("FAIL detail: " + line); }
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 9: Discriminant 2-jet vs Historical Reference (documented failure)
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_9(criterion_result_t& out, unsigned seed) -> void
{
    auto check = checker_t{&out};
    out.documented_fail = true;
    auto rng = std::mt19937{seed};
    auto numerator = std::uniform_int_distribution<int>{-9, 9};
    auto denominator = std::uniform_int_distribution<int>{1, 3};
    auto const draws = 25;
    auto residual_characterized = true;
    auto equality_failed = false;

    for (int trial = 0; trial < draws; ++trial) {
        auto a = std::map<std::pair<int, int>, rational_t>{};
        auto b = std::map<std::pair<int, int>, rational_t>{};
        for (int i = 0; i <= 3; ++i) { a[{3, i}] = rat(numerator(rng), denominator(rng)); }
        for (int i = 0; i <= 4; ++i) { a[{4, i}] = rat(numerator(rng), denominator(rng)); }
        for (int i = 0; i <= 3; ++i) { b[{3, i}] = rat(numerator(rng), denominator(rng)); }
        for (int i = 0; i <= 4; ++i) { b[{4, i}] = rat(numerator(rng), denominator(rng)); }
        if (trial == 0) {
            // force a witness where the two expansions genuinely differ
            a[{3, 2}] = rat(1);
            b[{3, 2}] = rat(1);
        }
        auto const s = surface_jet_t<rational_t>::from_coefficients(a, b);
        auto const computed = bde_t<rational_t>::from_surface(s).discriminant().truncated(2);

        auto const a31 = a[{3, 1}], a32 = a[{3, 2}], a33 = a[{3, 3}], a30 = a[{3, 0}];
        auto const a42 = a[{4, 2}], a43 = a[{4, 3}], a44 = a[{4, 4}];
        auto const b31 = b[{3, 1}], b32 = b[{3, 2}], b33 = b[{3, 3}];
        auto const reference_x = a32;
        auto const reference_y = rat(3) * a33;
        auto const reference_xx =
            b32 * b32 - rat(2) * a31 * b32 + rat(2) * a32 * b31 + a42 + (rat(2) * b31 + rat(3) * a30) * a32;
        auto const reference_xy = rat(6) * b33 * b32 - rat(6) * a31 * b33 + rat(6) * a33 * b31 + rat(3) * a43
            + (b32 + a31) * a32 + (rat(6) * b31 + rat(9) * a30) * a33;
        auto const reference_yy =
            rat(3) * (rat(3) * b33 * b33 - rat(2) * a32 * b33 + rat(2) * a33 * b32 + rat(2) * a44
                      + (rat(2) * b32 + a31) * a33);

        auto const matches = computed.coeff({0, 0}) == rat(0) && computed.coeff({1, 0}) == reference_x
            && computed.coeff({0, 1}) == reference_y && computed.coeff({2, 0}) == reference_xx
            && computed.coeff({0, 2}) == reference_yy;
        auto const xy_difference = computed.coeff({1, 1}) - reference_xy;
        if (!matches || xy_difference != a32 * b32) { residual_characterized = false; }
        if (!is_exactly_zero(xy_difference)) { equality_failed = true; }
    }

    // the criterion as stated: the computed 2-jet EQUALS the historical
    // reference expansion; it does not, so this check fails by design
    check.expect(!equality_failed, "computed discriminant 2-jet equals the historical reference expansion");
    out.details.push_back(equality_failed && residual_characterized
                              ? "documented: computed - reference = a32*b32*xy exactly, at every one of "
                                    + std::to_string(draws) + " random rational coefficient tables"
                              : "residual characterization did not reproduce (unexpected)");
    out.details.push_back("constant, x, y, x^2 and y^2 coefficients agree exactly; only the xy term differs");
    out.details.push_back("all dependent computations use the computed discriminant");
    if (!residual_characterized) { out.pass = false; }
}

// --------------------------------------------------------------------------------------------------------------------
// Criterion 10: Historical Alpha Expansion Stays Flagged
// --------------------------------------------------------------------------------------------------------------------

inline auto criterion_10(criterion_result_t& out) -> void
{
    auto check = checker_t{&out};
    auto const literal = reference_alpha_expansion(rat(2, 5), rat(1, 8), rat(-1, 6));
    check.expect_equal(literal, rat(7, 2), "historical alpha expansion at (2/5, 1/8, -1/6)");

    auto options = analyze_options_t{};
    options.paper_literal = true;
    options.with_oracle = false;
    auto const report = analyze_report(normal_form_surface(rat(-1), rat(1)), options);
    check.expect(report.contains("paper_literal"), "report carries the historical comparison section");
    if (report.contains("paper_literal")) {
        auto const& section = report.at("paper_literal");
        check.expect(section.value("alpha_expansion", std::string{}) == "7/2",
                     "report evaluates the expansion to 7/2");
        check.expect(section.value("consistent_with_recovery", true) == false,
                     "report marks the expansion inconsistent with the derived recovery");
        check.expect(section.value("flag", std::string{}).find("documented inconsistency") != std::string::npos,
                     "report flags the documented inconsistency");
    }
}

}  // namespace verify_detail

// --------------------------------------------------------------------------------------------------------------------
// Runner
// --------------------------------------------------------------------------------------------------------------------

inline auto run_criterion(int id, unsigned seed = default_verify_seed) -> criterion_result_t
{
    static constexpr char const* names[] = {
        "worked point (-1, 1): invariants, cross-ratios, folded type, ordering",
        "worked point (2, -1): invariants, recovery, folded type, ordering",
        "difference identities exact at random admissible moduli",
        "oracle reconciliation of all seven loci",
        "moduli round trip and degenerate-branch resolution",
        "folded classification concordance on a 50x50 grid",
        "ordering concordance with the interval rule at 10000 points",
        "model-family adjacency curves via Newton continuation",
        "discriminant 2-jet equals the historical reference expansion",
        "historical alpha expansion evaluates to 7/2 and stays flagged",
    };
    if (id < 1 || id > 10) { throw std::invalid_argument{"run_criterion: id must be 1..10"}; }
    auto out = criterion_result_t{};
    out.id = id;
    out.name = names[id - 1];
    out.pass = true;
    auto const start = std::chrono::steady_clock::now();
    try {
        switch (id) {
            case 1: verify_detail::criterion_1(out); break;
            case 2: verify_detail::criterion_2(out); break;
            case 3: verify_detail::criterion_3(out, seed); break;
            case 4: verify_detail::criterion_4(out, seed); break;
            case 5: verify_detail::criterion_5(out, seed); break;
            case 6: verify_detail::criterion_6(out); break;
            case 7: verify_detail::criterion_7(out, seed); break;
            case 8: verify_detail::criterion_8(out); break;
            case 9: verify_detail::criterion_9(out, seed); break;
            case 10: verify_detail::criterion_10(out); break;
        }
    } catch (std::exception const& error) {
        out.pass = false;
        out.details.push_back(std::string{"unexpected exception: "} + error.what());
    }
    out.milliseconds =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

inline auto run_all_criteria(unsigned seed = default_verify_seed) -> std::vector<criterion_result_t>
{
    auto out = std::vector<criterion_result_t>{};
    for (int id = 1; id <= 10; ++id) { out.push_back(run_criterion(id, seed)); }
    return out;
}

/// one status line per criterion: "criterion  9: FAIL (documented)  name  [1.2 ms]"
inline auto format_criterion_line(criterion_result_t const& result) -> std::string
{
    auto stream = std::ostringstream{};
    stream << "criterion " << (result.id < 10 ? " " : "") << result.id << ": "
           << (result.pass           ? "PASS"
               : result.documented_fail ? "FAIL (documented)"
                                        : "FAIL")
           << "  " << result.name << "  [" << std::fixed << std::setprecision(1) << result.milliseconds << " ms]";
    return stream.str();
}

/// (unexpected, documented) failure counts over a run
inline auto failure_counts(std::vector<criterion_result_t> const& results) -> std::pair<int, int>
{
    auto unexpected = 0;
    auto documented = 0;
    for (auto const& result : results) {
        if (result.pass) { continue; }
        (result.documented_fail ? documented : unexpected) += 1;
    }
    return {unexpected, documented};
}

}  // namespace p3c
