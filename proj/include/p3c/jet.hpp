// SPDX-License-Identifier: MIT
/**
    \file
    \brief truncated multivariate polynomial algebra in 2 or 3 variables

    The jet is the universal carrier for every power series in the toolkit:
    surface height functions, discriminants, implicit differential equations,
    and recognition polynomials.  Storage is a sparse exponent map; all
    arithmetic truncates at a per-value degree bound.  Jets are immutable
    values after construction — safe to share between threads.

    Composition requires inner jets with vanishing constant term, which keeps
    truncation exact: a discarded outer monomial can only produce discarded
    output orders.
*/

#pragma once

#include <p3c/number.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3c {

// --------------------------------------------------------------------------------------------------------------------
// Jet
// --------------------------------------------------------------------------------------------------------------------

template <scalar k_t, int nv>
    requires(nv == 2 || nv == 3)
class jet_t {
public:
    using exps_t = std::array<int, nv>;
    using terms_t = std::map<exps_t, k_t>;

    static constexpr int nvars = nv;

    jet_t() = default;
    explicit jet_t(int degree_bound) : bound_{degree_bound}
    {
        if (degree_bound < 0) { throw std::invalid_argument{"jet_t: negative degree bound"}; }
    }

    // ---- factories ----

    static auto constant(k_t value, int bound) -> jet_t
    {
        auto result = jet_t{bound};
        result.add_term(zero_exps(), std::move(value));
        return result;
    }

    static auto variable(int var, int bound) -> jet_t
    {
        auto exps = zero_exps();
        exps.at(static_cast<std::size_t>(var)) = 1;
        return monomial(exps, k_t{1}, bound);
    }

    static auto monomial(exps_t exps, k_t value, int bound) -> jet_t
    {
        auto result = jet_t{bound};
        result.add_term(exps, std::move(value));
        return result;
    }

    // ---- observers ----

    auto degree_bound() const -> int { return bound_; }
    auto terms() const -> terms_t const& { return terms_; }

    auto coeff(exps_t const& exps) const -> k_t
    {
        auto const found = terms_.find(exps);
        return found == terms_.end() ? k_t{0} : found->second;
    }

    auto is_zero() const -> bool { return terms_.empty(); }

    /// largest absolute coefficient, as double — used for unit scaling of tolerances
    auto max_abs_coeff() const -> double
    {
        auto result = 0.0;
        for (auto const& [exps, value] : terms_) { result = std::max(result, std::abs(to_double(value))); }
        return result;
    }

    friend auto operator==(jet_t const& lhs, jet_t const& rhs) -> bool
    {
        return lhs.terms_ == rhs.terms_;
    }

    // ---- ring operations ----

    friend auto operator+(jet_t const& lhs, jet_t const& rhs) -> jet_t
    {
        auto result = jet_t{std::min(lhs.bound_, rhs.bound_)};
        for (auto const& [exps, value] : lhs.terms_) { result.add_term(exps, value); }
        for (auto const& [exps, value] : rhs.terms_) { result.add_term(exps, value); }
        return result;
    }

    friend auto operator-(jet_t const& lhs, jet_t const& rhs) -> jet_t { return lhs + (-rhs); }

    auto operator-() const -> jet_t
    {
        auto result = jet_t{bound_};
        for (auto const& [exps, value] : terms_) { result.add_term(exps, -value); }
        return result;
    }

    friend auto operator*(jet_t const& lhs, jet_t const& rhs) -> jet_t
    {
        auto result = jet_t{std::min(lhs.bound_, rhs.bound_)};
        for (auto const& [le, lv] : lhs.terms_) {
            for (auto const& [re, rv] : rhs.terms_) {
                auto exps = le;
                auto degree = 0;
                for (std::size_t i = 0; i < nv; ++i) {
                    exps[i] += re[i];
                    degree += exps[i];
                }
                if (degree > result.bound_) { continue; }
                result.add_term(exps, lv * rv);
            }
        }
        return result;
    }

    friend auto operator*(k_t const& scale, jet_t const& jet) -> jet_t
    {
        auto result = jet_t{jet.bound_};
        if (is_exactly_zero(scale)) { return result; }
        for (auto const& [exps, value] : jet.terms_) { result.add_term(exps, scale * value); }
        return result;
    }

    friend auto operator*(jet_t const& jet, k_t const& scale) -> jet_t { return scale * jet; }

    auto pow(int exponent) const -> jet_t
    {
        if (exponent < 0) { throw std::invalid_argument{"jet_t::pow: negative exponent"}; }
        auto result = constant(k_t{1}, bound_);
        for (int i = 0; i < exponent; ++i) { result = result * *this; }
        return result;
    }

    // ---- calculus ----

    /// formal partial derivative; degree bound decrements (top-order data is consumed)
    auto partial(int var) const -> jet_t
    {
        if (bound_ < 1) { throw std::invalid_argument{"jet_t::partial: degree bound exhausted"}; }
        auto const v = static_cast<std::size_t>(var);
        auto result = jet_t{bound_ - 1};
        for (auto const& [exps, value] : terms_) {
            if (exps[v] == 0) { continue; }
            auto shifted = exps;
            shifted[v] -= 1;
            result.add_term(shifted, k_t(exps[v]) * value);
        }
        return result;
    }

    auto evaluate(std::array<k_t, nv> const& point) const -> k_t
    {
        auto result = k_t{0};
        for (auto const& [exps, value] : terms_) {
            auto term = value;
            for (std::size_t i = 0; i < nv; ++i) {
                for (int e = 0; e < exps[i]; ++e) { term = term * point[i]; }
            }
            result = result + term;
        }
        return result;
    }

    auto truncated(int new_bound) const -> jet_t
    {
        auto result = jet_t{new_bound};
        for (auto const& [exps, value] : terms_) {
            if (total_degree(exps) <= new_bound) { result.add_term(exps, value); }
        }
        return result;
    }

    /// terms of one fixed total degree (e.g. the quadratic part)
    auto homogeneous_part(int degree) const -> jet_t
    {
        auto result = jet_t{bound_};
        for (auto const& [exps, value] : terms_) {
            if (total_degree(exps) == degree) { result.add_term(exps, value); }
        }
        return result;
    }

    /// Taylor shift: the same polynomial re-expanded around `point`, i.e.
    /// result(x) = this(point + x).  Exact (binomial expansion), bound unchanged.
    auto shifted(std::array<k_t, nv> const& point) const -> jet_t
    {
        auto result = jet_t{bound_};
        for (auto const& [exps, value] : terms_) {
            auto j = zero_exps();
            while (true) {
                auto term = value;
                for (std::size_t i = 0; i < nv; ++i) {
                    term = term * k_t(binomial(exps[i], j[i]));
                    for (int e = 0; e < exps[i] - j[i]; ++e) { term = term * point[i]; }
                }
                result.add_term(j, term);
                // odometer over the box 0 <= j <= exps
                auto pos = std::size_t{0};
                while (pos < nv && j[pos] == exps[pos]) {
                    j[pos] = 0;
                    ++pos;
                }
                if (pos == nv) { break; }
                j[pos] += 1;
            }
        }
        return result;
    }

    // ---- composition ----

    /// substitute a jet (with zero constant term) for each variable
    template <int mv>
    auto substitute(std::array<jet_t<k_t, mv>, nv> const& args) const -> jet_t<k_t, mv>
    {
        auto inner_bound = bound_;
        for (auto const& arg : args) {
            inner_bound = std::min(inner_bound, arg.degree_bound());
            if (!is_exactly_zero(arg.coeff(jet_t<k_t, mv>::zero_exps()))) {
                throw std::invalid_argument{"jet_t::substitute: inner jet has a constant term"};
            }
        }
        auto result = jet_t<k_t, mv>{inner_bound};

        // cache powers of each argument up to the largest exponent that appears
        auto max_exps = zero_exps();
        for (auto const& [exps, value] : terms_) {
            for (std::size_t i = 0; i < nv; ++i) { max_exps[i] = std::max(max_exps[i], exps[i]); }
        }
        auto powers = std::array<std::vector<jet_t<k_t, mv>>, nv>{};
        for (std::size_t i = 0; i < nv; ++i) {
            powers[i].push_back(jet_t<k_t, mv>::constant(k_t{1}, inner_bound));
            for (int e = 1; e <= max_exps[i]; ++e) { powers[i].push_back(powers[i].back() * args[i]); }
        }

        for (auto const& [exps, value] : terms_) {
            auto term = jet_t<k_t, mv>::constant(value, inner_bound);
            for (std::size_t i = 0; i < nv; ++i) {
                if (exps[i] > 0) { term = term * powers[i][static_cast<std::size_t>(exps[i])]; }
            }
            result = result + term;
        }
        return result;
    }

    // ---- helpers ----

    static auto zero_exps() -> exps_t
    {
        auto exps = exps_t{};
        exps.fill(0);
        return exps;
    }

    static auto total_degree(exps_t const& exps) -> int
    {
        auto degree = 0;
        for (auto const e : exps) { degree += e; }
        return degree;
    }

    auto to_string(std::array<std::string, nv> const& names) const -> std::string
    {
        if (terms_.empty()) { return "0"; }
        auto out = std::ostringstream{};
        auto first = true;
        for (auto const& [exps, value] : terms_) {
            if (!first) { out << " + "; }
            first = false;
            out << "(" << value << ")";
            for (std::size_t i = 0; i < nv; ++i) {
                if (exps[i] > 0) {
                    out << "*" << names[i];
                    if (exps[i] > 1) { out << "^" << exps[i]; }
                }
            }
        }
        return out.str();
    }

private:
    static auto binomial(int n, int k) -> long long
    {
        auto result = 1ll;
        for (int i = 1; i <= k; ++i) { result = result * (n - k + i) / i; }
        return result;
    }

    auto add_term(exps_t const& exps, k_t value) -> void
    {
        if (total_degree(exps) > bound_) { return; }
        if (is_exactly_zero(value)) { return; }
        auto const [slot, inserted] = terms_.try_emplace(exps, std::move(value));
        if (!inserted) {
            slot->second = slot->second + value;
            if (is_exactly_zero(slot->second)) { terms_.erase(slot); }
        }
    }

    int bound_ = 0;
    terms_t terms_;
};

template <scalar k_t>
using jet2_t = jet_t<k_t, 2>;

template <scalar k_t>
using jet3_t = jet_t<k_t, 3>;

// --------------------------------------------------------------------------------------------------------------------
// Implicit Series Inversion
// --------------------------------------------------------------------------------------------------------------------

/// raised when the leading partial of the solved variable vanishes (degenerate point)
struct singular_implicit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
    Solve F(..., s, ...) = 0 for the variable `solve_for` as a power series in
    the remaining variables.  Requires F(0) = 0 and a nonvanishing linear
    coefficient of the solved variable.  Fixed-point iteration
        s ← s − F(s)/L
    gains at least one order per pass; the loop runs past the degree bound so
    the residual vanishes identically up to truncation.
*/
template <scalar k_t, int nv>
auto implicit_solve(jet_t<k_t, nv> const& f, int solve_for) -> jet_t<k_t, nv>
{
    using jet = jet_t<k_t, nv>;
    auto const bound = f.degree_bound();

    if (!is_exactly_zero(f.coeff(jet::zero_exps()))) {
        throw std::invalid_argument{"implicit_solve: F(0) != 0"};
    }
    auto linear_exps = jet::zero_exps();
    linear_exps.at(static_cast<std::size_t>(solve_for)) = 1;
    auto const leading = f.coeff(linear_exps);
    if (is_exactly_zero(leading)) {
        throw singular_implicit_error{"implicit_solve: vanishing leading partial of the solved variable"};
    }
    auto const inverse_leading = k_t{1} / leading;

    auto args = std::array<jet, nv>{};
    for (int i = 0; i < nv; ++i) { args[static_cast<std::size_t>(i)] = jet::variable(i, bound); }

    auto series = jet{bound};
    for (int pass = 0; pass <= bound; ++pass) {
        args.at(static_cast<std::size_t>(solve_for)) = series;
        auto const residual = f.substitute(args);
        if (residual.is_zero()) { break; }
        series = series - inverse_leading * residual;
    }
    return series;
}

// --------------------------------------------------------------------------------------------------------------------
// Conversion
// --------------------------------------------------------------------------------------------------------------------

/// numeric image of a jet (used to hand exact surfaces to floating-point solvers)
template <scalar k_t, int nv>
auto to_double_jet(jet_t<k_t, nv> const& f) -> jet_t<double, nv>
{
    auto result = jet_t<double, nv>{f.degree_bound()};
    for (auto const& [exps, value] : f.terms()) {
        result = result + jet_t<double, nv>::monomial(exps, to_double(value), f.degree_bound());
    }
    return result;
}

}  // namespace p3c
