// SPDX-License-Identifier: MIT
/**
    \file
    \brief exact rational scalar type with parsing, formatting, and float gates

    All closed-form and identity work runs on exact rationals; floating point
    is reserved for Newton iterations and plotting.  This header fixes the
    scalar concept shared by every jet instantiation and the "p/q" wire format
    used in JSON reports.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace p3c {

// expression templates are disabled so every operation materializes a value;
// this keeps `auto` safe and deduction predictable throughout the codebase
using bigint_t = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using rational_t = boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                                 boost::multiprecision::et_off>;

// --------------------------------------------------------------------------------------------------------------------
// Concepts
// --------------------------------------------------------------------------------------------------------------------

/// coefficient types admissible in jets: exact rationals or hardware doubles
template <typename k_t>
concept scalar = std::same_as<k_t, rational_t> || std::same_as<k_t, double>;

// --------------------------------------------------------------------------------------------------------------------
// Conversions
// --------------------------------------------------------------------------------------------------------------------

inline auto to_double(rational_t const& r) -> double { return r.convert_to<double>(); }
constexpr auto to_double(double x) -> double { return x; }

/// exact conversion of a hardware double into a rational (binary expansion is finite)
inline auto rational_from_double(double x) -> rational_t
{
    if (!std::isfinite(x)) { throw std::invalid_argument{"rational_from_double: non-finite input"}; }
    return rational_t{x};
}

// --------------------------------------------------------------------------------------------------------------------
// Parsing and Formatting
// --------------------------------------------------------------------------------------------------------------------

/// parse "p/q", "n", or a plain decimal string ("-0.25") into an exact rational
inline auto parse_rational(std::string_view text) -> rational_t
{
    auto const trim = [](std::string_view s) -> std::string_view {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) { s.remove_prefix(1); }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) { s.remove_suffix(1); }
        return s;
    };
    auto const body = trim(text);
    if (body.empty()) { throw std::invalid_argument{"parse_rational: empty input"}; }

    if (auto const slash = body.find('/'); slash != std::string_view::npos) {
        auto const num = trim(body.substr(0, slash));
        auto const den = trim(body.substr(slash + 1));
        if (num.empty() || den.empty()) { throw std::invalid_argument{"parse_rational: malformed fraction"}; }
        rational_t const q{bigint_t{std::string{num}}, bigint_t{std::string{den}}};
        return q;
    }

    if (auto const dot = body.find('.'); dot != std::string_view::npos) {
        auto const integral = body.substr(0, dot);
        auto const fraction = body.substr(dot + 1);
        bool const negative = !integral.empty() && integral.front() == '-';
        auto digits = std::string{integral} + std::string{fraction};
        if (digits == "-" || digits.empty()) { throw std::invalid_argument{"parse_rational: malformed decimal"}; }
        bigint_t scale{1};
        for (std::size_t i = 0; i < fraction.size(); ++i) { scale *= 10; }
        bigint_t const numerator{digits};
        // the sign already rides on the concatenated digit string
        (void)negative;
        return rational_t{numerator, scale};
    }

    return rational_t{bigint_t{std::string{body}}};
}

/// serialize as "p/q" (or "p" for integers) — the wire format for exact reports
inline auto format_rational(rational_t const& r) -> std::string
{
    auto const num = boost::multiprecision::numerator(r);
    auto const den = boost::multiprecision::denominator(r);
    if (den == 1) { return num.str(); }
    return num.str() + "/" + den.str();
}

// --------------------------------------------------------------------------------------------------------------------
// Float Gates
// --------------------------------------------------------------------------------------------------------------------

/// default relative gate for "this quantity must not vanish" checks in float mode
inline constexpr double nonzero_gate = 1e-9;

/// |value| below tol relative to a positive reference scale counts as zero
inline auto nearly_zero(double value, double scale, double tol = nonzero_gate) -> bool
{
    auto const reference = scale > 1.0 ? scale : 1.0;
    return std::abs(value) <= tol * reference;
}

/// exact overload so generic code can share one spelling
inline auto nearly_zero(rational_t const& value, rational_t const& /*scale*/, double /*tol*/ = nonzero_gate) -> bool
{
    return value == 0;
}

template <scalar k_t>
inline auto is_exactly_zero(k_t const& v) -> bool
{
    if constexpr (std::same_as<k_t, double>) { return v == 0.0; }
    else { return v == 0; }
}

}  // namespace p3c
