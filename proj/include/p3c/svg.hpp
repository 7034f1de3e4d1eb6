// SPDX-License-Identifier: MIT
/**
    \file
    \brief self-contained SVG emission: asymptotic-curve phase portraits near a
           folded singular point, and the stratified moduli-plane atlas

    Layered with fixed z-order (background, axes, boundary/discriminant
    curves, integral curves or cells, markers); no external assets.
*/

#pragma once

#include <p3c/atlas.hpp>
#include <p3c/bde.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace p3c {

namespace svg_detail {

/// world-rectangle → screen-pixel affine map (SVG y grows downward)
struct mapper_t {
    double x0, x1, y0, y1;
    double width, height, margin;

    auto sx(double x) const -> double { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); }
    auto sy(double y) const -> double { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); }
};

inline auto fmt(double value) -> std::string
{
    auto stream = std::ostringstream{};
    stream.precision(2);
    stream << std::fixed << value;
    return stream.str();
}

inline auto polyline(mapper_t const& map, std::vector<std::array<double, 2>> const& points, std::string const& style)
    -> std::string
{
    if (points.size() < 2) { return {}; }
    auto stream = std::ostringstream{};
    stream << "<polyline fill=\"none\" " << style << " points=\"";
    for (auto const& p : points) { stream << fmt(map.sx(p[0])) << ',' << fmt(map.sy(p[1])) << ' '; }
    stream << "\"/>\n";
    return stream.str();
}

/// zero-level segments of a scalar field on an n×n sample grid (marching
/// squares with linear edge interpolation; saddle cells split arbitrarily)
inline auto level_segments(std::function<double(double, double)> const& field, double x0, double x1, double y0,
                           double y1, int n) -> std::vector<std::array<double, 4>>
{
    auto out = std::vector<std::array<double, 4>>{};
    auto const dx = (x1 - x0) / n;
    auto const dy = (y1 - y0) / n;
    auto values = std::vector<double>(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1));
    auto const at = [&](int i, int j) -> double& {
        return values[static_cast<std::size_t>(j) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(i)];
    };
    for (auto j = 0; j <= n; ++j) {
        for (auto i = 0; i <= n; ++i) { at(i, j) = field(x0 + i * dx, y0 + j * dy); }
    }
    auto const cut = [](double a, double b) { return a / (a - b); };
    for (auto j = 0; j < n; ++j) {
        for (auto i = 0; i < n; ++i) {
            auto const v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            auto const cx = x0 + i * dx, cy = y0 + j * dy;
            auto crossings = std::vector<std::array<double, 2>>{};
            if ((v00 < 0) != (v10 < 0)) { crossings.push_back({cx + cut(v00, v10) * dx, cy}); }
            if ((v01 < 0) != (v11 < 0)) { crossings.push_back({cx + cut(v01, v11) * dx, cy + dy}); }
            if ((v00 < 0) != (v01 < 0)) { crossings.push_back({cx, cy + cut(v00, v01) * dy}); }
            if ((v10 < 0) != (v11 < 0)) { crossings.push_back({cx + dx, cy + cut(v10, v11) * dy}); }
            for (auto k = std::size_t{0}; k + 1 < crossings.size(); k += 2) {
                out.push_back({crossings[k][0], crossings[k][1], crossings[k + 1][0], crossings[k + 1][1]});
            }
        }
    }
    return out;
}

inline auto segment_layer(mapper_t const& map, std::vector<std::array<double, 4>> const& segments,
                          std::string const& style) -> std::string
{
    auto stream = std::ostringstream{};
    for (auto const& s : segments) {
        stream << "<line x1=\"" << fmt(map.sx(s[0])) << "\" y1=\"" << fmt(map.sy(s[1])) << "\" x2=\""
               << fmt(map.sx(s[2])) << "\" y2=\"" << fmt(map.sy(s[3])) << "\" " << style << "/>\n";
    }
    return stream.str();
}

inline auto axes_layer(mapper_t const& map) -> std::string
{
    auto stream = std::ostringstream{};
    auto const style = std::string{"stroke=\"#999\" stroke-width=\"0.8\""};
    if (map.x0 < 0 && map.x1 > 0) {
        stream << "<line x1=\"" << fmt(map.sx(0)) << "\" y1=\"" << fmt(map.sy(map.y0)) << "\" x2=\""
               << fmt(map.sx(0)) << "\" y2=\"" << fmt(map.sy(map.y1)) << "\" " << style << "/>\n";
    }
    if (map.y0 < 0 && map.y1 > 0) {
        stream << "<line x1=\"" << fmt(map.sx(map.x0)) << "\" y1=\"" << fmt(map.sy(0)) << "\" x2=\""
               << fmt(map.sx(map.x1)) << "\" y2=\"" << fmt(map.sy(0)) << "\" " << style << "/>\n";
    }
    return stream.str();
}

}  // namespace svg_detail

// --------------------------------------------------------------------------------------------------------------------
// Phase Portrait
// --------------------------------------------------------------------------------------------------------------------

/**
    Phase portrait of the asymptotic-curve foliations near the origin:
    discriminant curve (red), integral curves (blue), criminant-crossing
    markers (orange), axes in the back.
*/
inline auto portrait_svg(bde_t<double> const& eq, double box = 0.3, double step = 1e-3, int seeds_per_axis = 7,
                         int max_steps = 1500, int pixels = 640) -> std::string
{
    auto const map = svg_detail::mapper_t{-box, box, -box, box, double(pixels), double(pixels), 24.0};
    auto const picture = integrate_curves(eq, box, step, seeds_per_axis, max_steps);
    auto const delta = eq.discriminant();
    auto const delta_segments = svg_detail::level_segments(
        [&](double x, double y) { return delta.evaluate({x, y}); }, -box, box, -box, box, 160);

    auto stream = std::ostringstream{};
    stream << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels
           << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n";
    stream << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    stream << svg_detail::axes_layer(map);
    stream << svg_detail::segment_layer(map, delta_segments, "stroke=\"#c62828\" stroke-width=\"1.8\"");
    for (auto const& curve : picture.curves) {
        stream << svg_detail::polyline(map, curve, "stroke=\"#1a55a0\" stroke-width=\"0.7\" stroke-opacity=\"0.75\"");
    }
    for (auto const& cusp : picture.cusps) {
        stream << "<circle cx=\"" << svg_detail::fmt(map.sx(cusp[0])) << "\" cy=\"" << svg_detail::fmt(map.sy(cusp[1]))
               << "\" r=\"2.2\" fill=\"#ef6c00\"/>\n";
    }
    stream << "</svg>\n";
    return stream.str();
}

// --------------------------------------------------------------------------------------------------------------------
// Moduli-Plane Atlas
// --------------------------------------------------------------------------------------------------------------------

/**
    Colored moduli-plane atlas: one filled cell per grid sample keyed by its
    region label, the six boundary curves in black, the two pole curves
    dashed, axes behind, and a legend column on the right.
*/
inline auto atlas_svg(std::vector<atlas_cell_t> const& cells, int n, double alpha_min = -2.0, double alpha_max = 2.0,
                      double beta_min = -2.0, double beta_max = 2.0, int pixels = 640) -> std::string
{
    auto const legend_width = 170.0;
    auto const map =
        svg_detail::mapper_t{alpha_min, alpha_max, beta_min, beta_max, double(pixels), double(pixels), 24.0};

    // stable palette: regions colored in order of first appearance
    auto palette = std::map<std::string, std::string>{};
    auto order = std::vector<std::string>{};
    for (auto const& cell : cells) {
        if (palette.count(cell.region) != 0) { continue; }
        if (cell.region == "Unmatched") {
            palette[cell.region] = "hsl(0, 0%, 72%)";
        } else {
            auto const hue = static_cast<int>((order.size() * 47) % 360);
            palette[cell.region] = "hsl(" + std::to_string(hue) + ", 62%, 62%)";
        }
        order.push_back(cell.region);
    }

    auto stream = std::ostringstream{};
    stream << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels + static_cast<int>(legend_width)
           << "\" height=\"" << pixels << "\" viewBox=\"0 0 " << pixels + static_cast<int>(legend_width) << ' '
           << pixels << "\">\n";
    stream << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    auto const da = (alpha_max - alpha_min) / std::max(1, n);
    auto const db = (beta_max - beta_min) / std::max(1, n);
    for (auto const& cell : cells) {
        auto const x = map.sx(cell.alpha - da / 2);
        auto const y = map.sy(cell.beta + db / 2);
        auto const w = map.sx(cell.alpha + da / 2) - x;
        auto const h = map.sy(cell.beta - db / 2) - y;
        stream << "<rect x=\"" << svg_detail::fmt(x) << "\" y=\"" << svg_detail::fmt(y) << "\" width=\""
               << svg_detail::fmt(w + 0.5) << "\" height=\"" << svg_detail::fmt(h + 0.5) << "\" fill=\""
               << palette[cell.region] << "\"/>\n";
    }

    stream << svg_detail::axes_layer(map);
    for (auto const curve : all_gamma_curves) {
        auto const segments = svg_detail::level_segments(
            [&](double alpha, double beta) { return gamma_value(curve, alpha, beta); }, alpha_min, alpha_max,
            beta_min, beta_max, 220);
        stream << svg_detail::segment_layer(map, segments, "stroke=\"#111\" stroke-width=\"1.1\"");
    }
    for (auto const pole : {0, 1}) {
        auto const segments = svg_detail::level_segments(
            [&](double alpha, double beta) {
                return pole == 0 ? 3 * alpha + 4 * beta * beta - 4 * beta : alpha + beta * beta - beta;
            },
            alpha_min, alpha_max, beta_min, beta_max, 220);
        stream << svg_detail::segment_layer(map, segments,
                                            "stroke=\"#444\" stroke-width=\"1.0\" stroke-dasharray=\"4 3\"");
    }

    auto const legend_x = pixels + 10;
    auto row = 0;
    stream << "<text x=\"" << legend_x << "\" y=\"18\" font-family=\"monospace\" font-size=\"12\">regions</text>\n";
    for (auto const& region : order) {
        auto const y = 34 + 16 * row++;
        if (y > pixels - 10) { break; }
        stream << "<rect x=\"" << legend_x << "\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" fill=\""
               << palette[region] << "\"/>\n";
        stream << "<text x=\"" << legend_x + 18 << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"11\">"
               << region << "</text>\n";
    }
    stream << "</svg>\n";
    return stream.str();
}

}  // namespace p3c
