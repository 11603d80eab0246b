#pragma once

#include "windmill/lattice2d.hpp"
#include "windmill/windmill.hpp"

#include <string>

namespace windmill {

/// Standalone SVG 1.1 document. Drawing happens in lattice units inside a
/// y-up group; width and height are 10 pixels per unit.
struct SvgDocument {
    int width = 0;
    int height = 0;
    std::string body;

    std::string str() const;
};

inline constexpr int kPixelsPerUnit = 10;

/// Fundamental domain of sol (an a x b rectangle at the origin and a d x c
/// rectangle on top of its right end, at [a-d, a] x [b, b+c]) translated by
/// i*(a, c) + j*(-d, b) for |i|, |j| <= extent. Requires 1 <= extent <= 50.
/// Solutions with cd = 0 draw the a x b brick alone.
SvgDocument tiling_svg(const Solution& sol, int extent);

/// Points of the lattice in [-extent, extent]^2 over the shaded black cones,
/// with the Voronoi cell, reduced basis and (if any) standard black basis.
/// Requires p <= 1000 and 1 <= extent <= 200.
SvgDocument lattice_svg(const SlopeClass& s, int extent);

}  // namespace windmill
