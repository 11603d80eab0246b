#pragma once

#include "windmill/lattice2d.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

namespace windmill {

/// The eight open cones cut out by x = 0, y = 0, y = x, y = -x, named by
/// wind-rose direction and listed counterclockwise from ENE = {0 < y < x},
/// followed by the four boundary lines and the origin.
enum class Cone {
    ENE,
    NNE,
    NNW,
    WNW,
    WSW,
    SSW,
    SSE,
    ESE,
    BoundaryX,         // y = 0
    BoundaryY,         // x = 0
    BoundaryDiag,      // y = x
    BoundaryAntidiag,  // y = -x
    Origin,
};

enum class Color { Black, White };

std::string_view to_string(Cone c);
std::string_view to_string(Color c);

/// Open cones alternate black and white, ENE being black.
std::optional<Color> cone_color(Cone c);

/// A decomposition p = a*b + c*d with min(a, b) > max(c, d).
struct Solution {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;

    constexpr bool operator==(const Solution&) const = default;
    constexpr auto operator<=>(const Solution&) const = default;
};

/// True iff all entries are nonnegative, ab + cd == p and min(a,b) > max(c,d).
bool is_solution(const Solution& s, std::int64_t p);

std::ostream& operator<<(std::ostream& os, const Solution& s);

/// All windmill bases of a lattice: (m, f + s*m) for s in [0, count). When
/// count == 1 the only basis is (m, f).
struct WindmillBasisSet {
    Color color = Color::Black;
    IVec2 m;
    IVec2 f;
    std::int64_t count = 1;

    /// Each basis ordered (right cone member, left cone member): ENE then NNW
    /// for black, NNE then WNW for white.
    std::vector<LatticeBasis> bases() const;
};

Cone classify_cone(IVec2 w);

/// Black for {ENE, NNW}, White for {NNE, WNW}, nothing otherwise.
std::optional<Color> windmill_basis_color(IVec2 e, IVec2 f);

/// Searches the Voronoi vectors (all pairs, all signs) for a windmill basis.
/// The basis is returned as (right cone member, left cone member).
std::optional<std::pair<LatticeBasis, Color>> find_windmill_basis(const LatticeBasis& b);

std::optional<WindmillBasisSet> all_windmill_bases(const LatticeBasis& b);

/// The standard black windmill basis u = (a, c), v = (-d, b) of Lambda_mu(p),
/// or nothing when the lattice's windmill bases are white. Requires
/// 2 <= mu <= p - 2.
std::optional<Solution> standard_black_basis(const SlopeClass& s);

/// Picks the member of {mu, p - mu} carrying black bases and returns it with
/// its standard solution. Cost is that of one Gauss reduction.
std::pair<SlopeClass, Solution> fast_solution_for_pair(const SlopeClass& s);

}  // namespace windmill
