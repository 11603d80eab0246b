#pragma once

#include "windmill/int128.hpp"
#include "windmill/rational.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace windmill {

/// Integer plane vector. Products are formed in 128 bits.
struct IVec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr bool operator==(const IVec2&) const = default;
    constexpr auto operator<=>(const IVec2&) const = default;

    constexpr IVec2 operator-() const { return {-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

IVec2 operator+(IVec2 a, IVec2 b);
IVec2 operator-(IVec2 a, IVec2 b);
IVec2 operator*(std::int64_t k, IVec2 v);

inline i128 dot(IVec2 a, IVec2 b) { return i128(a.x) * b.x + i128(a.y) * b.y; }
inline i128 norm2(IVec2 a) { return dot(a, a); }
inline i128 cross(IVec2 a, IVec2 b) { return i128(a.x) * b.y - i128(a.y) * b.x; }

/// Representative of {v, -v} in the upper half-plane (y > 0, or y == 0 and x > 0).
IVec2 canonical_sign(IVec2 v);

std::string to_string(IVec2 v);
std::ostream& operator<<(std::ostream& os, IVec2 v);

/// Ordered pair of linearly independent vectors with coordinates below 2^62.
class LatticeBasis {
public:
    LatticeBasis(IVec2 u, IVec2 v);

    IVec2 u() const { return u_; }
    IVec2 v() const { return v_; }

    bool operator==(const LatticeBasis&) const = default;

private:
    IVec2 u_;
    IVec2 v_;
};

std::ostream& operator<<(std::ostream& os, const LatticeBasis& b);

/// A point of the projective line over F_p naming the index-p lattice
/// {(x, y) : x + mu*y = 0 mod p}, or {y = 0 mod p} for infinity.
class SlopeClass {
public:
    enum class Kind { Finite, Infinity };

    static SlopeClass finite(std::int64_t p, std::int64_t mu);
    static SlopeClass infinity(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    std::int64_t mu() const;
    std::int64_t p() const { return p_; }

    bool operator==(const SlopeClass&) const = default;

private:
    SlopeClass(Kind kind, std::int64_t p, std::int64_t mu) : kind_(kind), p_(p), mu_(mu) {}

    Kind kind_;
    std::int64_t p_;
    std::int64_t mu_;
};

std::string to_string(const SlopeClass& s);

/// Voronoi-relevant vectors (one per +- pair) and the exact cell of the origin.
struct VoronoiData {
    std::vector<IVec2> vectors;
    std::vector<std::pair<Rational, Rational>> cell_vertices;
};

/// u.x*v.y - u.y*v.x; its absolute value is the index of the lattice in Z^2.
i128 det(const LatticeBasis& b);

/// ((p, 0), (-mu, 1)) for finite slopes, ((1, 0), (0, p)) for infinity.
LatticeBasis lambda_mu(const SlopeClass& s);

bool contains(const SlopeClass& s, IVec2 w);

/// Lagrange-Gauss reduction. Returns (r, s) spanning the same lattice with
/// |r|^2 <= |s|^2 and 2|<r, s>| <= |r|^2. At an exact half-integer shift the
/// shift of smaller absolute value is taken.
LatticeBasis gauss_reduce(const LatticeBasis& b);

bool is_basis_of_slope(const LatticeBasis& b, const SlopeClass& s);

/// Scans the bounding box of the closed triangle (0, e, f) for points of the
/// lattice other than the vertices. Bounding boxes above 1e8 cells are rejected.
bool triangle_basis_test(IVec2 e, IVec2 f, const SlopeClass& s);

/// Throws DomainError if w is zero or not in the lattice.
bool is_primitive(IVec2 w, const SlopeClass& s);

/// Shortest nonzero vector in canonical sign; among equal-norm candidates the
/// one with larger y, then larger x.
IVec2 minimal_vector(const LatticeBasis& b);

/// {e, f} for an orthogonal reduced basis, else {e, f, e - sign(<e,f>) f};
/// each in canonical sign.
std::vector<IVec2> voronoi_vectors(const LatticeBasis& b);

/// Voronoi vectors plus the exact vertices of the cell of the origin, counter-
/// clockwise from the vertex of largest polar angle in [0, pi).
VoronoiData voronoi_cell(const LatticeBasis& b);

/// True iff the four lines are distinct and those of f1, f2 separate those of
/// g1, g2 on the projective line. Throws DomainError on a zero vector.
bool interlaced(IVec2 f1, IVec2 f2, IVec2 g1, IVec2 g2);

}  // namespace windmill
