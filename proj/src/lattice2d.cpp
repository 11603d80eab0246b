#include "windmill/lattice2d.hpp"

#include "windmill/numtheory.hpp"

#include <algorithm>
#include <cstdint>

namespace windmill {

namespace {

void require_coordinates(IVec2 v) {
    auto ok = [](std::int64_t c) { return c < kCoordinateLimit && c > -kCoordinateLimit; };
    if (!ok(v.x) || !ok(v.y)) throw DomainError("vector coordinates exceed 62 bits: " + to_string(v));
}

i128 mod_floor(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

// 0 for directions with polar angle in [0, pi), 1 for [pi, 2pi).
int half_plane(i128 x, i128 y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; }

bool angle_less(i128 ax, i128 ay, i128 bx, i128 by) {
    int ha = half_plane(ax, ay);
    int hb = half_plane(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

// Nearest integer to num/den (den > 0); exact halves go to the smaller |k|.
bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

i128 nearest_shift(i128 num, i128 den) {
    i128 q;
    if (fits64(num) && fits64(den)) {
        const auto n = static_cast<std::int64_t>(num);
        const auto d = static_cast<std::int64_t>(den);
        std::int64_t q64 = n / d;
        if ((n % d != 0) && ((n < 0) != (d < 0))) --q64;
        q = q64;
    } else {
        q = floor_div(num, den);
    }
    i128 twice_rem = 2 * (num - q * den);
    if (twice_rem < den) return q;
    if (twice_rem > den) return q + 1;
    return q >= 0 ? q : q + 1;
}

IVec2 shifted(IVec2 e, i128 k, IVec2 f) {
    return {narrow64(i128(e.x) + k * f.x), narrow64(i128(e.y) + k * f.y)};
}

bool in_closed_triangle(IVec2 a, IVec2 b, IVec2 c, IVec2 q) {
    int o = sign128(cross(b - a, c - a));
    return sign128(cross(b - a, q - a)) * o >= 0 && sign128(cross(c - b, q - b)) * o >= 0 &&
           sign128(cross(a - c, q - c)) * o >= 0;
}

}  // namespace

IVec2 operator+(IVec2 a, IVec2 b) { return {narrow64(i128(a.x) + b.x), narrow64(i128(a.y) + b.y)}; }
IVec2 operator-(IVec2 a, IVec2 b) { return {narrow64(i128(a.x) - b.x), narrow64(i128(a.y) - b.y)}; }
IVec2 operator*(std::int64_t k, IVec2 v) { return {narrow64(i128(k) * v.x), narrow64(i128(k) * v.y)}; }

IVec2 canonical_sign(IVec2 v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return v;
    return -v;
}

std::string to_string(IVec2 v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

std::ostream& operator<<(std::ostream& os, IVec2 v) { return os << to_string(v); }

LatticeBasis::LatticeBasis(IVec2 u, IVec2 v) : u_(u), v_(v) {
    require_coordinates(u);
    require_coordinates(v);
    if (cross(u, v) == 0) throw DomainError("basis vectors " + to_string(u) + ", " + to_string(v) + " are dependent");
}

std::ostream& operator<<(std::ostream& os, const LatticeBasis& b) { return os << b.u() << " " << b.v(); }

SlopeClass SlopeClass::finite(std::int64_t p, std::int64_t mu) {
    // Sweeps build many slopes over one prime; remember the last modulus that passed.
    thread_local std::int64_t last_prime = 0;
    if (p != last_prime) {
        if (p < 3 || static_cast<std::uint64_t>(p) > kMaxModulus || !is_prime(static_cast<std::uint64_t>(p))) {
            throw DomainError("slope modulus " + std::to_string(p) + " is not an odd prime below 2^62");
        }
        last_prime = p;
    }
    if (mu < 0 || mu >= p) {
        throw DomainError("slope " + std::to_string(mu) + " is outside [0, " + std::to_string(p) + ")");
    }
    return {Kind::Finite, p, mu};
}

SlopeClass SlopeClass::infinity(std::int64_t p) {
    SlopeClass s = finite(p, 0);
    s.kind_ = Kind::Infinity;
    return s;
}

std::int64_t SlopeClass::mu() const {
    if (kind_ == Kind::Infinity) throw DomainError("the infinite slope has no finite mu");
    return mu_;
}

std::string to_string(const SlopeClass& s) {
    return "Lambda_" + (s.is_infinity() ? std::string("inf") : std::to_string(s.mu())) + "(" + std::to_string(s.p()) +
           ")";
}

i128 det(const LatticeBasis& b) { return cross(b.u(), b.v()); }

LatticeBasis lambda_mu(const SlopeClass& s) {
    if (s.is_infinity()) return {{1, 0}, {0, s.p()}};
    return {{s.p(), 0}, {-s.mu(), 1}};
}

bool contains(const SlopeClass& s, IVec2 w) {
    if (s.is_infinity()) return w.y % s.p() == 0;
    return mod_floor(i128(w.x) + i128(s.mu()) * w.y, s.p()) == 0;
}

LatticeBasis gauss_reduce(const LatticeBasis& b) {
    IVec2 e = b.u();
    IVec2 f = b.v();
    for (;;) {
        if (norm2(f) > norm2(e)) std::swap(e, f);
        i128 k = nearest_shift(-dot(f, e), norm2(f));
        IVec2 reduced = shifted(e, k, f);
        if (norm2(reduced) >= norm2(e)) break;
        e = reduced;
    }
    return {f, e};
}

bool is_basis_of_slope(const LatticeBasis& b, const SlopeClass& s) {
    return contains(s, b.u()) && contains(s, b.v()) && abs128(det(b)) == s.p();
}

bool triangle_basis_test(IVec2 e, IVec2 f, const SlopeClass& s) {
    if (cross(e, f) == 0) throw DomainError("triangle vertices " + to_string(e) + ", " + to_string(f) + " are collinear");
    if (!contains(s, e) || !contains(s, f)) throw DomainError("triangle vertices must lie in " + to_string(s));
    const IVec2 origin{0, 0};
    std::int64_t x0 = std::min({std::int64_t{0}, e.x, f.x});
    std::int64_t x1 = std::max({std::int64_t{0}, e.x, f.x});
    std::int64_t y0 = std::min({std::int64_t{0}, e.y, f.y});
    std::int64_t y1 = std::max({std::int64_t{0}, e.y, f.y});
    if ((i128(x1) - x0 + 1) * (i128(y1) - y0 + 1) > 100'000'000) {
        throw DomainError("triangle bounding box too large for a direct scan");
    }
    auto interior_hit = [&](IVec2 q) {
        return q != origin && q != e && q != f && in_closed_triangle(origin, e, f, q);
    };
    const std::int64_t p = s.p();
    for (std::int64_t y = y0; y <= y1; ++y) {
        if (s.is_infinity()) {
            if (y % p != 0) continue;
            for (std::int64_t x = x0; x <= x1; ++x) {
                if (interior_hit({x, y})) return false;
            }
            continue;
        }
        // x = -mu*y mod p, stepping by p through [x0, x1].
        i128 first = mod_floor(-i128(s.mu()) * y - x0, p) + x0;
        for (i128 x = first; x <= x1; x += p) {
            if (interior_hit({static_cast<std::int64_t>(x), y})) return false;
        }
    }
    return true;
}

bool is_primitive(IVec2 w, const SlopeClass& s) {
    if (w.is_zero()) throw DomainError("the zero vector is not primitive");
    if (!contains(s, w)) throw DomainError(to_string(w) + " is not in " + to_string(s));
    i128 g = gcd128(w.x, w.y);
    if (g == 1) return true;
    // Every prime factor q != p of g gives w/q in the lattice, since the
    // lattice contains pZ^2 and q is invertible mod p.
    const i128 p = s.p();
    while (g % p == 0) g /= p;
    if (g != 1) return false;
    return !contains(s, {w.x / s.p(), w.y / s.p()});
}

IVec2 minimal_vector(const LatticeBasis& b) {
    std::vector<IVec2> vs = voronoi_vectors(b);
    i128 best = norm2(vs.front());
    for (IVec2 v : vs) best = std::min(best, norm2(v));
    IVec2 pick{0, 0};
    bool found = false;
    for (IVec2 v : vs) {
        if (norm2(v) != best) continue;
        if (!found || v.y > pick.y || (v.y == pick.y && v.x > pick.x)) pick = v;
        found = true;
    }
    return pick;
}

std::vector<IVec2> voronoi_vectors(const LatticeBasis& b) {
    LatticeBasis r = gauss_reduce(b);
    IVec2 e = r.u();
    IVec2 f = r.v();
    int eps = sign128(dot(e, f));
    if (eps == 0) return {canonical_sign(e), canonical_sign(f)};
    IVec2 g = eps > 0 ? e - f : e + f;
    return {canonical_sign(e), canonical_sign(f), canonical_sign(g)};
}

VoronoiData voronoi_cell(const LatticeBasis& b) {
    VoronoiData out;
    out.vectors = voronoi_vectors(b);
    for (IVec2 v : out.vectors) {
        if (v.x > (std::int64_t{1} << 40) || v.x < -(std::int64_t{1} << 40) || v.y > (std::int64_t{1} << 40) ||
            v.y < -(std::int64_t{1} << 40)) {
            throw DomainError("Voronoi vectors exceed 40 bits; exact cell vertices would overflow");
        }
    }

    std::vector<IVec2> normals;
    for (IVec2 v : out.vectors) {
        normals.push_back(v);
        normals.push_back(-v);
    }
    std::sort(normals.begin(), normals.end(),
              [](IVec2 a, IVec2 c) { return angle_less(a.x, a.y, c.x, c.y); });

    struct Vertex {
        i128 dx, dy;  // direction, same sign as the coordinates
        Rational x, y;
    };
    std::vector<Vertex> verts;
    const std::size_t n = normals.size();
    for (std::size_t i = 0; i < n; ++i) {
        IVec2 w1 = normals[i];
        IVec2 w2 = normals[(i + 1) % n];
        i128 d = cross(w1, w2);
        i128 n1 = norm2(w1);
        i128 n2 = norm2(w2);
        i128 nx = n1 * w2.y - n2 * w1.y;
        i128 ny = i128(w1.x) * n2 - i128(w2.x) * n1;
        verts.push_back({nx * sign128(d), ny * sign128(d), Rational(nx, 2 * d), Rational(ny, 2 * d)});
    }
    std::sort(verts.begin(), verts.end(),
              [](const Vertex& a, const Vertex& c) { return angle_less(a.dx, a.dy, c.dx, c.dy); });
    std::size_t start = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (half_plane(verts[i].dx, verts[i].dy) == 0) start = i;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Vertex& v = verts[(start + i) % verts.size()];
        out.cell_vertices.emplace_back(v.x, v.y);
    }
    return out;
}

bool interlaced(IVec2 f1, IVec2 f2, IVec2 g1, IVec2 g2) {
    for (IVec2 v : {f1, f2, g1, g2}) {
        if (v.is_zero()) throw DomainError("interlacedness is undefined for the zero vector");
    }
    const IVec2 all[4] = {f1, f2, g1, g2};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (cross(all[i], all[j]) == 0) return false;
        }
    }
    // The line of f lies in the arc spanned by +-(open cone of g1, g2) iff
    // f = a*g1 + b*g2 with ab > 0.
    auto side = [&](IVec2 f) { return sign128(cross(g1, f)) * sign128(cross(f, g2)); };
    return side(f1) != side(f2);
}

}  // namespace windmill
