#include "windmill/windmill.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace windmill {

namespace {

// Each open windmill cone is {w : <n1, w> > 0 and <n2, w> > 0}.
struct ConeNormals {
    IVec2 n1;
    IVec2 n2;
};

ConeNormals normals_of(Cone c) {
    switch (c) {
        case Cone::ENE: return {{0, 1}, {1, -1}};
        case Cone::NNE: return {{1, 0}, {-1, 1}};
        case Cone::NNW: return {{-1, 0}, {1, 1}};
        case Cone::WNW: return {{0, 1}, {-1, -1}};
        default: throw std::logic_error("translate ranges are only needed for upper windmill cones");
    }
}

struct Range {
    i128 lo;
    i128 hi;
};

// Integers s with base + s*dir inside the open cone; base itself is inside.
Range translate_range(IVec2 base, IVec2 dir, Cone cone) {
    ConeNormals n = normals_of(cone);
    bool have_lo = false;
    bool have_hi = false;
    Range r{0, 0};
    for (IVec2 normal : {n.n1, n.n2}) {
        i128 a = dot(normal, base);  // > 0
        i128 t = dot(normal, dir);
        if (t > 0) {
            // s > -a/t
            i128 lo = floor_div(-a, t) + 1;
            r.lo = have_lo ? std::max(r.lo, lo) : lo;
            have_lo = true;
        } else if (t < 0) {
            // s < a/(-t)
            i128 hi = ceil_div(a, -t) - 1;
            r.hi = have_hi ? std::min(r.hi, hi) : hi;
            have_hi = true;
        }
    }
    if (!have_lo || !have_hi) throw std::logic_error("translate line does not cross the cone in a bounded segment");
    return r;
}

struct WindmillCones {
    Cone right;
    Cone left;
};

WindmillCones cones_of(Color c) {
    return c == Color::Black ? WindmillCones{Cone::ENE, Cone::NNW} : WindmillCones{Cone::NNE, Cone::WNW};
}

IVec2 translate(IVec2 base, i128 s, IVec2 dir) {
    return {narrow64(i128(base.x) + s * dir.x), narrow64(i128(base.y) + s * dir.y)};
}

struct TranslateRanges {
    Range left;   // v + s*u in the left cone
    Range right;  // u + s*v in the right cone
};

TranslateRanges ranges_for(IVec2 u, IVec2 v, Color color) {
    WindmillCones cones = cones_of(color);
    TranslateRanges r{translate_range(v, u, cones.left), translate_range(u, v, cones.right)};
    if (r.left.hi > r.left.lo && r.right.hi > r.right.lo) {
        throw std::logic_error("lattice has disjoint windmill bases");
    }
    return r;
}

void require_middle_slope(const SlopeClass& s) {
    if (s.is_infinity() || s.mu() < 2 || s.mu() > s.p() - 2) {
        throw DomainError("windmill bases require 2 <= mu <= p-2, got " + to_string(s));
    }
}

Solution solution_from(IVec2 u, IVec2 v, std::int64_t p) {
    Solution sol{u.x, v.y, u.y, -v.x};
    if (!is_solution(sol, p)) throw std::logic_error("standard windmill basis does not encode a solution");
    return sol;
}

}  // namespace

std::string_view to_string(Cone c) {
    switch (c) {
        case Cone::ENE: return "ENE";
        case Cone::NNE: return "NNE";
        case Cone::NNW: return "NNW";
        case Cone::WNW: return "WNW";
        case Cone::WSW: return "WSW";
        case Cone::SSW: return "SSW";
        case Cone::SSE: return "SSE";
        case Cone::ESE: return "ESE";
        case Cone::BoundaryX: return "BoundaryX";
        case Cone::BoundaryY: return "BoundaryY";
        case Cone::BoundaryDiag: return "BoundaryDiag";
        case Cone::BoundaryAntidiag: return "BoundaryAntidiag";
        case Cone::Origin: return "Origin";
    }
    return "?";
}

std::string_view to_string(Color c) { return c == Color::Black ? "Black" : "White"; }

std::optional<Color> cone_color(Cone c) {
    switch (c) {
        case Cone::ENE:
        case Cone::NNW:
        case Cone::WSW:
        case Cone::SSE: return Color::Black;
        case Cone::NNE:
        case Cone::WNW:
        case Cone::SSW:
        case Cone::ESE: return Color::White;
        default: return std::nullopt;
    }
}

bool is_solution(const Solution& s, std::int64_t p) {
    if (s.a < 0 || s.b < 0 || s.c < 0 || s.d < 0) return false;
    if (i128(s.a) * s.b + i128(s.c) * s.d != p) return false;
    return std::min(s.a, s.b) > std::max(s.c, s.d);
}

std::ostream& operator<<(std::ostream& os, const Solution& s) {
    return os << "(" << s.a << "," << s.b << "," << s.c << "," << s.d << ")";
}

std::vector<LatticeBasis> WindmillBasisSet::bases() const {
    WindmillCones cones = cones_of(color);
    std::vector<LatticeBasis> out;
    for (std::int64_t s = 0; s < count; ++s) {
        IVec2 g = translate(f, s, m);
        if (classify_cone(m) == cones.right) {
            out.emplace_back(m, g);
        } else {
            out.emplace_back(g, m);
        }
    }
    return out;
}

Cone classify_cone(IVec2 w) {
    const std::int64_t x = w.x;
    const std::int64_t y = w.y;
    if (x == 0 && y == 0) return Cone::Origin;
    if (y == 0) return Cone::BoundaryX;
    if (x == 0) return Cone::BoundaryY;
    if (x == y) return Cone::BoundaryDiag;
    if (x == -y) return Cone::BoundaryAntidiag;
    const std::int64_t ax = x < 0 ? -x : x;
    const std::int64_t ay = y < 0 ? -y : y;
    if (y > 0) {
        if (x > 0) return ay < ax ? Cone::ENE : Cone::NNE;
        return ay > ax ? Cone::NNW : Cone::WNW;
    }
    if (x < 0) return ay < ax ? Cone::WSW : Cone::SSW;
    return ay > ax ? Cone::SSE : Cone::ESE;
}

std::optional<Color> windmill_basis_color(IVec2 e, IVec2 f) {
    Cone ce = classify_cone(e);
    Cone cf = classify_cone(f);
    auto is_pair = [&](Cone a, Cone b) { return (ce == a && cf == b) || (ce == b && cf == a); };
    if (is_pair(Cone::ENE, Cone::NNW)) return Color::Black;
    if (is_pair(Cone::NNE, Cone::WNW)) return Color::White;
    return std::nullopt;
}

std::optional<std::pair<LatticeBasis, Color>> find_windmill_basis(const LatticeBasis& b) {
    const std::vector<IVec2> vs = voronoi_vectors(b);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (i == j) continue;
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    IVec2 e = si * vs[i];
                    IVec2 f = sj * vs[j];
                    std::optional<Color> color = windmill_basis_color(e, f);
                    if (!color) continue;
                    if (classify_cone(e) == cones_of(*color).right) return std::pair{LatticeBasis(e, f), *color};
                    return std::pair{LatticeBasis(f, e), *color};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<WindmillBasisSet> all_windmill_bases(const LatticeBasis& b) {
    auto found = find_windmill_basis(b);
    if (!found) return std::nullopt;
    const auto& [basis, color] = *found;
    IVec2 u = basis.u();
    IVec2 v = basis.v();
    TranslateRanges r = ranges_for(u, v, color);

    WindmillBasisSet set;
    set.color = color;
    if (r.left.hi > r.left.lo) {
        set.m = u;
        set.f = translate(v, r.left.lo, u);
        set.count = narrow64(r.left.hi - r.left.lo + 1);
    } else if (r.right.hi > r.right.lo) {
        set.m = v;
        set.f = translate(u, r.right.lo, v);
        set.count = narrow64(r.right.hi - r.right.lo + 1);
    } else {
        set.m = u;
        set.f = v;
        set.count = 1;
    }
    return set;
}

std::optional<Solution> standard_black_basis(const SlopeClass& s) {
    require_middle_slope(s);
    auto set = all_windmill_bases(lambda_mu(s));
    if (!set) throw std::logic_error(to_string(s) + " has no windmill basis");
    if (set->color == Color::White) return std::nullopt;

    const std::vector<LatticeBasis> bases = set->bases();
    // Lowest ENE member (min y, then min x); rightmost NNW member (max x, then min y).
    IVec2 u = bases.front().u();
    IVec2 v = bases.front().v();
    for (const LatticeBasis& basis : bases) {
        IVec2 ene = basis.u();
        IVec2 nnw = basis.v();
        if (ene.y < u.y || (ene.y == u.y && ene.x < u.x)) u = ene;
        if (nnw.x > v.x || (nnw.x == v.x && nnw.y < v.y)) v = nnw;
    }
    if (std::find(bases.begin(), bases.end(), LatticeBasis(u, v)) == bases.end()) {
        throw std::logic_error("lowest and rightmost windmill vectors do not form a basis");
    }
    return solution_from(u, v, s.p());
}

std::pair<SlopeClass, Solution> fast_solution_for_pair(const SlopeClass& s) {
    require_middle_slope(s);
    auto found = find_windmill_basis(lambda_mu(s));
    if (!found) throw std::logic_error(to_string(s) + " has no windmill basis");
    auto [basis, color] = *found;
    IVec2 u = basis.u();
    IVec2 v = basis.v();
    SlopeClass black = s;
    if (color == Color::White) {
        // (x, y) -> (-x, y) maps Lambda_mu onto Lambda_{p-mu} and swaps colors.
        IVec2 ru{-v.x, v.y};
        IVec2 rv{-u.x, u.y};
        u = ru;
        v = rv;
        black = SlopeClass::finite(s.p(), s.p() - s.mu());
    }
    TranslateRanges r = ranges_for(u, v, Color::Black);
    // Along u + s*v the height grows with s; along v + s*u the abscissa does.
    IVec2 lowest = translate(u, r.right.lo, v);
    IVec2 rightmost = translate(v, r.left.hi, u);
    return {black, solution_from(lowest, rightmost, s.p())};
}

}  // namespace windmill
