#include "windmill/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace windmill {

namespace {

constexpr const char* kLargeFill = "#4a7ab5";
constexpr const char* kSmallFill = "#f2c14e";
constexpr const char* kConeFill = "#d9d9d9";
constexpr const char* kCellFill = "#9fd49f";
constexpr const char* kReducedStroke = "#c0392b";
constexpr const char* kStandardStroke = "#1f3a93";

std::string decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Box {
    std::int64_t x0, y0, x1, y1;

    void include(std::int64_t x, std::int64_t y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
};

// Opens the document and a y-up group; the caller closes both.
std::ostringstream open_document(const Box& box, SvgDocument& doc) {
    const std::int64_t w = box.x1 - box.x0;
    const std::int64_t h = box.y1 - box.y0;
    doc.width = static_cast<int>(w * kPixelsPerUnit);
    doc.height = static_cast<int>(h * kPixelsPerUnit);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << doc.width << "\" height=\""
       << doc.height << "\" viewBox=\"" << box.x0 << " " << -box.y1 << " " << w << " " << h << "\">\n";
    os << "<g transform=\"scale(1,-1)\">\n";
    return os;
}

void rect(std::ostringstream& os, const char* cls, std::int64_t x, std::int64_t y, std::int64_t w, std::int64_t h,
          const char* fill) {
    os << "<rect class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
       << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"0.05\"/>\n";
}

void arrow(std::ostringstream& os, const char* cls, IVec2 v, const char* stroke) {
    os << "<line class=\"" << cls << "\" x1=\"0\" y1=\"0\" x2=\"" << v.x << "\" y2=\"" << v.y << "\" stroke=\""
       << stroke << "\" stroke-width=\"0.12\" marker-end=\"url(#head)\"/>\n";
}

}  // namespace

std::string SvgDocument::str() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n" + body;
}

SvgDocument tiling_svg(const Solution& sol, int extent) {
    const std::int64_t p = sol.a * sol.b + sol.c * sol.d;
    if (!is_solution(sol, p)) {
        throw DomainError("not a valid decomposition: min(a,b) must exceed max(c,d)");
    }
    if (extent < 1 || extent > 50) throw DomainError("tiling extent must lie in [1, 50]");
    const bool two_rects = sol.c * sol.d != 0;
    const IVec2 g1{sol.a, sol.c};
    const IVec2 g2{-sol.d, sol.b};

    Box box{0, 0, 0, 0};
    for (int i = -extent; i <= extent; ++i) {
        for (int j = -extent; j <= extent; ++j) {
            const IVec2 t = i * g1 + j * g2;
            box.include(t.x, t.y);
            box.include(t.x + sol.a, t.y + sol.b + (two_rects ? sol.c : 0));
        }
    }

    SvgDocument doc;
    std::ostringstream os = open_document(box, doc);
    for (int i = -extent; i <= extent; ++i) {
        for (int j = -extent; j <= extent; ++j) {
            const IVec2 t = i * g1 + j * g2;
            rect(os, "large", t.x, t.y, sol.a, sol.b, kLargeFill);
            if (two_rects) rect(os, "small", t.x + sol.a - sol.d, t.y + sol.b, sol.d, sol.c, kSmallFill);
        }
    }
    os << "</g>\n</svg>\n";
    doc.body = os.str();
    return doc;
}

SvgDocument lattice_svg(const SlopeClass& s, int extent) {
    if (s.p() > 1000) throw DomainError("lattice pictures are limited to p <= 1000");
    if (extent < 1 || extent > 200) throw DomainError("lattice extent must lie in [1, 200]");
    const std::int64_t e = extent;
    const LatticeBasis basis = lambda_mu(s);

    SvgDocument doc;
    std::ostringstream os = open_document({-e, -e, e, e}, doc);
    os << "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">"
          "<path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";

    // Black cones ENE, NNW, WSW, SSE clipped to the window.
    const std::int64_t cones[4][4] = {{e, 0, e, e}, {0, e, -e, e}, {-e, 0, -e, -e}, {0, -e, e, -e}};
    for (const auto& c : cones) {
        os << "<polygon class=\"cone\" points=\"0,0 " << c[0] << "," << c[1] << " " << c[2] << "," << c[3]
           << "\" fill=\"" << kConeFill << "\"/>\n";
    }

    const VoronoiData cell = voronoi_cell(basis);
    os << "<polygon class=\"voronoi\" points=\"";
    for (std::size_t i = 0; i < cell.cell_vertices.size(); ++i) {
        const auto& [x, y] = cell.cell_vertices[i];
        os << (i ? " " : "") << decimal(x.to_double()) << "," << decimal(y.to_double());
    }
    os << "\" fill=\"" << kCellFill << "\" fill-opacity=\"0.6\" stroke=\"#2e7d32\" stroke-width=\"0.05\"/>\n";

    for (std::int64_t y = -e; y <= e; ++y) {
        for (std::int64_t x = -e; x <= e; ++x) {
            if (!contains(s, {x, y})) continue;
            os << "<circle class=\"pt\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"0.15\" fill=\"#000000\"/>\n";
        }
    }

    const LatticeBasis reduced = gauss_reduce(basis);
    arrow(os, "reduced", reduced.u(), kReducedStroke);
    arrow(os, "reduced", reduced.v(), kReducedStroke);
    if (!s.is_infinity() && s.mu() >= 2 && s.mu() <= s.p() - 2) {
        if (auto sol = standard_black_basis(s)) {
            arrow(os, "standard", {sol->a, sol->c}, kStandardStroke);
            arrow(os, "standard", {-sol->d, sol->b}, kStandardStroke);
        }
    }
    os << "</g>\n</svg>\n";
    doc.body = os.str();
    return doc;
}

}  // namespace windmill
