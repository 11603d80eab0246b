#include "windmill/render.hpp"

#include "oracles.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

using namespace windmill;
namespace pt = boost::property_tree;

namespace {

pt::ptree parse(const SvgDocument& doc) {
    std::istringstream in(doc.str());
    pt::ptree tree;
    pt::read_xml(in, tree);
    return tree;
}

struct Rect {
    std::string cls;
    std::int64_t x, y, w, h;
};

std::vector<Rect> rects(const pt::ptree& tree) {
    std::vector<Rect> out;
    for (const auto& [name, node] : tree.get_child("svg.g")) {
        if (name != "rect") continue;
        const auto& a = node.get_child("<xmlattr>");
        out.push_back({a.get<std::string>("class"), a.get<std::int64_t>("x"), a.get<std::int64_t>("y"),
                       a.get<std::int64_t>("width"), a.get<std::int64_t>("height")});
    }
    return out;
}

std::vector<const pt::ptree*> children(const pt::ptree& tree, const std::string& tag, const std::string& cls) {
    std::vector<const pt::ptree*> out;
    for (const auto& [name, node] : tree.get_child("svg.g")) {
        if (name == tag && node.get<std::string>("<xmlattr>.class") == cls) out.push_back(&node);
    }
    return out;
}

}  // namespace

TEST_CASE("tiling svg is well-formed XML with the expected header") {
    const SvgDocument doc = tiling_svg({7, 5, 2, 1}, 2);
    const std::string text = doc.str();
    CHECK(text.rfind("<?xml version=\"1.0\"", 0) == 0);
    const pt::ptree tree = parse(doc);
    CHECK(tree.get<std::string>("svg.<xmlattr>.xmlns") == "http://www.w3.org/2000/svg");
    CHECK(tree.get<int>("svg.<xmlattr>.width") == doc.width);
    CHECK(tree.get<std::string>("svg.g.<xmlattr>.transform") == "scale(1,-1)");
    const auto rs = rects(tree);
    CHECK(rs.size() == 2 * 25);
}

TEST_CASE("tiling corners are invariant under the translation lattice") {
    const Solution sol{7, 5, 2, 1};
    const auto rs = rects(parse(tiling_svg(sol, 3)));
    std::set<IVec2> large;
    std::set<IVec2> small;
    for (const Rect& r : rs) {
        (r.cls == "large" ? large : small).insert({r.x, r.y});
        if (r.cls == "large") CHECK((r.w == 7 && r.h == 5));
        if (r.cls == "small") CHECK((r.w == 1 && r.h == 2));
    }
    const LatticeBasis translations({7, 2}, {-1, 5});
    for (IVec2 c : large) CHECK(oracle::in_lattice(translations, c));
    for (IVec2 c : small) CHECK(oracle::in_lattice(translations, c - IVec2{6, 5}));
}

TEST_CASE("tiles cover the plane exactly once") {
    for (const Solution& sol : {Solution{7, 5, 2, 1}, Solution{7, 5, 1, 2}, Solution{6, 2, 1, 1},
                                Solution{5, 5, 2, 2}, Solution{9, 3, 2, 1}, Solution{13, 1, 0, 0}}) {
        CAPTURE(sol);
        const auto rs = rects(parse(tiling_svg(sol, 8)));
        std::map<IVec2, int> cover;
        for (const Rect& r : rs) {
            for (std::int64_t x = r.x; x < r.x + r.w; ++x) {
                for (std::int64_t y = r.y; y < r.y + r.h; ++y) ++cover[{x, y}];
            }
        }
        for (std::int64_t x = -8; x <= 8; ++x) {
            for (std::int64_t y = -8; y <= 8; ++y) {
                CAPTURE(x);
                CAPTURE(y);
                REQUIRE(cover[{x, y}] == 1);
            }
        }
    }
}

TEST_CASE("tiling rejects bad input") {
    CHECK_THROWS_AS(tiling_svg({7, 5, 5, 1}, 2), DomainError);
    CHECK_THROWS_AS(tiling_svg({7, 5, 2, 1}, 0), DomainError);
    CHECK_THROWS_AS(tiling_svg({7, 5, 2, 1}, 51), DomainError);
}

TEST_CASE("lattice svg points are lattice members") {
    const auto s = SlopeClass::finite(13, 7);
    const pt::ptree tree = parse(lattice_svg(s, 8));
    const auto pts = children(tree, "circle", "pt");
    std::size_t expected = 0;
    for (std::int64_t x = -8; x <= 8; ++x) {
        for (std::int64_t y = -8; y <= 8; ++y) expected += oracle::in_lattice(lambda_mu(s), {x, y});
    }
    CHECK(pts.size() == expected);
    for (const pt::ptree* node : pts) {
        const IVec2 q{node->get<std::int64_t>("<xmlattr>.cx"), node->get<std::int64_t>("<xmlattr>.cy")};
        CHECK(oracle::in_lattice(lambda_mu(s), q));
    }
    CHECK(children(tree, "polygon", "cone").size() == 4);
    CHECK(children(tree, "polygon", "voronoi").size() == 1);
    CHECK(children(tree, "line", "reduced").size() == 2);

    const auto standard = children(tree, "line", "standard");
    REQUIRE(standard.size() == 2);
    std::set<IVec2> tips;
    for (const pt::ptree* node : standard) {
        tips.insert({node->get<std::int64_t>("<xmlattr>.x2"), node->get<std::int64_t>("<xmlattr>.y2")});
    }
    CHECK(tips == std::set<IVec2>{{6, 1}, {-1, 2}});
}

TEST_CASE("lattice svg omits standard arrows without a black basis") {
    for (const SlopeClass& s :
         {SlopeClass::finite(13, 0), SlopeClass::finite(13, 6), SlopeClass::finite(13, 1), SlopeClass::infinity(13)}) {
        const pt::ptree tree = parse(lattice_svg(s, 5));
        CHECK(children(tree, "line", "standard").empty());
        CHECK(children(tree, "line", "reduced").size() == 2);
    }
}

TEST_CASE("rendering is byte-stable") {
    CHECK(tiling_svg({7, 5, 2, 1}, 4).str() == tiling_svg({7, 5, 2, 1}, 4).str());
    CHECK(lattice_svg(SlopeClass::finite(37, 11), 10).str() == lattice_svg(SlopeClass::finite(37, 11), 10).str());
}

TEST_CASE("lattice svg rejects bad input") {
    CHECK_THROWS_AS(lattice_svg(SlopeClass::finite(13, 7), 0), DomainError);
    CHECK_THROWS_AS(lattice_svg(SlopeClass::finite(13, 7), 201), DomainError);
    CHECK_THROWS_AS(lattice_svg(SlopeClass::finite(1009, 7), 5), DomainError);
}
