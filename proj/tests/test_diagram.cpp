#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glinv/bilinear.hpp"
#include "glinv/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace glinv;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GLINV_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinkDiagram load(const std::string& name) {
    return realize_diagram(parse_gauss_code(slurp(name)));
}

GaussCode reversed_all(const GaussCode& c) {
    GaussCode r = c;
    for (auto& comp : r.components) std::reverse(comp.begin(), comp.end());
    return r;
}

}  // namespace

TEST_CASE("trefoil realization counts") {
    LinkDiagram d = load("trefoil.gauss");
    CHECK(d.n_crossings == 3);
    CHECK(d.n_darts() == 12);
    CHECK(d.n_components == 1);
    // mate is a fixed-point-free involution: 6 edges
    int edges = 0;
    for (int x = 0; x < d.n_darts(); ++x) {
        CHECK(d.mate[d.mate[x]] == x);
        CHECK(d.mate[x] != x);
        if (x < d.mate[x]) ++edges;
    }
    CHECK(edges == 6);
}

TEST_CASE("gauss code round trip through realization") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss", "hopf.gauss",
                          "figure8.gauss"}) {
        std::string text = slurp(f);
        GaussCode c = parse_gauss_code(text);
        CHECK(to_string(gauss_code_of(realize_diagram(c))) == to_string(c));
    }
}

TEST_CASE("split diagrams are rejected") {
    CHECK_THROWS_AS(realize_diagram(parse_gauss_code("O1+U1+;O2+U2+")), Error);
    CHECK_THROWS_AS(realize_diagram(parse_gauss_code("();O1+U1+")), Error);
    try {
        realize_diagram(parse_gauss_code("O1+U1+;O2+U2+"));
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::Disconnected);
    }
}

TEST_CASE("face trace satisfies the Euler relation") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss", "figure8.gauss",
                          "hopf.gauss", "noncolorable.gauss", "alt-genus1.gauss"}) {
        LinkDiagram d = load(f);
        FaceComplex fc = trace_faces(d);
        int V = d.n_crossings, E = 2 * d.n_crossings, F = fc.n_faces();
        CHECK(V - E + F == 2 - 2 * fc.genus);
        // every dart on exactly one face
        std::vector<int> hit(d.n_darts(), 0);
        for (const auto& face : fc.faces)
            for (int x : face) ++hit[x];
        for (int h : hit) CHECK(h == 1);
    }
}

TEST_CASE("genus of bundled diagrams") {
    CHECK(trace_faces(load("trefoil.gauss")).genus == 0);
    CHECK(trace_faces(load("trefoil.gauss")).n_faces() == 5);
    CHECK(trace_faces(load("figure8.gauss")).genus == 0);
    CHECK(trace_faces(load("fig-3-5.gauss")).genus == 1);
    CHECK(trace_faces(load("fig-6-87310.gauss")).genus == 1);
    CHECK(trace_faces(load("alt-genus1.gauss")).genus == 1);
    // one-crossing curl realizes at genus 0
    CHECK(trace_faces(realize_diagram(parse_gauss_code("O1+U1+"))).genus == 0);
}

TEST_CASE("checkerboard colorings come in swapped pairs or not at all") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss",
                          "figure8.gauss", "hopf.gauss"}) {
        FaceComplex fc = trace_faces(load(f));
        auto cols = checkerboard_colorings(fc);
        REQUIRE(cols.size() == 2);
        CHECK(cols[0].color[0] == Color::Black);
        for (size_t k = 0; k < cols[0].color.size(); ++k)
            CHECK(cols[0].color[k] == opposite(cols[1].color[k]));
        for (auto [a, b] : fc.edge_faces)
            CHECK(cols[0].color[a] == opposite(cols[0].color[b]));
    }
    CHECK(checkerboard_colorings(trace_faces(load("noncolorable.gauss"))).empty());
}

TEST_CASE("tait corners alternate black and white") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss"}) {
        LinkDiagram d = load(f);
        FaceComplex fc = trace_faces(d);
        for (const Coloring& xi : checkerboard_colorings(fc)) {
            TaitStructure t = tait_structure(d, fc, xi);
            CHECK(static_cast<int>(t.white_faces.size() + t.black_faces.size()) == fc.n_faces());
            for (int c = 0; c < d.n_crossings; ++c) {
                for (int k = 0; k < 4; ++k) {
                    Color a = xi.color[fc.face_of_corner[4 * c + k]];
                    Color b = xi.color[fc.face_of_corner[4 * c + (k + 1) % 4]];
                    CHECK(a == opposite(b));
                }
                CHECK((t.eta[c] == 1 || t.eta[c] == -1));
            }
        }
    }
}

TEST_CASE("correction terms of the bundled diagrams") {
    {
        LinkDiagram d = load("fig-3-5.gauss");
        FaceComplex fc = trace_faces(d);
        auto cols = checkerboard_colorings(fc);
        TaitStructure t0 = tait_structure(d, fc, cols[0]);
        TaitStructure t1 = tait_structure(d, fc, cols[1]);
        CHECK(t0.white_faces.size() == 1);
        CHECK(correction_term(t0) == -2);
        CHECK(euler_number(t0) == 4);
        CHECK(t1.white_faces.size() == 2);
        CHECK(correction_term(t1) == -1);
        CHECK(euler_number(t1) == 2);
    }
    {
        LinkDiagram d = load("fig-6-87310.gauss");
        FaceComplex fc = trace_faces(d);
        auto cols = checkerboard_colorings(fc);
        TaitStructure t0 = tait_structure(d, fc, cols[0]);
        TaitStructure t1 = tait_structure(d, fc, cols[1]);
        CHECK(t0.white_faces.size() == 4);
        CHECK(correction_term(t0) == -3);
        CHECK(euler_number(t0) == 6);
        CHECK(t1.white_faces.size() == 2);
        CHECK(correction_term(t1) == -3);
        CHECK(euler_number(t1) == 6);
    }
}

TEST_CASE("correction term invariant under reversing all orientations") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss", "hopf.gauss",
                          "figure8.gauss"}) {
        GaussCode c = parse_gauss_code(slurp(f));
        LinkDiagram d = realize_diagram(c);
        LinkDiagram dr = realize_diagram(reversed_all(c));
        FaceComplex fc = trace_faces(d), fcr = trace_faces(dr);
        auto mus = [](const LinkDiagram& dd, const FaceComplex& ff) {
            std::vector<int> v;
            for (const Coloring& xi : checkerboard_colorings(ff))
                v.push_back(correction_term(tait_structure(dd, ff, xi)));
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(mus(d, fc) == mus(dr, fcr));
    }
}

TEST_CASE("total linking number") {
    CHECK(total_linking(load("trefoil.gauss")) == 0);
    CHECK(total_linking(load("fig-6-87310.gauss")) == 0);
    CHECK(total_linking(load("hopf.gauss")) == 2);
    // negative Hopf
    CHECK(total_linking(realize_diagram(parse_gauss_code("O1-U2-;U1-O2-"))) == -2);
    // reversal of all orientations preserves it
    GaussCode h = parse_gauss_code(slurp("hopf.gauss"));
    CHECK(total_linking(realize_diagram(reversed_all(h))) == 2);
}

TEST_CASE("mirrors are involutions preserving genus") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss", "hopf.gauss"}) {
        LinkDiagram d = load(f);
        int g = trace_faces(d).genus;
        LinkDiagram mv = mirror_vertical(d);
        LinkDiagram mh = mirror_horizontal(d);
        CHECK(trace_faces(mv).genus == g);
        CHECK(trace_faces(mh).genus == g);
        LinkDiagram mvv = mirror_vertical(mv);
        LinkDiagram mhh = mirror_horizontal(mh);
        CHECK(to_string(gauss_code_of(mvv)) == to_string(gauss_code_of(d)));
        CHECK(to_string(gauss_code_of(mhh)) == to_string(gauss_code_of(d)));
        for (int c = 0; c < d.n_crossings; ++c) {
            CHECK(mv.sign[c] == -d.sign[c]);
            CHECK(mh.sign[c] == -d.sign[c]);
        }
    }
}

TEST_CASE("alternation detection") {
    CHECK(is_alternating(load("trefoil.gauss")));
    CHECK(is_alternating(load("figure8.gauss")));
    CHECK(is_alternating(load("alt-genus1.gauss")));
    CHECK(!is_alternating(load("fig-3-5.gauss")));
    CHECK(!is_alternating(load("fig-6-87310.gauss")));
}

TEST_CASE("trivial unknot diagram") {
    LinkDiagram d = load("unknot.gauss");
    CHECK(d.trivial_unknot);
    CHECK(d.n_crossings == 0);
    FaceComplex fc = trace_faces(d);
    CHECK(fc.genus == 0);
    CHECK(checkerboard_colorings(fc).size() == 2);
}
