#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glinv/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using namespace glinv;

namespace {

LinkDiagram load(const std::string& name) {
    std::ifstream in(std::string(GLINV_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return realize_diagram(parse_gauss_code(ss.str()));
}

std::multiset<std::string> invariant_multiset(const FullReport& r) {
    std::multiset<std::string> s;
    for (const ColoringInvariants& c : r.colorings)
        s.insert(std::to_string(c.sigma) + "/" + c.det_inv.str() + "/" +
                 std::to_string(c.nullity) + "/" + c.brown.str());
    return s;
}

}  // namespace

TEST_CASE("full report on the 3-crossing torus diagram") {
    FullReport r = full_report(load("fig-3-5.gauss"));
    CHECK(r.genus == 1);
    REQUIRE(r.colorings.size() == 2);
    const auto& xi = r.colorings[0];
    const auto& xis = r.colorings[1];
    CHECK(xi.label == "xi");
    CHECK(xi.surface_label == "F*");
    CHECK(xi.goeritz.dim() == 0);
    CHECK(xi.mu == -2);
    CHECK(xi.euler == 4);
    CHECK(xi.brown == BrownValue::of(2));
    CHECK(xis.label == "xi*");
    CHECK(xis.surface_label == "F");
    CHECK(xis.goeritz == SymIntMatrix::from_rows({{2}}));
    CHECK(xis.mu == -1);
    CHECK(xis.euler == 2);
    CHECK(xis.brown.is_infinity());
}

TEST_CASE("full report on the 6-crossing torus diagram") {
    FullReport r = full_report(load("fig-6-87310.gauss"));
    CHECK(r.genus == 1);
    const auto& xi = r.colorings[0];
    const auto& xis = r.colorings[1];
    CHECK(xi.goeritz == SymIntMatrix::from_rows({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
    CHECK(xi.mu == -3);
    CHECK(xi.sigma == 4);
    CHECK(xi.det_inv == 4);
    CHECK(xi.nullity == 0);
    CHECK(xi.brown == BrownValue::of(4));
    CHECK(xis.goeritz == SymIntMatrix::from_rows({{-3}}));
    CHECK(xis.mu == -3);
    CHECK(xis.sigma == 2);
    CHECK(xis.brown == BrownValue::of(4));
}

TEST_CASE("classical trefoil and figure-eight sanity") {
    FullReport t = full_report(load("trefoil.gauss"));
    CHECK(t.genus == 0);
    for (const auto& c : t.colorings) {
        CHECK(std::abs(c.sigma) == 2);
        CHECK(c.det_inv == 3);
        CHECK(c.nullity == 0);
        CHECK(c.brown == BrownValue::of(4));
        CHECK(levine_cross_check(c) == CheckVerdict::Consistent);
    }
    // both colorings of a classical diagram carry the same signature
    CHECK(t.colorings[0].sigma == t.colorings[1].sigma);

    FullReport f8 = full_report(load("figure8.gauss"));
    for (const auto& c : f8.colorings) {
        CHECK(c.sigma == 0);
        CHECK(c.det_inv == 5);
    }
    SliceReport s8 = slice_obstructions(f8);
    for (const auto& p : s8.per_coloring) CHECK(p.obstructed_by_determinant);
    CHECK(s8.obstructed);
}

TEST_CASE("unknot report is trivial") {
    FullReport r = full_report(load("unknot.gauss"));
    for (const auto& c : r.colorings) {
        CHECK(c.sigma == 0);
        CHECK(c.det_inv == 1);
        CHECK(c.nullity == 0);
        CHECK(c.brown == BrownValue::of(0));
    }
    SliceReport s = slice_obstructions(r);
    CHECK(!s.obstructed);
    CHECK(s.genus_lower_bound == 0);
}

TEST_CASE("euler equals -2 mu in every report") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss",
                          "figure8.gauss", "hopf.gauss", "alt-genus1.gauss"}) {
        FullReport r = full_report(load(f));
        for (const auto& c : r.colorings) CHECK(c.euler == -2 * c.mu);
    }
}

TEST_CASE("slice obstructions") {
    FullReport r6 = full_report(load("fig-6-87310.gauss"));
    SliceReport s6 = slice_obstructions(r6);
    CHECK(s6.obstructed);
    CHECK(s6.per_coloring[0].obstructed_by_signature);
    CHECK(!s6.per_coloring[0].obstructed_by_determinant);  // det 4 is square
    CHECK(s6.genus_lower_bound == 2);

    CHECK_THROWS_AS(slice_obstructions(full_report(load("hopf.gauss"))), Error);
    try {
        slice_obstructions(full_report(load("hopf.gauss")));
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::MultiComponent);
    }
}

TEST_CASE("alternating obstruction") {
    FullReport t = full_report(load("trefoil.gauss"));
    CHECK(!alternating_obstruction(t).not_slice);  // genus 0

    FullReport a = full_report(load("alt-genus1.gauss"));
    AlternatingVerdict v = alternating_obstruction(a);
    CHECK(v.not_slice);
    CHECK(v.sigma_gap == 2 * a.genus);

    FullReport f35 = full_report(load("fig-3-5.gauss"));
    CHECK(!alternating_obstruction(f35).not_slice);  // non-alternating
}

TEST_CASE("levine cross-check") {
    FullReport r6 = full_report(load("fig-6-87310.gauss"));
    CHECK(levine_cross_check(r6.colorings[0]) == CheckVerdict::NotApplicable);  // det 4 even
    CHECK(levine_cross_check(r6.colorings[1]) == CheckVerdict::Consistent);     // det 3, beta 4
}

TEST_CASE("arf annotation") {
    ArfAnnotation a6 = arf_relation_check(full_report(load("fig-6-87310.gauss")));
    CHECK(a6.available);
    CHECK(a6.arf == 1);
    CHECK(a6.relation_holds);

    ArfAnnotation at = arf_relation_check(full_report(load("trefoil.gauss")));
    CHECK(at.available);
    CHECK(at.arf == 1);

    // both colorings improper: nothing to annotate
    ArfAnnotation ah = arf_relation_check(full_report(load("hopf.gauss")));
    CHECK(!ah.available);
}

TEST_CASE("mirror reports negate") {
    for (std::string f : {"trefoil.gauss", "fig-3-5.gauss", "fig-6-87310.gauss",
                          "figure8.gauss", "unknot.gauss", "alt-genus1.gauss"}) {
        CAPTURE(f);
        CHECK(mirror_report_check(load(f)));
    }
}

TEST_CASE("goeritz deletion choice does not change the invariants") {
    for (std::string f : {"trefoil.gauss", "fig-6-87310.gauss", "figure8.gauss",
                          "alt-genus1.gauss"}) {
        LinkDiagram d = load(f);
        FaceComplex fc = trace_faces(d);
        for (const Coloring& xi : checkerboard_colorings(fc)) {
            TaitStructure t = tait_structure(d, fc, xi);
            int n_white = static_cast<int>(t.white_faces.size());
            SymIntMatrix g0 = goeritz_matrix(t, 0);
            for (int k = 1; k < n_white; ++k) {
                SymIntMatrix gk = goeritz_matrix(t, k);
                CHECK(signature(gk) == signature(g0));
                CHECK(det_invariant(gk) == det_invariant(g0));
                CHECK(nullity(gk) == nullity(g0));
                CHECK(brown(enhance(gk)) == brown(enhance(g0)));
            }
        }
    }
}

TEST_CASE("reidemeister-move pairs have identical invariant multisets") {
    auto ms = [&](const std::string& f) { return invariant_multiset(full_report(load(f))); };
    auto trefoil = ms("trefoil.gauss");
    CHECK(ms("trefoil_r1.gauss") == trefoil);
    CHECK(ms("trefoil_r2.gauss") == trefoil);
    CHECK(ms("trefoil_r3a.gauss") == trefoil);
    CHECK(ms("trefoil_r3b.gauss") == trefoil);
    auto f35 = ms("fig-3-5.gauss");
    CHECK(ms("fig-3-5_r1.gauss") == f35);
    CHECK(ms("fig-3-5_r2.gauss") == f35);
}

TEST_CASE("non-colorable diagrams raise the dedicated error") {
    try {
        full_report(load("noncolorable.gauss"));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::NotColorable);
    }
}

TEST_CASE("json report shape and determinism") {
    FullReport r = full_report(load("fig-6-87310.gauss"));
    nlohmann::ordered_json j1 = report_json(r);
    nlohmann::ordered_json j2 = report_json(full_report(load("fig-6-87310.gauss")));
    CHECK(j1.dump() == j2.dump());
    std::vector<std::string> keys;
    for (auto it = j1.begin(); it != j1.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"input", "genus", "colorable", "colorings",
                                           "duality_note", "slice", "checks"});
    CHECK(j1["colorings"].size() == 2);
    for (auto& c : j1["colorings"]) {
        CHECK(c.contains("label"));
        CHECK(c.contains("goeritz"));
        CHECK(c.contains("mu"));
        CHECK(c.contains("euler"));
        CHECK(c.contains("sigma"));
        CHECK(c.contains("determinant"));
        CHECK(c.contains("nullity"));
        CHECK(c.contains("brown"));
    }
    CHECK(j1["slice"]["verdict"] == "Obstructed");
    CHECK(j1["checks"]["mirror"] == "consistent");
    // brown serialization: integer for finite, string for infinity
    nlohmann::ordered_json j35 = report_json(full_report(load("fig-3-5.gauss")));
    CHECK(j35["colorings"][0]["brown"] == 2);
    CHECK(j35["colorings"][1]["brown"] == "infinity");
}

TEST_CASE("mirror involution at the report level") {
    LinkDiagram d = load("fig-3-5.gauss");
    FullReport r = full_report(d);
    FullReport rr = full_report(mirror_vertical(mirror_vertical(d)));
    CHECK(report_json(r).dump() == report_json(rr).dump());
}
