#pragma once

#include "glinv/bilinear.hpp"
#include "glinv/diagram.hpp"
#include "glinv/enhancement.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace glinv {

struct ColoringInvariants {
    std::string label;          // "xi" or "xi*"
    std::string surface_label;  // chromatic duality: xi-side data describes F*
    SymIntMatrix goeritz;
    int mu = 0;
    int euler = 0;
    int sigma = 0;
    Int det_inv = 0;  // |det|
    int nullity = 0;
    BrownValue brown;
};

struct FullReport {
    std::string input;  // serialized Gauss code
    int genus = 0;
    bool colorable = false;
    std::vector<ColoringInvariants> colorings;  // size 2 when colorable
    std::string duality_note;
    int total_linking = 0;
    int n_components = 1;
    bool alternating = false;
};

struct SliceColoringReport {
    bool obstructed_by_signature = false;
    bool obstructed_by_determinant = false;
    bool obstructed_by_brown = false;
    Rat genus_lower_bound = 0;
};

struct SliceReport {
    std::vector<SliceColoringReport> per_coloring;
    bool obstructed = false;
    Rat genus_lower_bound = 0;
};

enum class CheckVerdict { Consistent, Inconsistent, NotApplicable };

struct ArfAnnotation {
    bool available = false;
    int arf = 0;                 // valid when available
    bool relation_holds = false; // beta = 4*arf + lambda and both colorings agree
};

struct AlternatingVerdict {
    bool not_slice = false;  // alternating on genus >= 1
    int sigma_gap = 0;       // |sigma_xi - sigma_xi*| (= 2*genus when alternating)
};

ColoringInvariants coloring_invariants(const LinkDiagram& d, const FaceComplex& fc,
                                       const Coloring& xi, int cap = kDefaultEnumerationCap);

/// Invariants for both colorings, duality labels attached. Throws
/// Error::Kind::NotColorable when the diagram has no checkerboard coloring.
FullReport full_report(const LinkDiagram& d, int cap = kDefaultEnumerationCap);

/// Knot-only; throws Error::Kind::MultiComponent on links.
SliceReport slice_obstructions(const FullReport& r);

AlternatingVerdict alternating_obstruction(const FullReport& r);

CheckVerdict levine_cross_check(const ColoringInvariants& c);

ArfAnnotation arf_relation_check(const FullReport& r);

/// Recomputes the report on both mirrors and verifies sigma negation, beta
/// negation mod 8 (infinity fixed) and det/nullity preservation, as multisets.
bool mirror_report_check(const LinkDiagram& d, int cap = kDefaultEnumerationCap);

nlohmann::ordered_json report_json(const FullReport& r);
std::string report_tsv_row(const std::string& name, const FullReport& r);
std::string report_tsv_header();
std::string report_pretty(const FullReport& r);

}  // namespace glinv
