#include "glinv/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace glinv {

namespace {

int mod8(int x) { return ((x % 8) + 8) % 8; }

nlohmann::ordered_json json_int(const Int& x) {
    // Goeritz entries and determinants of desk-scale diagrams fit easily,
    // but keep huge values representable.
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

nlohmann::ordered_json json_rat(const Rat& x) {
    if (denominator(x) == 1) return json_int(numerator(x));
    // bounds are half-integers; x.5 is exact in binary
    return static_cast<double>(numerator(x)) / static_cast<double>(denominator(x));
}

nlohmann::ordered_json json_brown(const BrownValue& b) {
    if (b.is_infinity()) return "infinity";
    return b.value();
}

nlohmann::ordered_json json_matrix(const SymIntMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string verdict_str(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Consistent: return "consistent";
        case CheckVerdict::Inconsistent: return "inconsistent";
        default: return "not_applicable";
    }
}

}  // namespace

ColoringInvariants coloring_invariants(const LinkDiagram& d, const FaceComplex& fc,
                                       const Coloring& xi, int cap) {
    TaitStructure t = tait_structure(d, fc, xi);
    ColoringInvariants c;
    c.goeritz = goeritz_matrix(t);
    c.mu = correction_term(t);
    c.euler = euler_number(t);
    c.sigma = signature(c.goeritz) - c.mu;
    c.det_inv = det_invariant(c.goeritz);
    c.nullity = nullity(c.goeritz);
    c.brown = brown(enhance(c.goeritz), cap) - BrownValue::of(c.mu);
    return c;
}

FullReport full_report(const LinkDiagram& d, int cap) {
    FullReport r;
    r.input = to_string(gauss_code_of(d));
    r.n_components = d.n_components;
    r.total_linking = total_linking(d);
    r.alternating = is_alternating(d);
    FaceComplex fc = trace_faces(d);
    r.genus = fc.genus;
    std::vector<Coloring> cols = checkerboard_colorings(fc);
    r.colorable = !cols.empty();
    if (!r.colorable)
        throw Error(Error::Kind::NotColorable, "diagram is not checkerboard colorable");
    for (int k = 0; k < 2; ++k) {
        ColoringInvariants c = coloring_invariants(d, fc, cols[k], cap);
        c.label = (k == 0) ? "xi" : "xi*";
        // chromatic duality: the Goeritz-side computation for a coloring
        // describes the opposite coloring's checkerboard surface
        c.surface_label = (k == 0) ? "F*" : "F";
        r.colorings.push_back(std::move(c));
    }
    r.duality_note =
        "chromatic duality: invariants computed from coloring xi describe the surface F* "
        "of the opposite coloring, and vice versa";
    if (r.genus == 0 && r.colorings[0].brown == r.colorings[1].brown)
        r.duality_note += "; classical diagram: both colorings carry equal beta";
    return r;
}

SliceReport slice_obstructions(const FullReport& r) {
    if (r.n_components != 1)
        throw Error(Error::Kind::MultiComponent, "slice obstructions apply to knots only");
    SliceReport s;
    for (const ColoringInvariants& c : r.colorings) {
        SliceColoringReport p;
        int abs_sigma = std::abs(c.sigma);
        p.obstructed_by_signature = abs_sigma > c.nullity;
        p.obstructed_by_determinant = c.nullity == 0 && !is_perfect_square(c.det_inv);
        p.obstructed_by_brown =
            (c.det_inv % 2 != 0) && !c.brown.is_infinity() && c.brown.value() != 0;
        if (abs_sigma > c.nullity) p.genus_lower_bound = Rat(abs_sigma - c.nullity, 2);
        s.obstructed = s.obstructed || p.obstructed_by_signature ||
                       p.obstructed_by_determinant || p.obstructed_by_brown;
        s.genus_lower_bound = std::max(s.genus_lower_bound, p.genus_lower_bound);
        s.per_coloring.push_back(p);
    }
    return s;
}

AlternatingVerdict alternating_obstruction(const FullReport& r) {
    AlternatingVerdict v;
    v.sigma_gap = std::abs(r.colorings[0].sigma - r.colorings[1].sigma);
    v.not_slice = r.alternating && r.genus >= 1 && r.n_components == 1;
    return v;
}

CheckVerdict levine_cross_check(const ColoringInvariants& c) {
    if (c.det_inv % 2 == 0) return CheckVerdict::NotApplicable;
    if (c.brown.is_infinity()) return CheckVerdict::NotApplicable;
    int b = c.brown.value();
    if (b != 0 && b != 4) return CheckVerdict::NotApplicable;
    int d8 = static_cast<int>(c.det_inv % 8);
    int levine_arf = (d8 == 1 || d8 == 7) ? 0 : 1;
    return (b / 4 == levine_arf) ? CheckVerdict::Consistent : CheckVerdict::Inconsistent;
}

ArfAnnotation arf_relation_check(const FullReport& r) {
    // beta_F(L) = 4*Arf(q_F) + lambda(L) whenever beta - lambda is 0 or 4 mod
    // 8 (the even-enhancement situation); colorings must agree when both do.
    ArfAnnotation a;
    int lambda = r.total_linking;
    bool agree = true;
    for (const ColoringInvariants& c : r.colorings) {
        if (c.brown.is_infinity()) continue;
        int d8 = mod8(c.brown.value() - lambda);
        if (d8 != 0 && d8 != 4) continue;
        int arf = d8 / 4;
        if (a.available && arf != a.arf) agree = false;
        a.available = true;
        a.arf = arf;
    }
    a.relation_holds = a.available && agree;
    return a;
}

bool mirror_report_check(const LinkDiagram& d, int cap) {
    FullReport base = full_report(d, cap);
    auto key = [](const ColoringInvariants& c, bool negate) {
        BrownValue b = negate ? -c.brown : c.brown;
        int sigma = negate ? -c.sigma : c.sigma;
        return std::tuple<int, std::string, int, std::string>(sigma, c.det_inv.str(), c.nullity,
                                                              b.str());
    };
    auto multiset = [&](const FullReport& r, bool negate) {
        std::vector<std::tuple<int, std::string, int, std::string>> v;
        for (const auto& c : r.colorings) v.push_back(key(c, negate));
        std::sort(v.begin(), v.end());
        return v;
    };
    auto expected = multiset(base, true);
    for (const LinkDiagram& m : {mirror_vertical(d), mirror_horizontal(d)}) {
        FullReport mr = full_report(m, cap);
        if (multiset(mr, false) != expected) return false;
    }
    return true;
}

nlohmann::ordered_json report_json(const FullReport& r) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    j["genus"] = r.genus;
    j["colorable"] = r.colorable;
    auto cols = nlohmann::ordered_json::array();
    for (const ColoringInvariants& c : r.colorings) {
        nlohmann::ordered_json jc;
        jc["label"] = c.label;
        jc["surface"] = c.surface_label;
        jc["goeritz"] = json_matrix(c.goeritz);
        jc["mu"] = c.mu;
        jc["euler"] = c.euler;
        jc["sigma"] = c.sigma;
        jc["determinant"] = json_int(c.det_inv);
        jc["nullity"] = c.nullity;
        jc["brown"] = json_brown(c.brown);
        cols.push_back(jc);
    }
    j["colorings"] = cols;
    j["duality_note"] = r.duality_note;

    if (r.n_components == 1) {
        SliceReport s = slice_obstructions(r);
        AlternatingVerdict av = alternating_obstruction(r);
        nlohmann::ordered_json js;
        auto per = nlohmann::ordered_json::array();
        for (size_t k = 0; k < s.per_coloring.size(); ++k) {
            const SliceColoringReport& p = s.per_coloring[k];
            nlohmann::ordered_json jp;
            jp["label"] = r.colorings[k].label;
            jp["obstructed_by_signature"] = p.obstructed_by_signature;
            jp["obstructed_by_determinant"] = p.obstructed_by_determinant;
            jp["obstructed_by_brown"] = p.obstructed_by_brown;
            jp["genus_lower_bound"] = json_rat(p.genus_lower_bound);
            per.push_back(jp);
        }
        js["per_coloring"] = per;
        js["verdict"] = (s.obstructed || av.not_slice) ? "Obstructed" : "NotObstructed";
        if (av.not_slice) js["alternating_witness_sigma_gap"] = av.sigma_gap;
        js["genus_lower_bound"] = json_rat(s.genus_lower_bound);
        j["slice"] = js;
    } else {
        j["slice"] = nullptr;
    }

    nlohmann::ordered_json jchecks;
    CheckVerdict lv = CheckVerdict::NotApplicable;
    for (const ColoringInvariants& c : r.colorings) {
        CheckVerdict v = levine_cross_check(c);
        if (v == CheckVerdict::Inconsistent) lv = v;
        else if (v == CheckVerdict::Consistent && lv == CheckVerdict::NotApplicable) lv = v;
    }
    jchecks["levine"] = verdict_str(lv);
    ArfAnnotation a = arf_relation_check(r);
    if (a.available) {
        jchecks["arf"] = nlohmann::ordered_json{{"value", a.arf},
                                                {"relation", a.relation_holds ? "holds" : "violated"}};
    } else {
        jchecks["arf"] = "unverifiable";
    }
    LinkDiagram d = realize_diagram(parse_gauss_code(r.input));
    jchecks["mirror"] = mirror_report_check(d) ? "consistent" : "inconsistent";
    j["checks"] = jchecks;
    return j;
}

std::string report_tsv_header() {
    return "input\tgenus\tcomponents\talternating\t"
           "sigma_xi\tdet_xi\tnullity_xi\tbrown_xi\t"
           "sigma_xistar\tdet_xistar\tnullity_xistar\tbrown_xistar";
}

std::string report_tsv_row(const std::string& name, const FullReport& r) {
    std::ostringstream os;
    os << name << '\t' << r.genus << '\t' << r.n_components << '\t'
       << (r.alternating ? "yes" : "no");
    for (const ColoringInvariants& c : r.colorings)
        os << '\t' << c.sigma << '\t' << c.det_inv << '\t' << c.nullity << '\t' << c.brown.str();
    return os.str();
}

std::string report_pretty(const FullReport& r) {
    std::ostringstream os;
    os << "diagram: " << r.input << "\n";
    os << "genus " << r.genus << ", " << r.n_components
       << (r.n_components == 1 ? " component" : " components")
       << (r.alternating ? ", alternating" : "") << "\n";
    for (const ColoringInvariants& c : r.colorings) {
        os << "coloring " << c.label << " (surface " << c.surface_label << "):\n";
        os << "  goeritz " << c.goeritz.dim() << "x" << c.goeritz.dim() << " [";
        for (int i = 0; i < c.goeritz.dim(); ++i) {
            if (i) os << "; ";
            for (int j = 0; j < c.goeritz.dim(); ++j) {
                if (j) os << ",";
                os << c.goeritz.at(i, j);
            }
        }
        os << "]\n";
        os << "  mu " << c.mu << ", euler " << c.euler << "\n";
        os << "  sigma " << c.sigma << ", det " << c.det_inv << ", nullity " << c.nullity
           << ", brown " << c.brown.str() << "\n";
    }
    if (r.n_components == 1) {
        SliceReport s = slice_obstructions(r);
        AlternatingVerdict av = alternating_obstruction(r);
        os << "slice: " << ((s.obstructed || av.not_slice) ? "Obstructed" : "NotObstructed");
        if (s.genus_lower_bound != 0) {
            os << " (cobordism genus bound " << numerator(s.genus_lower_bound);
            if (denominator(s.genus_lower_bound) != 1) os << "/" << denominator(s.genus_lower_bound);
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace glinv
