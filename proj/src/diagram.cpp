#include "glinv/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace glinv {

int LinkDiagram::dart_with_role(int crossing, bool over, bool in) const {
    for (int s = 0; s < 4; ++s) {
        int d = dart(crossing, s);
        if (static_cast<bool>(is_over[d]) == over && static_cast<bool>(is_in[d]) == in) return d;
    }
    throw Error(Error::Kind::Internal, "dart_with_role: role not found");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LinkDiagram realize_diagram(const GaussCode& code) {
    // the standalone 0-crossing unknot
    bool any_empty = false, any_symbols = false;
    for (const auto& comp : code.components) (comp.empty() ? any_empty : any_symbols) = true;
    if (any_empty && (any_symbols || code.components.size() > 1))
        throw Error(Error::Kind::Disconnected,
                    "split diagram: a 0-crossing unknot component is disconnected from the rest");
    if (any_empty) {
        LinkDiagram d;
        d.trivial_unknot = true;
        d.n_components = 1;
        return d;
    }

    // dense crossing indices in order of first appearance
    std::map<int, int> index;
    std::vector<int> sign;
    for (const auto& comp : code.components)
        for (const auto& s : comp)
            if (index.emplace(s.crossing_id, static_cast<int>(index.size())).second)
                sign.push_back(s.sign);

    const int n = static_cast<int>(index.size());
    LinkDiagram d;
    d.n_crossings = n;
    d.sign = std::move(sign);
    d.is_over.assign(4 * n, 0);
    d.is_in.assign(4 * n, 0);
    d.component.assign(4 * n, -1);
    d.mate.assign(4 * n, -1);
    d.n_components = static_cast<int>(code.components.size());

    // slot roles per the rotation convention
    auto in_dart = [&](int c, Pass p) {
        if (p == Pass::Over) return d.dart(c, 0);
        return d.dart(c, d.sign[c] > 0 ? 1 : 3);
    };
    auto out_dart = [&](int c, Pass p) {
        if (p == Pass::Over) return d.dart(c, 2);
        return d.dart(c, d.sign[c] > 0 ? 3 : 1);
    };

    for (int ci = 0; ci < d.n_components; ++ci) {
        const auto& comp = code.components[ci];
        const size_t m = comp.size();
        for (size_t k = 0; k < m; ++k) {
            const auto& cur = comp[k];
            const auto& nxt = comp[(k + 1) % m];
            int c_cur = index.at(cur.crossing_id);
            int c_nxt = index.at(nxt.crossing_id);
            int tail = out_dart(c_cur, cur.pass);
            int head = in_dart(c_nxt, nxt.pass);
            if (d.mate[tail] != -1 || d.mate[head] != -1)
                throw Error(Error::Kind::Internal, "realize_diagram: dart reused");
            d.mate[tail] = head;
            d.mate[head] = tail;
            d.is_in[head] = 1;
            d.is_over[in_dart(c_cur, cur.pass)] = (cur.pass == Pass::Over);
            d.is_over[out_dart(c_cur, cur.pass)] = (cur.pass == Pass::Over);
            d.component[tail] = ci;
            d.component[head] = ci;
        }
    }
    for (int dd = 0; dd < d.n_darts(); ++dd)
        if (d.mate[dd] < 0) throw Error(Error::Kind::Internal, "realize_diagram: unpaired dart");

    // connectivity of the 4-valent graph
    UnionFind uf(n);
    for (int dd = 0; dd < d.n_darts(); ++dd) uf.unite(d.crossing_of(dd), d.crossing_of(d.mate[dd]));
    for (int c = 1; c < n; ++c)
        if (uf.find(c) != uf.find(0))
            throw Error(Error::Kind::Disconnected, "split diagram: underlying 4-valent graph is disconnected");
    return d;
}

GaussCode gauss_code_of(const LinkDiagram& d) {
    GaussCode code;
    if (d.trivial_unknot) {
        code.components.emplace_back();
        return code;
    }
    std::vector<char> used(d.n_darts(), 0);
    for (int start = 0; start < d.n_darts(); ++start) {
        if (used[start] || !d.is_in[start]) continue;
        std::vector<GaussSymbol> comp;
        int in = start;
        do {
            used[in] = 1;
            int c = d.crossing_of(in);
            bool over = d.is_over[in];
            comp.push_back({over ? Pass::Over : Pass::Under, c + 1, d.sign[c]});
            int out = d.dart_with_role(c, over, /*in=*/false);
            in = d.mate[out];
        } while (in != start);
        code.components.push_back(std::move(comp));
    }
    return code;
}

FaceComplex trace_faces(const LinkDiagram& d) {
    FaceComplex fc;
    if (d.trivial_unknot) {
        fc.trivial_unknot = true;
        fc.faces = {{}, {}};
        fc.genus = 0;
        return fc;
    }
    const int nd = d.n_darts();
    fc.face_of_dart.assign(nd, -1);
    fc.face_of_corner.assign(nd, -1);
    for (int start = 0; start < nd; ++start) {
        if (fc.face_of_dart[start] != -1) continue;
        int fid = fc.n_faces();
        fc.faces.emplace_back();
        int dd = start;
        do {
            fc.face_of_dart[dd] = fid;
            fc.faces.back().push_back(dd);
            int a = d.mate[dd];
            // corner between arrival dart a and the CCW-next slot
            fc.face_of_corner[a] = fid;
            dd = d.dart(d.crossing_of(a), (d.slot_of(a) + 1) % 4);
        } while (dd != start);
    }
    for (int dd = 0; dd < nd; ++dd)
        if (dd < d.mate[dd])
            fc.edge_faces.emplace_back(fc.face_of_dart[dd], fc.face_of_dart[d.mate[dd]]);
    const int V = d.n_crossings, F = fc.n_faces();
    int twice_genus = 2 + V - F;  // V - E + F = 2 - 2g with E = 2V
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error(Error::Kind::Internal, "trace_faces: inconsistent Euler characteristic");
    fc.genus = twice_genus / 2;
    return fc;
}

std::vector<Coloring> checkerboard_colorings(const FaceComplex& fc) {
    if (fc.trivial_unknot) {
        Coloring c0;
        c0.color = {Color::Black, Color::White};
        return {c0, c0.swapped()};
    }
    const int nf = fc.n_faces();
    std::vector<std::vector<int>> adj(nf);
    for (auto [f1, f2] : fc.edge_faces) {
        if (f1 == f2) return {};  // a face adjacent to itself
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }
    Coloring c0;
    c0.color.assign(nf, Color::Black);
    std::vector<int> assigned(nf, 0);
    // the diagram is connected, so the face graph is too; 2-color by BFS
    std::vector<int> queue = {0};
    assigned[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
        int f = queue[q];
        for (int g : adj[f]) {
            if (!assigned[g]) {
                assigned[g] = 1;
                c0.color[g] = opposite(c0.color[f]);
                queue.push_back(g);
            } else if (c0.color[g] == c0.color[f]) {
                return {};  // odd cycle
            }
        }
    }
    for (int f = 0; f < nf; ++f)
        if (!assigned[f]) throw Error(Error::Kind::Internal, "checkerboard_colorings: face graph disconnected");
    return {c0, c0.swapped()};
}

TaitStructure detail::tait_structure_with_convention(const LinkDiagram& d, const FaceComplex& fc,
                                                     const Coloring& xi, int eta_sign,
                                                     int type_flip) {
    TaitStructure t;
    t.coloring = xi;
    const int nf = fc.n_faces();
    for (int f = 0; f < nf; ++f)
        (xi.color[f] == Color::White ? t.white_faces : t.black_faces).push_back(f);

    if (d.trivial_unknot) return t;

    std::vector<int> white_index(nf, -1);
    for (size_t k = 0; k < t.white_faces.size(); ++k) white_index[t.white_faces[k]] = static_cast<int>(k);

    t.eta.resize(d.n_crossings);
    t.ctype.resize(d.n_crossings);
    t.white_index_pair.resize(d.n_crossings);

    for (int c = 0; c < d.n_crossings; ++c) {
        auto corner_color = [&](int k) { return xi.color[fc.face_of_corner[d.dart(c, k)]]; };
        // corners must alternate around the crossing
        for (int k = 0; k < 4; ++k)
            if (corner_color(k) == corner_color((k + 1) % 4))
                throw Error(Error::Kind::Internal, "tait_structure: corners do not alternate");

        int over_slot = d.slot_of(d.dart_with_role(c, /*over=*/true, /*in=*/true));
        int eta0 = (corner_color(over_slot) == Color::Black) ? 1 : -1;
        t.eta[c] = eta_sign * eta0;

        // the two incoming darts are CCW-adjacent; the corner between them
        // classifies the crossing type
        int in_slot = -1;
        for (int k = 0; k < 4; ++k)
            if (d.is_in[d.dart(c, k)] && d.is_in[d.dart(c, (k + 1) % 4)]) in_slot = k;
        if (in_slot < 0) throw Error(Error::Kind::Internal, "tait_structure: incoming darts not adjacent");
        bool type2 = (corner_color(in_slot) == Color::Black);
        if (type_flip) type2 = !type2;
        t.ctype[c] = type2 ? CrossingType::II : CrossingType::I;

        std::vector<int> whites;
        for (int k = 0; k < 4; ++k)
            if (corner_color(k) == Color::White) whites.push_back(white_index[fc.face_of_corner[d.dart(c, k)]]);
        if (whites.size() != 2) throw Error(Error::Kind::Internal, "tait_structure: white corner count");
        t.white_index_pair[c] = {whites[0], whites[1]};
    }
    return t;
}

// Convention constants, calibrated against the classical trefoil and the
// bundled torus diagrams (see tests/acceptance).
namespace {
constexpr int kEtaSign = 1;
constexpr int kTypeFlip = 0;
}  // namespace

TaitStructure tait_structure(const LinkDiagram& d, const FaceComplex& fc, const Coloring& xi) {
    return detail::tait_structure_with_convention(d, fc, xi, kEtaSign, kTypeFlip);
}

int correction_term(const TaitStructure& t) {
    int mu = 0;
    for (size_t c = 0; c < t.eta.size(); ++c)
        if (t.ctype[c] == CrossingType::II) mu += t.eta[c];
    return mu;
}

int euler_number(const TaitStructure& t) { return -2 * correction_term(t); }

int total_linking(const LinkDiagram& d) {
    if (d.trivial_unknot) return 0;
    int lambda = 0;
    for (int c = 0; c < d.n_crossings; ++c) {
        int over_comp = d.component[d.dart_with_role(c, true, true)];
        int under_comp = d.component[d.dart_with_role(c, false, true)];
        if (over_comp != under_comp) lambda += d.sign[c];
    }
    return lambda;
}

LinkDiagram mirror_vertical(const LinkDiagram& d) {
    LinkDiagram m = d;
    for (int c = 0; c < m.n_crossings; ++c) m.sign[c] = -m.sign[c];
    for (auto& o : m.is_over) o = !o;
    return m;
}

LinkDiagram mirror_horizontal(const LinkDiagram& d) {
    LinkDiagram m = d;
    if (d.trivial_unknot) return m;
    for (int c = 0; c < m.n_crossings; ++c) m.sign[c] = -m.sign[c];
    // reverse the cyclic slot order: slot s -> (4 - s) % 4
    auto perm = [&](int dart) {
        int c = d.crossing_of(dart), s = d.slot_of(dart);
        return d.dart(c, (4 - s) % 4);
    };
    for (int dd = 0; dd < d.n_darts(); ++dd) {
        int p = perm(dd);
        m.is_over[p] = d.is_over[dd];
        m.is_in[p] = d.is_in[dd];
        m.component[p] = d.component[dd];
        m.mate[p] = perm(d.mate[dd]);
    }
    return m;
}

bool is_alternating(const LinkDiagram& d) {
    if (d.trivial_unknot) return false;
    GaussCode code = gauss_code_of(d);
    for (const auto& comp : code.components) {
        if (comp.size() % 2 != 0) return false;
        for (size_t k = 0; k < comp.size(); ++k)
            if (comp[k].pass == comp[(k + 1) % comp.size()].pass) return false;
    }
    return true;
}

}  // namespace glinv
