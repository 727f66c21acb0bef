#pragma once

#include "glinv/gauss_code.hpp"

#include <array>
#include <utility>
#include <vector>

namespace glinv {

/// A link diagram on a closed oriented surface, as a combinatorial map.
/// Darts are indexed 4*c+s where s is the CCW slot at crossing c.
///
/// For diagrams produced by realize_diagram, the slots at a positive
/// crossing read (over-in, under-in, over-out, under-out) counterclockwise,
/// and (over-in, under-out, over-out, under-in) at a negative crossing.
/// Mirrored diagrams carry the same data with roles permuted, so all
/// downstream code reads the role arrays rather than assuming slots.
struct LinkDiagram {
    int n_crossings = 0;
    std::vector<int> sign;       // per crossing, +1 / -1
    std::vector<char> is_over;   // per dart
    std::vector<char> is_in;     // per dart: strand enters the crossing here
    std::vector<int> component;  // per dart
    std::vector<int> mate;       // per dart: other end of the same edge
    int n_components = 0;

    // 0-crossing unknot diagram (the standalone "()" code)
    bool trivial_unknot = false;

    int n_darts() const { return 4 * n_crossings; }
    int crossing_of(int dart) const { return dart / 4; }
    int slot_of(int dart) const { return dart % 4; }
    int dart(int crossing, int slot) const { return 4 * crossing + slot; }

    /// Darts of crossing c with the given role.
    int dart_with_role(int crossing, bool over, bool in) const;
};

enum class Color : char { Black = 'B', White = 'W' };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

/// Faces of the complement, realizing the cellular embedding. Corner k of
/// crossing c sits between slots k and k+1 (mod 4); corner id = 4*c+k.
struct FaceComplex {
    std::vector<std::vector<int>> faces;  // cyclic dart sequences
    std::vector<int> face_of_dart;
    std::vector<int> face_of_corner;
    std::vector<std::pair<int, int>> edge_faces;  // per edge, the two sides
    int genus = 0;
    bool trivial_unknot = false;  // two faces, no darts

    int n_faces() const { return static_cast<int>(faces.size()); }
};

struct Coloring {
    std::vector<Color> color;  // per face

    Coloring swapped() const {
        Coloring c;
        c.color.reserve(color.size());
        for (Color x : color) c.color.push_back(opposite(x));
        return c;
    }
};

enum class CrossingType : char { I = 'I', II = '2' };

/// Tait-graph combinatorics for one checkerboard coloring.
struct TaitStructure {
    Coloring coloring;
    std::vector<int> white_faces;  // ascending face ids, X_0 = smallest
    std::vector<int> black_faces;
    std::vector<int> eta;                                // per crossing, +1 / -1
    std::vector<CrossingType> ctype;                     // per crossing
    std::vector<std::pair<int, int>> white_index_pair;   // per crossing, indices into white_faces
};

GaussCode gauss_code_of(const LinkDiagram& d);

/// Carter-style realization: the rotation system at each crossing is fixed
/// by the sign convention above. Rejects disconnected (split) diagrams.
LinkDiagram realize_diagram(const GaussCode& code);

FaceComplex trace_faces(const LinkDiagram& d);

/// Returns both checkerboard colorings (black/white swaps of each other) or
/// an empty vector when the face adjacency graph is not properly 2-colorable.
/// When nonempty, the first coloring has face 0 black.
std::vector<Coloring> checkerboard_colorings(const FaceComplex& fc);

TaitStructure tait_structure(const LinkDiagram& d, const FaceComplex& fc, const Coloring& xi);

/// mu_xi(D) = sum of eta over type II crossings.
int correction_term(const TaitStructure& t);

/// e(F,L) = -2*mu_xi(D).
int euler_number(const TaitStructure& t);

/// Sum of signs of crossings between distinct components; 0 for knots.
int total_linking(const LinkDiagram& d);

/// Switch over/under everywhere, flip all signs.
LinkDiagram mirror_vertical(const LinkDiagram& d);

/// Reverse the rotation system everywhere, flip all signs.
LinkDiagram mirror_horizontal(const LinkDiagram& d);

/// True if over/under passes alternate along every component.
bool is_alternating(const LinkDiagram& d);

namespace detail {
// Calibrated convention constants. eta compares the color of the corners
// CCW-adjacent after the two over darts against black; the crossing type
// compares the color of the corner between the two incoming darts. The two
// global choices below are pinned by the classical trefoil and the bundled
// torus diagrams (see tests).
TaitStructure tait_structure_with_convention(const LinkDiagram& d, const FaceComplex& fc,
                                             const Coloring& xi, int eta_sign, int type_flip);
}  // namespace detail

}  // namespace glinv
