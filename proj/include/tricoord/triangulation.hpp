#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tricoord {

/// One side of a face: an edge index traversed with (+) or against (-) its
/// orientation while walking the face boundary counterclockwise.
struct Side {
    int edge = 0;
    bool forward = true;
};

struct SurfaceInvariants {
    int genus = 0;
    int marked_points = 0;
    int components = 0;
    int zeta = 0;
};

/// An ordered combinatorial ideal triangulation of a marked surface.
///
/// Faces are stored as unsigned edge-index triples in canonical form: each
/// triple rotated to its lexicographically least rotation and the face list
/// sorted. The two occurrences of an edge are glued head-to-tail with
/// respect to the counterclockwise boundary walks (the oriented-surface
/// convention); per-edge orientation signs carry no further information, are
/// checked on input and regenerated canonically on output.
class Triangulation {
public:
    /// Validates raw signed side triples: every edge index must appear
    /// exactly once as +e and once as -e, faces must glue into closed
    /// oriented components, and no component may be a once- or twice-marked
    /// sphere. Throws std::invalid_argument with a description otherwise.
    static Triangulation validate(const std::vector<std::array<Side, 3>>& faces);

    /// Faces given as triples of non-zero 1-based signed labels, the file
    /// convention: +-(e+1) for edge e.
    static Triangulation from_file_labels(const std::vector<std::array<long, 3>>& faces);

    /// Canonical signed file labels (first occurrence of each edge positive).
    std::vector<std::array<long, 3>> to_file_labels() const;

    int zeta() const { return zeta_; }
    std::size_t num_faces() const { return faces_.size(); }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    int edge_at(std::size_t face, int slot) const { return faces_[face][slot]; }

    const SurfaceInvariants& invariants() const { return inv_; }
    int num_vertices() const { return inv_.marked_points; }

    /// Slot ids are 3*face + slot. The twin of a slot is the other
    /// occurrence of the same edge.
    int twin_slot(int slot_id) const { return twin_[slot_id]; }

    /// Corner k of face f lies between slots k and k+1 (mod 3); corner ids
    /// are 3*face + k. Returns the vertex orbit of a corner.
    int vertex_of_corner(int corner_id) const { return corner_vertex_[corner_id]; }
    const std::vector<std::vector<int>>& corners_of_vertices() const { return vertex_corners_; }

    bool flippable(int edge) const;

    /// The square around a flippable edge e: the two distinct faces rotated
    /// to start at e give (e, a, b) and (e, c, d), with a opposite c and b
    /// opposite d. face_a is the face occurring first in the canonical face
    /// list. The same labelling feeds the flip itself, the edge-vector
    /// update max(a+c, b+d) - e, the cell matrices and the crush collapse
    /// test.
    struct FlipSquare {
        int face_a, face_b;
        int slot_a, slot_b;  // slots of e in face_a / face_b
        int a, b, c, d;      // edge indices of the square sides
    };
    FlipSquare flip_square(int edge) const;

    /// Replaces e by the opposite diagonal of its square. Throws if e is
    /// out of range or both sides of e lie in one face.
    Triangulation flip(int edge) const;

    /// Relabels edge e as perm[e]. Throws unless perm is a permutation of
    /// {0..zeta-1}.
    Triangulation reorder(const std::vector<int>& perm) const;

    /// Canonical equality: identical canonical face lists. Edge labels are
    /// semantic and never permuted; face order and per-edge orientations are
    /// presentation only.
    bool operator==(const Triangulation& o) const {
        return zeta_ == o.zeta_ && faces_ == o.faces_;
    }

    std::string describe() const;

private:
    Triangulation() = default;
    static Triangulation from_unsigned(std::vector<std::array<int, 3>> faces);
    void derive();

    std::vector<std::array<int, 3>> faces_;
    int zeta_ = 0;
    std::vector<int> twin_;
    std::vector<int> corner_vertex_;
    std::vector<std::vector<int>> vertex_corners_;
    std::vector<int> face_component_;
    SurfaceInvariants inv_;
};

} // namespace tricoord
