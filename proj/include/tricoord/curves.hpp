#pragma once

#include <utility>
#include <vector>

#include "tricoord/matrix.hpp"
#include "tricoord/triangulation.hpp"

namespace tricoord {

/// Geometric intersection numbers of a multicurve with the ordered edges.
using EdgeVector = std::vector<BigInt>;

/// One chosen corner per vertex; corner_of_vertex[v] is a corner id of
/// vertex v.
struct CornerChoice {
    std::vector<int> corner_of_vertex;
};

/// Multicurve test: v != 0, every face corner sum v[i]+v[j]-v[k] is even and
/// non-negative, and every vertex has an incident corner whose sum is zero.
/// Throws on length mismatch or negative entries.
bool is_multicurve(const Triangulation& t, const EdgeVector& v);

/// Corner sum of corner id c (between slots k, k+1 of its face) under v,
/// i.e. v[edge(k)] + v[edge(k+1)] - v[edge(k+2)]. Not divided by two.
BigInt corner_sum(const Triangulation& t, const EdgeVector& v, int corner_id);

/// The corner-choice-independent face rows alone: all cyclic corner sums
/// of every face, three rows per face.
BigMatrix face_inequalities(const Triangulation& t);

/// The inequality system of one corner choice: three rows per face (all
/// cyclic corner sums >= 0), then one +- pair per vertex forcing the chosen
/// corner sum to zero. Entries lie in {-2..2} ({-1,0,1} when no face has a
/// repeated edge). Parity is not encoded here.
BigMatrix corner_matrix(const Triangulation& t, const CornerChoice& choice);

/// All assignments of one incident corner per vertex, lexicographic in
/// (vertex order, corner id).
std::vector<CornerChoice> enumerate_corner_choices(const Triangulation& t);

/// Primitive component curves of a multicurve with multiplicities, found by
/// tracing strands through corner coordinates. The sum of multiplicity *
/// component equals v.
std::vector<std::pair<EdgeVector, long>> decompose(const Triangulation& t, const EdgeVector& v);

} // namespace tricoord
