#pragma once

#include <cstdint>
#include <optional>

#include "tricoord/mapping_class.hpp"
#include "tricoord/reducibility.hpp"

namespace tricoord {

/// Crushing a triangulated surface along a multicurve. The target
/// triangulation's edges inherit the source labels through the canonical
/// bijection, so edge_bijection is the identity once construction succeeds;
/// the content of the map is the lift matrix and the target combinatorics.
struct CrushMap {
    Triangulation source;
    EdgeVector curve;
    Triangulation target;
    std::vector<int> edge_bijection;
    /// Column e of lift_matrix is the source edge vector of the preimage of
    /// target edge e; lifting is the linear map v -> lift_matrix * v.
    BigMatrix lift_matrix;
    int removed_components = 0;
};

/// Dual-graph construction: one vertex per face core, three half-edges per
/// core routed through the corridors of parallel strands until they meet
/// another half-edge. Labels are matched to the crossed source edges
/// (lexicographically least perfect matching); failure to match is an error.
CrushMap crush(const Triangulation& t, const EdgeVector& gamma);

/// Crushes every triangulation along the transported curve. A flip whose
/// square holds gamma with a+c != b+d collapses (the crushed triangulations
/// coincide) and is dropped; other moves descend with the same labels, so
/// the output is never longer than the input.
Path crush_path(const Path& p, const EdgeVector& gamma);

/// lift_matrix * v, checked to be a multicurve disjoint from the crushed
/// curve.
EdgeVector lift(const CrushMap& cm, const EdgeVector& v);

/// lift(v) + crushed curve, entrywise.
EdgeVector lift_union(const CrushMap& cm, const EdgeVector& v);

/// Complexity of a multicurve: 3*genus + marked - 3*components of the
/// crushed surface. Strictly decreases under lift_union; at zero the
/// crushed surface carries no curves at all.
int xi(const Triangulation& t, const EdgeVector& gamma);

struct MaximalResult {
    EdgeVector curve;
    /// Composite bit bound accumulated through the crush-and-lift loop.
    BitBound bound;
    int iterations = 0;
};

/// Invariant multicurve whose induced class on the crushed surface is
/// irreducible, grown by repeated crush + decide + lift_union. Returns
/// nullopt on irreducible input.
std::optional<MaximalResult> maximal_multicurve(const MappingClassPath& p,
                                                const SearchOptions& opt = {});

struct CanonicalDeskResult {
    /// Sum of the components common to every maximal multicurve found, or
    /// nullopt for the empty system.
    std::optional<EdgeVector> system;
    /// True when max_entry is smaller than the certified bound, i.e. the
    /// scan may have missed maximal systems.
    bool approximate = true;
    BitBound certified_bound;
    std::uint64_t invariant_count = 0;
    std::uint64_t maximal_count = 0;
};

/// Desk-scale canonical curve system: scans all invariant multicurves with
/// entries <= max_entry, keeps the maximal ones, and intersects their
/// component sets.
CanonicalDeskResult canonical_system_desk(const MappingClassPath& p, long max_entry,
                                          const SearchOptions& opt = {});

} // namespace tricoord
