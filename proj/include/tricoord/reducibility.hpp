#pragma once

#include <cstdint>
#include <optional>

#include "tricoord/bit_bound.hpp"
#include "tricoord/mapping_class.hpp"

namespace tricoord {

struct ReducibilityReport {
    bool reducible = false;
    std::optional<EdgeVector> certificate;  // present iff reducible; always even
    std::uint64_t branches_explored = 0;
    std::uint64_t branches_pruned = 0;
    std::uint64_t systems_tested = 0;
    /// Instance certificate-size bound: hadamard_bound(bit_bound(M), zeta)
    /// plus one bit for the doubling, maximised over the systems tested.
    BitBound bound;
};

struct SearchOptions {
    bool prune = true;
    /// jobs == 1 runs the serial reference; jobs > 1 scans (branch, corner
    /// choice) pairs with OpenMP and merges deterministically, so results
    /// are identical.
    int jobs = 1;
};

/// The stacked system (A - Id; -(A - Id); B; F; Id).
BigMatrix assemble_M(const CellMatrices& cell, const BigMatrix& F);

/// Searches branch cells (outer, lexicographic) times corner choices
/// (inner) for a feasible fixed-cone system; on the first hit extracts an
/// extremal vector, doubles it for parity, checks the certificate and
/// returns. Exhausting all systems proves irreducibility.
ReducibilityReport decide(const MappingClassPath& p, const SearchOptions& opt = {});

/// NP verifier: true iff v is a multicurve vector of the base and the path
/// fixes it. Never throws; malformed input returns false.
bool verify_certificate(const MappingClassPath& p, const EdgeVector& v) noexcept;

/// Desk-scale exhaustive search: first vector (lexicographic) with entries
/// in [0, max_entry] passing verify_certificate.
std::optional<EdgeVector> brute_force_invariant(const MappingClassPath& p, long max_entry,
                                                const SearchOptions& opt = {});

} // namespace tricoord
