#pragma once

#include <vector>

#include "tricoord/matrix.hpp"

namespace tricoord {

/// True iff there is a rational v >= 0, v != 0, with M * v >= 0.
/// Decided as exact-rational feasibility of {M*v >= 0, v >= 0, sum(v) = 1}
/// by phase-one simplex with Bland's rule; no floating point.
bool cone_feasible(const BigMatrix& m);

/// True iff there is a free rational w with M * w >= 0 and norm . w = 1.
/// Used on kernel-projected systems where the sign conditions live in the
/// rows of M rather than on the variables.
bool cone_feasible_normalized(const BigMatrix& m, const std::vector<BigInt>& norm);

/// A non-trivial integral v with M * v >= 0 and v >= 0, within the
/// Hadamard bound hadamard_bound(bit_bound(M), n).
///
/// Candidate supports of n-1 tight rows are enumerated in lexicographic
/// row-index order; the first extremal vertex found is returned, with its
/// entries the (n-1)-minors of the tight rows, divided by their gcd.
///
/// The caller must guarantee the basis vectors appear as rows of M (so the
/// cone is pointed). Throws std::invalid_argument on an infeasible cone and
/// std::logic_error if no support works on a feasible one.
std::vector<BigInt> extremal_vector(const BigMatrix& m);

} // namespace tricoord
