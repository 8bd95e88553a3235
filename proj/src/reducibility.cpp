#include "tricoord/reducibility.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tricoord/cone.hpp"

namespace tricoord {

namespace {

EdgeVector certificate_from(const BigMatrix& m, const MappingClassPath& p) {
    EdgeVector v0 = extremal_vector(m);
    EdgeVector cert(v0.size());
    for (std::size_t i = 0; i < v0.size(); ++i) cert[i] = 2 * v0[i];
    if (!is_multicurve(p.base(), cert))
        throw std::logic_error("decide: doubled extremal vector is not a multicurve");
    if (tricoord::apply(p.path(), cert) != cert)
        throw std::logic_error("decide: certificate is not invariant");
    return cert;
}

} // namespace

BigMatrix assemble_M(const CellMatrices& cell, const BigMatrix& F) {
    const std::size_t zeta = cell.A.cols();
    if (F.cols() != zeta || cell.B.cols() != zeta)
        throw std::invalid_argument("assemble_M: column mismatch");
    const BigMatrix ami = cell.A.sub(BigMatrix::identity(zeta));
    return ami.vstack(ami.negated()).vstack(cell.B).vstack(F).vstack(BigMatrix::identity(zeta));
}

ReducibilityReport decide(const MappingClassPath& p, const SearchOptions& opt) {
    const std::size_t zeta = p.base().zeta();
    const auto choices = enumerate_corner_choices(p.base());
    std::vector<BigMatrix> fs;
    fs.reserve(choices.size());
    for (const auto& c : choices) fs.push_back(corner_matrix(p.base(), c));
    const BigMatrix faces = face_inequalities(p.base());
    BitBound f_bb;
    for (const auto& f : fs) f_bb = BitBound::max(f_bb, bit_bound(f));
    const BigMatrix id = BigMatrix::identity(zeta);

    ReducibilityReport rep;
    BitBound max_bb = f_bb;

    // Invariant-search pruning: a cell containing an invariant multicurve
    // keeps the curve's whole trajectory non-negative and satisfies the face
    // inequalities, so those rows sharpen the subtree test.
    BranchEnumerator cells(p.path(), opt.prune,
                           BranchEnumerator::PruneHints{&faces, true});

    // Branches are pulled lazily in lexicographic order; each one is scanned
    // against all corner choices, in parallel when jobs > 1. The first
    // feasible (branch, choice) pair in that order wins, so parallel runs
    // return exactly the serial result.
    const int jobs = opt.jobs;
    while (auto cell = cells.next()) {
        ++rep.branches_explored;
        const BigMatrix ami = cell->A.sub(id);
        max_bb = BitBound::max(max_bb, BitBound::max(bit_bound(ami), bit_bound(cell->B)));
        // The fixed cone lives in ker(A - Id); the corner scans run in the
        // kernel coordinates, whose dimension is usually 0-3. Feasibility is
        // unchanged: every rational fixed vector is K*w and K is injective.
        const BigMatrix k = kernel_basis(ami);
        if (k.cols() == 0) continue;
        const BigMatrix bk = cell->B.mul(k);
        std::vector<BigInt> norm(k.cols());
        for (std::size_t j = 0; j < k.cols(); ++j)
            for (std::size_t i = 0; i < k.rows(); ++i) norm[j] += k.at(i, j);
        // corner-choice-independent prescreen
        ++rep.systems_tested;
        if (!cone_feasible_normalized(bk.vstack(faces.mul(k)).vstack(k), norm)) continue;

        const std::size_t n = fs.size();
        long hit = -1;
        if (jobs > 1) {
            std::vector<char> ok(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
            for (std::size_t j = 0; j < n; ++j)
                ok[j] = cone_feasible_normalized(bk.vstack(fs[j].mul(k)).vstack(k), norm) ? 1 : 0;
            rep.systems_tested += n;
            for (std::size_t j = 0; j < n; ++j)
                if (ok[j]) {
                    hit = static_cast<long>(j);
                    break;
                }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                ++rep.systems_tested;
                if (cone_feasible_normalized(bk.vstack(fs[j].mul(k)).vstack(k), norm)) {
                    hit = static_cast<long>(j);
                    break;
                }
            }
        }
        if (hit >= 0) {
            rep.reducible = true;
            const CellMatrices cm{std::move(cell->A), std::move(cell->B)};
            rep.certificate = certificate_from(assemble_M(cm, fs[hit]), p);
            rep.branches_pruned = cells.pruned_subtrees();
            rep.bound = hadamard_bound(max_bb, zeta).plus_bits(1);
            return rep;
        }
    }
    rep.branches_pruned = cells.pruned_subtrees();
    rep.bound = hadamard_bound(max_bb, zeta).plus_bits(1);
    return rep;
}

bool verify_certificate(const MappingClassPath& p, const EdgeVector& v) noexcept {
    try {
        if (v.size() != static_cast<std::size_t>(p.base().zeta())) return false;
        for (const BigInt& x : v)
            if (x < 0) return false;
        if (!is_multicurve(p.base(), v)) return false;
        return tricoord::apply(p.path(), v) == v;
    } catch (...) {
        return false;
    }
}

std::optional<EdgeVector> brute_force_invariant(const MappingClassPath& p, long max_entry,
                                                const SearchOptions& opt) {
    if (max_entry < 1) throw std::invalid_argument("brute_force_invariant: max_entry must be >= 1");
    const int zeta = p.base().zeta();
    const unsigned long base = static_cast<unsigned long>(max_entry) + 1;
    unsigned long total = 1;
    for (int i = 0; i < zeta; ++i) {
        if (total > (1UL << 40) / base)
            throw std::invalid_argument("brute_force_invariant: search space too large");
        total *= base;
    }

    auto vector_at = [&](unsigned long idx) {
        EdgeVector v(zeta);
        for (int i = zeta - 1; i >= 0; --i) {
            v[i] = BigInt(idx % base);
            idx /= base;
        }
        return v;
    };

    const int jobs = opt.jobs;
    if (jobs <= 1) {
        for (unsigned long idx = 1; idx < total; ++idx) {
            EdgeVector v = vector_at(idx);
            if (verify_certificate(p, v)) return v;
        }
        return std::nullopt;
    }

    const long none = std::numeric_limits<long>::max();
    const unsigned long chunk = 1UL << 12;
    for (unsigned long lo = 1; lo < total; lo += chunk) {
        const unsigned long hi = std::min(total, lo + chunk);
        long hit = none;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(jobs) reduction(min : hit)
#endif
        for (unsigned long idx = lo; idx < hi; ++idx) {
            if (verify_certificate(p, vector_at(idx))) {
                const long h = static_cast<long>(idx);
                if (h < hit) hit = h;
            }
        }
        if (hit != none) return vector_at(static_cast<unsigned long>(hit));
    }
    return std::nullopt;
}

} // namespace tricoord
