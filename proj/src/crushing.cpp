#include "tricoord/crushing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tricoord {

namespace {

// Half-edge walk bookkeeping for the dual construction.
struct WalkResult {
    int joined_slot = -1;            // half-edge met at the end
    std::vector<BigInt> crossings;   // per source edge
};

// Routes a half-edge from the core of its face out through its side and
// along corridors until it reaches a gap whose far side is a core. Gaps on
// a side are indexed 0..v[e] along that side's own walk; the gap between
// the two corner stacks is the core gap. Crossing an edge reverses gap
// indices (head-to-tail gluing).
WalkResult route_half_edge(const Triangulation& t, const EdgeVector& v,
                           const std::vector<std::vector<BigInt>>& corner_counts, int slot) {
    const int zeta = t.zeta();
    WalkResult res;
    res.crossings.assign(zeta, BigInt(0));

    auto edge_of = [&](int s) { return t.edge_at(s / 3, s % 3); };
    auto core_gap = [&](int s) -> const BigInt& { return corner_counts[s / 3][(s % 3 + 2) % 3]; };

    int out_slot = slot;
    BigInt out_gap = core_gap(slot);
    // A route visits each gap at most once; the bound guards against
    // construction bugs.
    BigInt total_gaps = zeta;
    for (const BigInt& x : v) total_gaps += x;
    for (BigInt guard = 0; guard <= total_gaps; ++guard) {
        const int e = edge_of(out_slot);
        res.crossings[e] += 1;
        const int in_slot = t.twin_slot(out_slot);
        const BigInt in_gap = v[e] - out_gap;

        const BigInt& core = core_gap(in_slot);
        if (in_gap == core) {
            res.joined_slot = in_slot;
            return res;
        }
        const int f = in_slot / 3, s = in_slot % 3;
        if (in_gap < core) {
            // corridor (or vertex region) of corner s-1, leaves via side s-1
            out_slot = 3 * f + (s + 2) % 3;
            out_gap = v[edge_of(out_slot)] - in_gap;
        } else {
            // corridor (or vertex region) of corner s, leaves via side s+1
            out_gap = v[e] - in_gap;
            out_slot = 3 * f + (s + 1) % 3;
        }
    }
    throw std::logic_error("crush: half-edge route failed to terminate");
}

// Lexicographically least perfect matching of dual edges to the source
// edges they cross.
std::vector<int> match_labels(const std::vector<std::set<int>>& candidates, int zeta) {
    const int n = static_cast<int>(candidates.size());
    if (n != zeta) throw std::logic_error("crush: dual edge count differs from zeta");

    auto has_perfect = [&](const std::vector<int>& fixed) {
        // Kuhn's algorithm over the unfixed part.
        std::vector<int> owner(zeta, -1);
        for (int i = 0; i < n; ++i)
            if (fixed[i] >= 0) owner[fixed[i]] = i;
        std::vector<int> match_of(n, -1);
        for (int i = 0; i < n; ++i) match_of[i] = fixed[i];
        std::function<bool(int, std::vector<char>&)> augment = [&](int i,
                                                                   std::vector<char>& used) {
            for (int c : candidates[i]) {
                if (used[c]) continue;
                used[c] = 1;
                if (owner[c] == -1 || (fixed[owner[c]] < 0 && augment(owner[c], used))) {
                    owner[c] = i;
                    match_of[i] = c;
                    return true;
                }
            }
            return false;
        };
        for (int i = 0; i < n; ++i) {
            if (match_of[i] >= 0) continue;
            std::vector<char> used(zeta, 0);
            for (int j = 0; j < n; ++j)
                if (fixed[j] >= 0) used[fixed[j]] = 1;
            if (!augment(i, used)) return false;
        }
        return true;
    };

    std::vector<int> fixed(n, -1);
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int c : candidates[i]) {
            bool taken = false;
            for (int j = 0; j < i; ++j)
                if (fixed[j] == c) taken = true;
            if (taken) continue;
            fixed[i] = c;
            if (has_perfect(fixed)) {
                placed = true;
                break;
            }
            fixed[i] = -1;
        }
        if (!placed)
            throw std::logic_error(
                "crush: no perfect matching between dual edges and source edges");
    }
    return fixed;
}

} // namespace

CrushMap crush(const Triangulation& t, const EdgeVector& gamma) {
    if (!is_multicurve(t, gamma)) throw std::invalid_argument("crush: not a multicurve");

    const int zeta = t.zeta();
    const int nfaces = static_cast<int>(t.num_faces());
    const int nslots = 3 * nfaces;

    std::vector<std::vector<BigInt>> corner_counts(nfaces, std::vector<BigInt>(3));
    for (int f = 0; f < nfaces; ++f)
        for (int k = 0; k < 3; ++k)
            corner_counts[f][k] = corner_sum(t, gamma, 3 * f + k) / 2;

    // Route all half-edges and check the pairing is symmetric.
    std::vector<WalkResult> walks(nslots);
    for (int s = 0; s < nslots; ++s) walks[s] = route_half_edge(t, gamma, corner_counts, s);
    for (int s = 0; s < nslots; ++s) {
        const int j = walks[s].joined_slot;
        if (j == s) throw std::logic_error("crush: half-edge joined itself");
        if (walks[j].joined_slot != s)
            throw std::logic_error("crush: half-edge pairing is not symmetric");
    }

    // Dual edges in order of their least half-edge.
    std::vector<int> dual_of_slot(nslots, -1);
    std::vector<std::pair<int, int>> dual_ends;
    std::vector<std::set<int>> candidates;
    std::vector<std::vector<BigInt>> dual_crossings;
    for (int s = 0; s < nslots; ++s) {
        if (dual_of_slot[s] != -1) continue;
        const int j = walks[s].joined_slot;
        const int d = static_cast<int>(dual_ends.size());
        dual_of_slot[s] = d;
        dual_of_slot[j] = d;
        dual_ends.push_back({s, j});
        std::set<int> cand;
        for (int e = 0; e < zeta; ++e)
            if (walks[s].crossings[e] > 0) cand.insert(e);
        candidates.push_back(std::move(cand));
        dual_crossings.push_back(walks[s].crossings);
    }

    const std::vector<int> label_of_dual = match_labels(candidates, zeta);

    std::vector<std::array<int, 3>> target_faces(nfaces);
    for (int f = 0; f < nfaces; ++f)
        for (int k = 0; k < 3; ++k) target_faces[f][k] = label_of_dual[dual_of_slot[3 * f + k]];

    // Synthesise signs (first occurrence forward) and validate.
    std::vector<std::array<Side, 3>> signed_faces(nfaces);
    {
        std::vector<bool> seen(zeta, false);
        for (int f = 0; f < nfaces; ++f)
            for (int k = 0; k < 3; ++k) {
                const int e = target_faces[f][k];
                signed_faces[f][k] = Side{e, !seen[e]};
                seen[e] = true;
            }
    }

    std::vector<int> bijection(zeta);
    for (int e = 0; e < zeta; ++e) bijection[e] = e;
    CrushMap cm{t, gamma, Triangulation::validate(signed_faces), std::move(bijection),
                BigMatrix(zeta, zeta), 0};
    for (int d = 0; d < static_cast<int>(dual_ends.size()); ++d)
        for (int e = 0; e < zeta; ++e) cm.lift_matrix.at(e, label_of_dual[d]) = dual_crossings[d][e];

    if (cm.target.zeta() != zeta) throw std::logic_error("crush: zeta not preserved");
    if (!(bit_bound(cm.lift_matrix) <= BitBound::max(bit_bound(gamma), BitBound::bits(0))))
        throw std::logic_error("crush: lift matrix exceeds the curve bit bound");

    // Removed twice-marked spheres are the annuli between parallel copies:
    // one per extra copy in each parallel class.
    long copies = 0, classes = 0;
    for (const auto& [comp, mult] : decompose(t, gamma)) {
        (void)comp;
        copies += mult;
        ++classes;
    }
    cm.removed_components = static_cast<int>(copies - classes);

    const auto& si = t.invariants();
    const auto& ti = cm.target.invariants();
    if (ti.marked_points != si.marked_points + 2 * static_cast<int>(classes))
        throw std::logic_error("crush: marked point count mismatch against curve classes");

    return cm;
}

Path crush_path(const Path& p, const EdgeVector& gamma) {
    CrushMap cm = crush(p.start(), gamma);
    EdgeVector g = gamma;
    std::vector<Move> out;
    for (const auto& step : p.steps()) {
        if (const auto* f = std::get_if<Path::FlipStep>(&step)) {
            const BigInt s1 = g[f->a] + g[f->c];
            const BigInt s2 = g[f->b] + g[f->d];
            if (s1 == s2) out.push_back(Flip{f->edge});  // no arc crosses the square
            g[f->edge] = (s1 >= s2 ? s1 : s2) - g[f->edge];
        } else {
            const auto& perm = std::get<Path::ReorderStep>(step).perm;
            out.push_back(Reorder{perm});
            EdgeVector next(g.size());
            for (std::size_t e = 0; e < g.size(); ++e) next[perm[e]] = g[e];
            g = std::move(next);
        }
    }
    return Path(cm.target, std::move(out));
}

EdgeVector lift(const CrushMap& cm, const EdgeVector& v) {
    if (!is_multicurve(cm.target, v))
        throw std::invalid_argument("lift: not a multicurve on the crushed surface");
    EdgeVector w = cm.lift_matrix.mul_vec(v);
    if (!is_multicurve(cm.source, w))
        throw std::logic_error("lift: lifted vector is not a multicurve");
    EdgeVector joint(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) joint[i] = w[i] + cm.curve[i];
    if (!is_multicurve(cm.source, joint))
        throw std::logic_error("lift: lifted vector is not disjoint from the crushed curve");
    return w;
}

EdgeVector lift_union(const CrushMap& cm, const EdgeVector& v) {
    EdgeVector w = lift(cm, v);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += cm.curve[i];
    return w;
}

int xi(const Triangulation& t, const EdgeVector& gamma) {
    const auto& inv = crush(t, gamma).target.invariants();
    return 3 * inv.genus + inv.marked_points - 3 * inv.components;
}

std::optional<MaximalResult> maximal_multicurve(const MappingClassPath& p,
                                                const SearchOptions& opt) {
    ReducibilityReport rep = decide(p, opt);
    if (!rep.reducible) return std::nullopt;

    EdgeVector g = *rep.certificate;
    BitBound bound = rep.bound;
    const int zeta = p.base().zeta();
    int iterations = 0;
    for (;;) {
        ++iterations;
        if (iterations > zeta + 1)
            throw std::logic_error("maximal_multicurve: iteration bound exceeded");
        CrushMap cm = crush(p.base(), g);
        Path crushed = crush_path(p.path(), g);
        std::optional<MappingClassPath> induced;
        try {
            induced.emplace(crushed);
        } catch (const std::exception&) {
            throw std::logic_error(
                "maximal_multicurve: crushed path of an invariant curve failed to close up");
        }
        ReducibilityReport sub = decide(*induced, opt);
        if (!sub.reducible) {
            if (!verify_certificate(p, g))
                throw std::logic_error("maximal_multicurve: result fails certificate check");
            return MaximalResult{std::move(g), bound, iterations};
        }
        EdgeVector g2 = lift_union(cm, *sub.certificate);
        if (!(xi(p.base(), g2) < xi(p.base(), g)))
            throw std::logic_error("maximal_multicurve: complexity did not decrease");
        if (!verify_certificate(p, g2))
            throw std::logic_error("maximal_multicurve: lifted curve is not invariant");
        bound = bound + sub.bound + BitBound::bits(zeta);
        g = std::move(g2);
    }
}

CanonicalDeskResult canonical_system_desk(const MappingClassPath& p, long max_entry,
                                          const SearchOptions& opt) {
    if (max_entry < 1)
        throw std::invalid_argument("canonical_system_desk: max_entry must be >= 1");
    const int zeta = p.base().zeta();

    CanonicalDeskResult res;
    if (auto mr = maximal_multicurve(p, opt)) {
        res.certified_bound = mr->bound;
        res.approximate = BitBound::of_integer(BigInt(max_entry)) < mr->bound;
    } else {
        res.approximate = false;
        return res;  // irreducible: empty system
    }

    std::set<EdgeVector> common;
    bool first = true;
    EdgeVector v(zeta, BigInt(0));
    for (;;) {
        int i = zeta - 1;
        while (i >= 0 && v[i] == max_entry) v[i--] = 0;
        if (i < 0) break;
        v[i] += 1;
        if (!verify_certificate(p, v)) continue;
        ++res.invariant_count;

        bool maximal = false;
        try {
            MappingClassPath induced{crush_path(p.path(), v)};
            maximal = !decide(induced, opt).reducible;
        } catch (const std::exception&) {
            throw std::logic_error(
                "canonical_system_desk: crushed path of an invariant curve failed to close up");
        }
        if (!maximal) continue;
        ++res.maximal_count;

        std::set<EdgeVector> comps;
        for (const auto& [comp, mult] : decompose(p.base(), v)) comps.insert(comp);
        if (first) {
            common = std::move(comps);
            first = false;
        } else {
            std::set<EdgeVector> inter;
            std::set_intersection(common.begin(), common.end(), comps.begin(), comps.end(),
                                  std::inserter(inter, inter.begin()));
            common = std::move(inter);
        }
        if (common.empty()) break;
    }

    if (first || common.empty()) return res;  // no maximal found in range, or empty intersection
    EdgeVector sum(zeta, BigInt(0));
    for (const auto& comp : common)
        for (int e = 0; e < zeta; ++e) sum[e] += comp[e];
    res.system = std::move(sum);
    return res;
}

} // namespace tricoord
