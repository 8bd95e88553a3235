#include "tricoord/curves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tricoord {

namespace {

void check_vector(const Triangulation& t, const EdgeVector& v) {
    if (v.size() != static_cast<std::size_t>(t.zeta()))
        throw std::invalid_argument("edge vector length does not match zeta");
    for (const BigInt& x : v)
        if (x < 0) throw std::invalid_argument("edge vector has a negative entry");
}

} // namespace

BigInt corner_sum(const Triangulation& t, const EdgeVector& v, int corner_id) {
    const int f = corner_id / 3, k = corner_id % 3;
    return v[t.edge_at(f, k)] + v[t.edge_at(f, (k + 1) % 3)] - v[t.edge_at(f, (k + 2) % 3)];
}

bool is_multicurve(const Triangulation& t, const EdgeVector& v) {
    check_vector(t, v);
    bool nonzero = false;
    for (const BigInt& x : v)
        if (x != 0) nonzero = true;
    if (!nonzero) return false;

    for (std::size_t f = 0; f < t.num_faces(); ++f)
        for (int k = 0; k < 3; ++k) {
            const BigInt s = corner_sum(t, v, 3 * static_cast<int>(f) + k);
            if (s < 0 || s % 2 != 0) return false;
        }
    for (const auto& corners : t.corners_of_vertices()) {
        bool zero_corner = false;
        for (int c : corners)
            if (corner_sum(t, v, c) == 0) {
                zero_corner = true;
                break;
            }
        if (!zero_corner) return false;
    }
    return true;
}

BigMatrix face_inequalities(const Triangulation& t) {
    const int zeta = t.zeta();
    BigMatrix m(0, zeta);
    for (std::size_t f = 0; f < t.num_faces(); ++f)
        for (int k = 0; k < 3; ++k) {
            std::vector<BigInt> row(zeta);
            const int base = 3 * static_cast<int>(f);
            row[t.edge_at(f, k)] += 1;
            row[t.edge_at(f, (k + 1) % 3)] += 1;
            row[t.edge_at(f, (k + 2) % 3)] -= 1;
            (void)base;
            m.append_row(row);
        }
    return m;
}

BigMatrix corner_matrix(const Triangulation& t, const CornerChoice& choice) {
    const int zeta = t.zeta();
    const auto& vertices = t.corners_of_vertices();
    if (choice.corner_of_vertex.size() != vertices.size())
        throw std::invalid_argument("corner choice size does not match vertex count");

    auto corner_row = [&](int corner_id) {
        std::vector<BigInt> row(zeta);
        const int f = corner_id / 3, k = corner_id % 3;
        row[t.edge_at(f, k)] += 1;
        row[t.edge_at(f, (k + 1) % 3)] += 1;
        row[t.edge_at(f, (k + 2) % 3)] -= 1;
        return row;
    };

    BigMatrix m(0, zeta);
    for (std::size_t f = 0; f < t.num_faces(); ++f)
        for (int k = 0; k < 3; ++k) m.append_row(corner_row(3 * static_cast<int>(f) + k));

    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const int c = choice.corner_of_vertex[v];
        if (std::find(vertices[v].begin(), vertices[v].end(), c) == vertices[v].end())
            throw std::invalid_argument("chosen corner is not incident to its vertex");
        std::vector<BigInt> row = corner_row(c);
        m.append_row(row);
        for (BigInt& x : row) x = -x;
        m.append_row(row);
    }
    return m;
}

std::vector<CornerChoice> enumerate_corner_choices(const Triangulation& t) {
    const auto& vertices = t.corners_of_vertices();
    std::vector<CornerChoice> out;
    std::vector<std::size_t> idx(vertices.size(), 0);
    for (;;) {
        CornerChoice c;
        c.corner_of_vertex.resize(vertices.size());
        for (std::size_t v = 0; v < vertices.size(); ++v)
            c.corner_of_vertex[v] = vertices[v][idx[v]];
        out.push_back(std::move(c));
        std::size_t v = vertices.size();
        while (v-- > 0) {
            if (++idx[v] < vertices[v].size()) break;
            idx[v] = 0;
            if (v == 0) return out;
        }
    }
}

std::vector<std::pair<EdgeVector, long>> decompose(const Triangulation& t, const EdgeVector& v) {
    if (!is_multicurve(t, v)) throw std::invalid_argument("decompose: not a multicurve");

    const int zeta = t.zeta();
    const int nslots = 3 * static_cast<int>(t.num_faces());

    // Corner strand counts per corner id.
    std::vector<BigInt> corner_count(nslots);
    for (int c = 0; c < nslots; ++c) corner_count[c] = corner_sum(t, v, c) / 2;

    // Reference side of each edge: its lower slot id. Point (e, p) has
    // p in [0, v[e]) measured along the reference side's walk.
    std::vector<int> ref_slot(zeta, -1);
    for (int s = 0; s < nslots; ++s) {
        const int e = t.edge_at(s / 3, s % 3);
        if (ref_slot[e] == -1) ref_slot[e] = s;
    }

    auto edge_of_slot = [&](int s) { return t.edge_at(s / 3, s % 3); };
    auto ref_pos = [&](int slot, const BigInt& pos) {
        const int e = edge_of_slot(slot);
        return slot == ref_slot[e] ? pos : v[e] - 1 - pos;
    };

    // Strand successor within a face: entering through `slot` at `pos`
    // (measured along that side's own walk), returns the exit (slot, pos).
    auto traverse_face = [&](int slot, const BigInt& pos) -> std::pair<int, BigInt> {
        const int f = slot / 3, s = slot % 3;
        const int prev_corner = 3 * f + (s + 2) % 3;  // corner (s-1): start of side s
        const int this_corner = 3 * f + s;            // corner s: end of side s
        if (pos < corner_count[prev_corner]) {
            // strand around corner s-1, exits through side s-1
            const int out = 3 * f + (s + 2) % 3;
            return {out, v[edge_of_slot(out)] - (pos + 1)};
        }
        // strand around corner s, exits through side s+1
        const BigInt i = v[edge_of_slot(slot)] - pos;  // index from the corner
        (void)this_corner;
        const int out = 3 * f + (s + 1) % 3;
        return {out, i - 1};
    };

    std::map<std::pair<int, BigInt>, bool> visited;  // (edge, ref pos) -> seen
    std::vector<std::pair<EdgeVector, long>> components;

    for (int e = 0; e < zeta; ++e) {
        for (BigInt p = 0; p < v[e]; ++p) {
            if (visited.count({e, p})) continue;
            // trace the component through this point, entering via ref side
            EdgeVector comp(zeta);
            int slot = ref_slot[e];
            BigInt pos = p;
            for (;;) {
                const int ce = edge_of_slot(slot);
                const BigInt rp = ref_pos(slot, pos);
                if (visited.count({ce, rp})) break;
                visited[{ce, rp}] = true;
                comp[ce] += 1;
                auto [out_slot, out_pos] = traverse_face(slot, pos);
                const int tw = t.twin_slot(out_slot);
                slot = tw;
                pos = v[edge_of_slot(out_slot)] - 1 - out_pos;
            }
            bool found = false;
            for (auto& [vec, mult] : components)
                if (vec == comp) {
                    ++mult;
                    found = true;
                    break;
                }
            if (!found) components.push_back({std::move(comp), 1});
        }
    }
    return components;
}

} // namespace tricoord
