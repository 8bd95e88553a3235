#include "tricoord/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tricoord {

namespace {

std::array<int, 3> least_rotation(const std::array<int, 3>& f) {
    std::array<int, 3> best = f;
    for (int r = 1; r < 3; ++r) {
        std::array<int, 3> cand{f[r], f[(r + 1) % 3], f[(r + 2) % 3]};
        if (cand < best) best = cand;
    }
    return best;
}

} // namespace

Triangulation Triangulation::from_unsigned(std::vector<std::array<int, 3>> faces) {
    for (auto& f : faces) f = least_rotation(f);
    std::sort(faces.begin(), faces.end());
    Triangulation t;
    t.faces_ = std::move(faces);
    t.derive();
    return t;
}

void Triangulation::derive() {
    if (faces_.empty()) throw std::invalid_argument("triangulation: empty face list");

    int max_edge = -1;
    for (const auto& f : faces_)
        for (int e : f) {
            if (e < 0) throw std::invalid_argument("triangulation: negative edge index");
            max_edge = std::max(max_edge, e);
        }
    zeta_ = max_edge + 1;

    // Each edge appears on exactly two slots.
    std::vector<std::vector<int>> slots_of(zeta_);
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (int k = 0; k < 3; ++k) slots_of[faces_[f][k]].push_back(3 * static_cast<int>(f) + k);
    for (int e = 0; e < zeta_; ++e)
        if (slots_of[e].size() != 2) {
            std::ostringstream os;
            os << "triangulation: edge " << e << " appears " << slots_of[e].size()
               << " time(s), expected 2";
            throw std::invalid_argument(os.str());
        }

    const int nslots = 3 * static_cast<int>(faces_.size());
    twin_.assign(nslots, -1);
    for (int e = 0; e < zeta_; ++e) {
        twin_[slots_of[e][0]] = slots_of[e][1];
        twin_[slots_of[e][1]] = slots_of[e][0];
    }

    // Vertex orbits: corner (f,k) sits between slots k and k+1 of f; the next
    // corner around its vertex is reached through the twin of slot (f,k).
    corner_vertex_.assign(nslots, -1);
    vertex_corners_.clear();
    for (int c0 = 0; c0 < nslots; ++c0) {
        if (corner_vertex_[c0] != -1) continue;
        const int v = static_cast<int>(vertex_corners_.size());
        vertex_corners_.push_back({});
        int c = c0;
        do {
            corner_vertex_[c] = v;
            vertex_corners_[v].push_back(c);
            const int f = c / 3, k = c % 3;
            const int tw = twin_[3 * f + k];
            c = 3 * (tw / 3) + (tw % 3 + 2) % 3;
        } while (c != c0);
        std::sort(vertex_corners_[v].begin(), vertex_corners_[v].end());
    }

    // Components of the face-gluing graph.
    face_component_.assign(faces_.size(), -1);
    int ncomp = 0;
    for (std::size_t f0 = 0; f0 < faces_.size(); ++f0) {
        if (face_component_[f0] != -1) continue;
        std::vector<std::size_t> stack{f0};
        face_component_[f0] = ncomp;
        while (!stack.empty()) {
            std::size_t f = stack.back();
            stack.pop_back();
            for (int k = 0; k < 3; ++k) {
                std::size_t g = twin_[3 * f + k] / 3;
                if (face_component_[g] == -1) {
                    face_component_[g] = ncomp;
                    stack.push_back(g);
                }
            }
        }
        ++ncomp;
    }

    // Euler characteristic per component.
    std::vector<int> vc(ncomp, 0), ec(ncomp, 0), fc(ncomp, 0);
    for (std::size_t f = 0; f < faces_.size(); ++f) ++fc[face_component_[f]];
    for (int e = 0; e < zeta_; ++e) ++ec[face_component_[slots_of[e][0] / 3]];
    for (std::size_t v = 0; v < vertex_corners_.size(); ++v)
        ++vc[face_component_[vertex_corners_[v][0] / 3]];

    int genus_total = 0;
    for (int c = 0; c < ncomp; ++c) {
        const int chi = vc[c] - ec[c] + fc[c];
        if ((2 - chi) % 2 != 0 || chi > 2)
            throw std::invalid_argument("triangulation: inconsistent gluing (odd or excess Euler characteristic)");
        const int g = (2 - chi) / 2;
        if (g == 0 && vc[c] <= 2) {
            std::ostringstream os;
            os << "triangulation: component " << c << " is a sphere with " << vc[c]
               << " marked point(s)";
            throw std::invalid_argument(os.str());
        }
        genus_total += g;
    }

    inv_.genus = genus_total;
    inv_.marked_points = static_cast<int>(vertex_corners_.size());
    inv_.components = ncomp;
    inv_.zeta = zeta_;
    if (zeta_ != 6 * inv_.genus + 3 * inv_.marked_points - 6 * inv_.components)
        throw std::logic_error("triangulation: complexity formula violated");
}

Triangulation Triangulation::validate(const std::vector<std::array<Side, 3>>& faces) {
    int max_edge = -1;
    for (const auto& f : faces)
        for (const Side& s : f) max_edge = std::max(max_edge, s.edge);
    std::vector<int> pos(max_edge + 1, 0), neg(max_edge + 1, 0);
    for (const auto& f : faces)
        for (const Side& s : f) {
            if (s.edge < 0) throw std::invalid_argument("triangulation: negative edge index");
            ++(s.forward ? pos : neg)[s.edge];
        }
    for (int e = 0; e <= max_edge; ++e)
        if (pos[e] != 1 || neg[e] != 1) {
            std::ostringstream os;
            os << "triangulation: edge " << e << " has " << pos[e] << " forward and " << neg[e]
               << " backward side(s), expected one of each";
            throw std::invalid_argument(os.str());
        }

    std::vector<std::array<int, 3>> unsigned_faces;
    unsigned_faces.reserve(faces.size());
    for (const auto& f : faces) unsigned_faces.push_back({f[0].edge, f[1].edge, f[2].edge});
    return from_unsigned(std::move(unsigned_faces));
}

Triangulation Triangulation::from_file_labels(const std::vector<std::array<long, 3>>& faces) {
    std::vector<std::array<Side, 3>> sides;
    sides.reserve(faces.size());
    for (const auto& f : faces) {
        std::array<Side, 3> t;
        for (int k = 0; k < 3; ++k) {
            if (f[k] == 0) throw std::invalid_argument("triangulation: zero side label");
            t[k].edge = static_cast<int>(std::labs(f[k])) - 1;
            t[k].forward = f[k] > 0;
        }
        sides.push_back(t);
    }
    return validate(sides);
}

std::vector<std::array<long, 3>> Triangulation::to_file_labels() const {
    std::vector<bool> seen(zeta_, false);
    std::vector<std::array<long, 3>> out;
    out.reserve(faces_.size());
    for (const auto& f : faces_) {
        std::array<long, 3> t;
        for (int k = 0; k < 3; ++k) {
            const int e = f[k];
            t[k] = seen[e] ? -(e + 1L) : (e + 1L);
            seen[e] = true;
        }
        out.push_back(t);
    }
    return out;
}

bool Triangulation::flippable(int edge) const {
    if (edge < 0 || edge >= zeta_) return false;
    int first = -1;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (int k = 0; k < 3; ++k)
            if (faces_[f][k] == edge) {
                if (first == -1)
                    first = static_cast<int>(f);
                else
                    return static_cast<int>(f) != first;
            }
    return false;
}

Triangulation::FlipSquare Triangulation::flip_square(int edge) const {
    if (edge < 0 || edge >= zeta_) throw std::invalid_argument("flip: edge index out of range");
    int s1 = -1, s2 = -1;
    for (int s = 0; s < 3 * static_cast<int>(faces_.size()); ++s)
        if (faces_[s / 3][s % 3] == edge) {
            if (s1 == -1)
                s1 = s;
            else
                s2 = s;
        }
    if (s1 / 3 == s2 / 3) {
        std::ostringstream os;
        os << "flip: edge " << edge << " is self-folded (both sides in one face)";
        throw std::invalid_argument(os.str());
    }
    FlipSquare sq;
    sq.face_a = s1 / 3;
    sq.face_b = s2 / 3;
    sq.slot_a = s1 % 3;
    sq.slot_b = s2 % 3;
    sq.a = faces_[sq.face_a][(sq.slot_a + 1) % 3];
    sq.b = faces_[sq.face_a][(sq.slot_a + 2) % 3];
    sq.c = faces_[sq.face_b][(sq.slot_b + 1) % 3];
    sq.d = faces_[sq.face_b][(sq.slot_b + 2) % 3];
    return sq;
}

Triangulation Triangulation::flip(int edge) const {
    const FlipSquare sq = flip_square(edge);
    std::vector<std::array<int, 3>> faces;
    faces.reserve(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (static_cast<int>(f) != sq.face_a && static_cast<int>(f) != sq.face_b)
            faces.push_back(faces_[f]);
    faces.push_back({edge, sq.d, sq.a});
    faces.push_back({edge, sq.b, sq.c});
    return from_unsigned(std::move(faces));
}

Triangulation Triangulation::reorder(const std::vector<int>& perm) const {
    if (perm.size() != static_cast<std::size_t>(zeta_))
        throw std::invalid_argument("reorder: permutation size mismatch");
    std::vector<bool> hit(zeta_, false);
    for (int p : perm) {
        if (p < 0 || p >= zeta_ || hit[p]) throw std::invalid_argument("reorder: not a permutation");
        hit[p] = true;
    }
    std::vector<std::array<int, 3>> faces = faces_;
    for (auto& f : faces)
        for (int& e : f) e = perm[e];
    return from_unsigned(std::move(faces));
}

std::string Triangulation::describe() const {
    std::ostringstream os;
    os << "genus " << inv_.genus << ", " << inv_.marked_points << " marked, " << inv_.components
       << " component(s), zeta " << inv_.zeta;
    return os.str();
}

} // namespace tricoord
