#pragma once

#include <array>
#include <random>
#include <vector>

#include "tricoord/builtins.hpp"
#include "tricoord/curves.hpp"
#include "tricoord/mapping_class.hpp"

namespace testutil {

using namespace tricoord;

inline EdgeVector ev(std::vector<long> xs) { return EdgeVector(xs.begin(), xs.end()); }

// Independent ground truth for the once-marked torus: mapping classes act on
// primitive direction vectors (u,w) through integer 2x2 matrices, and the
// edge vector of the (u,w) curve on the builtin triangulation is
// (|w|, |u|, |u-w|). The generator matrices were fixed by the geometric
// derivation of the builtin paths and are pinned by the slope-action tests.
struct TorusOracle {
    using Mat = std::array<long, 4>;  // row major

    static Mat mat_of(const WordLetter& l) {
        if (l.name == "a") return l.sign > 0 ? Mat{1, -1, 0, 1} : Mat{1, 1, 0, 1};
        if (l.name == "b") return l.sign > 0 ? Mat{1, 0, 1, 1} : Mat{1, 0, -1, 1};
        throw std::invalid_argument("torus oracle only knows generators a, b");
    }

    static Mat mul(const Mat& x, const Mat& y) {
        return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }

    // Word h1...hk acts as the composite hk o ... o h1.
    static Mat word_matrix(const Word& w) {
        Mat m{1, 0, 0, 1};
        for (const auto& letter : w) m = mul(mat_of(letter), m);
        return m;
    }

    static EdgeVector curve(long u, long w) {
        return ev({std::labs(w), std::labs(u), std::labs(u - w)});
    }

    static EdgeVector act(const Mat& m, long u, long w) {
        return curve(m[0] * u + m[1] * w, m[2] * u + m[3] * w);
    }

    // An invariant multicurve exists iff the action fixes a rational
    // direction up to sign, i.e. |trace| = 2 (eigenvalue +-1 with a rational
    // eigenvector); elliptic classes (|trace| < 2) fix no direction and
    // Anosov ones (|trace| > 2) only irrational ones.
    static bool reducible(const Word& w) {
        const Mat m = word_matrix(w);
        const long tr = m[0] + m[3];
        return tr == 2 || tr == -2;
    }
};

// Multicurve sampler: random short words pushed onto a small catalog of
// base curves. Entries stay within the cap by rejection.
class MulticurveSampler {
public:
    MulticurveSampler(const GeneratorTable& table, long cap, std::uint64_t seed)
        : cap_(cap), rng_(seed) {
        const Triangulation& t = table.base();
        EdgeVector v(t.zeta(), BigInt(0));
        for (;;) {
            int i = t.zeta() - 1;
            while (i >= 0 && v[i] == 2) v[i--] = 0;
            if (i < 0) break;
            v[i] += 1;
            if (is_multicurve(t, v)) catalog_.push_back(v);
        }
        // pool of precompiled pushing paths: random words of length <= 6
        std::uniform_int_distribution<int> len(0, 6);
        std::uniform_int_distribution<std::size_t> gen(0, table.entries().size() - 1);
        std::uniform_int_distribution<int> sign(0, 1);
        for (int i = 0; i < 32; ++i) {
            Word w;
            const int L = len(rng_);
            for (int j = 0; j < L; ++j)
                w.push_back({table.entries()[gen(rng_)].first, sign(rng_) ? 1 : -1});
            paths_.push_back(compile(w, table).path());
        }
    }

    EdgeVector next() {
        std::uniform_int_distribution<std::size_t> pick(0, catalog_.size() - 1);
        std::uniform_int_distribution<std::size_t> path(0, paths_.size() - 1);
        for (;;) {
            EdgeVector pushed = tricoord::apply(paths_[path(rng_)], catalog_[pick(rng_)]);
            BigInt mx = 0;
            for (const BigInt& x : pushed)
                if (x > mx) mx = x;
            if (mx <= cap_) return pushed;
        }
    }

    const std::vector<EdgeVector>& catalog() const { return catalog_; }

private:
    long cap_;
    std::mt19937_64 rng_;
    std::vector<EdgeVector> catalog_;
    std::vector<Path> paths_;
};

// All words of the given length over the table generators and inverses, in
// lexicographic order.
inline std::vector<Word> all_words(const GeneratorTable& table, int length) {
    std::vector<WordLetter> alphabet;
    for (const auto& [name, entry] : table.entries()) {
        alphabet.push_back({name, 1});
        alphabet.push_back({name, -1});
    }
    std::vector<Word> out;
    std::vector<std::size_t> idx(length, 0);
    if (length == 0) return {Word{}};
    for (;;) {
        Word w;
        for (int i = 0; i < length; ++i) w.push_back(alphabet[idx[i]]);
        out.push_back(std::move(w));
        int i = length - 1;
        while (i >= 0 && ++idx[i] == alphabet.size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

} // namespace testutil
