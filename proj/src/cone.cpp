#include "tricoord/cone.hpp"

#include <cstddef>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tricoord {

namespace {

// Exact phase-one simplex deciding solvability of A*x = b, x >= 0 with
// b >= 0: artificial variables start in the basis and their sum is driven
// to zero. Bland's rule (least index entering and leaving) guarantees
// termination. The tableau is kept small by the callers: the number of
// equations here is the coordinate dimension, never the row count of the
// stacked systems.
class PhaseOne {
public:
    PhaseOne(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()) {
        tab_ = std::move(a);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < rows_; ++k) tab_[i].push_back(i == k ? 1 : 0);
            tab_[i].push_back(b[i]);
        }
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) basis_[i] = cols_ + i;
        obj_.assign(cols_ + rows_ + 1, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= cols_ + rows_; ++j) obj_[j] -= tab_[i][j];
        for (std::size_t k = 0; k < rows_; ++k) obj_[cols_ + k] = 0;
    }

    // True iff the artificial objective reaches zero.
    bool solvable() {
        const std::size_t width = cols_ + rows_;
        for (;;) {
            if (obj_[width] == 0) return true;  // -(objective value)
            std::size_t enter = width;
            for (std::size_t j = 0; j < width; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == width) return obj_[width] == 0;

            std::size_t leave = rows_;
            std::optional<Rational> best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][width] / tab_[i][enter];
                if (!best || ratio < *best || (ratio == *best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows_) throw std::logic_error("phase-one objective unbounded");
            pivot(leave, enter);
        }
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        const std::size_t width = cols_ + rows_;
        const Rational p = tab_[r][c];
        for (std::size_t j = 0; j <= width; ++j) tab_[r][j] /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            const Rational f = tab_[i][c];
            for (std::size_t j = 0; j <= width; ++j)
                if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
        }
        if (obj_[c] != 0) {
            const Rational f = obj_[c];
            for (std::size_t j = 0; j <= width; ++j)
                if (tab_[r][j] != 0) obj_[j] -= f * tab_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> obj_;
    std::vector<std::size_t> basis_;
};

// Feasibility of {M*v >= 0, v >= 0, sum v = 1} through the Farkas dual:
// the system is infeasible iff some y >= 0 has yT*M <= -1 entrywise. The
// dual lives in n equations regardless of how many rows M has, which keeps
// the exact tableau tiny. Duplicate rows of M are collapsed first.
bool feasible_by_dual(const BigMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<BigInt> r(n);
        bool zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = m.at(i, j);
            if (r[j] != 0) zero = false;
        }
        if (!zero) rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // solvable{ -M^T y - s = 1, y >= 0, s >= 0 } <=> primal infeasible
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(rows.size() + n));
    std::vector<Rational> b(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < rows.size(); ++i) a[j][i] = -Rational(rows[i][j]);
        a[j][rows.size() + j] = -1;
    }
    return !PhaseOne(std::move(a), std::move(b)).solvable();
}

void gcd_reduce(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (BigInt& x : v) x /= g;
}

// Fraction-free echelon state for incremental independence tests.
struct Echelon {
    std::vector<std::vector<BigInt>> rows;
    std::vector<std::size_t> leads;

    // Reduces r against the stored rows; returns false if r is dependent.
    bool try_add(std::vector<BigInt> r) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const std::size_t p = leads[k];
            if (r[p] == 0) continue;
            const BigInt a = rows[k][p], b = r[p];
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] * a - rows[k][j] * b;
            gcd_reduce(r);
        }
        std::size_t lead = r.size();
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) { lead = j; break; }
        if (lead == r.size()) return false;
        rows.push_back(std::move(r));
        leads.push_back(lead);
        return true;
    }

    void pop() {
        rows.pop_back();
        leads.pop_back();
    }
};

std::vector<BigInt> matrix_row(const BigMatrix& m, std::size_t i) {
    std::vector<BigInt> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
    return r;
}

bool in_cone(const BigMatrix& m, const std::vector<BigInt>& v) {
    for (const BigInt& x : v)
        if (x < 0) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) s += m.at(i, j) * v[j];
        if (s < 0) return false;
    }
    return true;
}

// Kernel direction of n-1 independent rows: w_i = (-1)^i det(drop column i).
std::vector<BigInt> kernel_direction(const std::vector<std::vector<BigInt>>& rows,
                                     std::size_t n) {
    std::vector<BigInt> w(n);
    for (std::size_t drop = 0; drop < n; ++drop) {
        BigMatrix minor(n - 1, n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == drop) continue;
                minor.at(i, jj++) = rows[i][j];
            }
        }
        BigInt d = determinant(minor);
        w[drop] = (drop % 2 == 0) ? d : -d;
    }
    return w;
}

// Supports are enumerated lexicographically with the row stack read from the
// bottom up, so tight rows are preferred from the trailing blocks of stacked
// systems. This matches the declared deterministic tie-break on the axis
// examples: identity(2) yields (1,0), {identity(2), (1,-1)} yields (1,1).
struct SupportSearch {
    const BigMatrix& m;
    std::size_t n;
    Echelon ech;
    std::vector<std::vector<BigInt>> chosen;

    std::optional<std::vector<BigInt>> run(std::size_t pos) {
        if (chosen.size() + 1 == n) return test_support();
        if (chosen.size() + pos + 1 < n) return std::nullopt;
        for (std::size_t i = pos; i-- > 0;) {
            std::vector<BigInt> r = matrix_row(m, i);
            if (!ech.try_add(r)) continue;
            chosen.push_back(std::move(r));
            if (auto hit = run(i)) return hit;
            chosen.pop_back();
            ech.pop();
        }
        return std::nullopt;
    }

    std::optional<std::vector<BigInt>> test_support() const {
        std::vector<BigInt> w = kernel_direction(chosen, n);
        bool zero = true;
        for (const BigInt& x : w)
            if (x != 0) { zero = false; break; }
        if (zero) throw std::logic_error("extremal_vector: singular kernel on independent rows");
        if (in_cone(m, w)) {
            gcd_reduce(w);
            return w;
        }
        for (BigInt& x : w) x = -x;
        if (in_cone(m, w)) {
            gcd_reduce(w);
            return w;
        }
        return std::nullopt;
    }
};

} // namespace

bool cone_feasible(const BigMatrix& m) {
    if (m.cols() == 0) return false;
    return feasible_by_dual(m);
}

bool cone_feasible_normalized(const BigMatrix& m, const std::vector<BigInt>& norm) {
    const std::size_t n = m.cols();
    if (n == 0 || norm.size() != n) throw std::invalid_argument("cone_feasible_normalized: shape");
    // Farkas: {M w >= 0, norm . w = 1} is infeasible iff some y >= 0 has
    // yT M = -norm.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m.rows()));
    std::vector<Rational> b(n);
    for (std::size_t j = 0; j < n; ++j) {
        b[j] = -Rational(norm[j]);
        for (std::size_t i = 0; i < m.rows(); ++i) a[j][i] = Rational(m.at(i, j));
        if (b[j] < 0) {
            b[j] = -b[j];
            for (auto& x : a[j]) x = -x;
        }
    }
    return !PhaseOne(std::move(a), std::move(b)).solvable();
}

std::vector<BigInt> extremal_vector(const BigMatrix& m) {
    const std::size_t n = m.cols();
    if (n == 0) throw std::invalid_argument("extremal_vector: empty system");
    if (!cone_feasible(m)) throw std::invalid_argument("extremal_vector: infeasible cone");

    SupportSearch search{m, n, {}, {}};
    if (auto v = search.run(m.rows())) return *v;
    throw std::logic_error("extremal_vector: no tight-row support found on feasible cone");
}

} // namespace tricoord
