#include "tricoord/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tricoord {

BigMatrix BigMatrix::identity(std::size_t n) {
    BigMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigMatrix BigMatrix::mul(const BigMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    BigMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<BigInt> BigMatrix::mul_vec(const std::vector<BigInt>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("mul_vec: shape mismatch");
    std::vector<BigInt> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

BigMatrix BigMatrix::vstack(const BigMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
    BigMatrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

BigMatrix BigMatrix::sub(const BigMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: shape mismatch");
    BigMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

BigMatrix BigMatrix::negated() const {
    BigMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) r.data_[i] = -data_[i];
    return r;
}

void BigMatrix::append_row(const std::vector<BigInt>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

BitBound bit_bound(const BigMatrix& m) {
    BitBound b;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            b = BitBound::max(b, BitBound::of_integer(m.at(i, j)));
    return b;
}

BitBound bit_bound(const std::vector<BigInt>& v) {
    BitBound b;
    for (const BigInt& x : v) b = BitBound::max(b, BitBound::of_integer(x));
    return b;
}

BigInt determinant(const BigMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    BigMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t rank(const BigMatrix& m) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<BigInt> r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols() && rk < rows.size(); ++col) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const BigInt a = rows[rk][col], b = rows[i][col];
            for (std::size_t j = col; j < m.cols(); ++j)
                rows[i][j] = rows[i][j] * a - rows[rk][j] * b;
        }
        ++rk;
    }
    return rk;
}

BigMatrix kernel_basis(const BigMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> rows(nr, std::vector<Rational>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) rows[i][j] = Rational(m.at(i, j));

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t piv = r;
        while (piv < nr && rows[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[r], rows[piv]);
        const Rational p = rows[r][col];
        for (std::size_t j = col; j < nc; ++j) rows[r][j] /= p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c2 : pivot_col) is_pivot[c2] = true;
    std::size_t d = 0;
    for (std::size_t j = 0; j < nc; ++j)
        if (!is_pivot[j]) ++d;
    BigMatrix k(nc, d);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> w(nc, Rational(0));
        w[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) w[pivot_col[i]] = -rows[i][free_col];
        BigInt den = 1;
        for (const Rational& x : w) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
        std::vector<BigInt> col(nc);
        BigInt g = 0;
        for (std::size_t j = 0; j < nc; ++j) {
            col[j] = boost::multiprecision::numerator(w[j]) *
                     (den / boost::multiprecision::denominator(w[j]));
            g = boost::multiprecision::gcd(g, col[j]);
        }
        if (g > 1)
            for (BigInt& x : col) x /= g;
        for (std::size_t j = 0; j < nc; ++j) k.at(j, out) = col[j];
        ++out;
    }
    return k;
}

BitBound hadamard_bound(const BitBound& k, std::size_t n) {
    if (n < 1) throw std::invalid_argument("hadamard_bound: n must be >= 1");
    BigInt nn = 1;
    for (std::size_t i = 0; i < n; ++i) nn *= n;
    return k.times(n).plus_half_log2(nn);
}

} // namespace tricoord
