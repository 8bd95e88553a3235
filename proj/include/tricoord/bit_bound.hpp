#pragma once

#include <cstddef>

#include "tricoord/bigint.hpp"

namespace tricoord {

/// An exact bound on bit sizes. A value b bounds an integer x when
/// log2|x| <= b, i.e. |x| <= 2^b.
///
/// Bounds of the form k*n + n*log2(n)/2 are irrational in general, so the
/// value is stored as an exact rational `scale` with b = log2(scale)/2.
/// Every operation needed here (sums, integer multiples, adding log2(n)/2,
/// comparisons against integers) is then exact rational arithmetic on
/// `scale`; no floating point is involved except for display.
class BitBound {
public:
    BitBound() : scale_(1) {}

    /// Bound of exactly k bits.
    static BitBound bits(std::size_t k);

    /// log2|x|; the all-zero case is defined as 0.
    static BitBound of_integer(const BigInt& x);

    /// Exact representation: 4^value.
    const Rational& scale() const { return scale_; }

    /// Approximate numeric value in bits, for reporting only.
    double value() const;

    /// value(a + b) = value(a) + value(b).
    BitBound& operator+=(const BitBound& o);
    friend BitBound operator+(BitBound a, const BitBound& b) { return a += b; }

    /// value * n.
    BitBound times(std::size_t n) const;

    /// value + log2(m)/2, m a positive integer.
    BitBound plus_half_log2(const BigInt& m) const;

    /// value + k.
    BitBound plus_bits(std::size_t k) const;

    static BitBound max(const BitBound& a, const BitBound& b);

    /// |x| <= 2^value, exactly.
    bool admits(const BigInt& x) const;

    bool operator==(const BitBound& o) const { return scale_ == o.scale_; }
    bool operator<=(const BitBound& o) const { return scale_ <= o.scale_; }
    bool operator<(const BitBound& o) const { return scale_ < o.scale_; }

private:
    explicit BitBound(Rational s) : scale_(std::move(s)) {}

    Rational scale_;
};

} // namespace tricoord
