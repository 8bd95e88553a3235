#include "tricoord/bit_bound.hpp"

#include <cmath>
#include <stdexcept>

namespace tricoord {

namespace {

// Approximate log2 of a positive big integer.
double log2_of(const BigInt& x) {
    const std::size_t b = boost::multiprecision::msb(x);
    if (b <= 52) return std::log2(x.convert_to<double>());
    const BigInt top = x >> (b - 52);
    return static_cast<double>(b - 52) + std::log2(top.convert_to<double>());
}

} // namespace

BitBound BitBound::bits(std::size_t k) {
    BigInt s = 1;
    s <<= 2 * k;
    return BitBound(Rational(s));
}

BitBound BitBound::of_integer(const BigInt& x) {
    if (x == 0) return BitBound();
    return BitBound(Rational(x * x));
}

double BitBound::value() const {
    const BigInt num = boost::multiprecision::numerator(scale_);
    const BigInt den = boost::multiprecision::denominator(scale_);
    return (log2_of(num) - log2_of(den)) / 2.0;
}

BitBound& BitBound::operator+=(const BitBound& o) {
    scale_ *= o.scale_;
    return *this;
}

BitBound BitBound::times(std::size_t n) const {
    Rational r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= scale_;
    return BitBound(std::move(r));
}

BitBound BitBound::plus_half_log2(const BigInt& m) const {
    if (m <= 0) throw std::invalid_argument("plus_half_log2: m must be positive");
    return BitBound(scale_ * Rational(m));
}

BitBound BitBound::plus_bits(std::size_t k) const {
    BigInt s = 1;
    s <<= 2 * k;
    return BitBound(scale_ * Rational(s));
}

BitBound BitBound::max(const BitBound& a, const BitBound& b) {
    return a.scale_ < b.scale_ ? b : a;
}

bool BitBound::admits(const BigInt& x) const {
    return Rational(x * x) <= scale_;
}

} // namespace tricoord
