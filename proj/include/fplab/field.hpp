#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fplab {

// Raised when an operation would exceed its desk-scale budget guard.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Odd prime modulus, word-sized. Primality is checked at construction by
// trial division; moduli stay below 2^31 so all element arithmetic fits
// in uint64 intermediates.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be an odd prime >= 3, got " +
                                        std::to_string(p));
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return std::uint32_t(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t sq(std::uint32_t a) const { return mul(a, a); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    // p is prime, so Fermat inversion is fine.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

    // Reduce a possibly negative 64-bit value into [0, p).
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return std::uint32_t(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (a != b) throw std::invalid_argument("field mismatch: p=" + std::to_string(a.p()) +
                                            " vs p=" + std::to_string(b.p()));
}

// Exact rational with 64-bit parts, always in lowest terms with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }
    static Rational integer(long long n) { return Rational(n, 1); }

    double value() const { return double(num) / double(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
        return {num * o.den, den * o.num};
    }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace fplab
