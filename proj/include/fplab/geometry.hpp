#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "fplab/field.hpp"

namespace fplab {

struct Point2 {
    std::uint32_t x = 0, y = 0;
    auto operator<=>(const Point2&) const = default;
};

struct Point3 {
    std::uint32_t x = 0, y = 0, z = 0;
    auto operator<=>(const Point3&) const = default;
};

// Line aX + bY = c with the first nonzero of (a,b) scaled to 1, so equal
// geometric lines compare equal.
struct Line2 {
    std::uint32_t a = 0, b = 0, c = 0;
    auto operator<=>(const Line2&) const = default;

    static Line2 from_coeffs(const PrimeField& f, std::uint32_t a, std::uint32_t b,
                             std::uint32_t c) {
        if (a == 0 && b == 0) throw std::invalid_argument("Line2: (a,b) = (0,0)");
        std::uint32_t s = f.inv(a != 0 ? a : b);
        return Line2{f.mul(a, s), f.mul(b, s), f.mul(c, s)};
    }
    bool contains(const PrimeField& f, Point2 u) const {
        return f.add(f.mul(a, u.x), f.mul(b, u.y)) == c;
    }
    // Normal direction has vanishing norm; a property of the line itself.
    bool isotropic(const PrimeField& f) const {
        return f.add(f.sq(a), f.sq(b)) == 0;
    }
};

// Plane aX + bY + cZ = d, first nonzero of (a,b,c) scaled to 1.
struct Plane3 {
    std::uint32_t a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const Plane3&) const = default;

    static Plane3 from_coeffs(const PrimeField& f, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, std::uint32_t d) {
        if (a == 0 && b == 0 && c == 0)
            throw std::invalid_argument("Plane3: (a,b,c) = (0,0,0)");
        std::uint32_t s = f.inv(a != 0 ? a : (b != 0 ? b : c));
        return Plane3{f.mul(a, s), f.mul(b, s), f.mul(c, s), f.mul(d, s)};
    }
    bool contains(const PrimeField& f, Point3 u) const {
        return f.add(f.add(f.mul(a, u.x), f.mul(b, u.y)), f.mul(c, u.z)) == d;
    }
};

// Canonical elements with positive integer multiplicities; total mass and
// second moment kept incrementally.
template <class T>
class Multiset {
public:
    explicit Multiset(PrimeField field) : field_(field) {}

    void add(const T& elem, long long mult = 1) {
        if (mult <= 0) throw std::invalid_argument("Multiset: multiplicity must be positive");
        long long& m = mult_[elem];
        second_moment_ += (2 * m + mult) * mult;  // (m+mult)^2 - m^2
        m += mult;
        mass_ += mult;
    }

    const PrimeField& field() const { return field_; }
    long long mass() const { return mass_; }
    long long second_moment() const { return second_moment_; }
    std::size_t support_size() const { return mult_.size(); }
    bool simple() const { return mass_ == (long long)mult_.size(); }
    const std::map<T, long long>& entries() const { return mult_; }

private:
    PrimeField field_;
    std::map<T, long long> mult_;
    long long mass_ = 0;
    long long second_moment_ = 0;
};

using PointMultiset2 = Multiset<Point2>;
using PointMultiset3 = Multiset<Point3>;
using LineMultiset = Multiset<Line2>;
using PlaneMultiset = Multiset<Plane3>;

struct IncidenceReport {
    long long incidences = 0;
    double main_term = 0.0;      // |P||L|/p
    double error_budget = 0.0;   // p^{1/2} sqrt(|P||L|), or p sqrt(|P||H|) in 3D
    bool satisfied = false;
};

long long count_incidences_2d(const PointMultiset2& points, const LineMultiset& lines);
long long count_incidences_3d(const PointMultiset3& points, const PlaneMultiset& planes);

// Vinh's explicit-constant bound |I - |P||L|/p| <= p^{1/2} sqrt(|P||L|);
// satisfaction decided in exact integer arithmetic.
IncidenceReport vinh_check(const PointMultiset2& points, const LineMultiset& lines);

// Hanson's multiset variant: I <= |P||L|/p + p^{1/2} (sum m(u)^2)^{1/2} (sum m(l)^2)^{1/2}.
IncidenceReport hanson_check(const PointMultiset2& points, const LineMultiset& lines);

// Vinh's point-plane bound in F_p^3: |I - |P||H|/p| <= p sqrt(|P||H|).
IncidenceReport vinh_plane_check(const PointMultiset3& points, const PlaneMultiset& planes);

// Stevens-De Zeeuw bound value |A|^{3/2}|L|/p^{1/2} + |A|^{5/4}|L|^{3/4} + |A|^2 + |L|.
// Report-only; the theorem's constant is implicit.
double stevens_dezeeuw_bound(long long size_a, long long size_l, std::uint32_t p);

}  // namespace fplab
