#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fplab/field.hpp"
#include "fplab/fpset.hpp"
#include "fplab/geometry.hpp"

namespace fplab {

// Euclidean: sum of coordinate squares. Minkowski: (x1-y1)^2 - (x2-y2)^2,
// dimension 2 only.
enum class QuadraticForm { Euclidean, Minkowski };

// Distinct points of F_p^2, the carrier for E in distance/bisector work.
struct PointSet2D {
    PrimeField field;
    std::vector<Point2> points;

    static PointSet2D from_points(PrimeField field, std::vector<Point2> pts);
    // E = A x A
    static PointSet2D product(const FpSet& a);
    std::size_t size() const { return points.size(); }
};

// Explicit point list in F_p^d, coordinates stored flat.
struct PointSetND {
    PrimeField field;
    std::size_t dim;
    std::vector<std::uint32_t> coords;

    static PointSetND product_power(const FpSet& a, std::size_t d);
    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    std::span<const std::uint32_t> at(std::size_t i) const {
        return {coords.data() + i * dim, dim};
    }
};

std::uint32_t algdist(const PrimeField& f, std::span<const std::uint32_t> x,
                      std::span<const std::uint32_t> y,
                      QuadraticForm form = QuadraticForm::Euclidean);
std::uint32_t algdist(const PrimeField& f, Point2 x, Point2 y,
                      QuadraticForm form = QuadraticForm::Euclidean);
std::uint32_t algdist(const PrimeField& f, Point3 x, Point3 y);

// Delta(E) by pair enumeration; guarded at |E| <= 10^4.
FpSet distance_set_explicit(const PointSetND& e, QuadraticForm form = QuadraticForm::Euclidean);
FpSet distance_set_explicit(const PointSet2D& e, QuadraticForm form = QuadraticForm::Euclidean);

// Delta(A^d) via the Cartesian-product identity: d-fold sumset of (A-A)^2.
FpSet distance_set_product(const FpSet& a, unsigned d);

// S_r = #{ordered (x,y) in E x E : ||x-y|| = r}; diagonal lands in S_0.
using SrHistogram = RepHistogram;
using NuHistogram = SrHistogram;

SrHistogram sr_histogram(const PointSet2D& e, QuadraticForm form = QuadraticForm::Euclidean);

// sum_{r != 0} S_r^2 = #{(x,y,z,t) in E^4 : ||x-y|| = ||z-t|| != 0}.
long long distance_energy(const PointSet2D& e);

struct BisectorLine {
    Line2 line;
    bool isotropic = false;  // ||a-b|| = 0
};

// Bisector of the segment ab: solutions of ||x-a|| = ||x-b||.
BisectorLine bisector(const PrimeField& f, Point2 a, Point2 b);

enum class BisectorClass { NonIsotropic, Isotropic, All };

// Multiplicities count ORDERED pairs (a,b), a != b.
struct BisectorCensus {
    LineMultiset lines;
    long long energy_nonisotropic = 0;
    long long energy_isotropic = 0;
    BisectorClass requested = BisectorClass::All;
};

BisectorCensus bisector_census(const PointSet2D& e, BisectorClass cls = BisectorClass::All);

// Apex-form isosceles triples (x,y,z): ||x-y|| = ||x-z|| != 0, split by the
// base pair. T = t1 + t2_degenerate + t2_isotropic.
struct IsoscelesCensus {
    long long t1 = 0;             // ||y-z|| != 0
    long long t2_degenerate = 0;  // y = z
    long long t2_isotropic = 0;   // ||y-z|| = 0, y != z
    long long total() const { return t1 + t2_degenerate + t2_isotropic; }
};

IsoscelesCensus isosceles_census(const PointSet2D& apexes, const PointSet2D& bases,
                                 QuadraticForm form = QuadraticForm::Euclidean);

// T1 via the incidence route: apex points against the non-isotropic bisector
// multiset of the bases, minus the apexes whose two equal distances vanish
// (possible when -1 is a square mod p; those triples are not T1 triangles).
long long isosceles_via_incidence(const PointSet2D& apexes, const PointSet2D& bases);

// Max points of E on any line or any circle ||x-c|| = r (r = 0 included).
long long max_line_circle_occupancy(const PointSet2D& e);

}  // namespace fplab
