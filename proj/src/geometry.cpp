#include "fplab/geometry.hpp"

#include <cmath>

namespace fplab {
namespace {

using i128 = __int128;

i128 sq128(i128 v) { return v * v; }

long long incidences_2d_pairs(const PointMultiset2& points, const LineMultiset& lines) {
    const auto& f = points.field();
    long long total = 0;
    for (const auto& [l, ml] : lines.entries())
        for (const auto& [u, mu] : points.entries())
            if (l.contains(f, u)) total += ml * mu;
    return total;
}

long long incidences_2d_scan(const PointMultiset2& points, const LineMultiset& lines) {
    const auto& f = points.field();
    const auto& pm = points.entries();
    long long total = 0;
    for (const auto& [l, ml] : lines.entries()) {
        if (l.a == 1) {
            // x = c - b*y, one point per y
            for (std::uint32_t y = 0; y < f.p(); ++y) {
                auto it = pm.find(Point2{f.sub(l.c, f.mul(l.b, y)), y});
                if (it != pm.end()) total += ml * it->second;
            }
        } else {
            // horizontal line y = c
            for (std::uint32_t x = 0; x < f.p(); ++x) {
                auto it = pm.find(Point2{x, l.c});
                if (it != pm.end()) total += ml * it->second;
            }
        }
    }
    return total;
}

long long incidences_3d_pairs(const PointMultiset3& points, const PlaneMultiset& planes) {
    const auto& f = points.field();
    long long total = 0;
    for (const auto& [h, mh] : planes.entries())
        for (const auto& [u, mu] : points.entries())
            if (h.contains(f, u)) total += mh * mu;
    return total;
}

long long incidences_3d_scan(const PointMultiset3& points, const PlaneMultiset& planes) {
    const auto& f = points.field();
    const auto& pm = points.entries();
    long long total = 0;
    for (const auto& [h, mh] : planes.entries()) {
        for (std::uint32_t s = 0; s < f.p(); ++s) {
            for (std::uint32_t t = 0; t < f.p(); ++t) {
                Point3 u;
                if (h.a == 1) {
                    u = Point3{f.sub(h.d, f.add(f.mul(h.b, s), f.mul(h.c, t))), s, t};
                } else if (h.b == 1) {
                    u = Point3{s, f.sub(h.d, f.mul(h.c, t)), t};
                } else {
                    u = Point3{s, t, h.d};
                }
                auto it = pm.find(u);
                if (it != pm.end()) total += mh * it->second;
            }
        }
    }
    return total;
}

}  // namespace

long long count_incidences_2d(const PointMultiset2& points, const LineMultiset& lines) {
    require_same_field(points.field(), lines.field());
    std::uint64_t pair_cost = std::uint64_t(points.support_size()) * lines.support_size();
    std::uint64_t scan_cost = std::uint64_t(lines.support_size()) * points.field().p();
    return pair_cost <= scan_cost ? incidences_2d_pairs(points, lines)
                                  : incidences_2d_scan(points, lines);
}

long long count_incidences_3d(const PointMultiset3& points, const PlaneMultiset& planes) {
    require_same_field(points.field(), planes.field());
    std::uint64_t pair_cost = std::uint64_t(points.support_size()) * planes.support_size();
    std::uint64_t scan_cost = std::uint64_t(planes.support_size()) * points.field().p() *
                              points.field().p();
    return pair_cost <= scan_cost ? incidences_3d_pairs(points, planes)
                                  : incidences_3d_scan(points, planes);
}

IncidenceReport vinh_check(const PointMultiset2& points, const LineMultiset& lines) {
    if (!points.simple() || !lines.simple())
        throw std::invalid_argument("vinh_check: multiset input, use hanson_check");
    std::uint32_t p = points.field().p();
    long long i = count_incidences_2d(points, lines);
    i128 pl = i128(points.mass()) * lines.mass();
    IncidenceReport r;
    r.incidences = i;
    r.main_term = double(points.mass()) * double(lines.mass()) / p;
    r.error_budget = std::sqrt(double(p)) * std::sqrt(double(points.mass()) * double(lines.mass()));
    // |I - PL/p| <= sqrt(p*PL)  <=>  (I*p - PL)^2 <= p^3 * PL, exactly.
    r.satisfied = sq128(i128(i) * p - pl) <= i128(p) * p * p * pl;
    return r;
}

IncidenceReport hanson_check(const PointMultiset2& points, const LineMultiset& lines) {
    std::uint32_t p = points.field().p();
    long long i = count_incidences_2d(points, lines);
    i128 pl = i128(points.mass()) * lines.mass();
    i128 mm = i128(points.second_moment()) * lines.second_moment();
    IncidenceReport r;
    r.incidences = i;
    r.main_term = double(points.mass()) * double(lines.mass()) / p;
    r.error_budget = std::sqrt(double(p)) *
                     std::sqrt(double(points.second_moment()) * double(lines.second_moment()));
    // I <= PL/p + sqrt(p * Sp * Sl), one-sided, exact integers.
    i128 excess = i128(i) * p - pl;
    r.satisfied = excess <= 0 || sq128(excess) <= i128(p) * p * p * mm;
    return r;
}

IncidenceReport vinh_plane_check(const PointMultiset3& points, const PlaneMultiset& planes) {
    if (!points.simple() || !planes.simple())
        throw std::invalid_argument("vinh_plane_check: multiset input not supported");
    std::uint32_t p = points.field().p();
    long long i = count_incidences_3d(points, planes);
    i128 ph = i128(points.mass()) * planes.mass();
    IncidenceReport r;
    r.incidences = i;
    r.main_term = double(points.mass()) * double(planes.mass()) / p;
    r.error_budget = double(p) * std::sqrt(double(points.mass()) * double(planes.mass()));
    // |I - PH/p| <= p*sqrt(PH)  <=>  (I*p - PH)^2 <= p^4 * PH.
    r.satisfied = sq128(i128(i) * p - ph) <= i128(p) * p * i128(p) * p * ph;
    return r;
}

double stevens_dezeeuw_bound(long long size_a, long long size_l, std::uint32_t p) {
    double a = double(size_a), l = double(size_l);
    return std::pow(a, 1.5) * l / std::sqrt(double(p)) + std::pow(a, 1.25) * std::pow(l, 0.75) +
           a * a + l;
}

}  // namespace fplab
