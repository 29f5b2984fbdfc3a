#include "fplab/distance.hpp"

#include <algorithm>
#include <map>

namespace fplab {
namespace {

constexpr std::size_t kExplicitBudget = 10'000;  // |E| cap for pairwise loops
constexpr std::size_t kBisectorBudget = 4'000;
constexpr std::uint64_t kIsoscelesBudget = 100'000'000;  // |apexes|*|bases|^2
constexpr std::size_t kOccupancyBudget = 300;

}  // namespace

PointSet2D PointSet2D::from_points(PrimeField field, std::vector<Point2> pts) {
    for (auto& u : pts) {
        u.x %= field.p();
        u.y %= field.p();
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return PointSet2D{field, std::move(pts)};
}

PointSet2D PointSet2D::product(const FpSet& a) {
    std::vector<Point2> pts;
    auto elems = a.elements();
    pts.reserve(elems.size() * elems.size());
    for (auto x : elems)
        for (auto y : elems) pts.push_back(Point2{x, y});
    return PointSet2D{a.field(), std::move(pts)};
}

PointSetND PointSetND::product_power(const FpSet& a, std::size_t d) {
    if (d == 0) throw std::invalid_argument("product_power: d must be >= 1");
    auto elems = a.elements();
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        n *= std::max<std::size_t>(elems.size(), 1);
        if (n > kExplicitBudget) throw BudgetError("product_power: |A|^d exceeds budget");
    }
    if (elems.empty()) n = 0;
    PointSetND e{a.field(), d, {}};
    e.coords.reserve(n * d);
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t count = 0; count < n; ++count) {
        for (std::size_t j = 0; j < d; ++j) e.coords.push_back(elems[idx[j]]);
        for (std::size_t j = d; j-- > 0;) {
            if (++idx[j] < elems.size()) break;
            idx[j] = 0;
        }
    }
    return e;
}

std::uint32_t algdist(const PrimeField& f, std::span<const std::uint32_t> x,
                      std::span<const std::uint32_t> y, QuadraticForm form) {
    if (x.size() != y.size()) throw std::invalid_argument("algdist: dimension mismatch");
    if (form == QuadraticForm::Minkowski) {
        if (x.size() != 2) throw std::invalid_argument("algdist: Minkowski form is 2D only");
        return f.sub(f.sq(f.sub(x[0], y[0])), f.sq(f.sub(x[1], y[1])));
    }
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.sq(f.sub(x[i], y[i])));
    return acc;
}

std::uint32_t algdist(const PrimeField& f, Point2 x, Point2 y, QuadraticForm form) {
    std::uint32_t dx = f.sub(x.x, y.x), dy = f.sub(x.y, y.y);
    if (form == QuadraticForm::Minkowski) return f.sub(f.sq(dx), f.sq(dy));
    return f.add(f.sq(dx), f.sq(dy));
}

std::uint32_t algdist(const PrimeField& f, Point3 x, Point3 y) {
    return f.add(f.add(f.sq(f.sub(x.x, y.x)), f.sq(f.sub(x.y, y.y))), f.sq(f.sub(x.z, y.z)));
}

FpSet distance_set_explicit(const PointSetND& e, QuadraticForm form) {
    if (e.size() > kExplicitBudget)
        throw BudgetError("distance_set_explicit: |E| > 10^4; use distance_set_product");
    FpSet out(e.field);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            out.insert(algdist(e.field, e.at(i), e.at(j), form));
    return out;
}

FpSet distance_set_explicit(const PointSet2D& e, QuadraticForm form) {
    if (e.size() > kExplicitBudget)
        throw BudgetError("distance_set_explicit: |E| > 10^4; use distance_set_product");
    FpSet out(e.field);
    for (auto x : e.points)
        for (auto y : e.points) out.insert(algdist(e.field, x, y, form));
    return out;
}

FpSet distance_set_product(const FpSet& a, unsigned d) {
    if (d == 0) throw std::invalid_argument("distance_set_product: d must be >= 1");
    return iterated_sumset(square_set(difference_set(a)), d);
}

SrHistogram sr_histogram(const PointSet2D& e, QuadraticForm form) {
    if (e.size() > kExplicitBudget) throw BudgetError("sr_histogram: |E| > 10^4");
    SrHistogram h(e.field);
    for (auto x : e.points)
        for (auto y : e.points) ++h.counts[algdist(e.field, x, y, form)];
    return h;
}

long long distance_energy(const PointSet2D& e) {
    auto h = sr_histogram(e);
    long long acc = 0;
    for (std::uint32_t r = 1; r < e.field.p(); ++r) acc += h.counts[r] * h.counts[r];
    return acc;
}

BisectorLine bisector(const PrimeField& f, Point2 a, Point2 b) {
    if (a == b) throw std::invalid_argument("bisector: degenerate pair");
    // ||x-a|| = ||x-b||  <=>  2(b-a).x = ||b|| - ||a||
    std::uint32_t ca = f.mul(2, f.sub(b.x, a.x));
    std::uint32_t cb = f.mul(2, f.sub(b.y, a.y));
    std::uint32_t cc = f.sub(f.add(f.sq(b.x), f.sq(b.y)), f.add(f.sq(a.x), f.sq(a.y)));
    return BisectorLine{Line2::from_coeffs(f, ca, cb, cc), algdist(f, a, b) == 0};
}

BisectorCensus bisector_census(const PointSet2D& e, BisectorClass cls) {
    if (e.size() > kBisectorBudget) throw BudgetError("bisector_census: |E| > 4*10^3");
    const auto& f = e.field;
    BisectorCensus census{LineMultiset(f), 0, 0, cls};
    for (auto a : e.points) {
        for (auto b : e.points) {
            if (a == b) continue;
            auto bl = bisector(f, a, b);
            if (cls == BisectorClass::NonIsotropic && bl.isotropic) continue;
            if (cls == BisectorClass::Isotropic && !bl.isotropic) continue;
            census.lines.add(bl.line);
        }
    }
    for (const auto& [l, m] : census.lines.entries()) {
        if (l.isotropic(f))
            census.energy_isotropic += m * m;
        else
            census.energy_nonisotropic += m * m;
    }
    return census;
}

IsoscelesCensus isosceles_census(const PointSet2D& apexes, const PointSet2D& bases,
                                 QuadraticForm form) {
    require_same_field(apexes.field, bases.field);
    if (std::uint64_t(apexes.size()) * bases.size() * bases.size() > kIsoscelesBudget)
        throw BudgetError("isosceles_census: |apexes|*|bases|^2 > 10^8");
    const auto& f = apexes.field;
    IsoscelesCensus out;
    std::vector<std::vector<std::uint32_t>> buckets(f.p());
    for (auto x : apexes.points) {
        for (std::uint32_t i = 0; i < bases.size(); ++i)
            buckets[algdist(f, x, bases.points[i], form)].push_back(i);
        for (std::uint32_t r = 1; r < f.p(); ++r) {
            const auto& bucket = buckets[r];
            if (bucket.empty()) continue;
            out.t2_degenerate += (long long)bucket.size();
            for (auto yi : bucket) {
                for (auto zi : bucket) {
                    if (yi == zi) continue;
                    if (algdist(f, bases.points[yi], bases.points[zi], form) == 0)
                        ++out.t2_isotropic;
                    else
                        ++out.t1;
                }
            }
        }
        for (auto& bucket : buckets) bucket.clear();
    }
    return out;
}

long long isosceles_via_incidence(const PointSet2D& apexes, const PointSet2D& bases) {
    require_same_field(apexes.field, bases.field);
    const auto& f = apexes.field;
    auto census = bisector_census(bases, BisectorClass::NonIsotropic);
    PointMultiset2 pm(f);
    for (auto x : apexes.points) pm.add(x);
    long long incidences = count_incidences_2d(pm, census.lines);
    // An apex with ||x-y|| = ||x-z|| = 0 sits on the bisector but is not a T1
    // triangle; only possible when -1 is a square mod p.
    long long correction = 0;
    std::vector<Point2> zero_dist;
    for (auto x : apexes.points) {
        zero_dist.clear();
        for (auto y : bases.points)
            if (algdist(f, x, y) == 0) zero_dist.push_back(y);
        for (auto y : zero_dist)
            for (auto z : zero_dist)
                if (y != z && algdist(f, y, z) != 0) ++correction;
    }
    return incidences - correction;
}

long long max_line_circle_occupancy(const PointSet2D& e) {
    if (e.size() > kOccupancyBudget) throw BudgetError("max_line_circle_occupancy: |E| > 300");
    const auto& f = e.field;
    std::uint64_t centers = std::uint64_t(f.p()) * f.p();
    if (centers * e.size() > 500'000'000ULL)
        throw BudgetError("max_line_circle_occupancy: p^2*|E| too large");
    if (e.size() <= 1) return (long long)e.size();
    long long best = 1;
    // Lines: any line with >= 2 points of E passes through a pair.
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            Point2 a = e.points[i], b = e.points[j];
            std::uint32_t dx = f.sub(b.x, a.x), dy = f.sub(b.y, a.y);
            Line2 l = Line2::from_coeffs(f, dy, f.neg(dx),
                                         f.sub(f.mul(dy, a.x), f.mul(dx, a.y)));
            long long cnt = 0;
            for (auto u : e.points)
                if (l.contains(f, u)) ++cnt;
            best = std::max(best, cnt);
        }
    }
    // Circles: exhaust all centers; per center, the best distance-bin.
    std::vector<long long> bins(f.p());
    for (std::uint32_t cx = 0; cx < f.p(); ++cx) {
        for (std::uint32_t cy = 0; cy < f.p(); ++cy) {
            std::fill(bins.begin(), bins.end(), 0);
            Point2 c{cx, cy};
            for (auto u : e.points) ++bins[algdist(f, u, c)];
            for (auto v : bins) best = std::max(best, v);
        }
    }
    return best;
}

}  // namespace fplab
