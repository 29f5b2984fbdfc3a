#include "fplab/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace fplab {
namespace {

using i128 = __int128;

// W(s) = #{(x,y) in A x A : (x-y)^2 = s}
std::vector<long long> diff_square_hist(const FpSet& a) {
    const auto& f = a.field();
    std::vector<long long> w(f.p(), 0);
    auto elems = a.elements();
    for (auto x : elems)
        for (auto y : elems) ++w[f.sq(f.sub(x, y))];
    return w;
}

std::vector<long long> cyclic_conv_naive(const PrimeField& f, const std::vector<long long>& a,
                                         const std::vector<long long>& b) {
    std::vector<long long> out(f.p(), 0);
    for (std::uint32_t i = 0; i < f.p(); ++i) {
        if (!a[i]) continue;
        for (std::uint32_t j = 0; j < f.p(); ++j) out[f.add(i, j)] += a[i] * b[j];
    }
    return out;
}

// Shared body of the two 2D constructions; `u_set` is Delta(A^2) or A^2+A^2.
std::vector<long long> sweep_2d(const FpSet& a, const FpSet& u_set) {
    auto w = diff_square_hist(a);
    auto rep = rep_function(u_set, u_set);
    return cyclic_conv_naive(a.field(), w, rep.counts);
}

ConstructionReport construction_2d(const FpSet& a, const FpSet& u_set, std::uint32_t lambda,
                                   bool cross_check) {
    if (a.empty()) throw std::invalid_argument("construction: empty set");
    const auto& f = a.field();
    ConstructionReport r;
    r.lambda = f.reduce(lambda);
    r.solution_count = sweep_2d(a, u_set)[r.lambda];
    r.num_points = (long long)a.size() * (long long)u_set.size();
    r.num_objects = r.num_points;
    r.trigger = i128(r.num_points) * r.num_objects > i128(f.p()) * f.p() * f.p();
    if (cross_check) {
        PointMultiset2 pts(f);
        LineMultiset lines(f);
        for (auto x : a.elements())
            for (auto v : u_set.elements())
                pts.add(Point2{f.neg(f.mul(2, x)), f.add(v, f.sq(x))});
        for (auto y : a.elements())
            for (auto u : u_set.elements())
                lines.add(Line2::from_coeffs(f, y, 1, f.sub(f.sub(r.lambda, u), f.sq(y))));
        r.incidence_count = count_incidences_2d(pts, lines);
    }
    return r;
}

}  // namespace

std::vector<long long> thm1_sweep(const FpSet& a) {
    return sweep_2d(a, distance_set_product(a, 2));
}

std::vector<long long> thm14_sweep(const FpSet& a) {
    auto sq = square_set(a);
    return sweep_2d(a, sumset(sq, sq));
}

std::vector<long long> thm15_sweep(const FpSet& a) {
    auto sq = square_set(a);
    auto s = sumset(sq, sq);
    auto w = diff_square_hist(a);
    auto rep = rep_function(s, s);
    auto ww = cyclic_conv_naive(a.field(), w, w);
    return cyclic_conv_naive(a.field(), ww, rep.counts);
}

ConstructionReport thm1_construction(const FpSet& a, std::uint32_t lambda, bool cross_check) {
    return construction_2d(a, distance_set_product(a, 2), lambda, cross_check);
}

ConstructionReport thm14_construction(const FpSet& a, std::uint32_t lambda, bool cross_check) {
    auto sq = square_set(a);
    return construction_2d(a, sumset(sq, sq), lambda, cross_check);
}

ConstructionReport thm15_construction(const FpSet& a, std::uint32_t lambda, bool cross_check) {
    if (a.empty()) throw std::invalid_argument("construction: empty set");
    const auto& f = a.field();
    auto sq = square_set(a);
    auto s = sumset(sq, sq);
    ConstructionReport r;
    r.lambda = f.reduce(lambda);
    r.solution_count = thm15_sweep(a)[r.lambda];
    r.num_points = (long long)a.size() * a.size() * s.size();
    r.num_objects = r.num_points;
    r.trigger = i128(r.num_points) * r.num_objects > i128(f.p()) * f.p() * f.p() * f.p();
    if (cross_check) {
        PointMultiset3 pts(f);
        PlaneMultiset planes(f);
        auto elems = a.elements();
        for (auto x : elems)
            for (auto sv : elems)
                for (auto v : s.elements())
                    pts.add(Point3{f.neg(f.mul(2, x)), f.neg(f.mul(2, sv)),
                                   f.add(v, f.add(f.sq(x), f.sq(sv)))});
        for (auto y : elems)
            for (auto t : elems)
                for (auto u : s.elements())
                    planes.add(Plane3::from_coeffs(
                        f, y, t, 1,
                        f.sub(f.sub(f.sub(r.lambda, u), f.sq(y)), f.sq(t))));
        r.incidence_count = count_incidences_3d(pts, planes);
    }
    return r;
}

long long count_quadratic_solutions(const FpSet& a) {
    if (a.empty()) throw std::invalid_argument("count_quadratic_solutions: empty set");
    const auto& f = a.field();
    auto d = difference_set(a);
    auto sq = square_set(a);
    auto s = sumset(sq, sq);
    // G(w) = #{(x,y) in D x A : (x+y)^2 = w}
    std::vector<long long> g(f.p(), 0);
    for (auto x : d.elements())
        for (auto y : a.elements()) ++g[f.sq(f.add(x, y))];
    auto h = cyclic_conv_naive(f, g, g);
    long long n = 0;
    for (std::uint32_t u = 1; u < f.p(); ++u)
        if (s.contains(u)) n += h[u];
    return n;
}

BoundReport thm2_report(const FpSet& a) {
    if (a.empty()) throw std::invalid_argument("thm2_report: empty set");
    const auto& f = a.field();
    double p = f.p();
    auto stats = doubling_stats(a);
    double k = stats.k.value();
    double na = double(a.size());
    auto sq = square_set(a);
    auto s = sumset(sq, sq);

    BoundReport r;
    r.lhs = (long long)s.size();
    double rhs_common = p / std::pow(k, 4.0);
    double rhs1 = std::pow(na, 19.0 / 8) / (std::pow(k, 21.0 / 8) * std::sqrt(p));
    double rhs2 = std::pow(na, 8.0 / 3) / (std::pow(k, 7.0 / 3) * std::pow(p, 2.0 / 3));
    r.rhs_terms = {{"p/K^4", rhs_common},
                   {"|A|^{19/8}/(K^{21/8}p^{1/2})", rhs1},
                   {"|A|^{8/3}/(K^{7/3}p^{2/3})", rhs2}};

    double kn = k * na;
    bool medium = kn > std::pow(p, 4.0 / 7) && kn <= std::pow(p, 5.0 / 8);
    bool small = kn <= std::pow(p, 2.0 / 3);
    if (medium) {
        r.regime = "p^{4/7} < K|A| <= p^{5/8}";
        r.ratio = double(r.lhs) / std::min(rhs_common, rhs2);
    } else if (small) {
        r.regime = "K|A| <= p^{2/3}";
        r.ratio = double(r.lhs) / std::min(rhs_common, rhs1);
    } else {
        r.regime = "outside stated regimes";
        r.ratio = double(r.lhs) / rhs_common;
    }

    // Exact pieces of the equation-counting chain.
    long long n = count_quadratic_solutions(a);
    // E: tuples with (d1+a1)^2+(d2+a2)^2 = (d3+a3)^2+(d4+a4)^2 != 0
    auto d = difference_set(a);
    std::vector<long long> g(f.p(), 0);
    for (auto x : d.elements())
        for (auto y : a.elements()) ++g[f.sq(f.add(x, y))];
    auto h = cyclic_conv_naive(f, g, g);
    double e = 0;
    for (std::uint32_t w = 1; w < f.p(); ++w) e += double(h[w]) * double(h[w]);
    r.extras = {{"K", k},
                {"N", double(n)},
                {"N_lower_bound", na * na * na * na - 2 * na},
                {"E", e},
                {"cauchy_schwarz_rhs", std::sqrt(double(r.lhs)) * std::sqrt(e)}};
    return r;
}

BoundReport lemma_energy_report(const FpSet& a) {
    if (a.empty()) throw std::invalid_argument("lemma_energy_report: empty set");
    double p = a.field().p();
    double na = double(a.size());
    auto e = PointSet2D::product(a);
    auto census = bisector_census(e, BisectorClass::All);
    BoundReport r;
    r.lhs = census.energy_nonisotropic;
    r.rhs_terms = {{"|A|^{21/4}", std::pow(na, 21.0 / 4)},
                   {"p^{1/3}|A|^{14/3}", std::pow(p, 1.0 / 3) * std::pow(na, 14.0 / 3)}};
    double applicable = na <= std::pow(p, 2.0 / 3) ? r.rhs_terms[0].second
                                                   : r.rhs_terms[1].second;
    r.ratio = r.lhs > 0 ? double(r.lhs) / applicable : 0.0;
    if (na > std::pow(p, 4.0 / 7) && na < std::pow(p, 5.0 / 8))
        r.regime = "p^{4/7} << |A| << p^{5/8}";
    else if (na <= std::pow(p, 2.0 / 3))
        r.regime = "|A| <= p^{2/3}";
    else
        r.regime = "outside stated regimes";
    r.extras = {{"energy_isotropic", double(census.energy_isotropic)},
                {"bisector_mass", double(census.lines.mass())}};
    return r;
}

VariantReport variant_bounds_report(const FpSet& a) {
    if (a.empty()) throw std::invalid_argument("variant_bounds_report: empty set");
    const auto& f = a.field();
    auto d = difference_set(a);
    FpSet neg_a(f);
    for (auto x : a.elements()) neg_a.insert(f.neg(x));
    auto apexes = PointSet2D::product(neg_a);
    auto bases = PointSet2D::product(d);

    VariantReport r;
    r.census = isosceles_census(apexes, bases);
    r.t1_incidence = isosceles_via_incidence(apexes, bases);
    r.identity_ok = r.t1_incidence == r.census.t1;

    auto bc = bisector_census(bases, BisectorClass::NonIsotropic);
    r.q_nonisotropic = bc.energy_nonisotropic;
    for (const auto& [l, m] : bc.lines.entries()) {
        int i = 0;
        while ((1LL << (i + 1)) <= m) ++i;
        while ((int)r.dyadic.size() <= i) r.dyadic.emplace_back((int)r.dyadic.size(), 0);
        ++r.dyadic[i].second;
    }

    double p = f.p(), na = double(a.size()), nd = double(d.size());
    double q = double(r.q_nonisotropic);
    r.lemma42_bound = std::pow(na, 1.5) * std::pow(nd, 4.0) / std::sqrt(p) +
                      std::pow(na, 1.25) * std::pow(q, 0.25) * nd * nd + std::pow(nd, 4.0) +
                      na * na * nd * nd;
    r.rudnev_bound = na * na * std::pow(nd, 4.0) / p + std::pow(na, 1.5) * std::pow(nd, 3.0);
    r.cauchy_schwarz_bound = na * na * std::sqrt(q);
    return r;
}

ThresholdExponent threshold_exponent(unsigned d) {
    if (d < 6) throw std::invalid_argument("threshold_exponent: requires d >= 6");
    if (d > 60) throw std::invalid_argument("threshold_exponent: d too large for exact rationals");
    Rational eps;
    if (d % 2 == 1) {
        // (3*2^{(d-5)/2} - (d+1)/2) / (3*2^{(d-3)/2} - 1)
        long long pw = 1LL << ((d - 5) / 2);
        eps = Rational(6 * pw - (long long)(d + 1), 2 * (6 * pw - 1));
    } else {
        long long pw = 1LL << (d / 2);
        eps = Rational(pw - (long long)d - 1, 2 * pw - 2);
    }
    Rational per = (Rational(d + 1, 2) - eps) / Rational::integer(d);
    return ThresholdExponent{eps, per};
}

}  // namespace fplab
