#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fplab/distance.hpp"
#include "fplab/expression.hpp"
#include "fplab/fpset.hpp"
#include "fplab/geometry.hpp"

namespace fplab {

// One lambda of a coverage proof construction. The solution count comes from
// the representation-function pipeline; incidence_count is the generic
// incidence engine run on the same configuration when requested.
struct ConstructionReport {
    std::uint32_t lambda = 0;
    long long solution_count = 0;
    std::optional<long long> incidence_count;
    long long num_points = 0;   // |P|
    long long num_objects = 0;  // |L| in 2D, |H| in 3D
    bool trigger = false;       // |P||L| > p^3, resp. |P||H| > p^4
};

// Points (-2x, v+x^2), lines yX+Y = lambda-u-y^2, with u,v over Delta(A^2).
ConstructionReport thm1_construction(const FpSet& a, std::uint32_t lambda,
                                     bool cross_check = false);
// Same shape with u,v over A^2+A^2.
ConstructionReport thm14_construction(const FpSet& a, std::uint32_t lambda,
                                      bool cross_check = false);
// 3D: points (-2x,-2s,v+x^2+s^2), planes yX+tY+Z = lambda-u-y^2-t^2.
ConstructionReport thm15_construction(const FpSet& a, std::uint32_t lambda,
                                      bool cross_check = false);

// Pipeline solution counts for every lambda in F_p at once.
std::vector<long long> thm1_sweep(const FpSet& a);
std::vector<long long> thm14_sweep(const FpSet& a);
std::vector<long long> thm15_sweep(const FpSet& a);

struct BoundReport {
    long long lhs = 0;
    std::vector<std::pair<std::string, double>> rhs_terms;
    double ratio = 0.0;  // lhs / min(applicable rhs), report-only
    std::string regime;
    std::vector<std::pair<std::string, double>> extras;
};

// |A^2+A^2| against both regime bounds, with the equation-counting chain
// (N, E) recomputed exactly.
BoundReport thm2_report(const FpSet& a);

// Non-isotropic bisector energy of A x A against |A|^{21/4} and p^{1/3}|A|^{14/3}.
BoundReport lemma_energy_report(const FpSet& a);

// Exact N: solutions of u = (x+y)^2 + (z+t)^2 with x,z in A-A, y,t in A,
// u in A^2+A^2 \ {0}.
long long count_quadratic_solutions(const FpSet& a);

struct VariantReport {
    IsoscelesCensus census;      // apexes -A x -A, bases D x D
    long long t1_incidence = 0;  // incidence route
    bool identity_ok = false;    // t1_incidence == census.t1
    long long q_nonisotropic = 0;
    double lemma42_bound = 0.0;
    double rudnev_bound = 0.0;
    double cauchy_schwarz_bound = 0.0;
    // (i, #non-isotropic bisector lines with 2^i <= m < 2^{i+1})
    std::vector<std::pair<int, long long>> dyadic;
};

VariantReport variant_bounds_report(const FpSet& a);

struct ThresholdExponent {
    Rational epsilon;         // eps_d
    Rational per_coordinate;  // ((d+1)/2 - eps_d)/d
};

ThresholdExponent threshold_exponent(unsigned d);

}  // namespace fplab
