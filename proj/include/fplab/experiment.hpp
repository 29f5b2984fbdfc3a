#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fplab/expression.hpp"
#include "fplab/fpset.hpp"

namespace fplab {

struct GeneratorSpec {
    enum class Kind { RandomUniform, ArithmeticProgression, GeometricProgression, ExplicitList };

    Kind kind = Kind::RandomUniform;
    std::size_t size = 0;
    std::uint64_t seed = 0;
    std::uint32_t start = 0;
    std::uint32_t step = 1;   // AP; step 1 keeps |A-A| = 2n-1 below wraparound
    std::uint32_t ratio = 2;  // GP
    std::vector<std::uint32_t> elements;  // explicit list

    static Kind kind_from_string(const std::string& s);
    std::string label() const;
};

// Deterministic for a given seed; generated set has exactly spec.size
// elements or the call throws.
FpSet generate_set(const GeneratorSpec& spec, const PrimeField& field);
FpSet generate_set(const GeneratorSpec& spec, const PrimeField& field, std::uint64_t seed);

struct CheckSpec {
    std::string name;  // coverage|thm1|thm14|thm15|thm2|lemma-energy|variants|incidence-fuzz
    std::string expr;  // coverage only
};

struct ExperimentConfig {
    std::vector<std::uint32_t> primes;
    std::vector<GeneratorSpec> generators;
    std::vector<CheckSpec> checks;
    unsigned trials = 1;
    std::uint64_t master_seed = 0;
    std::string csv_path;
    std::string json_path;

    // Strict: unknown keys are rejected.
    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
};

struct ReportRow {
    std::uint32_t p = 0;
    std::string generator;
    std::size_t size_a = 0;
    std::size_t size_d = 0;
    std::string k;  // exact rational
    std::string check;
    std::string verdict;  // pass|fail|covered|missing:N|error:...
    std::string detail;   // key=value pairs, ';'-separated
    double walltime_ms = 0.0;
    bool violation = false;  // an assertable invariant failed
};

std::vector<ReportRow> run_experiment(const ExperimentConfig& config, unsigned jobs = 1);

// Fixed, versioned column order; walltime only when timing is requested so
// default outputs are byte-reproducible.
std::string rows_to_csv(const std::vector<ReportRow>& rows, bool timing = false);
std::string rows_to_json(const std::vector<ReportRow>& rows, bool timing = false);

struct ThresholdScanResult {
    std::uint32_t p = 0;
    bool found = false;
    std::size_t minimal_n = 0;
    double ref_p_13_22 = 0.0;
    double ref_p_4_7 = 0.0;
    double ref_p_5_8 = 0.0;
    unsigned confirm_passes = 0;   // fresh draws at minimal_n that passed
    bool below_fails = false;      // some draw at minimal_n - 1 failed
};

// Smallest n such that `trials` seeded draws of size n all satisfy the
// coverage check, with fresh-draw confirmation at n and failure evidence
// at n-1.
ThresholdScanResult threshold_scan(const PrimeField& field, GeneratorSpec::Kind kind,
                                   const SumExpression& check, unsigned trials,
                                   std::uint64_t seed);

}  // namespace fplab
