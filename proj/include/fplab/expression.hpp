#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fplab/fpset.hpp"

namespace fplab {

// One term of a sumset expression: A or A-A, optionally squared elementwise,
// repeated `repeat` times in the sum.
struct SumTerm {
    bool difference = false;  // A-A instead of A
    bool squared = false;
    unsigned repeat = 1;
};

// Surface syntax: terms "A" or "A-A" (parentheses optional), "^2", "xN"
// repetition shorthand, joined by "+". Whitespace-insensitive.
// Examples: "(A-A)^2 x5", "(A-A)^2 + A^2 x4".
struct SumExpression {
    std::vector<SumTerm> terms;

    static SumExpression parse(std::string_view text);
    std::string str() const;
};

FpSet evaluate_expression(const FpSet& a, const SumExpression& expr);

struct CoverageVerdict {
    bool covered = false;
    FpSet missing;  // unhit values
    std::string expression;
};

CoverageVerdict coverage(const FpSet& a, const SumExpression& expr);

}  // namespace fplab
