#include "fplab/expression.hpp"

#include <cctype>
#include <stdexcept>

namespace fplab {
namespace {

// Strip whitespace and map the UTF-8 minus/multiplication signs that tend to
// arrive from copy-pasted expressions onto their ASCII forms.
std::string normalize(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size();) {
        unsigned char c = text[i];
        if (std::isspace(c)) {
            ++i;
        } else if (i + 2 < text.size() && c == 0xE2 && (unsigned char)text[i + 1] == 0x88 &&
                   (unsigned char)text[i + 2] == 0x92) {
            out += '-';  // U+2212 minus
            i += 3;
        } else if (i + 1 < text.size() && c == 0xC3 && (unsigned char)text[i + 1] == 0x97) {
            out += 'x';  // U+00D7 multiplication sign
            i += 2;
        } else {
            out += char(c);
            ++i;
        }
    }
    return out;
}

[[noreturn]] void fail(const std::string& text) {
    throw std::invalid_argument("malformed sum expression: \"" + text + "\"");
}

SumTerm parse_term(const std::string& t, const std::string& full) {
    SumTerm term;
    std::size_t pos = 0;
    if (t.compare(pos, 5, "(A-A)") == 0) {
        term.difference = true;
        pos += 5;
    } else if (t.compare(pos, 3, "A-A") == 0) {
        term.difference = true;
        pos += 3;
    } else if (pos < t.size() && t[pos] == 'A') {
        pos += 1;
    } else {
        fail(full);
    }
    if (t.compare(pos, 2, "^2") == 0) {
        term.squared = true;
        pos += 2;
    }
    if (pos < t.size() && t[pos] == 'x') {
        ++pos;
        std::size_t digits = 0;
        unsigned long n = 0;
        while (pos < t.size() && std::isdigit((unsigned char)t[pos])) {
            n = n * 10 + (t[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0 || n == 0 || n > 64) fail(full);
        term.repeat = unsigned(n);
    }
    if (pos != t.size()) fail(full);
    return term;
}

}  // namespace

SumExpression SumExpression::parse(std::string_view text) {
    std::string s = normalize(text);
    if (s.empty()) fail(std::string(text));
    SumExpression expr;
    std::size_t start = 0;
    while (start <= s.size()) {
        // '+' splits terms, but "A-A" contains no '+', so a plain find works.
        std::size_t plus = s.find('+', start);
        std::string piece = s.substr(start, plus == std::string::npos ? plus : plus - start);
        if (piece.empty()) fail(std::string(text));
        expr.terms.push_back(parse_term(piece, std::string(text)));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return expr;
}

std::string SumExpression::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        const auto& t = terms[i];
        out += t.difference ? "(A-A)" : "A";
        if (t.squared) out += "^2";
        if (t.repeat > 1) out += " x" + std::to_string(t.repeat);
    }
    return out;
}

FpSet evaluate_expression(const FpSet& a, const SumExpression& expr) {
    if (a.empty()) throw std::invalid_argument("evaluate_expression: empty set");
    if (expr.terms.empty()) throw std::invalid_argument("evaluate_expression: no terms");
    bool first = true;
    FpSet acc(a.field());
    for (const auto& t : expr.terms) {
        FpSet base = t.difference ? difference_set(a) : a;
        if (t.squared) base = square_set(base);
        FpSet value = iterated_sumset(base, t.repeat);
        acc = first ? value : sumset(acc, value);
        first = false;
    }
    return acc;
}

CoverageVerdict coverage(const FpSet& a, const SumExpression& expr) {
    FpSet value = evaluate_expression(a, expr);
    CoverageVerdict v{true, FpSet(a.field()), expr.str()};
    for (std::uint32_t x = 0; x < a.field().p(); ++x)
        if (!value.contains(x)) v.missing.insert(x);
    v.covered = v.missing.empty();
    return v;
}

}  // namespace fplab
