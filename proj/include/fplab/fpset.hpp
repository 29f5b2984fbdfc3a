#pragma once

#include <cstdint>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

// A subset of F_p stored as a p-bit membership indicator with a cached
// cardinality. The bit layout is the carrier for the word-parallel
// rotate-OR sumset.
class FpSet {
public:
    explicit FpSet(PrimeField field)
        : field_(field), words_((field.p() + 63) / 64, 0), size_(0) {}

    static FpSet from_elements(PrimeField field, const std::vector<std::uint32_t>& elems) {
        FpSet s(field);
        for (auto e : elems) s.insert(field.reduce(std::int64_t(e)));
        return s;
    }
    static FpSet full(PrimeField field) {
        FpSet s(field);
        for (auto& w : s.words_) w = ~std::uint64_t(0);
        s.mask_tail();
        s.size_ = field.p();
        return s;
    }

    const PrimeField& field() const { return field_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void insert(std::uint32_t x) {
        if (x >= field_.p()) throw std::out_of_range("FpSet: element out of range");
        std::uint64_t bit = std::uint64_t(1) << (x & 63);
        if (!(words_[x >> 6] & bit)) {
            words_[x >> 6] |= bit;
            ++size_;
        }
    }

    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out;
        out.reserve(size_);
        for (std::uint32_t x = 0; x < field_.p(); ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const FpSet& o) const {
        return field_ == o.field_ && words_ == o.words_;
    }
    bool operator!=(const FpSet& o) const { return !(*this == o); }

    // In-place OR of `other` rotated left by `shift` positions (mod p).
    void or_rotated(const FpSet& other, std::uint32_t shift);

private:
    void mask_tail() {
        std::uint32_t tail = field_.p() & 63;
        if (tail) words_.back() &= (std::uint64_t(1) << tail) - 1;
    }
    void recount();

    PrimeField field_;
    std::vector<std::uint64_t> words_;
    std::size_t size_;
};

// Exact counts of representations r(x) under an additive expression.
// Total mass is declared by the producing operation.
struct RepHistogram {
    PrimeField field;
    std::vector<long long> counts;

    explicit RepHistogram(PrimeField f) : field(f), counts(f.p(), 0) {}
    long long total_mass() const {
        long long m = 0;
        for (auto c : counts) m += c;
        return m;
    }
    FpSet support() const {
        FpSet s(field);
        for (std::uint32_t x = 0; x < field.p(); ++x)
            if (counts[x] > 0) s.insert(x);
        return s;
    }
};

struct DoublingStats {
    std::size_t size_a = 0;
    std::size_t size_d = 0;
    Rational k;  // |A-A| / |A|, exact
};

FpSet difference_set(const FpSet& a);
FpSet square_set(const FpSet& a);

// Word-parallel rotate-OR sumset; bit-exact against sumset_naive.
FpSet sumset(const FpSet& b, const FpSet& c);
FpSet sumset_naive(const FpSet& b, const FpSet& c);

FpSet iterated_sumset(const FpSet& s, unsigned k);

// counts(x) = #{(b,c) in B x C : b + c = x}.
RepHistogram rep_function(const FpSet& b, const FpSet& c);
RepHistogram rep_function_naive(const FpSet& b, const FpSet& c);
// Exact NTT-backed cyclic convolution of the indicators; used by
// rep_function when the naive loop would dominate.
RepHistogram rep_function_convolution(const FpSet& b, const FpSet& c);

DoublingStats doubling_stats(const FpSet& a);

}  // namespace fplab
