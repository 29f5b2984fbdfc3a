#include "fplab/fpset.hpp"

#include <bit>

#include "fplab/convolution.hpp"

namespace fplab {
namespace {

// Read 64 bits of `w` starting at bit offset `bit`; bits past the end are zero.
std::uint64_t read64(const std::vector<std::uint64_t>& w, std::size_t bit) {
    std::size_t idx = bit >> 6, off = bit & 63;
    std::uint64_t lo = idx < w.size() ? w[idx] : 0;
    if (off == 0) return lo;
    std::uint64_t hi = idx + 1 < w.size() ? w[idx + 1] : 0;
    return (lo >> off) | (hi << (64 - off));
}

// OR `len` bits taken from src starting at src_bit into dst starting at dst_bit.
void or_bit_range(std::vector<std::uint64_t>& dst, std::size_t dst_bit,
                  const std::vector<std::uint64_t>& src, std::size_t src_bit,
                  std::size_t len) {
    while (len > 0) {
        std::size_t chunk = len < 64 ? len : 64;
        std::uint64_t bits = read64(src, src_bit);
        if (chunk < 64) bits &= (std::uint64_t(1) << chunk) - 1;
        std::size_t idx = dst_bit >> 6, off = dst_bit & 63;
        dst[idx] |= bits << off;
        if (off != 0 && idx + 1 < dst.size()) dst[idx + 1] |= bits >> (64 - off);
        dst_bit += chunk;
        src_bit += chunk;
        len -= chunk;
    }
}

}  // namespace

void FpSet::recount() {
    std::size_t n = 0;
    for (auto w : words_) n += std::size_t(std::popcount(w));
    size_ = n;
}

void FpSet::or_rotated(const FpSet& other, std::uint32_t shift) {
    require_same_field(field_, other.field_);
    std::uint32_t p = field_.p();
    shift %= p;
    if (shift == 0) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    } else {
        // bits [0, p-shift) -> [shift, p); bits [p-shift, p) -> [0, shift)
        or_bit_range(words_, shift, other.words_, 0, p - shift);
        or_bit_range(words_, 0, other.words_, p - shift, shift);
    }
    mask_tail();
    recount();
}

FpSet difference_set(const FpSet& a) {
    if (a.empty()) throw std::invalid_argument("difference_set: empty set");
    const auto& f = a.field();
    auto elems = a.elements();
    FpSet out(f);
    for (auto x : elems)
        for (auto y : elems) out.insert(f.sub(x, y));
    return out;
}

FpSet square_set(const FpSet& a) {
    const auto& f = a.field();
    FpSet out(f);
    for (std::uint32_t x = 0; x < f.p(); ++x)
        if (a.contains(x)) out.insert(f.sq(x));
    return out;
}

FpSet sumset(const FpSet& b, const FpSet& c) {
    require_same_field(b.field(), c.field());
    FpSet out(b.field());
    // Rotate the larger set by each element of the smaller one.
    const FpSet& small = b.size() <= c.size() ? b : c;
    const FpSet& big = b.size() <= c.size() ? c : b;
    for (auto x : small.elements()) out.or_rotated(big, x);
    return out;
}

FpSet sumset_naive(const FpSet& b, const FpSet& c) {
    require_same_field(b.field(), c.field());
    const auto& f = b.field();
    FpSet out(f);
    for (auto x : b.elements())
        for (auto y : c.elements()) out.insert(f.add(x, y));
    return out;
}

FpSet iterated_sumset(const FpSet& s, unsigned k) {
    if (k == 0) throw std::invalid_argument("iterated_sumset: k must be >= 1");
    FpSet acc = s;
    for (unsigned i = 1; i < k; ++i) acc = sumset(acc, s);
    return acc;
}

RepHistogram rep_function_naive(const FpSet& b, const FpSet& c) {
    require_same_field(b.field(), c.field());
    const auto& f = b.field();
    RepHistogram h(f);
    for (auto x : b.elements())
        for (auto y : c.elements()) ++h.counts[f.add(x, y)];
    return h;
}

RepHistogram rep_function_convolution(const FpSet& b, const FpSet& c) {
    require_same_field(b.field(), c.field());
    const auto& f = b.field();
    std::uint32_t p = f.p();
    std::vector<std::uint64_t> ib(p, 0), ic(p, 0);
    for (std::uint32_t x = 0; x < p; ++x) {
        if (b.contains(x)) ib[x] = 1;
        if (c.contains(x)) ic[x] = 1;
    }
    auto conv = cyclic_convolution(ib, ic);
    RepHistogram h(f);
    for (std::uint32_t x = 0; x < p; ++x) h.counts[x] = (long long)conv[x];
    return h;
}

RepHistogram rep_function(const FpSet& b, const FpSet& c) {
    require_same_field(b.field(), c.field());
    // The naive loop costs |B||C|; the NTT path ~ p log p.
    std::uint64_t naive_cost = std::uint64_t(b.size()) * c.size();
    std::uint64_t p = b.field().p();
    if (naive_cost > 64 * p) return rep_function_convolution(b, c);
    return rep_function_naive(b, c);
}

DoublingStats doubling_stats(const FpSet& a) {
    if (a.empty()) throw std::invalid_argument("doubling_stats: empty set");
    DoublingStats st;
    st.size_a = a.size();
    st.size_d = difference_set(a).size();
    st.k = Rational((long long)st.size_d, (long long)st.size_a);
    return st;
}

}  // namespace fplab
