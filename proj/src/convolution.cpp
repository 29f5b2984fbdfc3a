#include "fplab/convolution.hpp"

#include <stdexcept>

namespace fplab {
namespace {

// 29 * 2^57 + 1, primitive root 3. Supports transform sizes up to 2^57.
constexpr std::uint64_t kMod = 4179340454199820289ULL;
constexpr std::uint64_t kRoot = 3;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return std::uint64_t((unsigned __int128)a * b % kMod);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// In-place iterative radix-2 NTT, n a power of two.
void ntt(std::vector<std::uint64_t>& v, bool inverse) {
    std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w = powmod(kRoot, (kMod - 1) / len);
        if (inverse) w = powmod(w, kMod - 2);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t cur = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::uint64_t u = v[i + j];
                std::uint64_t t = mulmod(v[i + j + len / 2], cur);
                v[i + j] = u + t < kMod ? u + t : u + t - kMod;
                v[i + j + len / 2] = u >= t ? u - t : u + kMod - t;
                cur = mulmod(cur, w);
            }
        }
    }
    if (inverse) {
        std::uint64_t ninv = powmod(n % kMod, kMod - 2);
        for (auto& x : v) x = mulmod(x, ninv);
    }
}

}  // namespace

std::vector<std::uint64_t> cyclic_convolution(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolution: size mismatch");
    std::size_t n = a.size();
    if (n == 0) return {};
    std::size_t m = 1;
    while (m < 2 * n) m <<= 1;
    std::vector<std::uint64_t> fa(m, 0), fb(m, 0);
    for (std::size_t i = 0; i < n; ++i) fa[i] = a[i] % kMod;
    for (std::size_t i = 0; i < n; ++i) fb[i] = b[i] % kMod;
    ntt(fa, false);
    ntt(fb, false);
    for (std::size_t i = 0; i < m; ++i) fa[i] = mulmod(fa[i], fb[i]);
    ntt(fa, true);
    // Fold the linear convolution back onto Z/n.
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t i = 0; i < 2 * n - 1 && i < m; ++i) {
        std::uint64_t s = out[i % n] + fa[i];
        out[i % n] = s < kMod ? s : s - kMod;
    }
    return out;
}

}  // namespace fplab
