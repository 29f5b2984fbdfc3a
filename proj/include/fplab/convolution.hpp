#pragma once

#include <cstdint>
#include <vector>

namespace fplab {

// Exact cyclic convolution over index ring Z/n: c[k] = sum_i a[i]*b[(k-i) mod n].
// Values are carried modulo the NTT prime 29*2^57+1, so results are exact
// whenever every true coefficient is below ~4.17e18. All callers here
// convolve indicators or count histograms whose entries stay far below that.
std::vector<std::uint64_t> cyclic_convolution(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);

}  // namespace fplab
