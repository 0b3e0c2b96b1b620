#pragma once

#include <cstdint>
#include <vector>

namespace nlg {

// Bit tuples are flattened with party 1 in the least-significant position.
using Bits = std::uint32_t;

inline int bit_of(Bits w, int party) { return static_cast<int>((w >> (party - 1)) & 1u); }

inline int parity(Bits w) { return __builtin_parity(w); }

inline Bits pack_bits(const std::vector<int>& bits) {
    Bits w = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) w |= Bits{1} << i;
    return w;
}

inline std::vector<int> unpack_bits(Bits w, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>((w >> i) & 1u);
    return out;
}

// Pairwise-product parity: XOR over i<j of w_i*w_j, i.e. C(popcount, 2) mod 2.
inline int pair_parity(Bits w) {
    int m = __builtin_popcount(w);
    return (m * (m - 1) / 2) & 1;
}

}  // namespace nlg
