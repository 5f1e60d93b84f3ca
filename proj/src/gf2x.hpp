/*
   Copyright 2026 the drinfeld-charpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Internal bit-packed F_2[t] kernel.  Little-endian bit vectors: word i
// holds coefficients 64i..64i+63.  Not installed.

#ifndef DRINFELD_SRC_GF2X_HPP
#define DRINFELD_SRC_GF2X_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld::gf2x {

using Words = std::vector<std::uint64_t>;

inline Words pack(const FqPoly& a) {
    Words w((a.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) w[i >> 6] |= std::uint64_t(1) << (i & 63);
    return w;
}

inline FqPoly unpack(const Words& w, int len) {
    FqPoly a(len, 0);
    for (int i = 0; i < len; ++i)
        a[i] = (std::size_t(i >> 6) < w.size() && ((w[std::size_t(i) >> 6] >> (i & 63)) & 1)) ? 1
                                                                                             : 0;
    return a;
}

inline int deg(const Words& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<int>(i) * 64 + 63 - std::countl_zero(a[i]);
    return -1;
}

/// dst ^= src << k, where src has degree src_deg
inline void xor_shifted(Words& dst, const Words& src, int k, int src_deg) {
    if (src_deg < 0) return;
    int word = k >> 6, bit = k & 63;
    std::size_t top = std::size_t((src_deg + k) >> 6);
    if (dst.size() <= top) dst.resize(top + 1, 0);
    if (bit == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[word + i] ^= src[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[word + i] ^= (src[i] << bit) | carry;
            carry = src[i] >> (64 - bit);
        }
        if (carry) dst[word + src.size()] ^= carry;
    }
}

inline Words mul(const Words& a, int da, const Words& b, int db) {
    if (da < 0 || db < 0) return {};
    Words c(std::size_t(da + db) / 64 + 1, 0);
    for (int i = 0; i <= da; ++i)
        if ((a[std::size_t(i) >> 6] >> (i & 63)) & 1) xor_shifted(c, b, i, db);
    return c;
}

/// a mod m in place; m has degree dm >= 0
inline void mod(Words& a, const Words& m, int dm) {
    int da = deg(a);
    while (da >= dm) {
        xor_shifted(a, m, da - dm, dm);
        da = deg(a);
    }
}

inline Words gcd(Words a, Words b) {
    int db = deg(b);
    while (db >= 0) {
        mod(a, b, db);
        std::swap(a, b);
        db = deg(b);
    }
    return a;
}

inline bool is_one(const Words& a) { return deg(a) == 0; }

/// Distinct-degree sweep: true iff f (monic, degree d >= 1) has no
/// irreducible factor of degree <= d/2, i.e. is irreducible.
inline bool is_irreducible(const FqPoly& f) {
    int d = poly_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    Words m = pack(f);
    Words s{2};  // t
    for (int i = 1; 2 * i <= d; ++i) {
        Words sq = mul(s, deg(s), s, deg(s));
        mod(sq, m, d);
        s = std::move(sq);
        Words diff = s;
        if (diff.empty()) diff.resize(1, 0);
        diff[0] ^= 2;  // s - t
        if (deg(diff) < 0) return false;
        if (!is_one(gcd(diff, m))) return false;
    }
    return true;
}

}  // namespace drinfeld::gf2x

#endif
