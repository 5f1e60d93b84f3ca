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

#ifndef DRINFELD_WK_RING_HPP
#define DRINFELD_WK_RING_HPP

#include "drinfeld/linalg.hpp"

namespace drinfeld {

/// Polynomial in y with coefficients in L (little-endian, trimmed).
using YPoly = std::vector<LElem>;
using YRing = PolyRing<LRing>;

/// Remainder of f by a monic divisor m over L[y].
YPoly ypoly_mod(const FieldTower& tower, YPoly f, const YPoly& m);

/// Element of W_k = L[y]/(y - gamma_x)^k on the monomial basis 1, y, ...,
/// y^(k-1): exactly k coefficients.  Frobenius acts coefficient-wise on
/// this basis, which the shift-reduction lemma requires.
struct WkElem {
    int k = 0;
    std::vector<LElem> c;

    bool operator==(const WkElem& rhs) const { return k == rhs.k && c == rhs.c; }
    bool operator!=(const WkElem& rhs) const { return !(*this == rhs); }
};

/// The ring W_k attached to (tower, gamma_x, k); mu = (y - gamma_x)^k.
class WkRing {
  public:
    WkRing(const FieldTower& tower, const LElem& gamma_x, int k);

    using Elem = WkElem;

    const FieldTower& tower() const { return *tower_; }
    const LElem& gamma() const { return gamma_; }
    int k() const { return k_; }
    /// Coefficients of mu = (y - gamma_x)^k, length k+1, monic.
    const YPoly& mu() const { return mu_; }

    Elem zero() const;
    Elem one() const;
    Elem from_l(const LElem& c) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    /// Scalar multiple c * a, c in L.
    Elem scale(const LElem& c, const Elem& a) const;
    /// y * a reduced mod mu.
    Elem mul_y(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const;

    /// Canonical remainder of f in W_k.
    Elem reduce(const YPoly& f) const;

  private:
    void check(const Elem& a) const;

    const FieldTower* tower_;
    LElem gamma_;
    int k_;
    YPoly mu_;
};

/// f^(q^t) mod mu computed without materializing f^(q^t): reduce f modulo
/// mu^(-t) = (y - gamma^(q^-t))^k, then twist the k remainder coefficients.
WkElem frobenius_shift_reduce(const WkRing& ring, const YPoly& f, long t);

/// Pre-resolved Frobenius data for one shift amount, so a caller applying
/// the same t to many polynomials pays one iterate chain and one shifted
/// modulus, not one per call.
struct FrobShiftPlan {
    WkRing back_ring;     ///< W_k at gamma^(q^-t), i.e. modulus mu^(-t)
    LElem twist_iterate;  ///< t^(q^t) mod ell, composition point for [t]
    bool twist_identity = false;

    explicit FrobShiftPlan(WkRing back) : back_ring(std::move(back)) {}
};

FrobShiftPlan make_shift_plan(const WkRing& ring, long t);
WkElem frobenius_shift_reduce(const WkRing& ring, const YPoly& f, const FrobShiftPlan& plan);

}  // namespace drinfeld

#endif
