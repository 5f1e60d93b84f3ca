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

#ifndef DRINFELD_SKEW_HPP
#define DRINFELD_SKEW_HPP

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/field_tower.hpp"

namespace drinfeld {

/// Element of the skew polynomial ring L{tau} with tau * u = u^q * tau.
/// coeffs[i] is the coefficient of tau^i; trailing zeros trimmed, the zero
/// polynomial has an empty coefficient vector (degree -1 by convention).
struct SkewPoly {
    std::vector<LElem> c;

    bool operator==(const SkewPoly& rhs) const { return c == rhs.c; }
    bool operator!=(const SkewPoly& rhs) const { return c != rhs.c; }
};

inline int skew_deg(const SkewPoly& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool skew_is_zero(const SkewPoly& f) { return f.c.empty(); }

void skew_trim(const FieldTower& tower, SkewPoly& f);
SkewPoly skew_zero();
SkewPoly skew_one(const FieldTower& tower);
/// The constant skew polynomial c (empty if c = 0).
SkewPoly skew_const(const FieldTower& tower, const LElem& c);
/// The monomial c * tau^k.
SkewPoly skew_monomial(const FieldTower& tower, const LElem& c, int k);
/// tau^k.
SkewPoly tau_power(const FieldTower& tower, int k);

SkewPoly skew_add(const FieldTower& tower, const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_sub(const FieldTower& tower, const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_neg(const FieldTower& tower, const SkewPoly& f);
/// Left scalar multiple c * f.
SkewPoly skew_scale(const FieldTower& tower, const LElem& c, const SkewPoly& f);

/// Schoolbook product with the twist f_i * g_j^(q^i) landing at tau^(i+j).
SkewPoly skew_mul(const FieldTower& tower, const SkewPoly& f, const SkewPoly& g);

/// Right Euclidean division: f = quotient * g + remainder with
/// deg remainder < deg g.  g must be nonzero.
std::pair<SkewPoly, SkewPoly> skew_right_divmod(const FieldTower& tower, const SkewPoly& f,
                                                const SkewPoly& g);

SkewPoly skew_pow(const FieldTower& tower, const SkewPoly& f, unsigned e);

std::string skew_to_string(const FieldTower& tower, const SkewPoly& f);

}  // namespace drinfeld

#endif
