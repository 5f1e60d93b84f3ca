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

#include "drinfeld/skew.hpp"

#include <stdexcept>

namespace drinfeld {

void skew_trim(const FieldTower& tower, SkewPoly& f) {
    while (!f.c.empty() && tower.is_zero(f.c.back())) f.c.pop_back();
}

SkewPoly skew_zero() { return {}; }

SkewPoly skew_one(const FieldTower& tower) { return SkewPoly{{tower.one()}}; }

SkewPoly skew_const(const FieldTower& tower, const LElem& c) {
    if (tower.is_zero(c)) return {};
    return SkewPoly{{c}};
}

SkewPoly skew_monomial(const FieldTower& tower, const LElem& c, int k) {
    if (tower.is_zero(c)) return {};
    SkewPoly f;
    f.c.assign(k + 1, tower.zero());
    f.c[k] = c;
    return f;
}

SkewPoly tau_power(const FieldTower& tower, int k) {
    return skew_monomial(tower, tower.one(), k);
}

SkewPoly skew_add(const FieldTower& tower, const SkewPoly& f, const SkewPoly& g) {
    SkewPoly r;
    std::size_t len = std::max(f.c.size(), g.c.size());
    r.c.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (i < f.c.size() && i < g.c.size())
            r.c.push_back(tower.add(f.c[i], g.c[i]));
        else if (i < f.c.size())
            r.c.push_back(f.c[i]);
        else
            r.c.push_back(g.c[i]);
    }
    skew_trim(tower, r);
    return r;
}

SkewPoly skew_sub(const FieldTower& tower, const SkewPoly& f, const SkewPoly& g) {
    return skew_add(tower, f, skew_neg(tower, g));
}

SkewPoly skew_neg(const FieldTower& tower, const SkewPoly& f) {
    SkewPoly r = f;
    for (auto& c : r.c) c = tower.neg(c);
    return r;
}

SkewPoly skew_scale(const FieldTower& tower, const LElem& c, const SkewPoly& f) {
    if (tower.is_zero(c)) return {};
    SkewPoly r = f;
    for (auto& x : r.c) x = tower.mul(c, x);
    skew_trim(tower, r);
    return r;
}

SkewPoly skew_mul(const FieldTower& tower, const SkewPoly& f, const SkewPoly& g) {
    if (skew_is_zero(f) || skew_is_zero(g)) return {};
    SkewPoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, tower.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (tower.is_zero(f.c[i])) continue;
        // tau^i g = g^(q^i) tau^i
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            if (tower.is_zero(g.c[j])) continue;
            LElem tw = tower.frobenius(g.c[j], static_cast<long>(i));
            r.c[i + j] = tower.add(r.c[i + j], tower.mul(f.c[i], tw));
        }
    }
    skew_trim(tower, r);
    return r;
}

std::pair<SkewPoly, SkewPoly> skew_right_divmod(const FieldTower& tower, const SkewPoly& f,
                                                const SkewPoly& g) {
    if (skew_is_zero(g)) throw std::domain_error("skew_right_divmod: division by zero");
    SkewPoly rem = f;
    skew_trim(tower, rem);
    int dg = skew_deg(g);
    if (skew_deg(rem) < dg) return {skew_zero(), rem};
    SkewPoly quo;
    quo.c.assign(rem.c.size() - g.c.size() + 1, tower.zero());
    LElem lead_inv = tower.inv(g.c.back());
    while (skew_deg(rem) >= dg) {
        int shift = skew_deg(rem) - dg;
        // (c tau^shift)(g_dg tau^dg) = c g_dg^(q^shift) tau^(deg rem)
        LElem c = tower.mul(rem.c.back(), tower.frobenius(lead_inv, shift));
        quo.c[shift] = c;
        for (int j = 0; j <= dg; ++j) {
            if (tower.is_zero(g.c[j])) continue;
            LElem term = tower.mul(c, tower.frobenius(g.c[j], shift));
            rem.c[shift + j] = tower.sub(rem.c[shift + j], term);
        }
        skew_trim(tower, rem);
        if (skew_is_zero(rem)) break;
    }
    skew_trim(tower, quo);
    return {quo, rem};
}

SkewPoly skew_pow(const FieldTower& tower, const SkewPoly& f, unsigned e) {
    SkewPoly r = skew_one(tower);
    SkewPoly base = f;
    while (e) {
        if (e & 1) r = skew_mul(tower, r, base);
        base = skew_mul(tower, base, base);
        e >>= 1;
    }
    return r;
}

std::string skew_to_string(const FieldTower& tower, const SkewPoly& f) {
    if (skew_is_zero(f)) return "0";
    std::string s;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (tower.is_zero(f.c[i])) continue;
        if (!s.empty()) s += " + ";
        std::string coef = tower.to_string(f.c[i]);
        if (i == 0) {
            s += coef.find(' ') != std::string::npos ? "(" + coef + ")" : coef;
            continue;
        }
        if (!tower.is_one(f.c[i]))
            s += (coef.find(' ') != std::string::npos ? "(" + coef + ")" : coef) + "*";
        s += (i == 1) ? "tau" : "tau^" + std::to_string(i);
    }
    return s;
}

}  // namespace drinfeld
