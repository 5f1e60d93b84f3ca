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

#include "drinfeld/wk_ring.hpp"

#include <stdexcept>

namespace drinfeld {

YPoly ypoly_mod(const FieldTower& tower, YPoly f, const YPoly& m) {
    if (m.empty() || !tower.is_one(m.back()))
        throw std::invalid_argument("ypoly_mod: divisor must be monic");
    while (!f.empty() && tower.is_zero(f.back())) f.pop_back();
    while (f.size() >= m.size()) {
        LElem lead = f.back();
        std::size_t off = f.size() - m.size();
        if (!tower.is_zero(lead)) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                f[off + i] = tower.sub(f[off + i], tower.mul(lead, m[i]));
        }
        f.pop_back();
        while (!f.empty() && tower.is_zero(f.back())) f.pop_back();
    }
    return f;
}

WkRing::WkRing(const FieldTower& tower, const LElem& gamma_x, int k)
    : tower_(&tower), gamma_(gamma_x), k_(k) {
    if (k < 1) throw std::invalid_argument("WkRing: precision k must be >= 1");
    // mu = (y - gamma)^k
    mu_ = {tower.neg(gamma_), tower.one()};
    for (int i = 1; i < k; ++i) {
        YPoly next(mu_.size() + 1, tower.zero());
        for (std::size_t j = 0; j < mu_.size(); ++j) {
            next[j + 1] = tower.add(next[j + 1], mu_[j]);
            next[j] = tower.sub(next[j], tower.mul(gamma_, mu_[j]));
        }
        mu_ = std::move(next);
    }
}

void WkRing::check(const Elem& a) const {
    if (a.k != k_ || static_cast<int>(a.c.size()) != k_)
        throw std::invalid_argument("WkRing: mismatched precision");
}

WkElem WkRing::zero() const { return WkElem{k_, std::vector<LElem>(k_, tower_->zero())}; }

WkElem WkRing::one() const {
    WkElem e = zero();
    e.c[0] = tower_->one();
    return e;
}

WkElem WkRing::from_l(const LElem& c) const {
    WkElem e = zero();
    e.c[0] = c;
    return e;
}

WkElem WkRing::add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    WkElem r = a;
    for (int i = 0; i < k_; ++i) r.c[i] = tower_->add(r.c[i], b.c[i]);
    return r;
}

WkElem WkRing::sub(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    WkElem r = a;
    for (int i = 0; i < k_; ++i) r.c[i] = tower_->sub(r.c[i], b.c[i]);
    return r;
}

WkElem WkRing::neg(const Elem& a) const {
    check(a);
    WkElem r = a;
    for (auto& x : r.c) x = tower_->neg(x);
    return r;
}

WkElem WkRing::mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    YPoly prod(2 * k_ - 1, tower_->zero());
    for (int i = 0; i < k_; ++i) {
        if (tower_->is_zero(a.c[i])) continue;
        for (int j = 0; j < k_; ++j) {
            if (tower_->is_zero(b.c[j])) continue;
            prod[i + j] = tower_->add(prod[i + j], tower_->mul(a.c[i], b.c[j]));
        }
    }
    return reduce(prod);
}

WkElem WkRing::scale(const LElem& c, const Elem& a) const {
    check(a);
    WkElem r = a;
    for (auto& x : r.c) x = tower_->mul(c, x);
    return r;
}

WkElem WkRing::mul_y(const Elem& a) const {
    check(a);
    WkElem r = zero();
    const LElem& top = a.c[k_ - 1];
    for (int i = k_ - 1; i >= 1; --i) r.c[i] = a.c[i - 1];
    // y^k = y^k - mu, so fold the overflow back with -mu's low part
    if (!tower_->is_zero(top))
        for (int i = 0; i < k_; ++i)
            r.c[i] = tower_->sub(r.c[i], tower_->mul(top, mu_[i]));
    return r;
}

bool WkRing::is_zero(const Elem& a) const {
    check(a);
    for (const auto& x : a.c)
        if (!tower_->is_zero(x)) return false;
    return true;
}

WkElem WkRing::reduce(const YPoly& f) const {
    YPoly rem = ypoly_mod(*tower_, f, mu_);
    rem.resize(k_, tower_->zero());
    return WkElem{k_, std::move(rem)};
}

FrobShiftPlan make_shift_plan(const WkRing& ring, long t) {
    const FieldTower& tw = ring.tower();
    long n = tw.n();
    long tt = ((t % n) + n) % n;
    FrobShiftPlan plan(WkRing(tw, tw.frobenius(ring.gamma(), -tt), ring.k()));
    plan.twist_identity = (tt == 0);
    if (!plan.twist_identity) plan.twist_iterate = tw.frobenius_iterate(tt);
    return plan;
}

WkElem frobenius_shift_reduce(const WkRing& ring, const YPoly& f, const FrobShiftPlan& plan) {
    const FieldTower& tw = ring.tower();
    // reduce modulo mu^(-t) = (y - gamma^(q^-t))^k, then twist the remainder
    WkElem rem = plan.back_ring.reduce(f);
    if (!plan.twist_identity)
        for (auto& c : rem.c) c = tw.apply_iterate(c, plan.twist_iterate);
    return rem;
}

WkElem frobenius_shift_reduce(const WkRing& ring, const YPoly& f, long t) {
    return frobenius_shift_reduce(ring, f, make_shift_plan(ring, t));
}

}  // namespace drinfeld
