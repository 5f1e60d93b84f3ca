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

#include "drinfeld/drinfeld_module.hpp"

#include <stdexcept>

namespace drinfeld {

DrinfeldModule::DrinfeldModule(const FieldTower& tower, LElem gamma_x, std::vector<LElem> deltas)
    : tower_(&tower), gamma_(std::move(gamma_x)), deltas_(std::move(deltas)) {
    if (deltas_.empty()) throw std::invalid_argument("DrinfeldModule: delta list is empty");
    if (tower_->is_zero(deltas_.back()))
        throw std::invalid_argument("DrinfeldModule: Delta_r must be nonzero");
    for (const auto& d : deltas_)
        if (static_cast<int>(d.c.size()) != tower_->n())
            throw std::invalid_argument("DrinfeldModule: delta coefficient has wrong length");
    if (static_cast<int>(gamma_.c.size()) != tower_->n())
        throw std::invalid_argument("DrinfeldModule: gamma_x has wrong length");

    decomp_ = subfield_decomposition(*tower_, gamma_);

    phi_x_.c.reserve(deltas_.size() + 1);
    phi_x_.c.push_back(gamma_);
    for (const auto& d : deltas_) phi_x_.c.push_back(d);
    skew_trim(*tower_, phi_x_);
}

DrinfeldModule::Lambdas DrinfeldModule::lambdas() const {
    Lambdas L;
    L.delta_r_inv = tower_->inv(deltas_.back());
    L.lam.reserve(deltas_.size());
    L.lam.push_back(tower_->neg(tower_->mul(gamma_, L.delta_r_inv)));
    for (std::size_t i = 0; i + 1 < deltas_.size(); ++i)
        L.lam.push_back(tower_->neg(tower_->mul(deltas_[i], L.delta_r_inv)));
    return L;
}

SkewPoly phi_eval(const DrinfeldModule& module, const FqPoly& a) {
    const FieldTower& tw = module.tower();
    if (a.empty()) return skew_zero();
    SkewPoly acc = skew_const(tw, tw.from_fq(a.back()));
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        acc = skew_mul(tw, acc, module.phi_x());
        if (a[i]) acc = skew_add(tw, acc, skew_const(tw, tw.from_fq(a[i])));
    }
    return acc;
}

SkewPoly phi_eval_recurrence(const DrinfeldModule& module, const FqPoly& a) {
    const FieldTower& tw = module.tower();
    if (a.empty()) return skew_zero();
    int r = module.rank();
    int d = poly_deg(a);
    // f[i][j] = coefficient of tau^j in phi_{x^i}; grow i by right-multiplying
    // with phi_x: f_{i+1,j} = gamma^[j] f_{i,j} + sum_t Delta_t^[j-t] f_{i,j-t}
    std::vector<LElem> cur{tw.one()};
    SkewPoly result = skew_const(tw, tw.from_fq(a[0]));
    for (int i = 1; i <= d; ++i) {
        std::vector<LElem> next(cur.size() + r, tw.zero());
        for (std::size_t j = 0; j < next.size(); ++j) {
            LElem acc = tw.zero();
            if (j < cur.size())
                acc = tw.mul(tw.frobenius(module.gamma_x(), static_cast<long>(j)), cur[j]);
            for (int t = 1; t <= r; ++t) {
                if (static_cast<int>(j) - t < 0) break;
                std::size_t jt = j - t;
                if (jt >= cur.size() || tw.is_zero(cur[jt])) continue;
                LElem dt = tw.frobenius(module.deltas()[t - 1], static_cast<long>(jt));
                acc = tw.add(acc, tw.mul(dt, cur[jt]));
            }
            next[j] = acc;
        }
        cur = std::move(next);
        if (a[i]) {
            SkewPoly term;
            term.c.reserve(cur.size());
            LElem s = tw.from_fq(a[i]);
            for (const auto& cj : cur) term.c.push_back(tw.mul(s, cj));
            skew_trim(tw, term);
            result = skew_add(tw, result, term);
        }
    }
    return result;
}

bool is_endomorphism(const DrinfeldModule& module, const SkewPoly& u) {
    const FieldTower& tw = module.tower();
    SkewPoly lhs = skew_mul(tw, u, module.phi_x());
    SkewPoly rhs = skew_mul(tw, module.phi_x(), u);
    return lhs == rhs;
}

SkewPoly frobenius_endo(const DrinfeldModule& module) {
    return tau_power(module.tower(), module.tower().n());
}

}  // namespace drinfeld
