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

#ifndef DRINFELD_DRINFELD_MODULE_HPP
#define DRINFELD_DRINFELD_MODULE_HPP

#include "drinfeld/skew.hpp"

namespace drinfeld {

/// A rank-r Drinfeld module phi over (L, gamma) with
/// phi_x = gamma_x + Delta_1 tau + ... + Delta_r tau^r, Delta_r != 0.
/// The subfield decomposition (p_poly, m, g, alpha) is computed eagerly at
/// construction since the descent maps need it anyway.
class DrinfeldModule {
  public:
    DrinfeldModule(const FieldTower& tower, LElem gamma_x, std::vector<LElem> deltas);

    const FieldTower& tower() const { return *tower_; }
    const LElem& gamma_x() const { return gamma_; }
    /// Delta_1..Delta_r; deltas()[i] is Delta_{i+1}.
    const std::vector<LElem>& deltas() const { return deltas_; }
    int rank() const { return static_cast<int>(deltas_.size()); }
    const SubfieldDecomposition& decomp() const { return decomp_; }
    int m() const { return decomp_.m; }
    const FqPoly& p_poly() const { return decomp_.p_poly; }
    bool is_prime_field() const { return decomp_.m == tower_->n(); }
    const SkewPoly& phi_x() const { return phi_x_; }

    /// Lambda_i = -Delta_i / Delta_r for i = 0..r-1 (Delta_0 = gamma_x),
    /// plus 1/Delta_r; the companion-matrix ingredients.
    struct Lambdas {
        std::vector<LElem> lam;  // Lambda_0..Lambda_{r-1}
        LElem delta_r_inv;
    };
    Lambdas lambdas() const;

  private:
    const FieldTower* tower_;
    LElem gamma_;
    std::vector<LElem> deltas_;
    SubfieldDecomposition decomp_;
    SkewPoly phi_x_;
};

/// phi_a by Horner over the skew ring; deg_tau phi_a = r deg a.
SkewPoly phi_eval(const DrinfeldModule& module, const FqPoly& a);

/// Same value through the coefficient recurrence
/// f_{i+1,j} = gamma^(q^j) f_{i,j} + sum_t Delta_t^(q^(j-t)) f_{i,j-t};
/// kept as an independent code path for differential testing.
SkewPoly phi_eval_recurrence(const DrinfeldModule& module, const FqPoly& a);

/// True iff u commutes with phi_x, i.e. u is an endomorphism of phi.
bool is_endomorphism(const DrinfeldModule& module, const SkewPoly& u);

/// The Frobenius endomorphism tau^n.
SkewPoly frobenius_endo(const DrinfeldModule& module);

}  // namespace drinfeld

#endif
