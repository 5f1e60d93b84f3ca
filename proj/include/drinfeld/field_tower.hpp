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

#ifndef DRINFELD_FIELD_TOWER_HPP
#define DRINFELD_FIELD_TOWER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/counters.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/fq_linalg.hpp"

namespace drinfeld {

/// An element of L = F_q[t]/(ell): exactly n coefficients on 1, t, ..., t^(n-1).
struct LElem {
    std::vector<fq> c;

    bool operator==(const LElem& rhs) const { return c == rhs.c; }
    bool operator!=(const LElem& rhs) const { return c != rhs.c; }
};

/// The two-level extension F_p <= F_q <= L with precomputed Frobenius data.
///
/// The q-power Frobenius is applied by Horner modular composition against a
/// chain of precomputed iterates t^(q^(2^j)) mod ell; one composition costs
/// n - 1 multiplications in L.  All state is immutable after construction
/// apart from the operation counters (relaxed atomics).
class FieldTower {
  public:
    /// Builds F_q from (p, e, f) and L = F_q[t]/(ell); verifies p prime and
    /// f, ell irreducible.  ell is little-endian over F_q, monic, degree n >= 1.
    FieldTower(unsigned p, unsigned e, const std::optional<std::vector<fq>>& f,
               const FqPoly& ell);
    /// Same, from an already constructed base field.
    FieldTower(Fq base, const FqPoly& ell);

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    const Fq& fq_field() const { return fq_; }
    unsigned q() const { return fq_.q(); }
    int n() const { return n_; }
    const FqPoly& ell() const { return ell_; }
    /// t^q mod ell, the seed for Frobenius-by-composition.
    const LElem& frob_image() const { return frob_chain_[0]; }
    const OpCounters& counters() const { return counters_; }

    // -- element construction ------------------------------------------------
    LElem zero() const { return LElem{std::vector<fq>(n_, 0)}; }
    LElem one() const;
    LElem gen() const;  // the class of t
    LElem from_fq(fq a) const;
    /// From little-endian F_q coefficients; reduced mod ell if too long.
    LElem from_coeffs(const FqPoly& coeffs) const;
    bool is_zero(const LElem& a) const;
    bool is_one(const LElem& a) const;

    // -- field arithmetic ----------------------------------------------------
    LElem add(const LElem& a, const LElem& b) const;
    LElem sub(const LElem& a, const LElem& b) const;
    LElem neg(const LElem& a) const;
    LElem mul(const LElem& a, const LElem& b) const;
    LElem inv(const LElem& a) const;
    LElem div(const LElem& a, const LElem& b) const { return mul(a, inv(b)); }
    LElem pow(const LElem& a, std::uint64_t e) const;

    /// c^(q^(t mod n)); negative t allowed.
    LElem frobenius(const LElem& a, long t) const;
    /// The composition point t^(q^(t mod n)) mod ell, for use with compose().
    LElem frobenius_iterate(long t) const;
    /// a(s) mod ell by Horner.  Untracked plumbing; use apply_iterate() when
    /// s is a Frobenius iterate so the application is counted.
    LElem compose(const LElem& a, const LElem& s) const;
    /// compose() plus a tick of the Frobenius-application counter.
    LElem apply_iterate(const LElem& a, const LElem& s) const;

    /// N_{L/F_q}(a) = a^((q^n-1)/(q-1)), 0 for a = 0.
    fq norm(const LElem& a) const;

    /// Monic irreducible minimal polynomial of a over F_q (Krylov + rank).
    FqPoly minimal_polynomial(const LElem& a) const;

    std::string to_string(const LElem& a, const std::string& var = "t") const;

    /// Raw mulmod kernel used internally and by construction-time checks;
    /// does not touch the counters.
    FqPoly mulmod_raw(const FqPoly& a, const FqPoly& b) const;

  private:
    void init(const FqPoly& ell);
    bool ell_irreducible() const;

    Fq fq_;
    FqPoly ell_;
    int n_ = 0;
    std::vector<LElem> frob_chain_;  // t^(q^(2^j)) mod ell
    bool packed2_ = false;           // GF(2) bit-packed kernel in use
    std::vector<std::uint64_t> ell_packed_;
    OpCounters counters_;
};

/// The presentation L ~ F_q[x,t]/(p_poly(x), g(x,t)) attached to gamma_x,
/// with the change of basis between {t^j} and {gamma_x^i t^j}.
struct SubfieldDecomposition {
    int m = 0;         // deg p_poly, divides n
    int cofactor = 0;  // n/m
    FqPoly p_poly;     // monic irreducible, p_poly(gamma_x) = 0
    /// g as t-major coefficients: g[j] in F_q[x] (deg < m) is the
    /// coefficient of t^j, j = 0..n/m, with g[n/m] = 1.
    std::vector<FqPoly> g;
    /// Column i + m*j holds gamma_x^i t^j on the t-power basis.
    FqMat basis;
    FqMat basis_inv;

    /// Coordinates of c as t-major bivariate data: result[j] in F_q[x]
    /// (deg < m) is the coefficient of t^j, j < n/m.
    std::vector<FqPoly> alpha(const FieldTower& tower, const LElem& c) const;
    LElem alpha_inv(const FieldTower& tower, const std::vector<FqPoly>& biv) const;
};

SubfieldDecomposition subfield_decomposition(const FieldTower& tower, const LElem& gamma_x);

}  // namespace drinfeld

#endif
