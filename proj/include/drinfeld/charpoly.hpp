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

#ifndef DRINFELD_CHARPOLY_HPP
#define DRINFELD_CHARPOLY_HPP

#include <optional>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/wk_ring.hpp"

namespace drinfeld {

/// Coefficient vectors kappa_t of tau^t on the basis (tau, ..., tau^r) of
/// L{tau}tau over L[y], stored in DESCENDING basis order (tau^r first) so
/// that the initial stack [kappa_r; ...; kappa_1] is the identity matrix.
/// All matrices produced by this module follow the same convention: row a
/// describes tau^(r-a) u and column b holds the tau^(r-b) coordinate.
/// Characteristic polynomials are invariant under this simultaneous
/// permutation, so the choice never leaks into results.
using KappaVector = std::vector<WkElem>;

/// The reduced characteristic polynomial Z^r + a_{r-1} Z^(r-1) + ... + a_0
/// with coefficients in F_q[x]; a[i] is a_i.
struct CharPolyResult {
    int r = 0;
    std::vector<FqPoly> a;

    bool operator==(const CharPolyResult& rhs) const { return r == rhs.r && a == rhs.a; }
    bool operator!=(const CharPolyResult& rhs) const { return !(*this == rhs); }
};

enum class CharPolyAlgorithm { Auto, Recurrence, Euclidean, Bsgs };

/// Truncation order k for computing CharPoly(u): k = ceil((d+1)/m) in
/// general, k = 1 for the prime-field Frobenius shortcut.
struct PrecisionPlan {
    int k = 1;
    long d = 0;
    bool prime_field_frobenius_shortcut = false;

    static PrecisionPlan make(const DrinfeldModule& module, const SkewPoly& u,
                              std::optional<int> k_override = std::nullopt);
};

bool is_frobenius_endo(const DrinfeldModule& module, const SkewPoly& u);

/// The degree-one matrix over L[y] whose coefficient-wise Frobenius twists
/// are the companion matrices: first row (Lambda_{r-1}, ..., Lambda_0) with
/// y/Delta_r added in the corner, shifted identity below.
Matrix<YRing> recurrence_matrix_b(const DrinfeldModule& module);

/// Order-t companion matrix A_t = B^(q^t) mod mu over W_k; t >= 1.
Matrix<WkRing> companion_matrix(const DrinfeldModule& module, long t, int k);

/// kappa-bar_1 .. kappa-bar_upto over W_k (upto >= r); index i holds
/// kappa-bar_{i+1}.
std::vector<KappaVector> kappa_sequence(const DrinfeldModule& module, int upto, int k);

/// Matrix of u acting on H*_k via the kappa recurrence: the row for tau^i u
/// is sum_j u_j^(q^i) kappa-bar_{j+i}.
Matrix<WkRing> endo_matrix_recurrence(const DrinfeldModule& module, const SkewPoly& u, int k);

/// f = sum_i f_i phi_x^i with deg_tau f_i < r, by divide-and-conquer right
/// division by phi_x^(K/2); returns K = the least power of two with
/// deg f < K r entries (K = 1 when deg f < r).
std::vector<SkewPoly> decompose_phi_basis(const DrinfeldModule& module, const SkewPoly& f);

/// Same matrix as endo_matrix_recurrence, through Euclidean decomposition:
/// peel tau from tau^i u, decompose over powers of phi_x, re-twist.
Matrix<WkRing> endo_matrix_euclidean(const DrinfeldModule& module, const SkewPoly& u, int k);

/// Matrix of tau^n by baby-step giant-step: subproduct tree for the giant
/// factor C over L[y], Frobenius-shifted copies via the shift-reduction
/// lemma, and a final product over W_k.
Matrix<WkRing> frobenius_matrix_bsgs(const DrinfeldModule& module, int k);

/// The unique root x-hat of p_poly in F_q[y]/(p_poly(y)^k) congruent to y
/// mod p_poly(y), by Newton iteration (p_poly is separable).
FqPoly hensel_lift_root(const Fq& F, const FqPoly& p_poly, int k);

/// Descent W_k -> F_q[y]/(p_poly(y)^k): apply alpha to each y-coefficient,
/// substitute x -> x-hat in the t^0 part, return the residue (deg < k m).
FqPoly chi_k(const DrinfeldModule& module, const WkElem& c, int k);

/// iota_k(f) = f(y) mod mu in W_k.
WkElem iota_k(const DrinfeldModule& module, const FqPoly& f, int k);

/// theta_k(f) = f(y) mod p_poly(y)^k.
FqPoly theta_k(const Fq& F, const FqPoly& p_poly, const FqPoly& f, int k);

/// Constant coefficient of CharPoly(tau^n) in the prime field case:
/// (-1)^(n(r+1)+r) N_{L/F_q}(Delta_r)^(-1) p_poly.
FqPoly a0_prime_field(const DrinfeldModule& module);

/// Full pipeline: build the matrix with the chosen method, take its
/// characteristic polynomial over W_k, descend through chi_k, lift.
/// Auto picks Bsgs for u = tau^n and Recurrence otherwise.
CharPolyResult charpoly_endomorphism(const DrinfeldModule& module, const SkewPoly& u,
                                     CharPolyAlgorithm algorithm = CharPolyAlgorithm::Auto,
                                     std::optional<int> k_override = std::nullopt,
                                     bool check_endomorphism = true);

/// Independent certificate: u^r + sum_i phi_{a_i} u^i == 0 in L{tau}.
bool verify_charpoly(const DrinfeldModule& module, const SkewPoly& u, const CharPolyResult& res);

/// The coefficient-matching linear system over F_q; returns the solution
/// when it is unique (iff MinPoly(u) = CharPoly(u)), nullopt otherwise.
std::optional<CharPolyResult> charpoly_linear_system_oracle(const DrinfeldModule& module,
                                                            const SkewPoly& u);

/// Rendering like "Z^4 + x*Z^2 + x*Z + x^3 + x^2 + 1".
std::string charpoly_to_string(const Fq& F, const CharPolyResult& res);

}  // namespace drinfeld

#endif
