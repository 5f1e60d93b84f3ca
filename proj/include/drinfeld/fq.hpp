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

#ifndef DRINFELD_FQ_HPP
#define DRINFELD_FQ_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace drinfeld {

/// An element of F_q, q = p^e <= 256, encoded as sum c_i * p^i for the
/// residue sum c_i * z^i mod f(z).  Plain value 0..p-1 when e = 1.
using fq = std::uint8_t;

/// Dense polynomial over F_q.  Little-endian (constant term first, the
/// repo-wide convention) and trimmed: no trailing zero coefficients, the
/// zero polynomial is the empty vector.
using FqPoly = std::vector<fq>;

/// F_q = F_p[z]/(f(z)) with all arithmetic table-driven.  Immutable after
/// construction; safe to share across threads.
class Fq {
  public:
    /// F_p for prime p.
    static Fq prime_field(unsigned p);

    /// F_p[z]/(f) with f monic irreducible of degree e >= 2 over F_p
    /// (little-endian coefficients).  Irreducibility is checked by
    /// exhaustive divisor search.
    static Fq extension(unsigned p, const std::vector<fq>& f);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }
    bool is_prime_field() const { return e_ == 1; }
    /// Defining polynomial f; empty when e = 1.
    const std::vector<fq>& modulus() const { return modulus_; }

    fq add(fq a, fq b) const { return add_[idx(a, b)]; }
    fq sub(fq a, fq b) const { return add_[idx(a, neg_[b])]; }
    fq neg(fq a) const { return neg_[a]; }
    fq mul(fq a, fq b) const { return mul_[idx(a, b)]; }
    fq inv(fq a) const;
    fq div(fq a, fq b) const { return mul(a, inv(b)); }
    fq pow(fq a, std::uint64_t n) const;

    /// The image of an integer under Z -> F_q (via F_p when e > 1).
    fq from_int(std::uint64_t v) const { return static_cast<fq>(v % p_); }
    /// Element from its F_p coordinates c_0..c_{e-1} (short lists allowed).
    fq from_fp_coeffs(const std::vector<fq>& c) const;
    std::vector<fq> to_fp_coeffs(fq a) const;

    std::string to_string(fq a) const;

  private:
    Fq() = default;
    void build_tables();
    std::size_t idx(fq a, fq b) const { return std::size_t(a) * q_ + b; }

    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<fq> modulus_;
    std::vector<fq> add_, mul_, neg_, inv_;
};

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over F_q.
// ---------------------------------------------------------------------------

void poly_trim(FqPoly& a);
inline int poly_deg(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }
inline bool poly_is_zero(const FqPoly& a) { return a.empty(); }
bool poly_eq(const FqPoly& a, const FqPoly& b);
bool poly_is_monic(const FqPoly& a);

FqPoly poly_add(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_neg(const Fq& F, const FqPoly& a);
FqPoly poly_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const Fq& F, fq c, const FqPoly& a);
FqPoly poly_shift(const FqPoly& a, int k);  // * x^k
FqPoly poly_pow(const Fq& F, const FqPoly& a, unsigned n);

/// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> poly_divmod(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(const Fq& F, FqPoly a, FqPoly b);  // monic gcd
/// a^-1 mod m for gcd(a, m) = 1.
FqPoly poly_invmod(const Fq& F, const FqPoly& a, const FqPoly& m);
FqPoly poly_powmod(const Fq& F, FqPoly a, std::uint64_t n, const FqPoly& m);
FqPoly poly_monic(const Fq& F, const FqPoly& a);
FqPoly poly_derivative(const Fq& F, const FqPoly& a);
fq poly_eval(const Fq& F, const FqPoly& a, fq x);

/// Distinct-degree style test: no irreducible factor of degree <= deg/2.
bool poly_is_irreducible(const Fq& F, const FqPoly& a);

std::string poly_to_string(const Fq& F, const FqPoly& a, const std::string& var = "x");

}  // namespace drinfeld

#endif
