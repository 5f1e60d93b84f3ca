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

#include "drinfeld/field_tower.hpp"

#include <bit>
#include <stdexcept>

#include "gf2x.hpp"

namespace drinfeld {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

FieldTower::FieldTower(unsigned p, unsigned e, const std::optional<std::vector<fq>>& f,
                       const FqPoly& ell) {
    if (e == 1) {
        if (f && !f->empty())
            throw std::invalid_argument("FieldTower: f must be absent when e = 1");
        fq_ = Fq::prime_field(p);
    } else {
        if (!f) throw std::invalid_argument("FieldTower: f required when e > 1");
        std::vector<fq> mod = *f;
        poly_trim(mod);
        if (poly_deg(mod) != static_cast<int>(e))
            throw std::invalid_argument("FieldTower: f must have degree e");
        fq_ = Fq::extension(p, mod);
    }
    init(ell);
}

FieldTower::FieldTower(Fq base, const FqPoly& ell) : fq_(std::move(base)) { init(ell); }

void FieldTower::init(const FqPoly& ell) {
    ell_ = ell;
    poly_trim(ell_);
    if (ell_.empty()) throw std::invalid_argument("FieldTower: ell is zero");
    if (!poly_is_monic(ell_)) throw std::invalid_argument("FieldTower: ell must be monic");
    n_ = poly_deg(ell_);
    if (n_ < 1) throw std::invalid_argument("FieldTower: ell must have degree >= 1");
    for (fq c : ell_)
        if (c >= fq_.q()) throw std::invalid_argument("FieldTower: ell coefficient out of range");

    packed2_ = (fq_.q() == 2);
    if (packed2_) ell_packed_ = pack2(ell_);

    if (!ell_irreducible())
        throw std::invalid_argument("FieldTower: ell is reducible over F_q");

    // Frobenius chain: s_0 = t^q, s_{j+1} = s_j o s_j, covering exponents < n.
    FqPoly t = poly_mod(fq_, FqPoly{0, 1}, ell_);
    frob_chain_.push_back(from_coeffs(poly_powmod(fq_, t, fq_.q(), ell_)));
    for (long j = 1; (1L << j) <= n_ - 1; ++j) {
        const LElem& prev = frob_chain_.back();
        frob_chain_.push_back(compose(prev, prev));
    }
}

// No factor of degree <= n/2 plus the q^n fixed-point check via prime
// cofactors; runs on the packed kernel when q = 2.
bool FieldTower::ell_irreducible() const {
    if (n_ == 1) return true;
    if (packed2_) {
        Words x{2};  // the polynomial t
        Words s = x;
        // s_i = t^(2^i) mod ell
        std::vector<Words> at_checkpoint;
        for (int i = 1; 2 * i <= n_; ++i) {
            Words sq = mul2(s, deg2(s), s, deg2(s));
            mod2(sq, ell_packed_, n_);
            s = std::move(sq);
            Words diff = s;
            if (diff.size() < 1) diff.resize(1, 0);
            diff[0] ^= 2;  // s - t
            if (deg2(diff) < 0) return false;  // ell divides t^(2^i) - t, i <= n/2
            if (!is_one2(gcd2(diff, ell_packed_))) return false;
        }
        return true;
    }
    const Fq& F = fq_;
    FqPoly x{0, 1};
    FqPoly s = poly_powmod(F, x, F.q(), ell_);
    for (int i = 1; 2 * i <= n_; ++i) {
        if (i > 1) s = poly_powmod(F, s, F.q(), ell_);
        FqPoly diff = poly_sub(F, s, x);
        if (poly_is_zero(diff)) return false;
        if (poly_deg(poly_gcd(F, diff, ell_)) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

LElem FieldTower::one() const { return from_fq(1); }

LElem FieldTower::gen() const { return from_coeffs(FqPoly{0, 1}); }

LElem FieldTower::from_fq(fq a) const {
    LElem r = zero();
    r.c[0] = a;
    return r;
}

LElem FieldTower::from_coeffs(const FqPoly& coeffs) const {
    FqPoly v = coeffs;
    poly_trim(v);
    for (fq c : v)
        if (c >= fq_.q())
            throw std::invalid_argument("FieldTower: coefficient out of range for F_q");
    if (poly_deg(v) >= n_) v = poly_mod(fq_, v, ell_);
    v.resize(n_, 0);
    return LElem{std::move(v)};
}

bool FieldTower::is_zero(const LElem& a) const {
    for (fq c : a.c)
        if (c) return false;
    return true;
}

bool FieldTower::is_one(const LElem& a) const {
    if (a.c.empty() || a.c[0] != 1) return false;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i]) return false;
    return true;
}

LElem FieldTower::add(const LElem& a, const LElem& b) const {
    LElem r = a;
    for (int i = 0; i < n_; ++i) r.c[i] = fq_.add(r.c[i], b.c[i]);
    return r;
}

LElem FieldTower::sub(const LElem& a, const LElem& b) const {
    LElem r = a;
    for (int i = 0; i < n_; ++i) r.c[i] = fq_.sub(r.c[i], b.c[i]);
    return r;
}

LElem FieldTower::neg(const LElem& a) const {
    LElem r = a;
    for (int i = 0; i < n_; ++i) r.c[i] = fq_.neg(r.c[i]);
    return r;
}

FqPoly FieldTower::mulmod_raw(const FqPoly& a, const FqPoly& b) const {
    if (packed2_) {
        Words wa = pack2(a), wb = pack2(b);
        int da = deg2(wa), db = deg2(wb);
        Words prod = mul2(wa, da, wb, db);
        mod2(prod, ell_packed_, n_);
        return unpack2(prod, n_);
    }
    FqPoly prod = poly_mul(fq_, a, b);
    prod = poly_mod(fq_, prod, ell_);
    prod.resize(n_, 0);
    return prod;
}

LElem FieldTower::mul(const LElem& a, const LElem& b) const {
    counters_.tick_l_mul();
    return LElem{mulmod_raw(a.c, b.c)};
}

LElem FieldTower::inv(const LElem& a) const {
    if (is_zero(a)) throw std::domain_error("FieldTower: inverse of zero");
    FqPoly v = a.c;
    poly_trim(v);
    FqPoly r = poly_invmod(fq_, v, ell_);
    r.resize(n_, 0);
    return LElem{std::move(r)};
}

LElem FieldTower::pow(const LElem& a, std::uint64_t e) const {
    LElem r = one();
    LElem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Frobenius
// ---------------------------------------------------------------------------

LElem FieldTower::compose(const LElem& a, const LElem& s) const {
    // Horner over the F_q coefficients of a
    int d = n_ - 1;
    while (d >= 0 && a.c[d] == 0) --d;
    if (d <= 0) return a;  // constants are fixed by composition
    LElem acc = from_fq(a.c[d]);
    for (int i = d - 1; i >= 0; --i) {
        acc = mul(acc, s);
        acc.c[0] = fq_.add(acc.c[0], a.c[i]);
    }
    return acc;
}

LElem FieldTower::frobenius(const LElem& a, long t) const {
    long tt = ((t % n_) + n_) % n_;
    if (tt == 0) return a;
    counters_.tick_frobenius();
    LElem r = a;
    for (std::size_t j = 0; tt; ++j, tt >>= 1)
        if (tt & 1) r = compose(r, frob_chain_[j]);
    return r;
}

LElem FieldTower::frobenius_iterate(long t) const {
    long tt = ((t % n_) + n_) % n_;
    LElem s = gen();
    for (std::size_t j = 0; tt; ++j, tt >>= 1)
        if (tt & 1) s = compose(s, frob_chain_[j]);
    return s;
}

LElem FieldTower::apply_iterate(const LElem& a, const LElem& s) const {
    counters_.tick_frobenius();
    return compose(a, s);
}

fq FieldTower::norm(const LElem& a) const {
    if (is_zero(a)) return 0;
    LElem r;
    unsigned q = fq_.q();
    // exponent (q^n - 1)/(q - 1)
    if (q == 2) {
        // all-ones exponent: a^(2^n - 1)
        r = a;
        for (int i = 1; i < n_; ++i) r = mul(mul(r, r), a);
    } else {
        if (std::uint64_t(n_) * std::bit_width(q - 1) < 62) {
            std::uint64_t e = 0;
            for (int i = 0; i < n_; ++i) e = e * q + 1;
            r = pow(a, e);
        } else {
            // product of the conjugates
            r = a;
            for (int i = 1; i < n_; ++i) r = mul(r, frobenius(a, i));
        }
    }
    for (int i = 1; i < n_; ++i)
        if (r.c[i]) throw std::logic_error("FieldTower: norm did not land in F_q");
    return r.c[0];
}

FqPoly FieldTower::minimal_polynomial(const LElem& a) const {
    FqDependencyFinder finder(fq_, n_);
    LElem power = one();
    for (int d = 0; d <= n_; ++d) {
        if (auto combo = finder.push(power.c)) {
            // a^d = sum combo_i a^i, so minpoly = x^d - sum combo_i x^i
            FqPoly m(d + 1, 0);
            m[d] = 1;
            for (int i = 0; i < d; ++i) m[i] = fq_.neg((*combo)[i]);
            return m;
        }
        power = mul(power, a);
    }
    throw std::logic_error("FieldTower: no minimal polynomial found");
}

std::string FieldTower::to_string(const LElem& a, const std::string& var) const {
    FqPoly v = a.c;
    poly_trim(v);
    return poly_to_string(fq_, v, var);
}

// ---------------------------------------------------------------------------
// Subfield decomposition
// ---------------------------------------------------------------------------

std::vector<FqPoly> SubfieldDecomposition::alpha(const FieldTower& tower, const LElem& c) const {
    std::vector<fq> coords = fq_mat_vec(tower.fq_field(), basis_inv, c.c);
    std::vector<FqPoly> biv(cofactor);
    for (int j = 0; j < cofactor; ++j) {
        FqPoly h(coords.begin() + std::size_t(j) * m, coords.begin() + std::size_t(j + 1) * m);
        poly_trim(h);
        biv[j] = std::move(h);
    }
    return biv;
}

LElem SubfieldDecomposition::alpha_inv(const FieldTower& tower, const std::vector<FqPoly>& biv) const {
    if (static_cast<int>(biv.size()) > cofactor)
        throw std::invalid_argument("alpha_inv: too many t-coefficients");
    std::vector<fq> coords(std::size_t(m) * cofactor, 0);
    for (std::size_t j = 0; j < biv.size(); ++j) {
        if (poly_deg(biv[j]) >= m)
            throw std::invalid_argument("alpha_inv: x-degree out of range");
        for (std::size_t i = 0; i < biv[j].size(); ++i) coords[j * m + i] = biv[j][i];
    }
    return LElem{fq_mat_vec(tower.fq_field(), basis, coords)};
}

SubfieldDecomposition subfield_decomposition(const FieldTower& tower, const LElem& gamma_x) {
    const Fq& F = tower.fq_field();
    int n = tower.n();
    SubfieldDecomposition dec;
    dec.p_poly = tower.minimal_polynomial(gamma_x);
    dec.m = poly_deg(dec.p_poly);
    if (dec.m <= 0 || n % dec.m != 0)
        throw std::logic_error("subfield_decomposition: deg(p) does not divide n");
    dec.cofactor = n / dec.m;

    // columns gamma^i t^j at index i + m*j
    dec.basis = FqMat(n, n);
    LElem tpow = tower.one();
    for (int j = 0; j < dec.cofactor; ++j) {
        LElem cur = tpow;
        for (int i = 0; i < dec.m; ++i) {
            for (int row = 0; row < n; ++row) dec.basis.at(row, i + dec.m * j) = cur.c[row];
            if (i + 1 < dec.m) cur = tower.mul(cur, gamma_x);
        }
        if (j + 1 < dec.cofactor) tpow = tower.mul(tpow, tower.gen());
    }
    auto inv = fq_mat_inverse(F, dec.basis);
    if (!inv) throw std::logic_error("subfield_decomposition: basis matrix is singular");
    dec.basis_inv = std::move(*inv);

    // g: t^(n/m) = sum over the basis; negate and append the monic head
    LElem tn = tower.pow(tower.gen(), dec.cofactor);
    std::vector<FqPoly> coords = dec.alpha(tower, tn);
    dec.g.resize(dec.cofactor + 1);
    for (int j = 0; j < dec.cofactor; ++j) dec.g[j] = poly_neg(F, coords[j]);
    dec.g[dec.cofactor] = FqPoly{1};
    return dec;
}

}  // namespace drinfeld
