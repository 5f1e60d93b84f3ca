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

#include "drinfeld/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// F_p[z] helpers on raw digit vectors (little-endian, trimmed), used only
// while building the F_q tables.
using FpPoly = std::vector<fq>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(unsigned p, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<fq>((c[i + j] + unsigned(a[i]) * b[j]) % p);
    fp_trim(c);
    return c;
}

// remainder of a by monic b
FpPoly fp_mod(unsigned p, FpPoly a, const FpPoly& b) {
    fp_trim(a);
    while (a.size() >= b.size()) {
        unsigned lead = a.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = static_cast<fq>((a[off + i] + lead * (p - b[i])) % p);
        fp_trim(a);
    }
    return a;
}

bool fp_divides(unsigned p, const FpPoly& d, const FpPoly& a) {
    return fp_mod(p, a, d).empty();
}

// exhaustive factor search; fine at the e <= 8 sizes we accept
bool fp_is_irreducible(unsigned p, const FpPoly& f) {
    int e = static_cast<int>(f.size()) - 1;
    if (e < 1) return false;
    for (int d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FpPoly cand(d + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<fq>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (fp_divides(p, cand, f)) return false;
        }
    }
    return true;
}

}  // namespace

Fq Fq::prime_field(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("Fq: p = " + std::to_string(p) + " is not prime");
    if (p > 256) throw std::invalid_argument("Fq: q must be at most 256");
    Fq F;
    F.p_ = p;
    F.e_ = 1;
    F.q_ = p;
    F.build_tables();
    return F;
}

Fq Fq::extension(unsigned p, const std::vector<fq>& f) {
    if (!is_prime(p)) throw std::invalid_argument("Fq: p = " + std::to_string(p) + " is not prime");
    std::vector<fq> mod = f;
    fp_trim(mod);
    if (mod.size() < 3) throw std::invalid_argument("Fq: f must have degree >= 2");
    if (mod.back() != 1) throw std::invalid_argument("Fq: f must be monic");
    for (fq c : mod)
        if (c >= p) throw std::invalid_argument("Fq: f has a coefficient not reduced mod p");
    unsigned e = static_cast<unsigned>(mod.size()) - 1;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > 256) throw std::invalid_argument("Fq: q must be at most 256");
    }
    if (!fp_is_irreducible(p, mod)) throw std::invalid_argument("Fq: f is reducible over F_p");
    Fq F;
    F.p_ = p;
    F.e_ = e;
    F.q_ = static_cast<unsigned>(q);
    F.modulus_ = mod;
    F.build_tables();
    return F;
}

void Fq::build_tables() {
    auto digits = [&](fq a) {
        FpPoly d(e_, 0);
        unsigned v = a;
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = static_cast<fq>(v % p_);
            v /= p_;
        }
        return d;
    };
    auto pack = [&](const FpPoly& d) {
        unsigned v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
        return static_cast<fq>(v);
    };

    add_.assign(std::size_t(q_) * q_, 0);
    mul_.assign(std::size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (unsigned a = 0; a < q_; ++a) {
        FpPoly da = digits(static_cast<fq>(a));
        FpPoly na(e_, 0);
        for (unsigned i = 0; i < e_; ++i) na[i] = static_cast<fq>((p_ - da[i]) % p_);
        neg_[a] = pack(na);
        for (unsigned b = 0; b < q_; ++b) {
            FpPoly db = digits(static_cast<fq>(b));
            FpPoly s(e_, 0);
            for (unsigned i = 0; i < e_; ++i) s[i] = static_cast<fq>((da[i] + db[i]) % p_);
            add_[idx(static_cast<fq>(a), static_cast<fq>(b))] = pack(s);
            FpPoly m = fp_mul(p_, da, db);
            if (e_ > 1) m = fp_mod(p_, m, modulus_);
            m.resize(e_, 0);
            mul_[idx(static_cast<fq>(a), static_cast<fq>(b))] = pack(m);
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[idx(static_cast<fq>(a), static_cast<fq>(b))] == 1) {
                inv_[a] = static_cast<fq>(b);
                break;
            }
}

fq Fq::inv(fq a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    return inv_[a];
}

fq Fq::pow(fq a, std::uint64_t n) const {
    fq r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

fq Fq::from_fp_coeffs(const std::vector<fq>& c) const {
    if (c.size() > e_) throw std::invalid_argument("Fq: element has too many F_p coordinates");
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("Fq: coordinate not reduced mod p");
        v = v * p_ + c[i];
    }
    return static_cast<fq>(v);
}

std::vector<fq> Fq::to_fp_coeffs(fq a) const {
    std::vector<fq> d(e_, 0);
    unsigned v = a;
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = static_cast<fq>(v % p_);
        v /= p_;
    }
    return d;
}

std::string Fq::to_string(fq a) const {
    if (e_ == 1) return std::to_string(unsigned(a));
    std::vector<fq> d = to_fp_coeffs(a);
    std::string s;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(unsigned(d[i]));
        } else {
            if (d[i] != 1) s += std::to_string(unsigned(d[i])) + "*";
            s += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// FqPoly
// ---------------------------------------------------------------------------

void poly_trim(FqPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool poly_eq(const FqPoly& a, const FqPoly& b) { return a == b; }

bool poly_is_monic(const FqPoly& a) { return !a.empty() && a.back() == 1; }

FqPoly poly_add(const Fq& F, const FqPoly& a, const FqPoly& b) {
    FqPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        fq x = i < a.size() ? a[i] : fq(0);
        fq y = i < b.size() ? b[i] : fq(0);
        c[i] = F.add(x, y);
    }
    poly_trim(c);
    return c;
}

FqPoly poly_sub(const Fq& F, const FqPoly& a, const FqPoly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

FqPoly poly_neg(const Fq& F, const FqPoly& a) {
    FqPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.neg(a[i]);
    return c;
}

FqPoly poly_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(c);
    return c;
}

FqPoly poly_scale(const Fq& F, fq c, const FqPoly& a) {
    if (c == 0) return {};
    FqPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    poly_trim(r);
    return r;
}

FqPoly poly_shift(const FqPoly& a, int k) {
    if (a.empty()) return {};
    FqPoly r(a.size() + k, 0);
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

FqPoly poly_pow(const Fq& F, const FqPoly& a, unsigned n) {
    FqPoly r{1};
    FqPoly base = a;
    while (n) {
        if (n & 1) r = poly_mul(F, r, base);
        base = poly_mul(F, base, base);
        n >>= 1;
    }
    return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    FqPoly rem = a;
    poly_trim(rem);
    if (rem.size() < b.size()) return {{}, rem};
    FqPoly quo(rem.size() - b.size() + 1, 0);
    fq lead_inv = F.inv(b.back());
    while (rem.size() >= b.size()) {
        fq c = F.mul(rem.back(), lead_inv);
        std::size_t off = rem.size() - b.size();
        quo[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[off + i] = F.sub(rem[off + i], F.mul(c, b[i]));
        poly_trim(rem);
        if (rem.empty()) break;
    }
    poly_trim(quo);
    return {quo, rem};
}

FqPoly poly_mod(const Fq& F, const FqPoly& a, const FqPoly& b) {
    return poly_divmod(F, a, b).second;
}

FqPoly poly_gcd(const Fq& F, FqPoly a, FqPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        FqPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

FqPoly poly_invmod(const Fq& F, const FqPoly& a, const FqPoly& m) {
    // extended Euclid: r0 = m, r1 = a mod m
    FqPoly r0 = m, r1 = poly_mod(F, a, m);
    FqPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(F, r0, r1);
        FqPoly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_deg(r0) != 0)
        throw std::domain_error("poly_invmod: element not invertible");
    return poly_mod(F, poly_scale(F, F.inv(r0[0]), s0), m);
}

FqPoly poly_powmod(const Fq& F, FqPoly a, std::uint64_t n, const FqPoly& m) {
    FqPoly r{1};
    a = poly_mod(F, a, m);
    while (n) {
        if (n & 1) r = poly_mod(F, poly_mul(F, r, a), m);
        a = poly_mod(F, poly_mul(F, a, a), m);
        n >>= 1;
    }
    return r;
}

FqPoly poly_monic(const Fq& F, const FqPoly& a) {
    if (a.empty() || a.back() == 1) return a;
    return poly_scale(F, F.inv(a.back()), a);
}

FqPoly poly_derivative(const Fq& F, const FqPoly& a) {
    if (a.size() < 2) return {};
    FqPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        fq k = F.from_int(i % F.p());
        d[i - 1] = F.mul(k, a[i]);
    }
    poly_trim(d);
    return d;
}

fq poly_eval(const Fq& F, const FqPoly& a, fq x) {
    fq r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

bool poly_is_irreducible(const Fq& F, const FqPoly& a) {
    int d = poly_deg(a);
    if (d < 1) return false;
    if (d == 1) return true;
    // s_i = x^(q^i) mod a; a factor of degree dividing i shows up as a
    // nontrivial gcd(s_i - x, a).  No factor of degree <= d/2 means irreducible.
    FqPoly x = {0, 1};
    FqPoly s = poly_powmod(F, x, F.q(), a);
    for (int i = 1; 2 * i <= d; ++i) {
        if (i > 1) s = poly_powmod(F, s, F.q(), a);
        FqPoly g = poly_gcd(F, poly_sub(F, s, x), a);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

std::string poly_to_string(const Fq& F, const FqPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string coef = F.to_string(a[i]);
        bool composite = coef.find(' ') != std::string::npos;
        if (i == 0) {
            s += composite ? "(" + coef + ")" : coef;
            continue;
        }
        if (a[i] != 1) s += (composite ? "(" + coef + ")" : coef) + "*";
        s += (i == 1) ? var : var + "^" + std::to_string(i);
    }
    return s;
}

}  // namespace drinfeld
