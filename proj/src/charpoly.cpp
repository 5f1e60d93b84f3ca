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

#include "drinfeld/charpoly.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace drinfeld {

namespace {

// Companion ingredients Lambda_0..Lambda_{r-1} and 1/Delta_r under a running
// Frobenius twist; advance() moves the exponent up by one.
struct TwistState {
    std::vector<LElem> lam;
    LElem dinv;
};

TwistState twisted_lambdas(const DrinfeldModule& module, long t) {
    auto L = module.lambdas();
    TwistState s{std::move(L.lam), std::move(L.delta_r_inv)};
    if (t != 0) {
        const FieldTower& tw = module.tower();
        for (auto& c : s.lam) c = tw.frobenius(c, t);
        s.dinv = tw.frobenius(s.dinv, t);
    }
    return s;
}

void advance_twist(const FieldTower& tw, TwistState& s) {
    for (auto& c : s.lam) c = tw.frobenius(c, 1);
    s.dinv = tw.frobenius(s.dinv, 1);
}

Matrix<WkRing> companion_from_twist(const WkRing& ring, const TwistState& s) {
    int r = static_cast<int>(s.lam.size());
    Matrix<WkRing> A(ring, r, r);
    for (int j = 0; j < r; ++j) A.at(0, j) = ring.from_l(s.lam[r - 1 - j]);
    A.at(0, r - 1) = ring.add(A.at(0, r - 1), ring.mul_y(ring.from_l(s.dinv)));
    for (int i = 1; i < r; ++i) A.at(i, i - 1) = ring.one();
    return A;
}

Matrix<YRing> b_from_twist(const YRing& ring, const TwistState& s) {
    int r = static_cast<int>(s.lam.size());
    Matrix<YRing> B(ring, r, r);
    for (int j = 0; j < r; ++j) B.at(0, j) = ring.from_base(s.lam[r - 1 - j]);
    YPoly corner{s.lam[0], s.dinv};
    ring.trim(corner);
    B.at(0, r - 1) = std::move(corner);
    for (int i = 1; i < r; ++i) B.at(i, i - 1) = ring.one();
    return B;
}

FqPoly poly_eval_mod(const Fq& F, const FqPoly& a, const FqPoly& point, const FqPoly& modulus) {
    FqPoly acc;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = poly_mod(F, poly_mul(F, acc, point), modulus);
        if (a[i]) acc = poly_add(F, acc, FqPoly{a[i]});
    }
    return acc;
}

long isqrt_ceil(long v) {
    if (v <= 1) return v;
    long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (s * s < v) ++s;
    while (s >= 1 && (s - 1) * (s - 1) >= v) --s;
    return s;
}

}  // namespace

PrecisionPlan PrecisionPlan::make(const DrinfeldModule& module, const SkewPoly& u,
                                  std::optional<int> k_override) {
    if (skew_is_zero(u)) throw std::invalid_argument("PrecisionPlan: u must be nonzero");
    PrecisionPlan plan;
    plan.d = skew_deg(u);
    int m = module.m();
    bool shortcut_eligible = module.is_prime_field() && is_frobenius_endo(module, u);
    int general_k = static_cast<int>((plan.d + 1 + m - 1) / m);  // ceil((d+1)/m)
    if (k_override) {
        int kk = *k_override;
        int min_k = shortcut_eligible ? 1 : general_k;
        if (kk < min_k)
            throw std::invalid_argument(
                "PrecisionPlan: k = " + std::to_string(kk) + " is below the minimum " +
                std::to_string(min_k) + " required to recover coefficients of degree up to " +
                std::to_string(plan.d));
        plan.k = kk;
    } else {
        plan.k = shortcut_eligible ? 1 : general_k;
    }
    plan.prime_field_frobenius_shortcut = shortcut_eligible && plan.k == 1;
    return plan;
}

bool is_frobenius_endo(const DrinfeldModule& module, const SkewPoly& u) {
    const FieldTower& tw = module.tower();
    int n = tw.n();
    if (skew_deg(u) != n) return false;
    if (!tw.is_one(u.c[n])) return false;
    for (int i = 0; i < n; ++i)
        if (!tw.is_zero(u.c[i])) return false;
    return true;
}

Matrix<YRing> recurrence_matrix_b(const DrinfeldModule& module) {
    YRing ring{LRing{&module.tower()}};
    return b_from_twist(ring, twisted_lambdas(module, 0));
}

Matrix<WkRing> companion_matrix(const DrinfeldModule& module, long t, int k) {
    if (t < 1) throw std::invalid_argument("companion_matrix: t must be >= 1");
    WkRing ring(module.tower(), module.gamma_x(), k);
    return companion_from_twist(ring, twisted_lambdas(module, t));
}

std::vector<KappaVector> kappa_sequence(const DrinfeldModule& module, int upto, int k) {
    int r = module.rank();
    if (upto < r) throw std::invalid_argument("kappa_sequence: upto must be >= r");
    const FieldTower& tw = module.tower();
    WkRing ring(tw, module.gamma_x(), k);

    std::vector<KappaVector> ks;
    ks.reserve(upto);
    for (int t = 1; t <= r; ++t) {
        KappaVector v(r, ring.zero());
        v[r - t] = ring.one();  // descending order: tau^t sits at index r - t
        ks.push_back(std::move(v));
    }
    if (upto == r) return ks;

    TwistState s = twisted_lambdas(module, 1);
    for (int t = 1; static_cast<int>(ks.size()) < upto; ++t) {
        // kappa_{t+r} = sum_i Lambda_i^[t] kappa_{t+i} + (y / Delta_r^[t]) kappa_t
        KappaVector v(r, ring.zero());
        for (int i = 0; i < r; ++i) {
            if (tw.is_zero(s.lam[i])) continue;
            const KappaVector& ki = ks[t + i - 1];
            for (int c = 0; c < r; ++c)
                v[c] = ring.add(v[c], ring.scale(s.lam[i], ki[c]));
        }
        const KappaVector& kt = ks[t - 1];
        for (int c = 0; c < r; ++c)
            v[c] = ring.add(v[c], ring.mul_y(ring.scale(s.dinv, kt[c])));
        ks.push_back(std::move(v));
        if (static_cast<int>(ks.size()) < upto) advance_twist(tw, s);
    }
    return ks;
}

Matrix<WkRing> endo_matrix_recurrence(const DrinfeldModule& module, const SkewPoly& u, int k) {
    int r = module.rank();
    const FieldTower& tw = module.tower();
    WkRing ring(tw, module.gamma_x(), k);
    Matrix<WkRing> M(ring, r, r);
    if (skew_is_zero(u)) return M;
    int d = skew_deg(u);
    std::vector<KappaVector> ks = kappa_sequence(module, d + r, k);
    for (int i = 1; i <= r; ++i) {
        int row = r - i;
        for (int j = 0; j <= d; ++j) {
            if (tw.is_zero(u.c[j])) continue;
            LElem uij = tw.frobenius(u.c[j], i);
            const KappaVector& kv = ks[j + i - 1];
            for (int b = 0; b < r; ++b)
                M.at(row, b) = ring.add(M.at(row, b), ring.scale(uij, kv[b]));
        }
    }
    return M;
}

std::vector<SkewPoly> decompose_phi_basis(const DrinfeldModule& module, const SkewPoly& f) {
    const FieldTower& tw = module.tower();
    int r = module.rank();
    int d = skew_deg(f);
    if (d < r) return {f};
    unsigned K = 1;
    while (d >= static_cast<int>(K) * r) K <<= 1;
    // phi_x^(2^j) for the recursion pivots
    std::vector<SkewPoly> pow2{module.phi_x()};
    for (unsigned len = 2; len <= K / 2; len <<= 1)
        pow2.push_back(skew_mul(tw, pow2.back(), pow2.back()));

    struct Rec {
        const FieldTower& tw;
        const std::vector<SkewPoly>& pow2;
        void run(const SkewPoly& g, unsigned kk, std::vector<SkewPoly>& out) {
            if (kk == 1) {
                out.push_back(g);
                return;
            }
            unsigned half = kk / 2;
            int idx = std::countr_zero(half);
            auto [quo, rem] = skew_right_divmod(tw, g, pow2[idx]);
            run(rem, half, out);
            run(quo, half, out);
        }
    };
    std::vector<SkewPoly> out;
    out.reserve(K);
    Rec{tw, pow2}.run(f, K, out);
    return out;
}

Matrix<WkRing> endo_matrix_euclidean(const DrinfeldModule& module, const SkewPoly& u, int k) {
    int r = module.rank();
    const FieldTower& tw = module.tower();
    WkRing ring(tw, module.gamma_x(), k);
    Matrix<WkRing> M(ring, r, r);
    for (int i = 1; i <= r; ++i) {
        SkewPoly f = skew_mul(tw, tau_power(tw, i), u);
        if (skew_is_zero(f)) continue;
        if (!tw.is_zero(f.c[0]))
            throw std::logic_error("endo_matrix_euclidean: tau^i u has a constant term");
        // f = tau g with g = F^[-1] where f = F tau
        SkewPoly g;
        g.c.assign(f.c.begin() + 1, f.c.end());
        for (auto& c : g.c) c = tw.frobenius(c, -1);
        std::vector<SkewPoly> parts = decompose_phi_basis(module, g);
        // f = sum_s (g_s^[1] tau) phi_x^s; entry (i, j) is
        // sum_s [tau^j](g_s^[1] tau) y^s
        for (int j = 1; j <= r; ++j) {
            YPoly P(parts.size(), tw.zero());
            bool any = false;
            for (std::size_t s = 0; s < parts.size(); ++s) {
                if (j - 1 > skew_deg(parts[s])) continue;
                const LElem& c = parts[s].c[j - 1];
                if (tw.is_zero(c)) continue;
                P[s] = tw.frobenius(c, 1);
                any = true;
            }
            if (!any) continue;
            while (!P.empty() && tw.is_zero(P.back())) P.pop_back();
            M.at(r - i, r - j) = ring.reduce(P);
        }
    }
    return M;
}

Matrix<WkRing> frobenius_matrix_bsgs(const DrinfeldModule& module, int k) {
    const FieldTower& tw = module.tower();
    int n = tw.n();
    int r = module.rank();
    WkRing ring(tw, module.gamma_x(), k);

    long nstar = isqrt_ceil(static_cast<long>(n) * k);
    long n1 = n / nstar;
    long n0 = n % nstar;

    // remainder product C0 = B^[n0] ... B^[1] mod mu
    Matrix<WkRing> acc = mat_identity(ring, r);
    if (n0 > 0) {
        TwistState s = twisted_lambdas(module, 1);
        for (long j = 1; j <= n0; ++j) {
            acc = mat_mul(ring, companion_from_twist(ring, s), acc);
            if (j < n0) advance_twist(tw, s);
        }
    }
    if (n1 == 0) return acc;

    // giant factor C = B^[n* + n0] ... B^[n0 + 1] over L[y]
    YRing yring{LRing{&tw}};
    std::vector<Matrix<YRing>> mats;
    mats.reserve(nstar);
    {
        TwistState s = twisted_lambdas(module, n0 + 1);
        for (long idx = 0; idx < nstar; ++idx) {
            mats.push_back(b_from_twist(yring, s));
            if (idx + 1 < nstar) advance_twist(tw, s);
        }
    }
    Matrix<YRing> C = product_chain(yring, std::span<const Matrix<YRing>>(mats));

    // shifted giants C^[i n*] mod mu, i = 0..n1-1, folded right to left
    LElem back_iterate;  // t^(q^-n*), for the gamma chain
    LElem v1, vi;        // t^(q^n*) and its chained powers
    LElem gamma_back = module.gamma_x();
    for (long i = 0; i < n1; ++i) {
        Matrix<WkRing> Ci(ring, r, r);
        if (i == 0) {
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) Ci.at(a, b) = ring.reduce(C.at(a, b));
        } else {
            if (i == 1) {
                back_iterate = tw.frobenius_iterate(-nstar);
                v1 = tw.frobenius_iterate(nstar);
                vi = v1;
            } else {
                vi = tw.compose(vi, v1);
            }
            gamma_back = tw.apply_iterate(gamma_back, back_iterate);
            FrobShiftPlan plan{WkRing(tw, gamma_back, k)};
            plan.twist_iterate = vi;
            plan.twist_identity = false;  // 0 < i n* < n
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    Ci.at(a, b) = frobenius_shift_reduce(ring, C.at(a, b), plan);
        }
        acc = mat_mul(ring, Ci, acc);
    }
    return acc;
}

FqPoly hensel_lift_root(const Fq& F, const FqPoly& p_poly, int k) {
    if (k < 1) throw std::invalid_argument("hensel_lift_root: k must be >= 1");
    FqPoly pk = poly_pow(F, p_poly, static_cast<unsigned>(k));
    FqPoly xhat = poly_mod(F, FqPoly{0, 1}, pk);
    if (k == 1) return xhat;
    FqPoly deriv = poly_derivative(F, p_poly);
    int guard = 0;
    for (;;) {
        FqPoly val = poly_eval_mod(F, p_poly, xhat, pk);
        if (poly_is_zero(val)) break;
        if (++guard > k + 2) throw std::logic_error("hensel_lift_root: iteration did not settle");
        FqPoly dval = poly_eval_mod(F, deriv, xhat, pk);
        FqPoly step = poly_mod(F, poly_mul(F, val, poly_invmod(F, dval, pk)), pk);
        xhat = poly_mod(F, poly_sub(F, xhat, step), pk);
    }
    return xhat;
}

FqPoly chi_k(const DrinfeldModule& module, const WkElem& c, int k) {
    if (c.k != k || static_cast<int>(c.c.size()) != k)
        throw std::invalid_argument("chi_k: element has wrong precision");
    const FieldTower& tw = module.tower();
    const Fq& F = tw.fq_field();
    const SubfieldDecomposition& dec = module.decomp();

    // t^0 slice of alpha, per y-coefficient
    std::vector<FqPoly> h(k);
    for (int j = 0; j < k; ++j) h[j] = dec.alpha(tw, c.c[j])[0];
    if (k == 1) return h[0];  // x-hat = y and deg h < m: nothing to reduce

    FqPoly pk = poly_pow(F, dec.p_poly, static_cast<unsigned>(k));
    FqPoly xhat = hensel_lift_root(F, dec.p_poly, k);
    FqPoly res;
    for (int j = 0; j < k; ++j) {
        if (poly_is_zero(h[j])) continue;
        FqPoly term = poly_eval_mod(F, h[j], xhat, pk);
        term = poly_mod(F, poly_shift(term, j), pk);
        res = poly_add(F, res, term);
    }
    return res;
}

WkElem iota_k(const DrinfeldModule& module, const FqPoly& f, int k) {
    const FieldTower& tw = module.tower();
    WkRing ring(tw, module.gamma_x(), k);
    YPoly fy(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fy[i] = tw.from_fq(f[i]);
    return ring.reduce(fy);
}

FqPoly theta_k(const Fq& F, const FqPoly& p_poly, const FqPoly& f, int k) {
    return poly_mod(F, f, poly_pow(F, p_poly, static_cast<unsigned>(k)));
}

FqPoly a0_prime_field(const DrinfeldModule& module) {
    if (!module.is_prime_field())
        throw std::invalid_argument("a0_prime_field: only valid when m = n");
    const FieldTower& tw = module.tower();
    const Fq& F = tw.fq_field();
    long n = tw.n(), r = module.rank();
    fq nrm = tw.norm(module.deltas().back());
    fq scalar = F.inv(nrm);
    if ((n * (r + 1) + r) % 2 != 0) scalar = F.neg(scalar);
    return poly_scale(F, scalar, module.p_poly());
}

CharPolyResult charpoly_endomorphism(const DrinfeldModule& module, const SkewPoly& u,
                                     CharPolyAlgorithm algorithm, std::optional<int> k_override,
                                     bool check_endomorphism) {
    if (skew_is_zero(u))
        throw std::invalid_argument("charpoly_endomorphism: u must be nonzero");
    if (check_endomorphism && !is_endomorphism(module, u))
        throw std::invalid_argument("charpoly_endomorphism: u is not an endomorphism");
    bool frob = is_frobenius_endo(module, u);
    if (algorithm == CharPolyAlgorithm::Auto)
        algorithm = frob ? CharPolyAlgorithm::Bsgs : CharPolyAlgorithm::Recurrence;
    if (algorithm == CharPolyAlgorithm::Bsgs && !frob)
        throw std::invalid_argument(
            "charpoly_endomorphism: bsgs is only valid for the Frobenius endomorphism tau^n");

    PrecisionPlan plan = PrecisionPlan::make(module, u, k_override);
    int r = module.rank();

    Matrix<WkRing> M = [&] {
        switch (algorithm) {
            case CharPolyAlgorithm::Bsgs:
                return frobenius_matrix_bsgs(module, plan.k);
            case CharPolyAlgorithm::Euclidean:
                return endo_matrix_euclidean(module, u, plan.k);
            default:
                return endo_matrix_recurrence(module, u, plan.k);
        }
    }();

    WkRing ring(module.tower(), module.gamma_x(), plan.k);
    std::vector<WkElem> coeffs = berkowitz_charpoly(ring, M);

    CharPolyResult res;
    res.r = r;
    res.a.resize(r);
    for (int i = 0; i < r; ++i) {
        res.a[i] = chi_k(module, coeffs[i], plan.k);  // residue; y -> x renaming
        long bound = plan.d * (r - i) / r;
        if (poly_deg(res.a[i]) > bound)
            throw std::logic_error("charpoly_endomorphism: coefficient degree bound violated");
    }
    if (plan.prime_field_frobenius_shortcut) res.a[0] = a0_prime_field(module);
    return res;
}

bool verify_charpoly(const DrinfeldModule& module, const SkewPoly& u, const CharPolyResult& res) {
    const FieldTower& tw = module.tower();
    if (res.r != module.rank() || static_cast<int>(res.a.size()) != res.r) return false;
    SkewPoly acc = skew_zero();
    SkewPoly upow = skew_one(tw);
    for (int i = 0; i < res.r; ++i) {
        if (!poly_is_zero(res.a[i]))
            acc = skew_add(tw, acc, skew_mul(tw, phi_eval(module, res.a[i]), upow));
        upow = skew_mul(tw, upow, u);
    }
    acc = skew_add(tw, acc, upow);  // + u^r
    return skew_is_zero(acc);
}

std::optional<CharPolyResult> charpoly_linear_system_oracle(const DrinfeldModule& module,
                                                            const SkewPoly& u) {
    if (skew_is_zero(u))
        throw std::invalid_argument("charpoly_linear_system_oracle: u must be nonzero");
    const FieldTower& tw = module.tower();
    const Fq& F = tw.fq_field();
    int n = tw.n(), r = module.rank();
    long d = skew_deg(u);

    std::vector<long> bound(r);
    std::vector<std::size_t> offset(r + 1, 0);
    for (int i = 0; i < r; ++i) {
        bound[i] = d * (r - i) / r;
        offset[i + 1] = offset[i] + static_cast<std::size_t>(bound[i] + 1);
    }
    std::size_t unknowns = offset[r];

    long max_j = 0;
    for (int i = 0; i < r; ++i) max_j = std::max(max_j, bound[i]);
    std::vector<SkewPoly> phi_pow{skew_one(tw)};
    for (long j = 1; j <= max_j; ++j)
        phi_pow.push_back(skew_mul(tw, phi_pow.back(), module.phi_x()));
    std::vector<SkewPoly> u_pow{skew_one(tw)};
    for (int i = 1; i <= r; ++i) u_pow.push_back(skew_mul(tw, u_pow.back(), u));

    long D = d * r;  // tau-degree of u^r, the top of every column
    std::size_t rows = static_cast<std::size_t>(D + 1) * n;
    FqMat A(static_cast<int>(rows), static_cast<int>(unknowns));
    auto fill_column = [&](const SkewPoly& p, std::size_t col) {
        for (int s = 0; s <= skew_deg(p); ++s)
            for (int c = 0; c < n; ++c)
                A.at(static_cast<int>(std::size_t(s) * n + c), static_cast<int>(col)) =
                    p.c[s].c[c];
    };
    for (int i = 0; i < r; ++i)
        for (long j = 0; j <= bound[i]; ++j)
            fill_column(skew_mul(tw, phi_pow[j], u_pow[i]), offset[i] + j);

    std::vector<fq> b(rows, 0);
    const SkewPoly& ur = u_pow[r];
    for (int s = 0; s <= skew_deg(ur); ++s)
        for (int c = 0; c < n; ++c) b[std::size_t(s) * n + c] = F.neg(ur.c[s].c[c]);

    auto sol = fq_solve(F, A, b);
    if (!sol)
        throw std::logic_error("charpoly_linear_system_oracle: inconsistent system");
    if (!sol->unique) return std::nullopt;

    CharPolyResult res;
    res.r = r;
    res.a.resize(r);
    for (int i = 0; i < r; ++i) {
        FqPoly ai(sol->x.begin() + static_cast<long>(offset[i]),
                  sol->x.begin() + static_cast<long>(offset[i + 1]));
        poly_trim(ai);
        res.a[i] = std::move(ai);
    }
    return res;
}

std::string charpoly_to_string(const Fq& F, const CharPolyResult& res) {
    std::string s;
    auto zpow = [](int i) {
        if (i == 0) return std::string();
        if (i == 1) return std::string("Z");
        return "Z^" + std::to_string(i);
    };
    s += zpow(res.r);
    for (int i = res.r - 1; i >= 0; --i) {
        const FqPoly& a = res.a[i];
        if (poly_is_zero(a)) continue;
        s += " + ";
        std::string coef = poly_to_string(F, a, "x");
        if (i == 0) {
            s += coef;
            continue;
        }
        if (poly_deg(a) == 0 && a[0] == 1) {
            s += zpow(i);
        } else {
            bool multi = coef.find(' ') != std::string::npos;
            s += (multi ? "(" + coef + ")" : coef) + "*" + zpow(i);
        }
    }
    return s;
}

}  // namespace drinfeld
