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

#ifndef DRINFELD_LINALG_HPP
#define DRINFELD_LINALG_HPP

#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

#include "drinfeld/field_tower.hpp"

namespace drinfeld {

/// Commutative coefficient ring: enough structure for matrix products and
/// division-free characteristic polynomials.
template <typename R>
concept Ring = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    typename R::Elem;
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.neg(a) } -> std::convertible_to<typename R::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.eq(a, b) } -> std::convertible_to<bool>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
};

/// L viewed as a coefficient ring.
struct LRing {
    const FieldTower* tower;

    using Elem = LElem;
    Elem zero() const { return tower->zero(); }
    Elem one() const { return tower->one(); }
    Elem add(const Elem& a, const Elem& b) const { return tower->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return tower->sub(a, b); }
    Elem neg(const Elem& a) const { return tower->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return tower->mul(a, b); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return tower->is_zero(a); }
};

/// Dense univariate polynomials over a ring, little-endian and trimmed.
template <Ring R>
struct PolyRing {
    R base;

    using Elem = std::vector<typename R::Elem>;

    void trim(Elem& a) const {
        while (!a.empty() && base.is_zero(a.back())) a.pop_back();
    }
    int deg(const Elem& a) const { return static_cast<int>(a.size()) - 1; }

    Elem zero() const { return {}; }
    Elem one() const { return {base.one()}; }
    Elem from_base(const typename R::Elem& c) const {
        if (base.is_zero(c)) return {};
        return {c};
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c(std::max(a.size(), b.size()), base.zero());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.size() && i < b.size())
                c[i] = base.add(a[i], b[i]);
            else
                c[i] = i < a.size() ? a[i] : b[i];
        }
        trim(c);
        return c;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const {
        Elem c = a;
        for (auto& x : c) x = base.neg(x);
        return c;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.empty() || b.empty()) return {};
        Elem c(a.size() + b.size() - 1, base.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (base.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = base.add(c[i + j], base.mul(a[i], b[j]));
        }
        trim(c);
        return c;
    }
    Elem scale(const typename R::Elem& s, const Elem& a) const {
        Elem c(a.size(), base.zero());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = base.mul(s, a[i]);
        trim(c);
        return c;
    }
    bool eq(const Elem& a, const Elem& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!base.eq(a[i], b[i])) return false;
        return true;
    }
    bool is_zero(const Elem& a) const { return a.empty(); }
};

/// Dense row-major matrix over one coefficient ring.
template <Ring R>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<typename R::Elem> e;

    Matrix() = default;
    Matrix(const R& ring, int r, int c)
        : rows(r), cols(c), e(std::size_t(r) * c, ring.zero()) {}
    typename R::Elem& at(int i, int j) { return e[std::size_t(i) * cols + j]; }
    const typename R::Elem& at(int i, int j) const { return e[std::size_t(i) * cols + j]; }
};

template <Ring R>
Matrix<R> mat_identity(const R& ring, int s) {
    Matrix<R> m(ring, s, s);
    for (int i = 0; i < s; ++i) m.at(i, i) = ring.one();
    return m;
}

template <Ring R>
bool mat_eq(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (!ring.eq(a.e[i], b.e[i])) return false;
    return true;
}

template <Ring R>
Matrix<R> mat_add(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("mat_add: dimension mismatch");
    Matrix<R> c = a;
    for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] = ring.add(c.e[i], b.e[i]);
    return c;
}

template <Ring R>
Matrix<R> mat_mul(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Matrix<R> c(ring, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (ring.is_zero(aik)) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (ring.is_zero(b.at(k, j))) continue;
                c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
            }
        }
    return c;
}

/// Ordered product M_s ... M_1 for the input sequence (M_1, ..., M_s), by
/// balanced pairing so intermediate degrees roughly double per level.
template <Ring R>
Matrix<R> product_chain(const R& ring, std::span<const Matrix<R>> mats) {
    if (mats.empty()) throw std::invalid_argument("product_chain: empty sequence");
    for (const auto& m : mats)
        if (m.rows != m.cols || m.rows != mats[0].rows)
            throw std::invalid_argument("product_chain: matrices must be square, same size");
    struct Rec {
        const R& ring;
        std::span<const Matrix<R>> mats;
        Matrix<R> run(std::size_t lo, std::size_t hi) {
            if (hi - lo == 1) return mats[lo];
            std::size_t mid = lo + (hi - lo) / 2;
            Matrix<R> right = run(lo, mid);
            Matrix<R> left = run(mid, hi);
            return mat_mul(ring, left, right);
        }
    };
    return Rec{ring, mats}.run(0, mats.size());
}

/// Coefficients of det(Z I - M), little-endian, monic of degree M.rows.
/// Berkowitz's division-free scheme, valid over any commutative ring.
template <Ring R>
std::vector<typename R::Elem> berkowitz_charpoly(const R& ring, const Matrix<R>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("berkowitz_charpoly: matrix not square");
    int n = m.rows;
    if (n == 0) return {ring.one()};
    using Elem = typename R::Elem;
    // v holds the charpoly of the leading t x t block, descending from Z^t
    std::vector<Elem> v = {ring.one(), ring.neg(m.at(0, 0))};
    for (int t = 2; t <= n; ++t) {
        // Toeplitz column: 1, -a, -R C, -R M C, -R M^2 C, ...
        std::vector<Elem> f(t + 1, ring.zero());
        f[0] = ring.one();
        f[1] = ring.neg(m.at(t - 1, t - 1));
        std::vector<Elem> w(t - 1);
        for (int i = 0; i < t - 1; ++i) w[i] = m.at(i, t - 1);  // C
        for (int s = 2; s <= t; ++s) {
            Elem dot = ring.zero();
            for (int i = 0; i < t - 1; ++i)
                dot = ring.add(dot, ring.mul(m.at(t - 1, i), w[i]));
            f[s] = ring.neg(dot);
            if (s == t) break;
            std::vector<Elem> w2(t - 1, ring.zero());
            for (int i = 0; i < t - 1; ++i) {
                for (int j = 0; j < t - 1; ++j)
                    w2[i] = ring.add(w2[i], ring.mul(m.at(i, j), w[j]));
            }
            w = std::move(w2);
        }
        std::vector<Elem> nv(t + 1, ring.zero());
        for (int i = 0; i <= t; ++i)
            for (int j = 0; j < t && j <= i; ++j)
                nv[i] = ring.add(nv[i], ring.mul(f[i - j], v[j]));
        v = std::move(nv);
    }
    return {v.rbegin(), v.rend()};
}

}  // namespace drinfeld

#endif
