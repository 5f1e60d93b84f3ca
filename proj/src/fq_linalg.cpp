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

#include "drinfeld/fq_linalg.hpp"

#include <cstdint>
#include <stdexcept>

namespace drinfeld {

namespace {

inline std::size_t words_for(int bits) { return (std::size_t(bits) + 63) / 64; }

inline bool get_bit(const std::vector<std::uint64_t>& w, int i) {
    return (w[std::size_t(i) >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(std::vector<std::uint64_t>& w, int i) {
    w[std::size_t(i) >> 6] |= std::uint64_t(1) << (i & 63);
}

inline void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::vector<std::uint64_t> pack_bits(const std::vector<fq>& v) {
    std::vector<std::uint64_t> w(words_for(static_cast<int>(v.size())), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) w[i >> 6] |= std::uint64_t(1) << (i & 63);
    return w;
}

// GF(2) inverse by packed Gauss-Jordan on [m | I].
std::optional<FqMat> gf2_inverse(const FqMat& m) {
    int n = m.rows;
    std::size_t w = words_for(2 * n);
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(w, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (m.at(i, j)) set_bit(rows[i], j);
        set_bit(rows[i], n + i);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (get_bit(rows[i], col)) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        std::swap(rows[col], rows[piv]);
        for (int i = 0; i < n; ++i)
            if (i != col && get_bit(rows[i], col)) xor_into(rows[i], rows[col]);
    }
    FqMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = get_bit(rows[i], n + j) ? 1 : 0;
    return inv;
}

}  // namespace

std::vector<fq> fq_mat_vec(const Fq& F, const FqMat& m, const std::vector<fq>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("fq_mat_vec: dimension mismatch");
    std::vector<fq> r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        fq acc = 0;
        const fq* row = &m.a[std::size_t(i) * m.cols];
        for (int j = 0; j < m.cols; ++j)
            if (v[j]) acc = F.add(acc, F.mul(row[j], v[j]));
        r[i] = acc;
    }
    return r;
}

std::optional<FqMat> fq_mat_inverse(const Fq& F, const FqMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("fq_mat_inverse: matrix not square");
    if (F.q() == 2) return gf2_inverse(m);
    int n = m.rows;
    FqMat work = m;
    FqMat inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (work.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(col, j), work.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
        }
        fq s = F.inv(work.at(col, col));
        for (int j = 0; j < n; ++j) {
            work.at(col, j) = F.mul(s, work.at(col, j));
            inv.at(col, j) = F.mul(s, inv.at(col, j));
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            fq c = work.at(i, col);
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) {
                work.at(i, j) = F.sub(work.at(i, j), F.mul(c, work.at(col, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(c, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::optional<FqSolution> fq_solve(const Fq& F, const FqMat& m, const std::vector<fq>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("fq_solve: dimension mismatch");
    int rows = m.rows, cols = m.cols;
    FqMat aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (aug.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j <= cols; ++j) std::swap(aug.at(rank, j), aug.at(piv, j));
        fq s = F.inv(aug.at(rank, col));
        for (int j = 0; j <= cols; ++j) aug.at(rank, j) = F.mul(s, aug.at(rank, j));
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            fq c = aug.at(i, col);
            if (c == 0) continue;
            for (int j = 0; j <= cols; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(c, aug.at(rank, j)));
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (aug.at(i, cols) != 0) return std::nullopt;
    FqSolution sol;
    sol.x.assign(cols, 0);
    for (int col = 0; col < cols; ++col)
        if (pivot_of_col[col] >= 0) sol.x[col] = aug.at(pivot_of_col[col], cols);
    sol.unique = (rank == cols);
    return sol;
}

FqDependencyFinder::FqDependencyFinder(const Fq& F, int dim)
    : F_(&F), dim_(dim), packed_(F.q() == 2) {}

std::optional<std::vector<fq>> FqDependencyFinder::push(const std::vector<fq>& v) {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("FqDependencyFinder: bad vector length");
    const Fq& F = *F_;
    if (packed_) {
        auto row = pack_bits(v);
        std::vector<std::uint64_t> combo(words_for(count_ + 1), 0);
        set_bit(combo, count_);
        for (std::size_t r = 0; r < prows_.size(); ++r) {
            int p = pivots_[r];
            if (get_bit(row, p)) {
                xor_into(row, prows_[r]);
                // nonzero bits of pcombos_[r] sit below the current count
                for (std::size_t i = 0; i < combo.size(); ++i) combo[i] ^= pcombos_[r][i];
            }
        }
        int piv = -1;
        for (int i = 0; i < dim_; ++i)
            if (get_bit(row, i)) { piv = i; break; }
        if (piv < 0) {
            std::vector<fq> c(count_, 0);
            for (int i = 0; i < count_; ++i) c[i] = get_bit(combo, i) ? 1 : 0;
            return c;  // v = sum c_i v_i (over GF(2) signs are moot)
        }
        pivots_.push_back(piv);
        prows_.push_back(std::move(row));
        combo.resize(words_for(dim_ + 1), 0);
        pcombos_.push_back(std::move(combo));
        ++count_;
        return std::nullopt;
    }

    std::vector<fq> row = v;
    std::vector<fq> combo(count_ + 1, 0);
    combo[count_] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int p = pivots_[r];
        fq c = row[p];
        if (c == 0) continue;
        for (int i = 0; i < dim_; ++i) row[i] = F.sub(row[i], F.mul(c, rows_[r][i]));
        // nonzero entries of combos_[r] sit below the current count
        for (std::size_t i = 0; i < combo.size(); ++i)
            combo[i] = F.sub(combo[i], F.mul(c, combos_[r][i]));
    }
    int piv = -1;
    for (int i = 0; i < dim_; ++i)
        if (row[i] != 0) { piv = i; break; }
    if (piv < 0) {
        // row reduced to zero: 0 = v - sum (.) v_i, so negate the prefix
        std::vector<fq> c(count_, 0);
        for (int i = 0; i < count_; ++i) c[i] = F.neg(combo[i]);
        return c;
    }
    fq s = F.inv(row[piv]);
    for (int i = 0; i < dim_; ++i) row[i] = F.mul(s, row[i]);
    for (auto& c : combo) c = F.mul(s, c);
    combo.resize(dim_ + 1, 0);
    pivots_.push_back(piv);
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    ++count_;
    return std::nullopt;
}

}  // namespace drinfeld
