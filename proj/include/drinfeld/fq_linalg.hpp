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

#ifndef DRINFELD_FQ_LINALG_HPP
#define DRINFELD_FQ_LINALG_HPP

#include <optional>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld {

/// Dense row-major matrix over F_q.
struct FqMat {
    int rows = 0, cols = 0;
    std::vector<fq> a;

    FqMat() = default;
    FqMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    fq& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    fq at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

std::vector<fq> fq_mat_vec(const Fq& F, const FqMat& m, const std::vector<fq>& v);

/// Inverse over F_q, or nullopt for a singular matrix.  Uses a bit-packed
/// elimination when q = 2.
std::optional<FqMat> fq_mat_inverse(const Fq& F, const FqMat& m);

struct FqSolution {
    std::vector<fq> x;
    bool unique = false;
};

/// One solution of m x = b (consistent or nullopt), flagging uniqueness.
std::optional<FqSolution> fq_solve(const Fq& F, const FqMat& m, const std::vector<fq>& b);

/// Incrementally finds the first linear dependency in a stream of vectors:
/// push() returns nullopt while the span grows, and the combination c with
/// v = sum c_i * (i-th previously pushed vector) once v is dependent.
class FqDependencyFinder {
  public:
    FqDependencyFinder(const Fq& F, int dim);
    std::optional<std::vector<fq>> push(const std::vector<fq>& v);
    int count() const { return count_; }

  private:
    const Fq* F_;
    int dim_, count_ = 0;
    bool packed_;
    // generic path: echelon rows with their expressions over the input
    std::vector<std::vector<fq>> rows_, combos_;
    std::vector<int> pivots_;
    // q = 2 path: the same state bit-packed
    std::vector<std::vector<std::uint64_t>> prows_, pcombos_;
};

}  // namespace drinfeld

#endif
