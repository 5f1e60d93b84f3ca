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

#ifndef DRINFELD_COUNTERS_HPP
#define DRINFELD_COUNTERS_HPP

#include <atomic>
#include <cstdint>

namespace drinfeld {

/// Instrumentation totals, monotone over the lifetime of a FieldTower.
/// Callers measure a computation by diffing two snapshots.
struct OpCounts {
    std::uint64_t frobenius_apps = 0;  ///< applications of c -> c^(q^t), t != 0
    std::uint64_t l_muls = 0;          ///< multiplications in L, including those
                                       ///< inside Frobenius compositions

    OpCounts operator-(const OpCounts& rhs) const {
        return {frobenius_apps - rhs.frobenius_apps, l_muls - rhs.l_muls};
    }
};

/// Relaxed atomics so read-only sharing of a tower across threads stays safe.
class OpCounters {
  public:
    void tick_frobenius() const { frobenius_apps_.fetch_add(1, std::memory_order_relaxed); }
    void tick_l_mul() const { l_muls_.fetch_add(1, std::memory_order_relaxed); }
    void add_l_muls(std::uint64_t k) const { l_muls_.fetch_add(k, std::memory_order_relaxed); }

    OpCounts snapshot() const {
        return {frobenius_apps_.load(std::memory_order_relaxed),
                l_muls_.load(std::memory_order_relaxed)};
    }

  private:
    mutable std::atomic<std::uint64_t> frobenius_apps_{0};
    mutable std::atomic<std::uint64_t> l_muls_{0};
};

}  // namespace drinfeld

#endif
