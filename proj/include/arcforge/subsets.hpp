/**************************************************************************
 * subsets.hpp
 *
 * Copyright 2026 The arcforge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace arcforge {

using IndexTuple = std::vector<std::size_t>;  // ascending indices

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

/// All ascending r-tuples over {0,..,m-1}, in lexicographic order.
inline std::vector<IndexTuple> combinations(std::size_t m, std::size_t r) {
    std::vector<IndexTuple> out;
    if (r > m) return out;
    IndexTuple c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        if (r == 0) break;
        // advance
        std::size_t i = r;
        while (i-- > 0) {
            if (c[i] + 1 <= m - (r - i)) {
                ++c[i];
                for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
    return out;
}

/// All ascending r-tuples of elements of `items` (itself ascending),
/// in lexicographic tuple order.
inline std::vector<IndexTuple> combinations_of(const IndexTuple& items, std::size_t r) {
    std::vector<IndexTuple> out;
    for (const auto& pos : combinations(items.size(), r)) {
        IndexTuple t(r);
        for (std::size_t i = 0; i < r; ++i) t[i] = items[pos[i]];
        out.push_back(std::move(t));
    }
    return out;
}

inline bool tuple_contains(const IndexTuple& t, std::size_t x) {
    return std::binary_search(t.begin(), t.end(), x);
}

inline bool tuple_subset(const IndexTuple& sub, const IndexTuple& sup) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

inline IndexTuple tuple_minus(const IndexTuple& a, const IndexTuple& b) {
    IndexTuple out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexTuple tuple_union(const IndexTuple& a, const IndexTuple& b) {
    IndexTuple out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexTuple tuple_with(IndexTuple t, std::size_t x) {
    t.insert(std::lower_bound(t.begin(), t.end(), x), x);
    return t;
}

}  // namespace arcforge
