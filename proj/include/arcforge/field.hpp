/**************************************************************************
 * field.hpp
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

#include <cstdint>
#include <memory>
#include <vector>

namespace arcforge {

/// Canonical element encoding: an element of GF(p^e) is the integer in
/// [0, q) whose base-p digit i is the coefficient of X^i in the residue
/// polynomial. 0 and 1 are the additive and multiplicative identities.
using Fe = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Monic irreducible polynomial of degree e over GF(p) whose coefficient
/// list, read little-endian as a base-p integer, is smallest. For e = 1
/// this is X, i.e. {0, 1}.
std::vector<Fe> find_modulus(std::uint64_t p, unsigned e);

/// True iff the monic polynomial f (little-endian, degree >= 1) is
/// irreducible over GF(p).
bool poly_irreducible(std::uint64_t p, const std::vector<Fe>& f);

/// Exact arithmetic in GF(p^e). Immutable after construction; all
/// operations are pure and safe to share between threads.
///
/// Small fields are accelerated with full addition/multiplication tables
/// (q <= 256) or log/antilog tables (q <= 65536); results are bit-identical
/// to the direct polynomial arithmetic either way.
class Field {
public:
    /// Throws std::invalid_argument on non-prime p, bad modulus degree,
    /// reducible modulus, or q > 2^20.
    Field(std::uint64_t p, unsigned e, std::vector<Fe> modulus);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<Fe>& modulus() const { return modulus_; }
    bool odd_characteristic() const { return p_ != 2; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe mul(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    /// Throws std::domain_error when b = 0.
    Fe div(Fe a, Fe b) const;
    /// Throws std::domain_error when a = 0.
    Fe inv(Fe a) const;
    /// pow(0, 0) = 1; negative exponents invert first.
    Fe pow(Fe a, std::int64_t n) const;

    /// All element codes 0..q-1 in ascending order.
    std::vector<Fe> elements() const;

    /// Base-p digits of a code, little-endian, length e.
    std::vector<Fe> decode(Fe a) const;
    Fe encode(const std::vector<Fe>& digits) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    /// Table-free reference implementations, kept for cross-checking.
    Fe add_direct(Fe a, Fe b) const;
    Fe mul_direct(Fe a, Fe b) const;
    Fe inv_direct(Fe a) const;

private:
    void check(Fe a) const;
    void build_tables();

    std::uint64_t p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<Fe> modulus_;

    enum class Accel { full_tables, log_tables, direct };
    Accel accel_;
    std::vector<Fe> add_tab_, mul_tab_, neg_tab_, inv_tab_;
    std::vector<Fe> exp_tab_;
    std::vector<std::uint32_t> log_tab_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Field with the canonical modulus from find_modulus.
FieldPtr make_field(std::uint64_t p, unsigned e = 1);
FieldPtr make_field(std::uint64_t p, unsigned e, std::vector<Fe> modulus);

}  // namespace arcforge
