/**************************************************************************
 * field.cpp
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

#include "arcforge/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arcforge {

namespace {

constexpr std::uint64_t kMaxQ = 1u << 20;
constexpr std::uint64_t kFullTableLimit = 256;
constexpr std::uint64_t kLogTableLimit = 65536;

using Poly = std::vector<Fe>;  // little-endian coefficients over GF(p)

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t qq = r / new_r;
        std::int64_t tmp = t - qq * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - qq * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(std::uint64_t p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<Fe>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    poly_trim(r);
    return r;
}

// remainder of a modulo monic m
Poly poly_mod(std::uint64_t p, Poly a, const Poly& m) {
    poly_trim(a);
    const int dm = poly_deg(m);
    while (poly_deg(a) >= dm) {
        const Fe c = a.back();
        const int shift = poly_deg(a) - dm;
        if (c != 0) {
            for (int j = 0; j <= dm; ++j) {
                std::uint64_t sub = (static_cast<std::uint64_t>(c) * m[j]) % p;
                std::uint64_t cur = a[j + shift];
                a[j + shift] = static_cast<Fe>((cur + p - sub) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(std::uint64_t p, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(p, poly_mul(p, a, b), m);
}

Poly poly_powmod(std::uint64_t p, Poly base, std::uint64_t n, const Poly& m) {
    Poly r{1};
    base = poly_mod(p, std::move(base), m);
    while (n > 0) {
        if (n & 1) r = poly_mulmod(p, r, base, m);
        base = poly_mulmod(p, base, base, m);
        n >>= 1;
    }
    return r;
}

Poly poly_sub(std::uint64_t p, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<Fe>((a[i] + p - b[i]) % p);
    poly_trim(a);
    return a;
}

Poly poly_make_monic(std::uint64_t p, Poly f) {
    poly_trim(f);
    if (f.empty()) return f;
    const std::uint64_t lead_inv = mod_inverse(f.back(), p);
    for (auto& c : f) c = static_cast<Fe>((c * lead_inv) % p);
    return f;
}

Poly poly_gcd(std::uint64_t p, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(p, a, poly_make_monic(p, b));
        a = std::move(b);
        b = std::move(r);
        poly_trim(b);
    }
    return poly_make_monic(p, a);
}

// inverse of a modulo monic irreducible m, via extended Euclid in GF(p)[X]
Poly poly_invmod(std::uint64_t p, Poly a, const Poly& m) {
    Poly r0 = m, r1 = poly_mod(p, std::move(a), m);
    Poly t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly quo;
        Poly rem = r0;
        poly_trim(rem);
        const int d1 = poly_deg(r1);
        const std::uint64_t lead_inv = mod_inverse(r1.back(), p);
        while (poly_deg(rem) >= d1) {
            const int shift = poly_deg(rem) - d1;
            const Fe c = static_cast<Fe>((static_cast<std::uint64_t>(rem.back()) * lead_inv) % p);
            if (static_cast<int>(quo.size()) < shift + 1) quo.resize(shift + 1, 0);
            quo[shift] = static_cast<Fe>((quo[shift] + c) % p);
            for (int j = 0; j <= d1; ++j) {
                std::uint64_t sub = (static_cast<std::uint64_t>(c) * r1[j]) % p;
                rem[j + shift] = static_cast<Fe>((rem[j + shift] + p - sub) % p);
            }
            poly_trim(rem);
        }
        Poly t2 = poly_sub(p, t0, poly_mul(p, quo, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (poly_deg(r0) != 0) throw std::domain_error("not invertible");
    const std::uint64_t lead_inv = mod_inverse(r0[0], p);
    for (auto& c : t0) c = static_cast<Fe>((c * lead_inv) % p);
    poly_trim(t0);
    return t0;
}

std::uint64_t ipow(std::uint64_t b, unsigned n) {
    std::uint64_t r = 1;
    while (n--) r *= b;
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool poly_irreducible(std::uint64_t p, const std::vector<Fe>& f) {
    Poly m = f;
    poly_trim(m);
    const int e = poly_deg(m);
    if (e < 1 || m.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    if (e == 1) return true;
    // Rabin: X^(p^e) == X mod f, and gcd(X^(p^(e/r)) - X, f) = 1 for prime r | e
    const Poly x{0, 1};
    Poly xq = poly_powmod(p, x, ipow(p, static_cast<unsigned>(e)), m);
    if (poly_sub(p, xq, x) != Poly{}) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(e))) {
        Poly xr = poly_powmod(p, x, ipow(p, static_cast<unsigned>(e / r)), m);
        Poly g = poly_gcd(p, poly_sub(p, xr, x), m);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

std::vector<Fe> find_modulus(std::uint64_t p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be >= 1");
    if (e == 1) return {0, 1};
    const std::uint64_t count = ipow(p, e);
    if (count > kMaxQ) throw std::invalid_argument("q > 2^20 is out of scope");
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly f(e + 1, 0);
        std::uint64_t v = low;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = static_cast<Fe>(v % p);
            v /= p;
        }
        f[e] = 1;
        if (poly_irreducible(p, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(std::uint64_t p, unsigned e, std::vector<Fe> modulus) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > kMaxQ) throw std::invalid_argument("q > 2^20 is out of scope");
    }
    if (e == 1) {
        modulus_ = {0, 1};  // unused for prime fields
    } else {
        if (modulus.size() != e + 1 || modulus.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree e");
        for (Fe c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (!poly_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible");
        modulus_ = std::move(modulus);
    }
    build_tables();
}

void Field::check(Fe a) const {
    if (a >= q_) throw std::invalid_argument("element code " + std::to_string(a) + " out of range for q=" + std::to_string(q_));
}

std::vector<Fe> Field::decode(Fe a) const {
    check(a);
    std::vector<Fe> d(e_);
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = static_cast<Fe>(a % p_);
        a = static_cast<Fe>(a / p_);
    }
    return d;
}

Fe Field::encode(const std::vector<Fe>& digits) const {
    if (digits.size() > e_) {
        for (std::size_t i = e_; i < digits.size(); ++i)
            if (digits[i] != 0) throw std::invalid_argument("digit vector too long");
    }
    Fe a = 0;
    for (std::size_t i = std::min<std::size_t>(digits.size(), e_); i-- > 0;) {
        if (digits[i] >= p_) throw std::invalid_argument("digit out of range");
        a = static_cast<Fe>(a * p_ + digits[i]);
    }
    return a;
}

Fe Field::add_direct(Fe a, Fe b) const {
    if (e_ == 1) return static_cast<Fe>((static_cast<std::uint64_t>(a) + b) % p_);
    Fe r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint64_t da = (a / mult) % p_;
        const std::uint64_t db = (b / mult) % p_;
        r += static_cast<Fe>(((da + db) % p_) * mult);
        mult *= p_;
    }
    return r;
}

Fe Field::mul_direct(Fe a, Fe b) const {
    if (e_ == 1) return static_cast<Fe>((static_cast<std::uint64_t>(a) * b) % p_);
    const Poly pa = decode(a), pb = decode(b);
    const Poly pr = poly_mulmod(p_, pa, pb, modulus_);
    Fe r = 0;
    for (std::size_t i = pr.size(); i-- > 0;) r = static_cast<Fe>(r * p_ + pr[i]);
    return r;
}

Fe Field::inv_direct(Fe a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    check(a);
    if (e_ == 1) return static_cast<Fe>(mod_inverse(a, p_));
    Poly pi = poly_invmod(p_, decode(a), modulus_);
    Fe r = 0;
    for (std::size_t i = pi.size(); i-- > 0;) r = static_cast<Fe>(r * p_ + pi[i]);
    return r;
}

void Field::build_tables() {
    if (q_ <= kFullTableLimit) {
        accel_ = Accel::full_tables;
        const std::size_t q = q_;
        add_tab_.resize(q * q);
        mul_tab_.resize(q * q);
        neg_tab_.resize(q);
        inv_tab_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = 0; b < q; ++b) {
                add_tab_[a * q + b] = add_direct(static_cast<Fe>(a), static_cast<Fe>(b));
                const Fe m = mul_direct(static_cast<Fe>(a), static_cast<Fe>(b));
                mul_tab_[a * q + b] = m;
                if (m == 1) inv_tab_[a] = static_cast<Fe>(b);
            }
        }
        for (std::size_t a = 0; a < q; ++a) {
            Fe n = 0;
            for (std::size_t b = 0; b < q; ++b)
                if (add_tab_[a * q + b] == 0) {
                    n = static_cast<Fe>(b);
                    break;
                }
            neg_tab_[a] = n;
        }
    } else if (q_ <= kLogTableLimit) {
        accel_ = Accel::log_tables;
        // find a generator of the multiplicative group
        const auto factors = prime_factors(q_ - 1);
        Fe gen = 0;
        for (Fe g = 2; g < q_; ++g) {
            bool ok = true;
            for (std::uint64_t r : factors) {
                // g^((q-1)/r) by square-and-multiply over mul_direct
                std::uint64_t n = (q_ - 1) / r;
                Fe acc = 1, base = g;
                while (n > 0) {
                    if (n & 1) acc = mul_direct(acc, base);
                    base = mul_direct(base, base);
                    n >>= 1;
                }
                if (acc == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = g;
                break;
            }
        }
        exp_tab_.resize(q_ - 1);
        log_tab_.assign(q_, 0);
        Fe cur = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_tab_[i] = cur;
            log_tab_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_direct(cur, gen);
        }
    } else {
        accel_ = Accel::direct;
    }
}

Fe Field::add(Fe a, Fe b) const {
    if (accel_ == Accel::full_tables) {
        check(a);
        check(b);
        return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    }
    check(a);
    check(b);
    return add_direct(a, b);
}

Fe Field::neg(Fe a) const {
    check(a);
    if (accel_ == Accel::full_tables) return neg_tab_[a];
    if (e_ == 1) return a == 0 ? 0 : static_cast<Fe>(p_ - a);
    Fe r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint64_t da = (a / mult) % p_;
        r += static_cast<Fe>((da == 0 ? 0 : p_ - da) * mult);
        mult *= p_;
    }
    return r;
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
    check(a);
    check(b);
    switch (accel_) {
        case Accel::full_tables:
            return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
        case Accel::log_tables: {
            if (a == 0 || b == 0) return 0;
            const std::uint64_t s = static_cast<std::uint64_t>(log_tab_[a]) + log_tab_[b];
            return exp_tab_[s % (q_ - 1)];
        }
        case Accel::direct:
            return mul_direct(a, b);
    }
    return 0;
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    check(a);
    switch (accel_) {
        case Accel::full_tables:
            return inv_tab_[a];
        case Accel::log_tables: {
            const std::uint64_t l = log_tab_[a];
            return exp_tab_[l == 0 ? 0 : q_ - 1 - l];
        }
        case Accel::direct:
            return inv_direct(a);
    }
    return 0;
}

Fe Field::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe Field::pow(Fe a, std::int64_t n) const {
    check(a);
    if (n < 0) {
        a = inv(a);  // throws for a = 0
        n = -n;
    }
    Fe acc = 1;
    std::uint64_t m = static_cast<std::uint64_t>(n);
    while (m > 0) {
        if (m & 1) acc = mul(acc, a);
        a = mul(a, a);
        m >>= 1;
    }
    return acc;
}

std::vector<Fe> Field::elements() const {
    std::vector<Fe> es(q_);
    for (std::uint64_t i = 0; i < q_; ++i) es[i] = static_cast<Fe>(i);
    return es;
}

FieldPtr make_field(std::uint64_t p, unsigned e) {
    return std::make_shared<Field>(p, e, find_modulus(p, e));
}

FieldPtr make_field(std::uint64_t p, unsigned e, std::vector<Fe> modulus) {
    return std::make_shared<Field>(p, e, std::move(modulus));
}

}  // namespace arcforge
