/*
* Copyright 2026 the gpaley authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include "gpaley/ffield.hpp"

#include <algorithm>
#include <cassert>

namespace gpaley {

namespace {

using Poly = std::vector<long long>;  // coefficient i of t^i, over F_p

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// remainder of a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, long long p) {
    const size_t deg = f.size() - 1;
    while (a.size() > deg) {
        long long c = a.back();
        size_t shift = a.size() - 1 - deg;
        if (c != 0)
            for (size_t i = 0; i < f.size(); ++i) {
                size_t pos = shift + i;
                a[pos] = ((a[pos] - c * f[i]) % p + p) % p;
            }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long long p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& f, long long p) {
    Poly r = {1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
    while (!b.empty()) {
        // poly_mod needs a monic divisor; scaling does not change the gcd
        if (b.back() != 1) {
            long long inv = powmod(b.back(), p - 2, p);
            for (auto& c : b) c = c * inv % p;
        }
        Poly r = poly_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {  // make monic
        long long inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

// Rabin's test: f (monic, degree E>=1) is irreducible over F_p iff
// t^(p^E) == t mod f and gcd(t^(p^(E/l)) - t, f) = 1 for every prime l | E.
bool is_irreducible(const Poly& f, long long p, int E) {
    if (E == 1) return true;
    Poly t = {0, 1};
    // frob[j] = t^(p^j) mod f, computed by repeated p-th powers
    Poly h = t;
    std::vector<Poly> frob(E + 1);
    frob[0] = t;
    for (int j = 1; j <= E; ++j) {
        h = poly_powmod(h, p, f, p);
        frob[j] = h;
    }
    if (frob[E] != poly_mod(t, f, p)) return false;
    for (long long l : prime_factors(E)) {
        Poly diff = frob[E / l];
        // diff -= t
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly poly_from_encoding(long long enc, long long p) {
    Poly f;
    while (enc > 0) {
        f.push_back(enc % p);
        enc /= p;
    }
    return f;
}

long long encoding_of_poly(const Poly& f, long long p) {
    long long enc = 0;
    for (size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
    return enc;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

long long pollard_rho(long long n) {
    if (n % 2 == 0) return 2;
    SplitMix64 rng(static_cast<uint64_t>(n));
    while (true) {
        long long c = static_cast<long long>(rng.below(static_cast<uint64_t>(n - 1))) + 1;
        long long x = 2, y = 2, d = 1;
        auto step = [&](long long v) {
            return static_cast<long long>((mulmod_u64(v, v, n) + c) % n);
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(std::abs(x - y), n);
        }
        if (d != n) return d;
    }
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit with the standard witness set
    long long d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == static_cast<uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == static_cast<uint64_t>(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p <= 4096 && p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            out.push_back(n);
        } else {
            long long d = pollard_rho(n);
            auto a = prime_factors(d);
            auto b = prime_factors(n / d);
            out.insert(out.end(), a.begin(), a.end());
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FieldCtx::FieldCtx(long long p, int E, int ambient_bits) : p_(p), E_(E) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (E < 1) throw InvalidSubfieldDegree("extension degree must be >= 1");
    if (ambient_bits < 1 || ambient_bits > 40)
        throw AmbientTooLarge("ambient bits out of range");
    ambient_cap_ = 1LL << ambient_bits;
    long long q = 1;
    for (int i = 0; i < E; ++i) {
        if (q > ambient_cap_ / p)
            throw AmbientTooLarge("p^E exceeds ambient cap 2^" + std::to_string(ambient_bits));
        q *= p;
    }
    if (q > ambient_cap_)
        throw AmbientTooLarge("p^E exceeds ambient cap 2^" + std::to_string(ambient_bits));
    q_ = q;

    // modulus: smallest monic irreducible of degree E in base-p encoding order
    if (E == 1) {
        modulus_ = {0, 1};  // t
    } else {
        modulus_.clear();
        for (long long enc = 0; enc < q_; ++enc) {
            Poly f = poly_from_encoding(enc, p_);
            f.resize(E + 1, 0);
            f[E] = 1;
            if (is_irreducible(f, p_, E)) {
                modulus_ = f;
                break;
            }
        }
        assert(!modulus_.empty() && "no irreducible polynomial found");
    }

    factors_ = q_ > 1 ? prime_factors(q_ - 1) : std::vector<long long>{};

    // primitive element: smallest encoding with multiplicative order q-1
    gen_enc_ = 0;
    for (long long enc = 1; enc < q_; ++enc) {
        Poly c = poly_from_encoding(enc, p_);
        bool primitive = true;
        for (long long l : factors_) {
            Poly r = poly_powmod(c, (q_ - 1) / l, modulus_, p_);
            if (r == Poly{1}) { primitive = false; break; }
        }
        if (primitive) { gen_enc_ = enc; break; }
    }
    assert((gen_enc_ != 0 || q_ == 2) && "no primitive element found");
    if (q_ == 2) gen_enc_ = 1;

    // exp/log tables (transient) -> Zech table
    std::vector<long long> expv(static_cast<size_t>(q_ - 1));
    {
        Poly g = poly_from_encoding(gen_enc_, p_);
        Poly cur = {1};
        for (long long k = 0; k < q_ - 1; ++k) {
            expv[static_cast<size_t>(k)] = encoding_of_poly(cur, p_);
            cur = poly_mulmod(cur, g, modulus_, p_);
        }
        assert(cur == Poly{1} && "generator order defect");
    }
    std::vector<long long> logv(static_cast<size_t>(q_), -1);
    for (long long k = 0; k < q_ - 1; ++k) logv[static_cast<size_t>(expv[static_cast<size_t>(k)])] = k;

    zech_.resize(static_cast<size_t>(q_ - 1));
    for (long long k = 0; k < q_ - 1; ++k) {
        long long enc = expv[static_cast<size_t>(k)];
        long long c0 = enc % p_;
        long long enc1 = enc - c0 + (c0 + 1) % p_;  // add 1 in the constant digit
        zech_[static_cast<size_t>(k)] =
            enc1 == 0 ? static_cast<uint32_t>(q_ - 1) : static_cast<uint32_t>(logv[static_cast<size_t>(enc1)]);
    }

    prime_log_.resize(static_cast<size_t>(p_), -1);
    for (long long a = 1; a < p_ && a < q_; ++a) prime_log_[static_cast<size_t>(a)] = logv[static_cast<size_t>(a)];
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long i = a.k, j = b.k;
    if (i > j) std::swap(i, j);
    long long z = zech_at(j - i);
    if (z == q_ - 1) return FieldElem::zero();
    return FieldElem::from_index((i + z) % (q_ - 1));
}

FieldElem FieldCtx::neg(FieldElem a) const {
    if (a.is_zero() || p_ == 2) return a;
    return FieldElem::from_index((a.k + (q_ - 1) / 2) % (q_ - 1));
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return FieldElem::zero();
    return FieldElem::from_index((a.k + b.k) % (q_ - 1));
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw DivisionByZero("inv(0)");
    return FieldElem::from_index((q_ - 1 - a.k) % (q_ - 1));
}

FieldElem FieldCtx::pow(FieldElem a, long long e) const {
    if (a.is_zero()) {
        if (e == 0) return FieldElem::one();
        if (e < 0) throw DivisionByZero("negative power of 0");
        return FieldElem::zero();
    }
    long long m = q_ - 1;
    long long r = e % m;
    if (r < 0) r += m;
    return FieldElem::from_index(static_cast<long long>((__int128)a.k * r % m));
}

SubfieldHandle FieldCtx::subfield(int e) const {
    if (e < 1 || E_ % e != 0)
        throw InvalidSubfieldDegree("degree " + std::to_string(e) + " does not divide " + std::to_string(E_));
    SubfieldHandle h;
    h.e = e;
    h.size = ipow(p_, e);
    h.cofactor = (q_ - 1) / (h.size - 1);
    return h;
}

bool FieldCtx::in_subfield(FieldElem x, const SubfieldHandle& sub) const {
    return x.is_zero() || x.k % sub.cofactor == 0;
}

long long FieldCtx::subfield_index(FieldElem x, const SubfieldHandle& sub) const {
    if (x.is_zero() || !in_subfield(x, sub)) throw NotInSubfield("element not in subfield");
    return x.k / sub.cofactor;
}

FieldElem FieldCtx::subfield_elem(const SubfieldHandle& sub, long long j) const {
    return FieldElem::from_index(j % (sub.size - 1) * sub.cofactor);
}

FieldElem FieldCtx::frobenius(FieldElem x, int e) const {
    if (e < 1 || E_ % e != 0)
        throw InvalidSubfieldDegree("frobenius degree " + std::to_string(e) + " does not divide E");
    if (x.is_zero()) return x;
    long long m = q_ - 1;
    long long pe = ipow(p_, e) % m;
    return FieldElem::from_index(static_cast<long long>((__int128)x.k * pe % m));
}

FieldElem FieldCtx::norm_to(FieldElem x, const SubfieldHandle& sub, const SubfieldHandle& top) const {
    if (top.e % sub.e != 0)
        throw InvalidSubfieldDegree("norm target is not a subfield of the source");
    if (!in_subfield(x, top)) throw NotInSubfield("norm input outside the source field");
    if (x.is_zero()) return x;
    return pow(x, (top.size - 1) / (sub.size - 1));
}

int FieldCtx::degree_over(FieldElem x, const SubfieldHandle& base) const {
    FieldElem y = frobenius(x, base.e);
    int d = 1;
    while (!(y == x)) {
        y = frobenius(y, base.e);
        ++d;
    }
    return d;
}

std::set<FieldElem> FieldCtx::galois_conjugates(FieldElem x, const SubfieldHandle& base) const {
    std::set<FieldElem> orbit;
    FieldElem y = x;
    do {
        orbit.insert(y);
        y = frobenius(y, base.e);
    } while (!(y == x));
    return orbit;
}

bool FieldCtx::are_conjugate(FieldElem x, FieldElem y, const SubfieldHandle& base) const {
    FieldElem z = x;
    do {
        if (z == y) return true;
        z = frobenius(z, base.e);
    } while (!(z == x));
    return false;
}

bool FieldCtx::dth_power_test(FieldElem x, long long d, const SubfieldHandle& sub) const {
    if (d < 1 || (sub.size - 1) % d != 0)
        throw OrderMismatch("d = " + std::to_string(d) + " does not divide subfield group order");
    if (!in_subfield(x, sub)) throw NotInSubfield("dth_power_test input outside subfield");
    if (x.is_zero()) return false;
    return (x.k / sub.cofactor) % d == 0;
}

FieldElem FieldCtx::from_prime_int(long long a) const {
    a %= p_;
    if (a < 0) a += p_;
    if (a == 0) return FieldElem::zero();
    return FieldElem::from_index(prime_log_[static_cast<size_t>(a)]);
}

long long FieldCtx::encoding_of(FieldElem x) const {
    if (x.is_zero()) return 0;
    Poly g = poly_from_encoding(gen_enc_, p_);
    Poly r = poly_powmod(g, x.k, modulus_, p_);
    return encoding_of_poly(r, p_);
}

}  // namespace gpaley
