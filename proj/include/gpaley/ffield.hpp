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

#ifndef GPALEY_FFIELD_HPP
#define GPALEY_FFIELD_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "gpaley/common.hpp"

namespace gpaley {

/// Field element in index (discrete log) representation: either ZERO or
/// g^k for the field's fixed primitive element g.
struct FieldElem {
    static constexpr long long kZeroIndex = -1;
    long long k = kZeroIndex;

    bool is_zero() const { return k < 0; }
    static FieldElem zero() { return {}; }
    static FieldElem from_index(long long idx) { return {idx}; }
    static FieldElem one() { return {0}; }
    static FieldElem gen() { return {1}; }
    bool operator==(const FieldElem&) const = default;
    bool operator<(const FieldElem& o) const { return k < o.k; }
};

struct SubfieldHandle {
    int e = 1;                // degree over the prime field
    long long size = 0;       // p^e
    long long cofactor = 0;   // (p^E - 1)/(p^e - 1)
    bool operator==(const SubfieldHandle&) const = default;
};

/// Ambient finite field F_{p^E} with Zech-table addition.  Immutable after
/// construction; all element operations are pure and thread-safe.
///
/// Modulus and primitive element are chosen deterministically: polynomials
/// over F_p are ordered by their base-p integer encoding (constant term
/// least significant) and the smallest qualifying one wins, so every report
/// is reproducible bit-for-bit.
class FieldCtx {
public:
    static constexpr int kDefaultAmbientBits = 24;

    FieldCtx(long long p, int E, int ambient_bits = kDefaultAmbientBits);

    long long p() const { return p_; }
    int degree() const { return E_; }
    long long order() const { return q_; }
    long long group_order() const { return q_ - 1; }
    /// monic irreducible modulus, coefficient i of t^i, length E+1
    const std::vector<long long>& modulus() const { return modulus_; }
    /// base-p integer encoding of the primitive element's polynomial
    long long generator_encoding() const { return gen_enc_; }

    // --- element arithmetic ---
    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, long long e) const;

    // --- structure maps ---
    SubfieldHandle subfield(int e) const;
    SubfieldHandle ambient_handle() const { return subfield(E_); }
    bool in_subfield(FieldElem x, const SubfieldHandle& sub) const;
    /// index of x relative to the subfield's own generator g^cofactor
    long long subfield_index(FieldElem x, const SubfieldHandle& sub) const;
    /// j-th nonzero element of the subfield, j in [0, sub.size-1)
    FieldElem subfield_elem(const SubfieldHandle& sub, long long j) const;

    FieldElem frobenius(FieldElem x, int e) const;       // x^(p^e), e | E
    FieldElem norm_to(FieldElem x, const SubfieldHandle& sub,
                      const SubfieldHandle& top) const;
    int degree_over(FieldElem x, const SubfieldHandle& base) const;
    std::set<FieldElem> galois_conjugates(FieldElem x, const SubfieldHandle& base) const;
    bool are_conjugate(FieldElem x, FieldElem y, const SubfieldHandle& base) const;
    bool dth_power_test(FieldElem x, long long d, const SubfieldHandle& sub) const;

    // --- prime-subfield and polynomial views (for reporting and tests) ---
    /// element representing the integer a mod p
    FieldElem from_prime_int(long long a) const;
    /// base-p integer encoding of the polynomial representing x
    long long encoding_of(FieldElem x) const;
    /// prime factors of p^E - 1 (distinct, ascending)
    const std::vector<long long>& group_order_factors() const { return factors_; }

private:
    long long p_;
    int E_;
    long long q_;
    long long ambient_cap_;
    std::vector<long long> modulus_;
    long long gen_enc_;
    std::vector<uint32_t> zech_;          // zech_[k]: index of 1 + g^k; q_-1 = sentinel
    std::vector<long long> prime_log_;    // index of constant a, a in [1, p)
    std::vector<long long> factors_;

    long long zech_at(long long k) const { return zech_[static_cast<size_t>(k)]; }
};

/// distinct prime factors, ascending; trial division to 2^12 then Pollard rho
std::vector<long long> prime_factors(long long n);
bool is_prime(long long n);

}  // namespace gpaley

#endif
