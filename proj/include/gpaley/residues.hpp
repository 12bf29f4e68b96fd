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

#ifndef GPALEY_RESIDUES_HPP
#define GPALEY_RESIDUES_HPP

#include "gpaley/cyclo.hpp"
#include "gpaley/ffield.hpp"
#include "gpaley/report.hpp"

namespace gpaley {

/// System (x - v_i)^((q^n - 1)/d) = 1 counted over the base field F_q,
/// inside an ambient field containing F_{q^n}.
struct SystemInstance {
    const FieldCtx* F;
    SubfieldHandle base;  // F_q
    SubfieldHandle ext;   // F_{q^n}
    int n;
    long long d;
    std::vector<FieldElem> vs;
    std::vector<int> degrees;  // degree of v_i over the base

    /// validates: d | q^n - 1, all v_i in F_{q^n}, pairwise non-conjugate
    /// over F_q (throws ConjugatePair)
    static SystemInstance make(const FieldCtx& F, int base_e, int n, long long d,
                               std::vector<FieldElem> vs);
    long long q() const { return base.size; }
    int k() const { return static_cast<int>(vs.size()); }
};

/// ground truth: exhaustive scan of the base field with dth_power_test
long long count_solutions(const SystemInstance& inst);

/// independent route: the orthogonality expansion of the count as an exact
/// cyclotomic-integer sum over all character tuples, reduced and divided
long long count_via_charsum(const SystemInstance& inst);

/// q * prod gcd(d*d_i, n)/(d*d_i), exact
Rational main_term(long long q, long long d, int n, const std::vector<int>& degrees);

VerdictReport verify_lemma1(const SystemInstance& inst);
VerdictReport verify_thm12(const SystemInstance& inst);
VerdictReport verify_thm13(const SystemInstance& inst);

/// Exhaustive norm-reduction equivalence: for every x in F_{q^n}, x is a
/// d-th power there iff N(x) is a d-th power in F_q (requires d | q - 1).
VerdictReport verify_lemma21(const FieldCtx& F, int base_e, int n, long long d);

/// Deterministic v-set: splitmix64(seed) mapped to F_{q^n}, rejecting
/// Galois-conjugate collisions (and base-field elements when excluded).
std::vector<FieldElem> seeded_vset(const FieldCtx& F, const SubfieldHandle& ext,
                                   const SubfieldHandle& base, int k, uint64_t seed,
                                   bool exclude_base = false);

}  // namespace gpaley

#endif
