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

#ifndef GPALEY_CYCLO_HPP
#define GPALEY_CYCLO_HPP

#include <optional>
#include <vector>

#include "gpaley/ffield.hpp"
#include "gpaley/report.hpp"

namespace gpaley {

/// Multiplicative character chi^j of order d/gcd(j,d) on a subfield,
/// where chi maps the subfield generator to the primitive d-th root zeta_d.
struct CharSpec {
    long long d;
    long long twist;  // j in [0, d-1]
    SubfieldHandle sub;

    CharSpec(long long d_, long long j, SubfieldHandle s) : d(d_), twist(j % d_), sub(s) {
        if (d_ < 1 || (s.size - 1) % d_ != 0)
            throw OrderMismatch("character order does not divide subfield group order");
    }
    bool trivial_twist() const { return twist == 0; }
};

/// nullopt marks chi(0) = 0; otherwise the exponent t of zeta_d^t
using CharValue = std::optional<long long>;

CharValue char_eval(const FieldCtx& F, const CharSpec& spec, FieldElem x);

/// Exact cyclotomic integer: counts[t] copies of zeta_d^t.
class CycloSum {
public:
    explicit CycloSum(long long d) : d_(d), counts_(static_cast<size_t>(d), 0) {}

    long long d() const { return d_; }
    const std::vector<long long>& counts() const { return counts_; }

    void add_root(long long t, long long weight = 1) {
        t %= d_;
        if (t < 0) t += d_;
        counts_[static_cast<size_t>(t)] += weight;
    }
    /// one term prod_i zeta^{e_i}; a zero marker annihilates the term
    void add_term(const std::vector<CharValue>& exps, long long weight = 1);
    void merge(const CycloSum& other);

    /// remainder mod the d-th cyclotomic polynomial; canonical form for
    /// exact equality (counts padded back to length d with zeros)
    CycloSum reduced() const;
    bool equal(const CycloSum& other) const;
    /// reduced form is a plain integer c*zeta^0?
    std::optional<long long> as_integer() const;

    /// |sum| via double embedding; abs error <= 1e-6 for |counts| <= 2^26
    double magnitude() const;

private:
    long long d_;
    std::vector<long long> counts_;
};

/// Sum of prod_i chi_i(x_i) over a stream of tuples.  All specs must share
/// the same root-of-unity order d.
CycloSum sum_over(const FieldCtx& F, const std::vector<CharSpec>& specs,
                  const std::vector<std::vector<FieldElem>>& tuples);

/// integer coefficients of the d-th cyclotomic polynomial Phi_d
std::vector<long long> cyclotomic_poly(long long d);

VerdictReport weil_check(const CycloSum& s, long long m, long long q);

constexpr double kMagnitudeTol = 1e-6;

}  // namespace gpaley

#endif
