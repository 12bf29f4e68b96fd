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

#include "gpaley/cyclo.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace gpaley {

CharValue char_eval(const FieldCtx& F, const CharSpec& spec, FieldElem x) {
    if (!F.in_subfield(x, spec.sub)) throw NotInSubfield("char_eval input outside subfield");
    if (x.is_zero()) return std::nullopt;
    long long k = F.subfield_index(x, spec.sub);
    return static_cast<long long>((__int128)spec.twist * (k % spec.d) % spec.d);
}

void CycloSum::add_term(const std::vector<CharValue>& exps, long long weight) {
    long long total = 0;
    for (const auto& e : exps) {
        if (!e) return;
        total = (total + *e) % d_;
    }
    counts_[static_cast<size_t>(total)] += weight;
}

void CycloSum::merge(const CycloSum& other) {
    if (other.d_ != d_) throw MixedOrders("merging CycloSums of different orders");
    for (size_t t = 0; t < counts_.size(); ++t) counts_[t] += other.counts_[t];
}

std::vector<long long> cyclotomic_poly(long long d) {
    // x^d - 1 divided by Phi_e for all proper divisors e of d
    std::vector<long long> num(static_cast<size_t>(d) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (long long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        std::vector<long long> phi = cyclotomic_poly(e);
        // exact division num /= phi (phi monic)
        std::vector<long long> quot(num.size() - phi.size() + 1, 0);
        for (size_t i = quot.size(); i-- > 0;) {
            long long c = num[i + phi.size() - 1];
            quot[i] = c;
            if (c != 0)
                for (size_t j = 0; j < phi.size(); ++j) num[i + j] -= c * phi[j];
        }
        num = std::move(quot);
    }
    return num;
}

CycloSum CycloSum::reduced() const {
    std::vector<long long> phi = cyclotomic_poly(d_);
    std::vector<long long> r = counts_;
    const size_t deg = phi.size() - 1;
    while (r.size() > deg) {
        long long c = r.back();
        size_t shift = r.size() - 1 - deg;
        if (c != 0)
            for (size_t j = 0; j < phi.size(); ++j) r[shift + j] -= c * phi[j];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    CycloSum out(d_);
    for (size_t t = 0; t < r.size(); ++t) out.counts_[t] = r[t];
    return out;
}

bool CycloSum::equal(const CycloSum& other) const {
    if (d_ != other.d_) return false;
    return reduced().counts_ == other.reduced().counts_;
}

std::optional<long long> CycloSum::as_integer() const {
    CycloSum r = reduced();
    for (size_t t = 1; t < r.counts_.size(); ++t)
        if (r.counts_[t] != 0) return std::nullopt;
    return r.counts_[0];
}

double CycloSum::magnitude() const {
    double re = 0, im = 0;
    for (size_t t = 0; t < counts_.size(); ++t) {
        if (counts_[t] == 0) continue;
        double arg = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(d_);
        re += static_cast<double>(counts_[t]) * std::cos(arg);
        im += static_cast<double>(counts_[t]) * std::sin(arg);
    }
    return std::hypot(re, im);
}

CycloSum sum_over(const FieldCtx& F, const std::vector<CharSpec>& specs,
                  const std::vector<std::vector<FieldElem>>& tuples) {
    if (specs.empty()) throw MixedOrders("sum_over needs at least one character");
    long long d = specs[0].d;
    for (const auto& s : specs)
        if (s.d != d) throw MixedOrders("sum_over characters must share one order");
    CycloSum acc(d);
    std::vector<CharValue> exps(specs.size());
    for (const auto& tup : tuples) {
        assert(tup.size() == specs.size());
        for (size_t i = 0; i < specs.size(); ++i) exps[i] = char_eval(F, specs[i], tup[i]);
        acc.add_term(exps);
    }
    return acc;
}

VerdictReport weil_check(const CycloSum& s, long long m, long long q) {
    VerdictReport rep;
    rep.task = "weil-bound";
    double mag = s.magnitude();
    double bound = static_cast<double>(m - 1) * std::sqrt(static_cast<double>(q));
    rep.config = {{"m", m}, {"q", q}, {"d", s.d()}};
    rep.result = {{"magnitude", mag}, {"bound", bound}, {"slack", bound - mag}};
    rep.verdict = mag <= bound + kMagnitudeTol ? Verdict::Pass : Verdict::Fail;
    return rep;
}

}  // namespace gpaley
