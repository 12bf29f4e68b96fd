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

#include "gpaley/residues.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace gpaley {

namespace {

// iterate the base field: ZERO first, then ascending subfield index
template <typename Fn>
void for_each_base_elem(const FieldCtx& F, const SubfieldHandle& base, Fn&& fn) {
    fn(FieldElem::zero());
    for (long long j = 0; j < base.size - 1; ++j) fn(F.subfield_elem(base, j));
}

double sqrt_q(const SystemInstance& inst) {
    return std::sqrt(static_cast<double>(inst.q()));
}

nlohmann::json instance_config(const SystemInstance& inst) {
    nlohmann::json vjson = nlohmann::json::array();
    for (const auto& v : inst.vs) vjson.push_back(v.k);
    return {
        {"p", inst.F->p()},
        {"e", inst.base.e},
        {"n", inst.n},
        {"q", inst.q()},
        {"d", inst.d},
        {"k", inst.k()},
        {"v_indices", vjson},
        {"degrees", inst.degrees},
        {"modulus", inst.F->modulus()},
        {"generator", inst.F->generator_encoding()},
    };
}

}  // namespace

SystemInstance SystemInstance::make(const FieldCtx& F, int base_e, int n, long long d,
                                    std::vector<FieldElem> vs) {
    SystemInstance inst;
    inst.F = &F;
    inst.base = F.subfield(base_e);
    inst.ext = F.subfield(base_e * n);
    inst.n = n;
    inst.d = d;
    if (d < 2) throw OrderMismatch("power order d must be >= 2");
    if ((inst.ext.size - 1) % d != 0)
        throw OrderMismatch("d does not divide q^n - 1");
    for (const auto& v : vs)
        if (!F.in_subfield(v, inst.ext)) throw NotInSubfield("v_i outside F_{q^n}");
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (F.are_conjugate(vs[i], vs[j], inst.base))
                throw ConjugatePair("v_i and v_j are Galois conjugates over the base");
    inst.vs = std::move(vs);
    for (const auto& v : inst.vs) inst.degrees.push_back(F.degree_over(v, inst.base));
    return inst;
}

long long count_solutions(const SystemInstance& inst) {
    const FieldCtx& F = *inst.F;
    long long count = 0;
    for_each_base_elem(F, inst.base, [&](FieldElem x) {
        for (const auto& v : inst.vs)
            if (!F.dth_power_test(F.sub(x, v), inst.d, inst.ext)) return;
        ++count;
    });
    return count;
}

long long count_via_charsum(const SystemInstance& inst) {
    const FieldCtx& F = *inst.F;
    const long long d = inst.d;
    const int k = inst.k();
    if (k == 0) return inst.q();

    // d^k * M = sum over x of prod_i (sum_j zeta^(j*k_i)).  The inner sum for
    // exponent k_i is the uniform count vector with weight gcd(k_i, d) on
    // multiples of gcd(k_i, d); a product of such vectors is again uniform on
    // multiples of the combined gcd s, with d^(k-1) * s at each position.
    __int128 dpow = 1;
    for (int i = 0; i < k - 1; ++i) dpow *= d;
    if (dpow * inst.q() * d > (static_cast<__int128>(1) << 62))
        throw AmbientTooLarge("character-sum expansion would overflow exact counters");
    const long long weight_base = static_cast<long long>(dpow);

    std::map<long long, long long> weight_by_stride;
    for_each_base_elem(F, inst.base, [&](FieldElem x) {
        long long s = d;
        for (const auto& v : inst.vs) {
            FieldElem y = F.sub(x, v);
            if (y.is_zero()) return;  // chi^j(0) = 0 for every j: term vanishes
            long long ki = (y.k / inst.ext.cofactor) % d;
            s = std::gcd(s, ki == 0 ? d : ki);
        }
        weight_by_stride[s] += weight_base;
    });

    CycloSum total(d);
    for (const auto& [s, w] : weight_by_stride) {
        long long per_pos = w * s;
        for (long long t = 0; t < d; t += s) total.add_root(t, per_pos);
    }
    auto as_int = total.reduced().as_integer();
    if (!as_int) throw std::logic_error("character-sum expansion is not an integer");
    __int128 dk = dpow * d;
    if (*as_int % static_cast<long long>(dk) != 0)
        throw std::logic_error("character-sum expansion not divisible by d^k");
    return *as_int / static_cast<long long>(dk);
}

Rational main_term(long long q, long long d, int n, const std::vector<int>& degrees) {
    Rational r(q);
    for (int di : degrees) {
        long long ddi = d * di;
        r = r * Rational(std::gcd(ddi, static_cast<long long>(n)), ddi);
    }
    return r;
}

namespace {

VerdictReport bound_report(const SystemInstance& inst, const std::string& task,
                           const Rational& main, double bound, long long allowance) {
    long long M = count_solutions(inst);
    double deviation = std::abs(static_cast<double>(M) - main.to_double());
    VerdictReport rep;
    rep.task = task;
    rep.config = instance_config(inst);
    rep.result = {
        {"M", M},
        {"main_term", main.str()},
        {"bound", bound},
        {"deviation", deviation},
        {"slack", bound - deviation},
    };
    if (deviation <= bound + kMagnitudeTol) {
        rep.verdict = Verdict::Pass;
    } else if (allowance > 0 &&
               deviation <= bound + static_cast<double>(allowance) + kMagnitudeTol) {
        rep.verdict = Verdict::PassWithAllowance;
        rep.result["allowance"] = allowance;
    } else {
        rep.verdict = Verdict::Fail;
    }
    return rep;
}

}  // namespace

VerdictReport verify_lemma1(const SystemInstance& inst) {
    if (inst.n != 1) throw InvalidSubfieldDegree("lemma requires n = 1");
    Rational main(inst.q());
    for (int i = 0; i < inst.k(); ++i) main = main * Rational(1, inst.d);
    double bound = static_cast<double>(inst.k()) * sqrt_q(inst);
    return bound_report(inst, "lemma1", main, bound, 0);
}

VerdictReport verify_thm12(const SystemInstance& inst) {
    if ((inst.base.size - 1) % inst.d != 0)
        throw OrderMismatch("theorem requires d | q - 1");
    Rational main = main_term(inst.q(), inst.d, inst.n, inst.degrees);
    long long degsum = std::accumulate(inst.degrees.begin(), inst.degrees.end(), 0LL);
    double bound = inst.k() == 0 ? 0.0 : static_cast<double>(degsum - 1) * sqrt_q(inst);
    // Base-field v_i force chi(0) = 0 at x = v_i, a deficit of at most one
    // per such v_i that the stated bound does not absorb when d_i = 1.
    long long allowance = static_cast<long long>(
        std::count(inst.degrees.begin(), inst.degrees.end(), 1));
    return bound_report(inst, "thm12", main, bound, allowance);
}

VerdictReport verify_thm13(const SystemInstance& inst) {
    if (inst.n != 2) throw InvalidSubfieldDegree("theorem requires n = 2");
    for (const auto& v : inst.vs)
        if (inst.F->in_subfield(v, inst.base))
            throw VInBaseField("v_i must lie outside the base field");
    Rational main(inst.q());
    for (int i = 0; i < inst.k(); ++i) main = main * Rational(1, inst.d);
    double bound = inst.k() == 0
                       ? 0.0
                       : static_cast<double>(2 * inst.k() - 1) * sqrt_q(inst);
    return bound_report(inst, "thm13", main, bound, 0);
}

VerdictReport verify_lemma21(const FieldCtx& F, int base_e, int n, long long d) {
    SubfieldHandle base = F.subfield(base_e);
    SubfieldHandle ext = F.subfield(base_e * n);
    if (d < 1 || (base.size - 1) % d != 0)
        throw OrderMismatch("lemma requires d | q - 1");
    long long mismatches = 0;
    long long first_bad = -2;
    for (long long j = 0; j < ext.size - 1; ++j) {
        FieldElem x = F.subfield_elem(ext, j);
        bool lhs = F.dth_power_test(x, d, ext);
        bool rhs = F.dth_power_test(F.norm_to(x, base, ext), d, base);
        if (lhs != rhs) {
            ++mismatches;
            if (first_bad == -2) first_bad = x.k;
        }
    }
    VerdictReport rep;
    rep.task = "lemma21";
    rep.config = {{"p", F.p()}, {"e", base_e}, {"n", n}, {"q", base.size}, {"d", d},
                  {"modulus", F.modulus()}, {"generator", F.generator_encoding()}};
    rep.result = {{"checked", ext.size - 1}, {"mismatches", mismatches}};
    rep.verdict = mismatches == 0 ? Verdict::Pass : Verdict::Fail;
    if (mismatches) rep.witness = {{"x_index", first_bad}};
    return rep;
}

std::vector<FieldElem> seeded_vset(const FieldCtx& F, const SubfieldHandle& ext,
                                   const SubfieldHandle& base, int k, uint64_t seed,
                                   bool exclude_base) {
    SplitMix64 rng(seed);
    std::vector<FieldElem> vs;
    long long budget = 10000LL * (k + 1) + 100 * ext.size;
    while (static_cast<int>(vs.size()) < k) {
        if (--budget < 0) throw SearchExhausted("v-set sampling exhausted");
        uint64_t r = rng.below(static_cast<uint64_t>(ext.size));
        FieldElem v = r == 0 ? FieldElem::zero()
                             : F.subfield_elem(ext, static_cast<long long>(r - 1));
        if (exclude_base && F.in_subfield(v, base)) continue;
        bool clash = false;
        for (const auto& w : vs)
            if (F.are_conjugate(v, w, base)) { clash = true; break; }
        if (!clash) vs.push_back(v);
    }
    return vs;
}

}  // namespace gpaley
