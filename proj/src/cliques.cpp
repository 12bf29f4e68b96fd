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

#include "gpaley/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gpaley/cyclo.hpp"

namespace gpaley {

namespace {

std::vector<FieldElem> canonical_members(std::vector<FieldElem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

nlohmann::json indices_of(const std::vector<FieldElem>& xs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : xs) j.push_back(x.k);
    return j;
}

long long smallest_prime_factor(long long n) {
    return prime_factors(n).front();
}

nlohmann::json cert_json(const CliqueCert& c) {
    nlohmann::json j = {{"size", c.size()},
                        {"is_clique", c.is_clique},
                        {"is_maximal", c.is_maximal},
                        {"members", indices_of(c.members)}};
    if (c.has_witness) {
        j["witness"] = c.witness.k;
        if (!c.is_clique) j["witness2"] = c.witness2.k;
    }
    return j;
}

}  // namespace

bool is_clique(const CayleyView& g, const std::vector<FieldElem>& members) {
    auto ms = canonical_members(members);
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j)
            if (!g.adjacent(ms[i], ms[j])) return false;
    return true;
}

CliqueCert certify(const CayleyView& g, const std::vector<FieldElem>& members) {
    CliqueCert cert;
    cert.members = canonical_members(members);
    for (const auto& m : cert.members)
        if (!g.is_vertex(m)) throw NotAVertex("clique member outside the vertex set");

    cert.is_clique = true;
    for (size_t i = 0; i < cert.members.size() && cert.is_clique; ++i) {
        for (size_t j = i + 1; j < cert.members.size(); ++j) {
            if (!g.adjacent(cert.members[i], cert.members[j])) {
                cert.is_clique = false;
                cert.has_witness = true;
                cert.witness = cert.members[i];
                cert.witness2 = cert.members[j];
                break;
            }
        }
    }
    if (!cert.is_clique) return cert;

    cert.is_maximal = true;
    std::set<FieldElem> in(cert.members.begin(), cert.members.end());
    for (long long i = 0; i < g.vertex_count(); ++i) {
        FieldElem x = g.vertex(i);
        if (in.count(x)) continue;
        bool extends = true;
        for (const auto& m : cert.members)
            if (!g.adjacent(x, m)) { extends = false; break; }
        if (extends) {
            cert.is_maximal = false;
            cert.has_witness = true;
            cert.witness = x;
            break;
        }
    }
    return cert;
}

RadicalChain lemma43_chain(long long m, long long d) {
    if (m < 1) throw RadicalMismatch("m must be positive");
    for (long long p : m == 1 ? std::vector<long long>{} : prime_factors(m))
        if (d % p != 0) throw RadicalMismatch("rad(m) does not divide rad(d)");

    RadicalChain rc;
    rc.m = m;
    rc.d = d;
    std::vector<std::pair<long long, int>> fact;
    int kmax = 0;
    for (long long p : m == 1 ? std::vector<long long>{} : prime_factors(m)) {
        int e = 0;
        for (long long t = m; t % p == 0; t /= p) ++e;
        fact.emplace_back(p, e);
        kmax = std::max(kmax, e);
    }
    rc.k = kmax;
    for (int i = 1; i <= kmax; ++i) {
        long long di = 1;
        for (const auto& [p, e] : fact)
            if (e >= kmax + 1 - i) di *= p;
        rc.chain.push_back(di);
    }

    long long prod = 1;
    for (size_t i = 0; i < rc.chain.size(); ++i) {
        prod *= rc.chain[i];
        if (i + 1 < rc.chain.size() && rc.chain[i + 1] % rc.chain[i] != 0)
            throw RadicalMismatch("chain divisibility violated");
    }
    if (prod != m || (!rc.chain.empty() && d % rc.chain.back() != 0))
        throw RadicalMismatch("chain does not multiply to m within d");
    return rc;
}

std::pair<std::vector<FieldElem>, VerdictReport> prop42_clique(
    const FieldCtx& F, const SubfieldHandle& base, long long d,
    const std::vector<long long>& degrees) {
    const long long q = base.size;
    if (q % 2 == 0 || q % d != 1) throw OrderMismatch("requires odd q = 1 mod d");
    if (F.degree() != base.e * d)
        throw InvalidSubfieldDegree("ambient field must be F_{q^d}");
    const int k = static_cast<int>(degrees.size());
    if (k == 0 || degrees[0] < 2) throw OrderMismatch("requires d_1 > 1");
    for (int i = 0; i + 1 < k; ++i)
        if (degrees[i + 1] % degrees[i] != 0)
            throw OrderMismatch("degrees must form a divisibility chain");
    if (d % degrees.back() != 0) throw OrderMismatch("d_k must divide d");

    const long long r = smallest_prime_factor(d);
    double thr1 = std::pow(static_cast<double>(d) +
                               (k - 1) * std::pow(static_cast<double>(r), k - 1),
                           2.0);
    double thr2 = std::exp(2.0 * (k - 1));
    bool above = std::pow(static_cast<double>(q), static_cast<double>(r)) >
                 std::max(thr1, thr2);

    std::vector<FieldElem> vs;
    bool constructed = true;
    for (int j = 0; j < k && constructed; ++j) {
        SubfieldHandle subj = F.subfield(base.e * static_cast<int>(degrees[j]));
        bool found = false;
        for (long long idx = 0; idx < subj.size - 1; ++idx) {
            FieldElem v = F.subfield_elem(subj, idx);
            if (F.degree_over(v, base) != degrees[j]) continue;
            bool ok = true;
            for (const auto& w : vs) {
                if (F.are_conjugate(v, w, base) ||
                    !F.dth_power_test(F.sub(v, w), degrees[j], subj)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                vs.push_back(v);
                found = true;
                break;
            }
        }
        constructed = found;
    }

    VerdictReport rep;
    rep.task = "prop42";
    rep.config = {{"p", F.p()}, {"e", base.e}, {"q", q}, {"d", d}, {"degrees", degrees},
                  {"modulus", F.modulus()}, {"generator", F.generator_encoding()}};
    bool checks = constructed;
    if (constructed) {
        CayleyView g = CayleyView::gp(F, F.ambient_handle(), d);
        bool degs_ok = true, nonconj = true;
        for (int i = 0; i < k; ++i) {
            if (F.degree_over(vs[i], base) != degrees[i]) degs_ok = false;
            for (int j = i + 1; j < k; ++j)
                if (F.are_conjugate(vs[i], vs[j], base)) nonconj = false;
        }
        bool adj = is_clique(g, vs);
        checks = degs_ok && nonconj && adj;
        rep.result = {{"constructed", true}, {"v_indices", indices_of(vs)},
                      {"degrees_verified", degs_ok}, {"pairwise_adjacent", adj},
                      {"nonconjugate", nonconj}, {"above_threshold", above}};
    } else {
        vs.clear();
        rep.result = {{"constructed", false}, {"above_threshold", above}};
    }
    if (checks)
        rep.verdict = above ? Verdict::Pass : Verdict::Empirical;
    else
        rep.verdict = above ? Verdict::Fail : Verdict::Empirical;
    return {vs, rep};
}

std::pair<CliqueCert, VerdictReport> thm14_construct(const FieldCtx& F,
                                                     const SubfieldHandle& base,
                                                     long long d, long long m) {
    const long long q = base.size;
    if (q % 2 == 0 || q % d != 1) throw OrderMismatch("requires odd q = 1 mod d");
    if (F.degree() != base.e * d)
        throw InvalidSubfieldDegree("ambient field must be F_{q^d}");
    RadicalChain rc = lemma43_chain(m, d);
    const int k = rc.k;
    const long long r = smallest_prime_factor(d);
    const double logr_m = m == 1 ? 0.0 : std::log(static_cast<double>(m)) /
                                             std::log(static_cast<double>(r));
    const double sq = std::sqrt(static_cast<double>(q));
    const bool above =
        static_cast<double>(q) >
        (8.0 * logr_m + 4.0) * static_cast<double>(d * d) * static_cast<double>(m * m);

    std::vector<FieldElem> D;
    VerdictReport prop_rep;
    if (m > 1) {
        std::tie(D, prop_rep) = prop42_clique(F, base, d, rc.chain);
        if (D.empty()) throw SearchExhausted("prescribed-degree clique scan failed");
    }

    SubfieldHandle amb = F.ambient_handle();
    CayleyView g = CayleyView::gp(F, amb, d);

    std::vector<FieldElem> Dprime;
    for (long long i = 0; i < q; ++i) {
        FieldElem x = i == 0 ? FieldElem::zero() : F.subfield_elem(base, i - 1);
        bool ok = true;
        for (const auto& v : D)
            if (!F.dth_power_test(F.sub(v, x), d, amb)) { ok = false; break; }
        if (ok) Dprime.push_back(x);
    }
    const long long dp = static_cast<long long>(Dprime.size());
    bool dprime_window = std::abs(static_cast<double>(dp) - static_cast<double>(q) / m) <=
                         static_cast<double>(k) * d * sq + kMagnitudeTol;

    std::vector<FieldElem> C = D;
    C.insert(C.end(), Dprime.begin(), Dprime.end());
    C = canonical_members(C);
    bool start_clique = is_clique(g, C);

    // one deterministic ascending pass; a vertex rejected against a partial
    // clique is rejected against every superset, so the result is maximal
    std::vector<FieldElem> added;
    std::set<FieldElem> in(C.begin(), C.end());
    for (long long i = 0; i < g.vertex_count(); ++i) {
        FieldElem x = g.vertex(i);
        if (in.count(x)) continue;
        bool extends = true;
        for (const auto& c : C)
            if (!g.adjacent(x, c)) { extends = false; break; }
        if (extends) {
            for (const auto& a : added)
                if (!g.adjacent(x, a)) { extends = false; break; }
        }
        if (extends) added.push_back(x);
    }
    std::vector<FieldElem> Cmax = C;
    Cmax.insert(Cmax.end(), added.begin(), added.end());
    CliqueCert cert = certify(g, Cmax);

    long long lo = static_cast<long long>(
        std::ceil(static_cast<double>(q) / m - d * logr_m * sq - kMagnitudeTol));
    long long hi = static_cast<long long>(
        std::floor(static_cast<double>(q) / m + d * logr_m * (sq + 1) + kMagnitudeTol));
    bool size_window = cert.size() >= lo && cert.size() <= hi;

    bool conj_ext = true;
    for (const auto& w : added) {
        bool hit = false;
        for (const auto& v : D)
            if (F.are_conjugate(w, v, base)) { hit = true; break; }
        if (!hit) { conj_ext = false; break; }
    }
    bool growth_ok =
        static_cast<long long>(added.size()) <= static_cast<long long>(k) * (d - 1);

    VerdictReport rep;
    rep.task = "thm14";
    rep.config = {{"p", F.p()}, {"e", base.e}, {"q", q}, {"d", d}, {"m", m},
                  {"chain", rc.chain}, {"modulus", F.modulus()},
                  {"generator", F.generator_encoding()}};
    rep.result = {{"D_indices", indices_of(D)},
                  {"D_prime_size", dp},
                  {"D_prime_window", dprime_window},
                  {"start_clique", start_clique},
                  {"added", static_cast<long long>(added.size())},
                  {"added_indices", indices_of(added)},
                  {"size", cert.size()},
                  {"size_lo", lo},
                  {"size_hi", hi},
                  {"size_window", size_window},
                  {"is_maximal", cert.is_maximal},
                  {"extensions_conjugate", conj_ext},
                  {"growth_bounded", growth_ok},
                  {"above_threshold", above}};
    bool core = start_clique && cert.is_clique && cert.is_maximal;
    if (above) {
        rep.verdict = core && dprime_window && size_window && conj_ext && growth_ok
                          ? Verdict::Pass
                          : Verdict::Fail;
    } else {
        rep.verdict = core ? Verdict::Empirical : Verdict::Fail;
    }
    if (!rep.ok() && cert.has_witness) rep.witness = {{"vertex", cert.witness.k}};
    return {cert, rep};
}

std::pair<CliqueCert, VerdictReport> fq_alpha_gp(const FieldCtx& F,
                                                 const SubfieldHandle& base,
                                                 long long d, FieldElem u) {
    const long long q = base.size;
    if (d < 3) throw OrderMismatch("requires d >= 3");
    if (q % 2 == 0) throw OrderMismatch("requires odd q");
    if ((q + 1) % d != 0) throw OrderMismatch("requires d | q + 1");
    if (F.degree() != 2 * base.e)
        throw InvalidSubfieldDegree("ambient field must be F_{q^2}");
    SubfieldHandle ext = F.ambient_handle();
    if (F.in_subfield(u, base)) throw VInBaseField("u must lie outside F_q");

    CayleyView g = CayleyView::gp(F, ext, d);
    FieldElem uq = F.frobenius(u, base.e);
    const bool case_b = ((q + 1) / 2) % d == 0;

    std::vector<FieldElem> N = fq_neighborhood(g, u, base);
    std::vector<FieldElem> Nq = fq_neighborhood(g, uq, base);
    bool same_nbhd = canonical_members(N) == canonical_members(Nq);
    bool conj_adjacent = g.adjacent(u, uq);
    bool conj_rule = conj_adjacent == case_b;

    std::vector<FieldElem> C = N;
    C.push_back(u);
    if (case_b) C.push_back(uq);
    CliqueCert cert = certify(g, C);
    const long long expected = case_b ? (q + d + 1) / d : (q + 1) / d;
    bool size_ok = cert.size() == expected;
    bool regime = static_cast<double>(q) >
                  10.0 * static_cast<double>(d * d * d * d) /
                      static_cast<double>((d - 1) * (d - 1));

    VerdictReport rep;
    rep.task = "thm15";
    rep.config = {{"p", F.p()}, {"e", base.e}, {"q", q}, {"d", d}, {"u_index", u.k},
                  {"modulus", F.modulus()}, {"generator", F.generator_encoding()}};
    rep.result = {{"case", case_b ? "b" : "a"},
                  {"size", cert.size()},
                  {"expected_size", expected},
                  {"is_clique", cert.is_clique},
                  {"is_maximal", cert.is_maximal},
                  {"neighborhood_conjugate_equal", same_nbhd},
                  {"conjugate_adjacency_rule", conj_rule},
                  {"theorem_regime", regime}};
    bool subclaims = same_nbhd && conj_rule && cert.is_clique;
    if (!subclaims)
        rep.verdict = Verdict::Fail;
    else if (regime)
        rep.verdict = size_ok && cert.is_maximal ? Verdict::Pass : Verdict::Fail;
    else
        rep.verdict = Verdict::Empirical;
    if (cert.has_witness) rep.witness = {{"vertex", cert.witness.k}};
    return {cert, rep};
}

std::pair<CliqueCert, VerdictReport> fq_alpha_peisert(const FieldCtx& F,
                                                      const SubfieldHandle& base,
                                                      FieldElem u) {
    const long long q = base.size;
    if (q % 4 != 3 || q < 7) throw OrderMismatch("requires q = 3 mod 4, q >= 7");
    if (F.degree() != 2 * base.e)
        throw InvalidSubfieldDegree("ambient field must be F_{q^2}");
    SubfieldHandle ext = F.ambient_handle();
    if (F.in_subfield(u, base)) throw VInBaseField("u must lie outside F_q");

    CayleyView g = CayleyView::peisert(F, ext);
    FieldElem uq = F.frobenius(u, base.e);
    std::vector<FieldElem> N = fq_neighborhood(g, u, base);
    std::vector<FieldElem> Nq = fq_neighborhood(g, uq, base);
    bool distinct_nbhd = canonical_members(N) != canonical_members(Nq);

    std::vector<FieldElem> C = N;
    C.push_back(u);
    CliqueCert cert = certify(g, C);
    bool size_ok = cert.size() == (q + 1) / 2;

    VerdictReport rep;
    rep.task = "thm16";
    rep.config = {{"p", F.p()}, {"e", base.e}, {"q", q}, {"u_index", u.k},
                  {"modulus", F.modulus()}, {"generator", F.generator_encoding()}};
    rep.result = {{"size", cert.size()},
                  {"expected_size", (q + 1) / 2},
                  {"is_clique", cert.is_clique},
                  {"is_maximal", cert.is_maximal},
                  {"conjugate_neighborhoods_distinct", distinct_nbhd}};
    rep.verdict = cert.is_clique && cert.is_maximal && size_ok && distinct_nbhd
                      ? Verdict::Pass
                      : Verdict::Fail;
    if (cert.has_witness) rep.witness = {{"vertex", cert.witness.k}};
    return {cert, rep};
}

std::pair<long long, VerdictReport> common_neighborhood(const CayleyView& g,
                                                        FieldElem u, FieldElem v,
                                                        const SubfieldHandle& base) {
    const FieldCtx& F = g.ctx();
    const long long q = base.size;
    if (F.in_subfield(u, base) || F.in_subfield(v, base))
        throw VInBaseField("u, v must lie outside the base field");

    VerdictReport rep;
    rep.task = "common-neighborhood";
    rep.config = {{"q", q}, {"u_index", u.k}, {"v_index", v.k},
                  {"kind", g.kind() == GraphKind::Peisert ? "peisert" : "gp"},
                  {"d", g.d()}};
    if (u == v) {
        long long n = static_cast<long long>(fq_neighborhood(g, u, base).size());
        rep.result = {{"count", n}, {"trivial", true}};
        rep.verdict = Verdict::Pass;
        return {n, rep};
    }
    if (F.are_conjugate(u, v, base))
        throw ConjugatePair("u and v are Galois conjugates over the base");

    long long count = 0;
    for (long long i = 0; i < q; ++i) {
        FieldElem x = i == 0 ? FieldElem::zero() : F.subfield_elem(base, i - 1);
        if (g.adjacent(u, x) && g.adjacent(v, x)) ++count;
    }
    const double sq = std::sqrt(static_cast<double>(q));
    double bound = g.kind() == GraphKind::GP
                       ? static_cast<double>(q) / (g.d() * g.d()) + 3.0 * sq
                       : static_cast<double>(q) / 4.0 +
                             (std::sqrt(2.0) + 3.0) / 2.0 * sq;
    rep.result = {{"count", count}, {"bound", bound},
                  {"slack", bound - static_cast<double>(count)}};
    rep.verdict = static_cast<double>(count) <= bound + kMagnitudeTol ? Verdict::Pass
                                                                      : Verdict::Fail;
    return {count, rep};
}

std::vector<FieldElem> translation_reps(const FieldCtx& F, const SubfieldHandle& ext,
                                        const SubfieldHandle& base, int cap) {
    std::vector<FieldElem> reps;
    for (long long j = 0; j < ext.size - 1; ++j) {
        FieldElem x = F.subfield_elem(ext, j);
        if (F.in_subfield(x, base)) continue;
        bool fresh = true;
        for (const auto& r : reps)
            if (F.in_subfield(F.sub(x, r), base)) { fresh = false; break; }
        if (fresh) {
            reps.push_back(x);
            if (cap > 0 && static_cast<int>(reps.size()) == cap) break;
        }
    }
    return reps;
}

}  // namespace gpaley
