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

#include "gpaley/graphs.hpp"

#include <bit>
#include <ostream>

namespace gpaley {

CayleyView CayleyView::gp(const FieldCtx& F, const SubfieldHandle& verts, long long d) {
    if (d < 2) throw OrderMismatch("GP requires d >= 2");
    if ((verts.size - 1) % (2 * d) != 0)
        throw OrderMismatch("GP(q,d) requires q = 1 mod 2d");
    CayleyView g;
    g.F_ = &F;
    g.kind_ = GraphKind::GP;
    g.d_ = d;
    g.verts_ = verts;
    return g;
}

CayleyView CayleyView::peisert(const FieldCtx& F, const SubfieldHandle& verts) {
    if (F.p() % 4 != 3) throw OrderMismatch("Peisert graph requires p = 3 mod 4");
    if (verts.e % 2 != 0) throw OrderMismatch("Peisert graph requires an even power of p");
    // S = -S: the index of -1 within the vertex field must be 0 mod 4
    if (((verts.size - 1) / 2) % 4 != 0)
        throw OrderMismatch("Peisert connection set is not symmetric");
    CayleyView g;
    g.F_ = &F;
    g.kind_ = GraphKind::Peisert;
    g.d_ = 4;
    g.verts_ = verts;
    return g;
}

bool CayleyView::in_connection(FieldElem diff) const {
    if (!F_->in_subfield(diff, verts_)) throw NotAVertex("difference outside vertex field");
    if (diff.is_zero()) return false;
    long long si = diff.k / verts_.cofactor;
    if (kind_ == GraphKind::GP) return si % d_ == 0;
    long long r = si % 4;
    return r == 0 || r == 1;
}

bool CayleyView::adjacent(FieldElem x, FieldElem y) const {
    if (!is_vertex(x) || !is_vertex(y)) throw NotAVertex("adjacency query on non-vertex");
    if (x == y) return false;
    return in_connection(F_->sub(x, y));
}

FieldElem CayleyView::vertex(long long i) const {
    return i == 0 ? FieldElem::zero() : F_->subfield_elem(verts_, i - 1);
}

std::vector<FieldElem> fq_neighborhood(const CayleyView& g, FieldElem u,
                                       const SubfieldHandle& base) {
    std::vector<FieldElem> out;
    for (long long i = 0; i < base.size; ++i) {
        FieldElem x = i == 0 ? FieldElem::zero() : g.ctx().subfield_elem(base, i - 1);
        if (!(x == u) && g.adjacent(u, x)) out.push_back(x);
    }
    return out;
}

VerdictReport induced_subfield_equality(long long p, int e, int d, int dprime,
                                        int ambient_bits) {
    if (dprime < 1 || d % dprime != 0)
        throw OrderMismatch("d' must divide d");
    if (p == 2) throw OrderMismatch("q must be odd");
    long long q = ipow(p, e);
    if (q % d != 1) throw OrderMismatch("requires q = 1 mod d");

    FieldCtx F(p, e * d, ambient_bits);
    SubfieldHandle big = F.subfield(e * d);
    SubfieldHandle sub = F.subfield(e * dprime);
    CayleyView G = CayleyView::gp(F, big, d);
    CayleyView H = CayleyView::gp(F, sub, dprime);

    long long edges = 0, mismatches = 0;
    for (long long i = 0; i < sub.size; ++i) {
        FieldElem x = H.vertex(i);
        for (long long j = i + 1; j < sub.size; ++j) {
            FieldElem y = H.vertex(j);
            bool in_big = G.adjacent(x, y);
            bool in_sub = H.adjacent(x, y);
            if (in_big != in_sub) ++mismatches;
            if (in_sub) ++edges;
        }
    }
    long long ratio = (ipow(q, d) - 1) / (ipow(q, dprime) - 1);
    bool gcd_ok = std::gcd(static_cast<long long>(d), ratio) == d / dprime;

    VerdictReport rep;
    rep.task = "lemma41";
    rep.config = {{"p", p}, {"e", e}, {"q", q}, {"d", d}, {"dprime", dprime}};
    rep.result = {{"edges", edges}, {"mismatches", mismatches}, {"gcd_identity", gcd_ok}};
    rep.verdict = (mismatches == 0 && gcd_ok) ? Verdict::Pass : Verdict::Fail;
    return rep;
}

std::pair<std::tuple<long long, long long, long long, long long>, VerdictReport>
srg_params(const CayleyView& g) {
    const long long v = g.vertex_count();
    if (v > (1LL << 13)) throw TooLargeForExhaustive("srg_params is exhaustive; vertex cap 2^13");

    const size_t words = static_cast<size_t>((v + 63) / 64);
    std::vector<uint64_t> adj(static_cast<size_t>(v) * words, 0);
    for (long long i = 0; i < v; ++i)
        for (long long j = 0; j < v; ++j)
            if (i != j && g.adjacent(g.vertex(i), g.vertex(j)))
                adj[static_cast<size_t>(i) * words + static_cast<size_t>(j) / 64] |=
                    1ULL << (j % 64);

    long long k = -1, lambda = -1, mu = -1;
    bool regular = true, lambda_const = true, mu_const = true;
    for (long long i = 0; i < v; ++i) {
        long long deg = 0;
        for (size_t w = 0; w < words; ++w)
            deg += std::popcount(adj[static_cast<size_t>(i) * words + w]);
        if (k < 0) k = deg;
        else if (deg != k) regular = false;
    }
    for (long long i = 0; i < v; ++i) {
        for (long long j = i + 1; j < v; ++j) {
            long long common = 0;
            for (size_t w = 0; w < words; ++w)
                common += std::popcount(adj[static_cast<size_t>(i) * words + w] &
                                        adj[static_cast<size_t>(j) * words + w]);
            bool edge = (adj[static_cast<size_t>(i) * words + static_cast<size_t>(j) / 64] >>
                         (j % 64)) & 1;
            if (edge) {
                if (lambda < 0) lambda = common;
                else if (common != lambda) lambda_const = false;
            } else {
                if (mu < 0) mu = common;
                else if (common != mu) mu_const = false;
            }
        }
    }

    bool srg = regular && lambda_const && mu_const;
    VerdictReport rep;
    rep.task = "srg";
    rep.config = {{"vertices", v},
                  {"kind", g.kind() == GraphKind::Peisert ? "peisert" : "gp"},
                  {"d", g.d()}};
    rep.result = {{"v", v}, {"k", k}, {"lambda", lambda}, {"mu", mu},
                  {"regular", regular}, {"lambda_const", lambda_const}, {"mu_const", mu_const}};
    rep.verdict = srg ? Verdict::Pass : Verdict::Fail;
    if (srg && g.kind() == GraphKind::Peisert) {
        // (q^2, (q^2-1)/2, (q^2-5)/4, (q^2-1)/4)
        bool match = k == (v - 1) / 2 && lambda == (v - 5) / 4 && mu == (v - 1) / 4;
        rep.result["peisert_formula"] = match;
        if (!match) rep.verdict = Verdict::Fail;
    }
    return {{v, k, lambda, mu}, rep};
}

void export_dimacs(const CayleyView& g, std::ostream& os) {
    const long long v = g.vertex_count();
    if (v > (1LL << 13)) throw TooLargeForExhaustive("DIMACS export capped at 2^13 vertices");
    std::vector<std::pair<long long, long long>> edges;
    for (long long i = 0; i < v; ++i)
        for (long long j = i + 1; j < v; ++j)
            if (g.adjacent(g.vertex(i), g.vertex(j))) edges.emplace_back(i + 1, j + 1);
    os << "p edge " << v << " " << edges.size() << "\n";
    for (const auto& [a, b] : edges) os << "e " << a << " " << b << "\n";
}

}  // namespace gpaley
