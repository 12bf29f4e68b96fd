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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "gpaley/graphs.hpp"

using namespace gpaley;

namespace {

FieldElem first_outside(const FieldCtx& F, const SubfieldHandle& ext,
                        const SubfieldHandle& base) {
    for (long long j = 0; j < ext.size - 1; ++j) {
        FieldElem v = F.subfield_elem(ext, j);
        if (!F.in_subfield(v, base)) return v;
    }
    throw SearchExhausted("no element outside the base");
}

}  // namespace

TEST_CASE("GP(13,2) adjacency matches quadratic residues") {
    FieldCtx F(13, 1);
    auto g = CayleyView::gp(F, F.ambient_handle(), 2);
    // 4 is a QR mod 13
    CHECK(g.adjacent(FieldElem::zero(), F.from_prime_int(4)));
    // 2 is not
    CHECK_FALSE(g.adjacent(FieldElem::zero(), F.from_prime_int(2)));
    // loopless
    CHECK_FALSE(g.adjacent(F.from_prime_int(4), F.from_prime_int(4)));
    // undirected, exhaustive
    for (long long a = 0; a < 13; ++a)
        for (long long b = 0; b < 13; ++b)
            CHECK(g.adjacent(F.from_prime_int(a), F.from_prime_int(b)) ==
                  g.adjacent(F.from_prime_int(b), F.from_prime_int(a)));
}

TEST_CASE("GP constructor validations") {
    FieldCtx F(13, 1);
    CHECK_THROWS_AS(CayleyView::gp(F, F.ambient_handle(), 5), OrderMismatch);
    FieldCtx G(7, 1);
    // 7 = 3 mod 4: the quadratic residues are not symmetric, rejected
    CHECK_THROWS_AS(CayleyView::gp(G, G.ambient_handle(), 2), OrderMismatch);
    // 7 = 1 mod 6: cubes are symmetric, accepted
    CHECK_NOTHROW(CayleyView::gp(G, G.ambient_handle(), 3));
}

TEST_CASE("Peisert constructor validations and symmetry") {
    FieldCtx F(7, 2);
    auto g = CayleyView::peisert(F, F.ambient_handle());
    for (long long i = 0; i < 48; ++i) {
        FieldElem x = FieldElem::from_index(i);
        CHECK(g.in_connection(x) == g.in_connection(F.neg(x)));
    }
    FieldCtx G(5, 2);
    CHECK_THROWS_AS(CayleyView::peisert(G, G.ambient_handle()), OrderMismatch);
    FieldCtx H(7, 1);
    CHECK_THROWS_AS(CayleyView::peisert(H, H.ambient_handle()), OrderMismatch);
}

TEST_CASE("translation invariance on GP(25,2) and P*_49") {
    FieldCtx F(5, 2);
    auto gp = CayleyView::gp(F, F.ambient_handle(), 2);
    FieldCtx P(7, 2);
    auto pg = CayleyView::peisert(P, P.ambient_handle());
    for (long long i = 0; i < gp.vertex_count(); i += 3)
        for (long long j = 0; j < gp.vertex_count(); j += 5)
            for (long long a = 0; a < gp.vertex_count(); a += 7) {
                FieldElem x = gp.vertex(i), y = gp.vertex(j), s = gp.vertex(a);
                if (x == y) continue;
                CHECK(gp.adjacent(x, y) == gp.adjacent(F.add(x, s), F.add(y, s)));
            }
    for (long long i = 0; i < pg.vertex_count(); i += 3)
        for (long long j = 0; j < pg.vertex_count(); j += 5)
            for (long long a = 0; a < pg.vertex_count(); a += 7) {
                FieldElem x = pg.vertex(i), y = pg.vertex(j), s = pg.vertex(a);
                if (x == y) continue;
                CHECK(pg.adjacent(x, y) == pg.adjacent(P.add(x, s), P.add(y, s)));
            }
}

TEST_CASE("fq_neighborhood sizes from the clique constructions") {
    // GP(25,3): |N(u)| = (5+1)/3 - 1 = 1 for u outside F_5
    FieldCtx F(5, 2);
    auto base = F.subfield(1);
    auto g = CayleyView::gp(F, F.ambient_handle(), 3);
    FieldElem u = first_outside(F, F.ambient_handle(), base);
    CHECK(fq_neighborhood(g, u, base).size() == 1);

    // P*_49: |N(u)| = (7+1)/2 - 1 = 3
    FieldCtx P(7, 2);
    auto pbase = P.subfield(1);
    auto pg = CayleyView::peisert(P, P.ambient_handle());
    FieldElem pu = first_outside(P, P.ambient_handle(), pbase);
    CHECK(fq_neighborhood(pg, pu, pbase).size() == 3);

    // u in the base: F_q is a clique when d | q+1, so N(u) = F_q \ {u}
    CHECK(fq_neighborhood(g, FieldElem::zero(), base).size() == 4);
}

TEST_CASE("F_q is a clique in GP(q^2, d) when d divides q + 1") {
    FieldCtx F(5, 2);
    auto base = F.subfield(1);
    for (long long d : {2, 3, 6}) {
        auto g = CayleyView::gp(F, F.ambient_handle(), d);
        for (long long i = 0; i < 5; ++i)
            for (long long j = i + 1; j < 5; ++j) {
                FieldElem x = i == 0 ? FieldElem::zero() : F.subfield_elem(base, i - 1);
                FieldElem y = F.subfield_elem(base, j - 1);
                CHECK(g.adjacent(x, y));
            }
    }
}

TEST_CASE("induced subgraph equality (GP(q^d,d) on F_{q^d'} = GP(q^d',d'))") {
    auto r1 = induced_subfield_equality(5, 1, 4, 2);
    CHECK(r1.verdict == Verdict::Pass);
    CHECK(r1.result["edges"] == 150);  // 25 * 12 / 2
    CHECK(r1.result["mismatches"] == 0);

    auto r2 = induced_subfield_equality(7, 1, 3, 3);
    CHECK(r2.verdict == Verdict::Pass);

    auto r3 = induced_subfield_equality(5, 1, 4, 4);
    CHECK(r3.verdict == Verdict::Pass);

    CHECK_THROWS_AS(induced_subfield_equality(5, 1, 4, 3), OrderMismatch);
}

TEST_CASE("srg parameters") {
    FieldCtx F(5, 2);
    auto [t1, r1] = srg_params(CayleyView::gp(F, F.ambient_handle(), 2));
    CHECK(t1 == std::make_tuple(25LL, 12LL, 5LL, 6LL));
    CHECK(r1.verdict == Verdict::Pass);

    FieldCtx G(3, 2);
    auto [t2, r2] = srg_params(CayleyView::gp(G, G.ambient_handle(), 2));
    CHECK(t2 == std::make_tuple(9LL, 4LL, 1LL, 2LL));
    CHECK(r2.verdict == Verdict::Pass);

    FieldCtx P(7, 2);
    auto [t3, r3] = srg_params(CayleyView::peisert(P, P.ambient_handle()));
    CHECK(t3 == std::make_tuple(49LL, 24LL, 11LL, 12LL));
    CHECK(r3.verdict == Verdict::Pass);
    CHECK(r3.result["peisert_formula"] == true);
}

TEST_CASE("Peisert indicator identity in Z[i]") {
    // 4 * 1_S(x) = 2 + (1+i) conj(chi)(x) + (1-i) chi(x), chi(g) = i
    FieldCtx F(7, 2);
    auto g = CayleyView::peisert(F, F.ambient_handle());
    for (long long k = 0; k < 48; ++k) {
        FieldElem x = FieldElem::from_index(k);
        // chi(x) = i^k as (re, im)
        static const long long re[4] = {1, 0, -1, 0};
        static const long long im[4] = {0, 1, 0, -1};
        long long cr = re[k % 4], ci = im[k % 4];
        // 2 + (1+i)(cr - ci i) + (1-i)(cr + ci i) = 2 + 2 cr + 2 ci
        long long value_re = 2 + 2 * cr + 2 * ci;
        long long value_im = 0;
        CHECK(value_im == 0);
        CHECK(value_re == (g.in_connection(x) ? 4 : 0));
    }
}

TEST_CASE("Peisert statistics do not depend on the primitive element") {
    // rebuild membership relative to g' = g^t for units t and compare the
    // measured srg parameters
    FieldCtx F(7, 2);
    auto g = CayleyView::peisert(F, F.ambient_handle());
    auto [params, rep] = srg_params(g);
    const long long n = 48;
    auto vert = [&](long long i) {
        return i == 0 ? FieldElem::zero() : FieldElem::from_index(i - 1);
    };
    auto measure = [&](auto adj) {
        long long k = -1, lam = -1, mu = -1;
        for (long long i = 0; i <= n; ++i) {
            long long deg = 0;
            for (long long j = 0; j <= n; ++j)
                if (i != j && adj(vert(i), vert(j))) ++deg;
            if (k < 0) k = deg;
            REQUIRE(deg == k);
        }
        for (long long i = 0; i <= n; ++i)
            for (long long j = i + 1; j <= n; ++j) {
                long long common = 0;
                for (long long w = 0; w <= n; ++w)
                    if (w != i && w != j && adj(vert(i), vert(w)) && adj(vert(j), vert(w)))
                        ++common;
                if (adj(vert(i), vert(j))) {
                    if (lam < 0) lam = common;
                    REQUIRE(common == lam);
                } else {
                    if (mu < 0) mu = common;
                    REQUIRE(common == mu);
                }
            }
        return std::make_tuple(n + 1, k, lam, mu);
    };
    for (long long t : {5, 7, 11}) {
        REQUIRE(std::gcd(t, n) == 1);
        // index of x relative to g' = g^t is k * t^{-1} mod 48
        long long tinv = 0;
        for (long long c = 1; c < n; ++c)
            if (c * t % n == 1) tinv = c;
        auto adj2 = [&](FieldElem x, FieldElem y) {
            FieldElem d = F.sub(x, y);
            if (d.is_zero()) return false;
            long long r = d.k * tinv % n % 4;
            return r == 0 || r == 1;
        };
        CHECK(measure(adj2) == params);
    }
}

TEST_CASE("non-vertex queries throw") {
    FieldCtx F(5, 2);
    auto base = F.subfield(1);
    auto g = CayleyView::gp(F, base, 2);
    FieldElem u = first_outside(F, F.ambient_handle(), base);
    CHECK_THROWS_AS(g.adjacent(u, FieldElem::zero()), NotAVertex);
}

TEST_CASE("DIMACS export shape") {
    FieldCtx F(3, 2);
    auto g = CayleyView::gp(F, F.ambient_handle(), 2);
    std::ostringstream os;
    export_dimacs(g, os);
    std::istringstream is(os.str());
    std::string tag, kind;
    long long v, m;
    is >> tag >> kind >> v >> m;
    CHECK(tag == "p");
    CHECK(kind == "edge");
    CHECK(v == 9);
    CHECK(m == 9 * 4 / 2);
    long long lines = 0;
    std::string e;
    long long a, b;
    while (is >> e >> a >> b) {
        CHECK(e == "e");
        CHECK(a >= 1);
        CHECK(b <= 9);
        CHECK(a < b);
        ++lines;
    }
    CHECK(lines == m);
}
