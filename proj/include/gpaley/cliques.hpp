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

#ifndef GPALEY_CLIQUES_HPP
#define GPALEY_CLIQUES_HPP

#include <utility>
#include <vector>

#include "gpaley/graphs.hpp"

namespace gpaley {

/// Exhaustively verified clique/maximality certificate.  The witness is the
/// first counterexample in vertex iteration order: a non-adjacent pair for
/// non-cliques, an extending vertex for non-maximal cliques.
struct CliqueCert {
    std::vector<FieldElem> members;  // vertex iteration order, deduplicated
    bool is_clique = false;
    bool is_maximal = false;
    bool has_witness = false;
    FieldElem witness;
    FieldElem witness2;  // second member of a non-adjacent pair

    long long size() const { return static_cast<long long>(members.size()); }
};

bool is_clique(const CayleyView& g, const std::vector<FieldElem>& members);
CliqueCert certify(const CayleyView& g, const std::vector<FieldElem>& members);

/// d_1 | d_2 | ... | d_k | d with product m; d_i = prod of primes p with
/// p^(k+1-i) | m, k the largest prime exponent in m.
struct RadicalChain {
    long long m = 1;
    long long d = 1;
    int k = 0;
    std::vector<long long> chain;
};

RadicalChain lemma43_chain(long long m, long long d);

/// Clique {v_1..v_k} in GP(q^d, d) with deg(v_i / F_q) = d_i, built by the
/// inductive ascending-index scan.  F must be the ambient field F_{q^d}.
/// A failed scan is reported (empty member set), not thrown: below the
/// sufficiency threshold that is a legitimate outcome.
std::pair<std::vector<FieldElem>, VerdictReport> prop42_clique(
    const FieldCtx& F, const SubfieldHandle& base, long long d,
    const std::vector<long long>& degrees);

/// Maximal clique D u D' in GP(q^d, d) of size about q/m.  F must be the
/// ambient field F_{q^d}; base is F_q.
std::pair<CliqueCert, VerdictReport> thm14_construct(const FieldCtx& F,
                                                     const SubfieldHandle& base,
                                                     long long d, long long m);

/// C_u = N(u) u {u} (or u {u, u^q} when d | (q+1)/2) in GP(q^2, d).
/// F must be the ambient field F_{q^2}; base is F_q; u outside the base.
std::pair<CliqueCert, VerdictReport> fq_alpha_gp(const FieldCtx& F,
                                                 const SubfieldHandle& base,
                                                 long long d, FieldElem u);

/// C_u = N(u) u {u} of size (q+1)/2 in the Peisert graph on F_{q^2}.
std::pair<CliqueCert, VerdictReport> fq_alpha_peisert(const FieldCtx& F,
                                                      const SubfieldHandle& base,
                                                      FieldElem u);

/// |N(u) n N(v) n base| with the applicable bound: q/d^2 + 3 sqrt(q) for GP,
/// q/4 + ((sqrt 2 + 3)/2) sqrt(q) for Peisert.  u = v reduces to |N(u)|.
std::pair<long long, VerdictReport> common_neighborhood(const CayleyView& g,
                                                        FieldElem u, FieldElem v,
                                                        const SubfieldHandle& base);

/// Representatives of ext \ base under x -> x + c, c in base, in vertex
/// iteration order.  cap = 0 keeps all (there are base.size - 1 orbits).
std::vector<FieldElem> translation_reps(const FieldCtx& F, const SubfieldHandle& ext,
                                        const SubfieldHandle& base, int cap);

}  // namespace gpaley

#endif
