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

#ifndef GPALEY_GRAPHS_HPP
#define GPALEY_GRAPHS_HPP

#include <iosfwd>
#include <tuple>
#include <vector>

#include "gpaley/ffield.hpp"
#include "gpaley/report.hpp"

namespace gpaley {

enum class GraphKind { GP, Peisert };

/// Implicit Cayley graph on a (sub)field vertex set: GP(q,d) with the d-th
/// powers as connection set, or the Peisert graph with indices 0,1 mod 4.
/// Never materialized; adjacency is index arithmetic.
class CayleyView {
public:
    /// GP(verts.size, d); validates verts.size = 1 mod 2d
    static CayleyView gp(const FieldCtx& F, const SubfieldHandle& verts, long long d);
    /// Peisert graph on verts; validates p = 3 mod 4, even degree, S = -S
    static CayleyView peisert(const FieldCtx& F, const SubfieldHandle& verts);

    const FieldCtx& ctx() const { return *F_; }
    GraphKind kind() const { return kind_; }
    long long d() const { return d_; }
    const SubfieldHandle& vertices() const { return verts_; }
    long long vertex_count() const { return verts_.size; }

    bool is_vertex(FieldElem x) const { return F_->in_subfield(x, verts_); }
    /// nonzero difference in the connection set?
    bool in_connection(FieldElem diff) const;
    bool adjacent(FieldElem x, FieldElem y) const;

    /// vertices in iteration order: ZERO, then ascending subfield index
    FieldElem vertex(long long i) const;

private:
    const FieldCtx* F_;
    GraphKind kind_;
    long long d_;
    SubfieldHandle verts_;
};

/// {x in base : adjacent(u, x)}, in vertex iteration order
std::vector<FieldElem> fq_neighborhood(const CayleyView& g, FieldElem u,
                                       const SubfieldHandle& base);

/// Lemma-style check that GP(q^d, d) induced on F_{q^(d')} equals
/// GP(q^(d'), d'), edge by edge, plus the gcd index identity.
VerdictReport induced_subfield_equality(long long p, int e, int d, int dprime,
                                        int ambient_bits = FieldCtx::kDefaultAmbientBits);

/// exhaustive strongly-regular parameter measurement (vertex count <= 2^13)
std::pair<std::tuple<long long, long long, long long, long long>, VerdictReport>
srg_params(const CayleyView& g);

/// DIMACS edge-list export for small graphs
void export_dimacs(const CayleyView& g, std::ostream& os);

}  // namespace gpaley

#endif
