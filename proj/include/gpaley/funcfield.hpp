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

#ifndef GPALEY_FUNCFIELD_HPP
#define GPALEY_FUNCFIELD_HPP

#include <utility>
#include <vector>

#include "gpaley/cyclo.hpp"
#include "gpaley/ffield.hpp"
#include "gpaley/report.hpp"

namespace gpaley {

/// Polynomial in T with coefficients in a declared subfield of the ambient
/// field.  Trimmed; an empty coefficient vector is the zero polynomial.
struct SubfieldPoly {
    SubfieldHandle sub;
    std::vector<FieldElem> c;  // c[i] is the coefficient of T^i

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == FieldElem::one(); }

    static SubfieldPoly zero(const SubfieldHandle& s) { return {s, {}}; }
    static SubfieldPoly constant(const SubfieldHandle& s, FieldElem a);
    /// T - a
    static SubfieldPoly linear(const SubfieldHandle& s, FieldElem a, const FieldCtx& F);
};

void validate_coeffs(const FieldCtx& F, const SubfieldPoly& f);

SubfieldPoly poly_add(const FieldCtx& F, const SubfieldPoly& a, const SubfieldPoly& b);
SubfieldPoly poly_mul(const FieldCtx& F, const SubfieldPoly& a, const SubfieldPoly& b);
SubfieldPoly poly_mod(const FieldCtx& F, SubfieldPoly a, const SubfieldPoly& f);
SubfieldPoly poly_gcd(const FieldCtx& F, SubfieldPoly a, SubfieldPoly b);  // monic
FieldElem poly_eval(const FieldCtx& F, const SubfieldPoly& f, FieldElem x);

/// Monic irreducible over the coefficient field F_{q^n}, specified by a root
/// in the ambient field; the polynomial is the root's minimal polynomial.
struct IrreducibleByRoot {
    FieldElem root;
    SubfieldHandle coeff_field;  // F_{q^n}
    SubfieldHandle base;         // F_q
    int b = 0;  // degree over the coefficient field
    int c = 0;  // number of conjugates of the polynomial over the base
    SubfieldPoly minpoly;

    static IrreducibleByRoot make(const FieldCtx& F, FieldElem root,
                                  const SubfieldHandle& coeff_field,
                                  const SubfieldHandle& base);
    /// f(a) for a in the base field, via the constructed minimal polynomial
    FieldElem eval(const FieldCtx& F, FieldElem a) const;
};

/// chi_{F_i}(g) = chi(N_{F_{q^n}[xi]/F_{q^n}}(g(xi))) for g over the base
CharValue dirichlet_eval(const FieldCtx& F, const IrreducibleByRoot& fi,
                         const CharSpec& chi, const SubfieldPoly& g);

/// chi non-trivial on N(F_q[xi]) \ {0}, decided by scanning the norm set
bool char_nontrivial_on_norms(const FieldCtx& F, const IrreducibleByRoot& fi,
                              const CharSpec& chi);

/// sum over a in F_q of prod_i chi_{F_i}(T - a), with the Weil-type bound
/// check (deg F - 1) sqrt(q) when the product character is non-trivial
std::pair<CycloSum, VerdictReport> linear_sum(const FieldCtx& F, const SubfieldHandle& base,
                                              const std::vector<IrreducibleByRoot>& fs,
                                              const std::vector<CharSpec>& chis);

VerdictReport verify_thm32(const FieldCtx& F, const SubfieldHandle& base,
                           const std::vector<IrreducibleByRoot>& fs,
                           const std::vector<CharSpec>& chis);

/// Collapse of a conjugate orbit of repeated factors into one character
/// power: returns m = sum t_i q^(alpha_i) mod d and the pointwise + bound
/// verification report.
std::pair<long long, VerdictReport> total_multiplicity(
    const FieldCtx& F, const SubfieldHandle& base,
    const std::vector<std::pair<IrreducibleByRoot, int>>& factors, const CharSpec& chi);

}  // namespace gpaley

#endif
