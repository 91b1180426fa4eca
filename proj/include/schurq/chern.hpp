#pragma once

#include <optional>
#include <utility>

#include "schurq/cohring.hpp"
#include "schurq/schur.hpp"
#include "schurq/weights.hpp"

namespace schurq {

// The closed-form invariants attached to a partition: rank and the five
// rational functions driving the Chern character, discriminant and Euler
// characteristic. All are evaluated on the reduced partition.
struct LambdaPolys {
    BigInt r;        // rank
    Rational ell;    // c1 slope: c1 = ell * r * c1(Q)
    Rational tau;
    Rational delta;  // (4 ell^2 + tau)/5; discriminant coefficient is delta/4 * r^2
    Rational xi;     // ch4 coefficient per rank
    Rational P;      // chi(E,E) = 3 P r^2
};

// Rank of Sigma_{(m,t,s,0)} as a rational polynomial value; vanishes (or goes
// negative) outside the dominant cone, which the recursion identities rely on.
Rational rank_poly(const Rational& m, const Rational& t, const Rational& s);

Rational ell_poly(const Rational& m, const Rational& t, const Rational& s);
Rational tau_poly(const Rational& m, const Rational& t, const Rational& s);
Rational delta_poly(const Rational& m, const Rational& t, const Rational& s);
Rational xi_poly(const Rational& m, const Rational& t, const Rational& s);
Rational p_poly(const Rational& m, const Rational& t, const Rational& s);

LambdaPolys lambda_polys(const Weight4& lambda);

// Discriminant slope in closed form, directly from the four entries; invariant
// under adding (k,k,k,k).
Rational delta_general(const Weight4& lambda);

// ch(Sigma_lambda Q) in closed form: evaluated on the reduced partition, then
// twisted by exp(lambda_4 c1).
CohClass ch_schur_closed(const Weight4& lambda);

// Splitting-principle oracle: sum of exp(weight) over all semistandard
// tableaux of shape lambda with entries 1..4, expanded to total degree 4,
// rewritten in power sums and pushed into the ring via
// p1 = c1, p2 = 2 ch2, p3 = 6 ch3, p4 = 24 ch4.
CohClass ch_schur_oracle(const Weight4& lambda);

// Independent symmetric-power formula: sub-partition sum with Stirling-number
// weights, reduced in the ring.
CohClass ch_sym_stirling(int m);

// Delta(F) = c1^2 - 2 rk ch2,  Xi(F) = ch2^2 - 2 c1 ch3 + 2 rk ch4
CohClass discriminant(const CohClass& ch);
CohClass xi_invariant(const CohClass& ch);

// If ch's discriminant lies in Q.c2X, its coefficient; otherwise nullopt.
std::optional<Rational> modular_coefficient(const CohClass& ch);

// chi(Sigma_lambda Q, Sigma_lambda Q) = 3 P(lambda) r^2, exact integer.
BigInt chi_end(const Weight4& lambda);

// rho(mu) = ((mu1-mu2)^2 + 2(mu1-mu2))/6;
// Delta(Sigma_mu U) = (rho/2) rk^2 Delta(U), Delta(U) = (3/2)c1^2 - (1/2)c2X.
struct SigmaUDiscriminant {
    Rational coefficient;  // (rho/2) (mu1-mu2+1)^2, the multiple of Delta(U)
    CohClass value;        // the class itself
};
SigmaUDiscriminant delta_sigma_U(const Weight2& mu);

// Delta(Sigma_lambda Q (x) Sigma_mu U) by the tensor rule; modular iff the
// component outside Q.c2X vanishes, i.e. iff mu1 == mu2.
struct MixedModular {
    bool modular = false;
    CohClass value;
};
MixedModular mixed_modular(const Weight4& lambda, const Weight2& mu);

}  // namespace schurq
