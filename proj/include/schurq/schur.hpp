#pragma once

#include <map>
#include <vector>

#include "schurq/bigint.hpp"
#include "schurq/weights.hpp"

namespace schurq {

// Multiset of weights with positive multiplicities; the result type of every
// tensor-product decomposition here. Keys are kept canonical by the producers.
template <typename W>
using IrrepSum = std::map<W, BigInt>;

// Dimension of the SL(4) irrep with highest weight lambda (any dominant weight).
BigInt weyl_dim_sl4(const Weight4& lambda);

// mu1 - mu2 + 1
BigInt weyl_dim_sl2(const Weight2& mu);

// Dimension of the SL(6) irrep with highest weight nu (length-6 dominant weight).
BigInt weyl_dim_sl6(const std::array<int, 6>& nu);

BigInt weyl_dim(const Weight6& w);

// Sigma_lambda (x) Sym^m: all shapes obtained by adding m boxes, no two in a
// column, truncated to four rows; every multiplicity is 1.
IrrepSum<Weight4> pieri(const Weight4& lambda, int m);

// Littlewood-Richardson decomposition of Sigma_lambda (x) Sigma_mu for GL(4),
// by direct enumeration of labelled fillings: Pieri additions row by row and
// the reverse-reading lattice-word condition.
IrrepSum<Weight4> littlewood_richardson(const Weight4& lambda, const Weight4& mu);

// End(Sigma_lambda(Q~)) = (+)_nu Sigma_{nu|(l1,l1)}^{m^nu_{lambda',lambda}}.
// The twist by O(-lambda_1) is carried by the u-part (l1,l1).
// Input may have lambda_4 > 0; the decomposition only depends on the reduced
// partition and is returned with u-part (l1', l1') of the reduced one.
IrrepSum<Weight6> end_decomposition(const Weight4& lambda);

// total of mult * dim over the sum
BigInt total_dimension(const IrrepSum<Weight4>& sum);
BigInt total_dimension(const IrrepSum<Weight6>& sum);

// total of multiplicities
BigInt total_multiplicity(const IrrepSum<Weight6>& sum);

// Drops all memoized Littlewood-Richardson and End results (mainly for tests).
void clear_schur_cache();

}  // namespace schurq
