#pragma once

#include "qcheb/cheb.hpp"
#include "qcheb/multipoly.hpp"
#include "qcheb/report.hpp"

#include <cstdint>
#include <vector>

namespace qcheb {

// Incomplete polynomials: the explicit sums truncated at summation index k.
// k = -1 is a first-class input meaning the empty sum (value 0); several
// cross-kind identities reference index k-1 at k = 0. Valid k: -1..floor(n/2).
// Out-of-range k throws std::invalid_argument.
MultiPoly uIncomplete(int n, int k);
// First kind; n = 0 admits only the stored constant 1 at k = 0.
MultiPoly tIncomplete(int n, int k);

// Identity checks. Each function evaluates only the identities whose stated
// (n, k) range admits the inputs, so sweeps can enumerate a rectangle of
// (n, k) pairs and collect whatever applies. Residuals are exact.

// UStep (k <= (n-1)/2):
//   U_{n+2}^{k+1} = (1+q^{n+2}) x U_{n+1}^{k+1} + q^{n+1} s U_n^k
// UNonhomog (k <= n/2):
//   U_{n+2}^k = (1+q^{n+2}) x U_{n+1}^k + q^{n+1} s U_n^k - q^{n+1} s uTerm(n,k)
std::vector<IdentityReport> checkUIdentities(int n, int k);

// TStep (k <= (n-1)/2):
//   T_{n+2}^{k+1} = (1+q^{n+1}) x T_{n+1}^{k+1} + q^{n+1} s T_n^k
// TNonhomogPrinted / TNonhomogX (k <= n/2): the fixed-k variant in two forms,
// with and without x on the (1+q^{n+1}) T_{n+1}^k term; the correction term is
// q^{n+1} s tTerm(n,k) in both. Exactly one form is expected to hold; both are
// always reported so the verify layer can adjudicate.
std::vector<IdentityReport> checkTIdentities(int n, int k);

// MixedFirstSecond (k <= (n+1)/2): T_{n+2}^k = x U_{n+1}^k + q^{n+1} s U_n^{k-1}
// MixedDilated     (k <= (n+1)/2): same shape with s -> q^2 s on the right:
//   T_{n+2}^k = x U_{n+1}^k|_{s->q^2 s} + q s U_n^{k-1}|_{s->q^2 s}
// MixedWeighted    (k <= n/2): (1+q^{n+2}) T_{n+2}^k = U_{n+2}^k + q^{2n+3} s U_n^{k-1}
std::vector<IdentityReport> checkMixedRelations(int n, int k);

// USum (n >= 0) and TSum (n >= 1):
//   sum_{k=0}^{floor(n/2)} P_n^k = c_n P_n + (x/2) dP_n/dx,
// where c_n = 1 for even n and 1/2 for odd n.
std::vector<IdentityReport> checkSumTheorems(int n);

// Classical integer partial sums; pure integer arithmetic, no polynomial code.
//   incompleteFibonacci(n, k) = sum_{j=0}^{k} C(n-1-j, j),   0 <= k <= (n-1)/2
//   incompleteLucas(n, k)     = sum_{j=0}^{k} (n/(n-j)) C(n-j, j), 0 <= k <= n/2,
// the Lucas summand computed as C(n-j, j) + C(n-j-1, j-1) to stay integral.
std::int64_t incompleteFibonacci(int n, int k);  // n >= 1
std::int64_t incompleteLucas(int n, int k);      // n >= 1

}  // namespace qcheb
