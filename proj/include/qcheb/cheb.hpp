#pragma once

#include "qcheb/multipoly.hpp"
#include "qcheb/report.hpp"

#include <vector>

namespace qcheb {

enum class ChebKind { FirstKind, SecondKind };

// Growable list of one family's polynomials, filled by the three-term
// recurrence. Single writer per instance; completed entries are immutable.
class ChebCache {
public:
    explicit ChebCache(ChebKind kind) : kind_(kind) {}
    ChebKind kind() const { return kind_; }
    const MultiPoly& at(int n);  // extends the cache up to n; n >= 0

private:
    ChebKind kind_;
    std::vector<MultiPoly> polys_;
};

// Recurrence route (production path).
//   second kind: P_0 = 1, P_1 = (1+q) x, P_n = (1+q^n)   x P_{n-1} + q^{n-1} s P_{n-2}
//   first kind:  P_0 = 1, P_1 = x,       P_n = (1+q^{n-1}) x P_{n-1} + q^{n-1} s P_{n-2}
MultiPoly uRecurrence(int n, ChebCache& cache);  // cache.kind() must be SecondKind
MultiPoly tRecurrence(int n, ChebCache& cache);  // cache.kind() must be FirstKind

// Thread-local cached access (one cache pair per thread).
const MultiPoly& uPoly(int n);
const MultiPoly& tPoly(int n);

// Single summand j of the explicit sums, division-free.
//   second kind: q^{j^2} binom(n-j, j) prod_{i=j+1}^{n-j}(1+q^i) s^j x^{n-2j}
//   first kind, j < n/2: the coefficient with the q-integer ratio is rewritten
//   as q^j binom(n-j,j) + binom(n-j-1,j-1); the shifted-factorial ratio is the
//   product over i = j+1 .. n-j-1.
//   first kind, j = n/2 (n even): that ratio would invert, so the term is taken
//   from the cross-kind identity T_n = x U_{n-1} + q^{n-1} s U_{n-2}, whose
//   whole x-degree-0 part is q^{n-1} s * uTerm(n-2, n/2 - 1).
MultiPoly uTerm(int n, int j);
MultiPoly tTerm(int n, int j);  // n >= 1

// Explicit-sum route (verification path).
MultiPoly uExplicit(int n);
MultiPoly tExplicit(int n);  // n >= 1; throws std::invalid_argument at n = 0

// x-cleared derivative identity: x dP_n/dx = n P_n - 2 sum_j j term_j(n).
IdentityReport derivativeIdentityCheck(ChebKind kind, int n);  // n >= 1

// Dual-route residuals (recurrence minus explicit sum).
IdentityReport dualRouteCheck(ChebKind kind, int n);

}  // namespace qcheb
