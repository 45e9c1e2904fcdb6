#pragma once

#include "qcheb/multipoly.hpp"
#include "qcheb/report.hpp"

#include <vector>

namespace qcheb {

// All q-objects are polynomials in q. The defining fractions are replaced by
// closed sum/product forms so that substitution at q = 1 is always total and
// polynomial division never happens.

MultiPoly qInteger(int n);    // 1 + q + ... + q^{n-1}; 0 for n = 0
MultiPoly qFactorial(int n);  // product of qInteger(1..n); 1 for n = 0

// prod_{i=0}^{n-1} (1 - q^i * base); 1 for n = 0.
MultiPoly qShiftedFactorial(const MultiPoly& base, int n);

// prod_{i=lo}^{hi} (1 + q^i); 1 when hi < lo.
MultiPoly onePlusQPowerProduct(int lo, int hi);

// The quotient of shifted factorials (-q;q)_{n-j} / (-q;q)_j computed as the
// product over i = j+1 .. n-j. Requires j <= n - j (caller bug otherwise).
MultiPoly negQPochRatio(int n, int j);

// Triangular memo of Gaussian binomials, built row by row with the
// q^k-weighted Pascal rule. Grows on demand. Single writer per instance:
// concurrent sweeps should use one table per worker thread.
class QBinomialTable {
public:
    // 0 for k < 0 or k > n or n < 0, else the Gaussian binomial.
    const MultiPoly& binom(int n, int k);

private:
    void growTo(int n);
    std::vector<std::vector<MultiPoly>> rows_;
    MultiPoly zero_;
};

// Convenience using a thread-local table (one table per thread).
const MultiPoly& qBinomial(int n, int k);

// Independent construction via the q^{n-k+1}-weighted Pascal rule; no sharing
// with QBinomialTable. Test oracle for the two-recurrence cross-check.
MultiPoly qBinomialByHighPascal(int n, int k);

// Checks the two Pascal rules and the two cleared ratio rules at one (n, k).
// The ratio rules multiply through by [n-k] to stay divisionless.
std::vector<IdentityReport> checkQbinomIdentitiesAt(int n, int k, QBinomialTable& table);

// Serial sweep over 1 <= k <= n <= nMax; every report must pass.
std::vector<IdentityReport> verifyQbinomIdentities(int nMax);

}  // namespace qcheb
