#pragma once

#include "qcheb/multipoly.hpp"

#include <string>

namespace qcheb {

// One checked identity instance. Ids are named after what the identity does,
// not where it comes from.
enum class IdentityId {
    // Gaussian binomial recurrences and the denominator-cleared ratio rules.
    QbinomPascalQk,     // binom(n+1,k) = q^k binom(n,k) + binom(n,k-1)
    QbinomPascalQnk,    // binom(n+1,k) = binom(n,k) + q^{n-k+1} binom(n,k-1)
    QbinomRatioBase,    // [n] binom(n-k,k) = [n-k] (q^k binom(n-k,k) + binom(n-k-1,k-1))
    QbinomRatioScaled,  // [n] q^k binom(n-k,k) = [n-k] (q^k binom(n-k,k) + q^n binom(n-k-1,k-1))
    // Full polynomials: recurrence route vs explicit-sum route, and the
    // x-cleared derivative identity x P' = n P - 2 sum_j j term_j.
    UDualRoute,
    TDualRoute,
    UDerivative,
    TDerivative,
    // Incomplete-polynomial identities.
    UStep,              // homogeneous step advancing (n, k) together, second kind
    UNonhomog,          // fixed-k step with explicit correction term, second kind
    TStep,              // homogeneous step, first kind
    TNonhomogPrinted,   // fixed-k step, first kind, stepped term NOT multiplied by x
    TNonhomogX,         // fixed-k step, first kind, stepped term multiplied by x
    MixedFirstSecond,   // first kind from two second-kind polynomials
    MixedDilated,       // same with s -> q^2 s on the second-kind side
    MixedWeighted,      // (1 + q^{n+2}) first kind = second kind + tail term
    USum,               // sum over k of U_n^k against U_n and its derivative
    TSum,               // sum over k of T_n^k against T_n and its derivative
    // Generating-function checks.
    SeriesU,            // solved series coefficient equals the recurrence value
    SeriesT,            // first kind, +s q z^2 operator sign
    SeriesTAltSign,     // first kind, -s q z^2 operator sign (adjudication only)
    ResidualU,          // operator applied to solved series minus right side
    ResidualT,
    SchurSeq,           // solved Schur coefficient equals the recurrence value
    SchurResidual,      // -z^2 eta operator sign
    SchurResidualAltSign,  // +z^2 eta operator sign (adjudication only)
};

const char* identityName(IdentityId id);

// Adjudication-only ids: reported and counted, but a failure does not fail a
// verification suite. Exactly one of each adjudicated pair is expected to hold.
bool isInformational(IdentityId id);

struct IdentityReport {
    IdentityId id;
    int n = 0;
    int k = 0;
    bool pass = false;
    MultiPoly residual;  // zero iff pass

    friend bool operator==(const IdentityReport& a, const IdentityReport& b) {
        return a.id == b.id && a.n == b.n && a.k == b.k && a.pass == b.pass &&
               a.residual == b.residual;
    }
};

inline IdentityReport makeReport(IdentityId id, int n, int k, MultiPoly residual) {
    IdentityReport r;
    r.id = id;
    r.n = n;
    r.k = k;
    r.pass = residual.isZero();
    r.residual = std::move(residual);
    return r;
}

// Deterministic order for summaries: by id, then n, then k.
bool reportOrder(const IdentityReport& a, const IdentityReport& b);

}  // namespace qcheb
