#pragma once

#include "qcheb/multipoly.hpp"
#include "qcheb/report.hpp"

#include <vector>

namespace qcheb {

// Truncated formal power series in z with polynomial coefficients. All
// arithmetic discards z^order and beyond.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order)) {}
    int order() const { return static_cast<int>(coeffs_.size()); }
    const MultiPoly& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void setCoeff(int n, MultiPoly p) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(p); }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<MultiPoly> coeffs_;
};

// Dilation z -> qz: multiplies the z^n coefficient by q^n.
PowerSeries etaZ(const PowerSeries& series);

// One operator summand a(x,s,q) * z^zPower * eta^etaPower.
struct OperatorTerm {
    MultiPoly a;
    int zPower = 0;
    int etaPower = 0;
};

// (1 - sum_k term_k) applied to the series; used for residual checks.
PowerSeries applyOperator(const std::vector<OperatorTerm>& terms, const PowerSeries& series);

// Solves (1 - sum_k term_k) G = rhs coefficient by coefficient. The z^n
// equation is triangular: g_n = rhs_n + sum_k a_k q^{e_k (n - d_k)} g_{n - d_k},
// which is exactly the recurrence obtained by collecting powers of z.
PowerSeries solveOperatorEquation(const std::vector<OperatorTerm>& terms, const PowerSeries& rhs,
                                  int order);

// Operator form of the second-kind family:
//   (1 - x z - (x q z + s q z^2) eta) G = 1.
std::vector<OperatorTerm> secondKindOperator();
PowerSeries solveSecondKindGf(int order);

// Operator form of the first-kind family:
//   (1 - x z - (x z + s q z^2) eta) S = 1 - x z.
// altSquareSign flips the s q z^2 term to minus; only one sign reproduces the
// recurrence, and the verify layer adjudicates which. Default is the
// reproducing sign.
std::vector<OperatorTerm> firstKindOperator(bool altSquareSign = false);
PowerSeries solveFirstKindGf(int order, bool altSquareSign = false);
PowerSeries firstKindRhs(int order);  // 1 - x z

// Schur polynomial warm-up: S_0 = 0, S_1 = 1, S_n = S_{n-1} - q^{n-2} S_{n-2}.
// Polynomials in q only.
std::vector<MultiPoly> schurSequence(int order);  // order >= 2

// Operator equation for the Schur sequence: (1 - z + z^2 eta) Sigma = z.
// altSquareSign flips the z^2 eta term to minus (the adjudicated-away sign).
std::vector<OperatorTerm> schurOperator(bool altSquareSign = false);
PowerSeries solveSchurGf(int order, bool altSquareSign = false);

}  // namespace qcheb
