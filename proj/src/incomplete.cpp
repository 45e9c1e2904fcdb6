#include "qcheb/incomplete.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace qcheb {
namespace {

// Per-thread memo of individual summands; the incomplete sweeps revisit the
// same (n, j) pairs many times from different identities.
const MultiPoly& uTermCached(int n, int j) {
    thread_local std::map<std::pair<int, int>, MultiPoly> memo;
    auto [it, inserted] = memo.try_emplace({n, j});
    if (inserted) it->second = uTerm(n, j);
    return it->second;
}

const MultiPoly& tTermCached(int n, int j) {
    thread_local std::map<std::pair<int, int>, MultiPoly> memo;
    auto [it, inserted] = memo.try_emplace({n, j});
    // (0, 0) is the stored constant 1; the fixed-k step references it at the
    // lowest index.
    if (inserted) it->second = (n == 0 && j == 0) ? MultiPoly(Rational(1)) : tTerm(n, j);
    return it->second;
}

void requireRange(const char* what, int n, int k) {
    if (n < 0 || k < -1 || 2 * k > n) {
        throw std::invalid_argument(std::string(what) + ": requires 0 <= n and -1 <= k <= n/2");
    }
}

MultiPoly qPowTimesS(int power) {  // q^power * s
    return MultiPoly::term({0, 1, power}, Rational(1));
}

const MultiPoly& xPoly() {
    static const MultiPoly x = MultiPoly::variable(Var::X);
    return x;
}

}  // namespace

MultiPoly uIncomplete(int n, int k) {
    requireRange("uIncomplete", n, k);
    MultiPoly out;
    for (int j = 0; j <= k; ++j) out = out + uTermCached(n, j);
    return out;
}

MultiPoly tIncomplete(int n, int k) {
    requireRange("tIncomplete", n, k);
    MultiPoly out;
    for (int j = 0; j <= k; ++j) out = out + tTermCached(n, j);
    return out;
}

std::vector<IdentityReport> checkUIdentities(int n, int k) {
    std::vector<IdentityReport> out;
    if (n < 0 || k < 0) return out;
    if (2 * k <= n - 1) {
        MultiPoly residual = uIncomplete(n + 2, k + 1) -
                             xPoly() * uIncomplete(n + 1, k + 1) -
                             uIncomplete(n + 1, k + 1).timesTerm({1, 0, n + 2}, Rational(1)) -
                             qPowTimesS(n + 1) * uIncomplete(n, k);
        out.push_back(makeReport(IdentityId::UStep, n, k, std::move(residual)));
    }
    if (2 * k <= n) {
        MultiPoly residual = uIncomplete(n + 2, k) -
                             xPoly() * uIncomplete(n + 1, k) -
                             uIncomplete(n + 1, k).timesTerm({1, 0, n + 2}, Rational(1)) -
                             qPowTimesS(n + 1) * uIncomplete(n, k) +
                             uTermCached(n, k).timesTerm({0, 1, n + 1}, Rational(1));
        out.push_back(makeReport(IdentityId::UNonhomog, n, k, std::move(residual)));
    }
    return out;
}

std::vector<IdentityReport> checkTIdentities(int n, int k) {
    std::vector<IdentityReport> out;
    if (n < 0 || k < 0) return out;
    if (2 * k <= n - 1) {
        MultiPoly residual = tIncomplete(n + 2, k + 1) -
                             xPoly() * tIncomplete(n + 1, k + 1) -
                             tIncomplete(n + 1, k + 1).timesTerm({1, 0, n + 1}, Rational(1)) -
                             qPowTimesS(n + 1) * tIncomplete(n, k);
        out.push_back(makeReport(IdentityId::TStep, n, k, std::move(residual)));
    }
    if (2 * k <= n) {
        // Shared pieces of the fixed-k step; the two variants differ only in
        // whether the stepped term carries a factor x.
        const MultiPoly stepped = tIncomplete(n + 1, k);
        const MultiPoly rest = qPowTimesS(n + 1) * tIncomplete(n, k) -
                               tTermCached(n, k).timesTerm({0, 1, n + 1}, Rational(1));
        const MultiPoly target = tIncomplete(n + 2, k);
        MultiPoly withoutX =
            target - stepped - stepped.timesQPower(n + 1) - rest;
        MultiPoly withX = target - xPoly() * stepped -
                          stepped.timesTerm({1, 0, n + 1}, Rational(1)) - rest;
        out.push_back(makeReport(IdentityId::TNonhomogPrinted, n, k, std::move(withoutX)));
        out.push_back(makeReport(IdentityId::TNonhomogX, n, k, std::move(withX)));
    }
    return out;
}

std::vector<IdentityReport> checkMixedRelations(int n, int k) {
    std::vector<IdentityReport> out;
    if (n < 0 || k < 0) return out;
    if (2 * k <= n + 1) {
        {
            MultiPoly residual = tIncomplete(n + 2, k) -
                                 xPoly() * uIncomplete(n + 1, k) -
                                 qPowTimesS(n + 1) * uIncomplete(n, k - 1);
            out.push_back(makeReport(IdentityId::MixedFirstSecond, n, k, std::move(residual)));
        }
        {
            MultiPoly residual = tIncomplete(n + 2, k) -
                                 xPoly() * uIncomplete(n + 1, k).remapSToQSquaredS() -
                                 qPowTimesS(1) * uIncomplete(n, k - 1).remapSToQSquaredS();
            out.push_back(makeReport(IdentityId::MixedDilated, n, k, std::move(residual)));
        }
    }
    if (2 * k <= n) {
        const MultiPoly lhs = tIncomplete(n + 2, k);
        MultiPoly residual = lhs + lhs.timesQPower(n + 2) - uIncomplete(n + 2, k) -
                             qPowTimesS(2 * n + 3) * uIncomplete(n, k - 1);
        out.push_back(makeReport(IdentityId::MixedWeighted, n, k, std::move(residual)));
    }
    return out;
}

std::vector<IdentityReport> checkSumTheorems(int n) {
    std::vector<IdentityReport> out;
    if (n < 0) return out;
    const Rational c = n % 2 == 0 ? Rational(1) : Rational(1, 2);
    {
        MultiPoly lhs;
        for (int k = 0; 2 * k <= n; ++k) lhs = lhs + uIncomplete(n, k);
        const MultiPoly& full = uPoly(n);
        MultiPoly residual = lhs - c * full -
                             Rational(1, 2) * full.derivative(Var::X).timesTerm({1, 0, 0}, Rational(1));
        out.push_back(makeReport(IdentityId::USum, n, 0, std::move(residual)));
    }
    if (n >= 1) {
        MultiPoly lhs;
        for (int k = 0; 2 * k <= n; ++k) lhs = lhs + tIncomplete(n, k);
        const MultiPoly& full = tPoly(n);
        MultiPoly residual = lhs - c * full -
                             Rational(1, 2) * full.derivative(Var::X).timesTerm({1, 0, 0}, Rational(1));
        out.push_back(makeReport(IdentityId::TSum, n, 0, std::move(residual)));
    }
    return out;
}

namespace {

std::int64_t binomialInt(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    // Pascal triangle row walk; values stay far below the int64 range for the
    // sweep sizes used here.
    std::int64_t value = 1;
    for (int i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
    }
    return value;
}

}  // namespace

std::int64_t incompleteFibonacci(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n - 1)
        throw std::invalid_argument("incompleteFibonacci: requires n >= 1, 0 <= k <= (n-1)/2");
    std::int64_t sum = 0;
    for (int j = 0; j <= k; ++j) sum += binomialInt(n - 1 - j, j);
    return sum;
}

std::int64_t incompleteLucas(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n)
        throw std::invalid_argument("incompleteLucas: requires n >= 1, 0 <= k <= n/2");
    std::int64_t sum = 0;
    for (int j = 0; j <= k; ++j) {
        // (n / (n-j)) C(n-j, j) rewritten integrally.
        sum += binomialInt(n - j, j) + binomialInt(n - j - 1, j - 1);
    }
    return sum;
}

}  // namespace qcheb
