#include "qcheb/qcalc.hpp"

#include <stdexcept>

namespace qcheb {
namespace {

MultiPoly qPower(int e) { return MultiPoly::term({0, 0, e}, Rational(1)); }

}  // namespace

MultiPoly qInteger(int n) {
    if (n < 0) throw std::invalid_argument("qInteger: negative n");
    MultiPoly out;
    for (int i = 0; i < n; ++i) out = out + qPower(i);
    return out;
}

MultiPoly qFactorial(int n) {
    if (n < 0) throw std::invalid_argument("qFactorial: negative n");
    MultiPoly out(Rational(1));
    for (int i = 1; i <= n; ++i) out = out * qInteger(i);
    return out;
}

MultiPoly qShiftedFactorial(const MultiPoly& base, int n) {
    if (n < 0) throw std::invalid_argument("qShiftedFactorial: negative n");
    MultiPoly out(Rational(1));
    for (int i = 0; i < n; ++i) {
        out = out * (MultiPoly(Rational(1)) - qPower(i) * base);
    }
    return out;
}

MultiPoly onePlusQPowerProduct(int lo, int hi) {
    MultiPoly out(Rational(1));
    for (int i = lo; i <= hi; ++i) {
        out = out * (MultiPoly(Rational(1)) + qPower(i));
    }
    return out;
}

MultiPoly negQPochRatio(int n, int j) {
    if (j < 0 || j > n - j) throw std::invalid_argument("negQPochRatio: requires 0 <= j <= n - j");
    return onePlusQPowerProduct(j + 1, n - j);
}

const MultiPoly& QBinomialTable::binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return zero_;
    growTo(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void QBinomialTable::growTo(int n) {
    if (rows_.empty()) rows_.push_back({MultiPoly(Rational(1))});
    while (static_cast<int>(rows_.size()) <= n) {
        const auto& prev = rows_.back();
        int m = static_cast<int>(rows_.size());  // building row m from row m-1
        std::vector<MultiPoly> row(static_cast<std::size_t>(m) + 1);
        row[0] = MultiPoly(Rational(1));
        row[static_cast<std::size_t>(m)] = MultiPoly(Rational(1));
        for (int k = 1; k < m; ++k) {
            // binom(m, k) = q^k binom(m-1, k) + binom(m-1, k-1)
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k)].timesQPower(k) + prev[static_cast<std::size_t>(k - 1)];
        }
        rows_.push_back(std::move(row));
    }
}

const MultiPoly& qBinomial(int n, int k) {
    thread_local QBinomialTable table;
    return table.binom(n, k);
}

MultiPoly qBinomialByHighPascal(int n, int k) {
    if (k < 0 || n < 0 || k > n) return MultiPoly();
    // Row-by-row with binom(m, k) = binom(m-1, k) + q^{m-k} binom(m-1, k-1);
    // independent of the table's q^k rule on purpose.
    std::vector<MultiPoly> row{MultiPoly(Rational(1))};
    for (int m = 1; m <= n; ++m) {
        std::vector<MultiPoly> next(static_cast<std::size_t>(m) + 1);
        next[0] = MultiPoly(Rational(1));
        next[static_cast<std::size_t>(m)] = MultiPoly(Rational(1));
        for (int j = 1; j < m; ++j) {
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j)] +
                row[static_cast<std::size_t>(j - 1)].timesQPower(m - j);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

std::vector<IdentityReport> checkQbinomIdentitiesAt(int n, int k, QBinomialTable& table) {
    std::vector<IdentityReport> out;
    // binom(n+1, k) = q^k binom(n, k) + binom(n, k-1)
    out.push_back(makeReport(
        IdentityId::QbinomPascalQk, n, k,
        table.binom(n + 1, k) - table.binom(n, k).timesQPower(k) - table.binom(n, k - 1)));
    // binom(n+1, k) = binom(n, k) + q^{n-k+1} binom(n, k-1)
    out.push_back(makeReport(
        IdentityId::QbinomPascalQnk, n, k,
        table.binom(n + 1, k) - table.binom(n, k) - table.binom(n, k - 1).timesQPower(n - k + 1)));
    // The ratio rules relate [n]/[n-k] binom(n-k, k) to a q-weighted pair;
    // multiplying through by [n-k] clears the quotient:
    //   [n] binom(n-k,k)     = [n-k] (q^k binom(n-k,k) + binom(n-k-1,k-1))
    //   [n] q^k binom(n-k,k) = [n-k] (q^k binom(n-k,k) + q^n binom(n-k-1,k-1))
    if (k <= n - k) {
        const MultiPoly lhsBase = qInteger(n) * table.binom(n - k, k);
        const MultiPoly weighted = table.binom(n - k, k).timesQPower(k);
        out.push_back(makeReport(
            IdentityId::QbinomRatioBase, n, k,
            lhsBase - qInteger(n - k) * (weighted + table.binom(n - k - 1, k - 1))));
        out.push_back(makeReport(
            IdentityId::QbinomRatioScaled, n, k,
            lhsBase.timesQPower(k) -
                qInteger(n - k) * (weighted + table.binom(n - k - 1, k - 1).timesQPower(n))));
    }
    return out;
}

std::vector<IdentityReport> verifyQbinomIdentities(int nMax) {
    if (nMax < 1) throw std::invalid_argument("verifyQbinomIdentities: nMax must be >= 1");
    QBinomialTable table;
    std::vector<IdentityReport> out;
    for (int n = 1; n <= nMax; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto reports = checkQbinomIdentitiesAt(n, k, table);
            out.insert(out.end(), reports.begin(), reports.end());
        }
    }
    return out;
}

}  // namespace qcheb
