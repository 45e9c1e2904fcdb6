#include "qcheb/cheb.hpp"
#include "qcheb/families.hpp"
#include "qcheb/figures.hpp"
#include "qcheb/genfun.hpp"
#include "qcheb/incomplete.hpp"
#include "qcheb/serialize.hpp"
#include "qcheb/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qcheb;

int runEval(const std::string& kind, int n, std::optional<int> k, const std::optional<std::string>& x,
            const std::optional<std::string>& s, const std::optional<std::string>& q,
            const std::string& format) {
    const bool secondKind = kind == "U";
    MultiPoly poly;
    if (k) {
        poly = secondKind ? uIncomplete(n, *k) : tIncomplete(n, *k);
    } else {
        poly = secondKind ? uPoly(n) : tPoly(n);
    }
    MultiPoly::Bindings bind;
    if (x) bind.x = Rational::fromString(*x);
    if (s) bind.s = Rational::fromString(*s);
    if (q) bind.q = Rational::fromString(*q);
    poly = poly.substitute(bind);
    if (format == "json") {
        std::cout << evalResultToJson(kind, n, k, poly).dump() << '\n';
    } else if (poly.isConstant()) {
        std::cout << poly.constantValue() << '\n';
    } else {
        std::cout << poly << '\n';
    }
    return 0;
}

int runTable(const std::string& tableId) {
    const TableDiff diff = reproduceTable(tableId);
    for (TableColumn col : tableGroup(tableId)) {
        for (const GoldenCell& cell : goldenCells().at(col)) {
            std::cout << tableColumnName(col) << '\t' << cell.n << '\t' << cell.k << '\t'
                      << computeTableCell(col, cell.n, cell.k) << '\n';
        }
    }
    if (diff.mismatches.empty()) {
        std::cout << "diff: none\n";
        return 0;
    }
    std::cout << "diff:\n";
    for (const CellMismatch& m : diff.mismatches) {
        std::cout << "  " << tableColumnName(m.col) << " n=" << m.n << " k=" << m.k
                  << ": embedded " << m.embedded << ", computed " << m.computed
                  << (m.known ? " (known discrepancy)" : " (UNEXPECTED)") << '\n';
    }
    return diff.clean() ? 0 : 1;
}

int runVerify(const std::string& suite, int nMax, bool serial) {
    const std::vector<SuiteRun> runs = runSuites(suite, nMax, !serial);
    std::cout << renderSummary(runs);
    return allPass(runs) ? 0 : 1;
}

int runSeries(const std::string& kind, int order) {
    PowerSeries series = kind == "U"    ? solveSecondKindGf(order)
                         : kind == "T"  ? solveFirstKindGf(order)
                                        : solveSchurGf(order);
    for (int n = 0; n < series.order(); ++n) {
        std::cout << n << ": " << series.coeff(n) << '\n';
    }
    return 0;
}

int runExport(const std::string& figureId, const std::string& out, int points,
              std::optional<int> decimals) {
    for (const std::string& path : exportFigure(figureId, out, points, decimals)) {
        std::cout << "wrote " << path << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-Chebyshev polynomial toolkit"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Evaluate a polynomial, optionally truncated and substituted");
    std::string evalKind, evalFormat = "text";
    int evalN = 0;
    std::optional<int> evalK;
    std::optional<std::string> evalX, evalS, evalQ;
    eval->add_option("--kind", evalKind, "Family: T (first kind) or U (second kind)")
        ->required()
        ->check(CLI::IsMember({"T", "U"}));
    eval->add_option("--n", evalN, "Polynomial index")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--k", evalK, "Truncation index of the incomplete polynomial");
    eval->add_option("--x", evalX, "Exact rational value for x, e.g. 3/2");
    eval->add_option("--s", evalS, "Exact rational value for s");
    eval->add_option("--q", evalQ, "Exact rational value for q");
    eval->add_option("--format", evalFormat, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "Recompute an embedded golden table and diff it");
    std::string tableId;
    table->add_option("--id", tableId, "Table group")
        ->required()
        ->check(CLI::IsMember({"T4", "T5", "T6"}));

    auto* verify = app.add_subcommand("verify", "Run identity sweeps");
    std::string verifySuite;
    int verifyNMax = 0;
    bool verifySerial = false;
    verify->add_option("--suite", verifySuite, "Identity suite")
        ->required()
        ->check(CLI::IsMember({"qbinom", "cheb", "incomplete", "genfun", "all"}));
    verify->add_option("--nmax", verifyNMax, "Largest index swept")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--serial", verifySerial, "Use the serial reference sweep");

    auto* series = app.add_subcommand("series", "Print generating-function coefficients");
    std::string seriesKind;
    int seriesOrder = 0;
    series->add_option("--kind", seriesKind, "T, U, or schur")
        ->required()
        ->check(CLI::IsMember({"T", "U", "schur"}));
    series->add_option("--order", seriesOrder, "Number of coefficients")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("export", "Write figure sample data as CSV");
    std::string expFigure, expOut;
    int expPoints = 201;
    std::optional<int> expDecimals;
    exp->add_option("--figure", expFigure, "Figure id")
        ->required()
        ->check(CLI::IsMember({"F1", "F2", "F3", "F4", "F5", "F6"}));
    exp->add_option("--out", expOut, "Output path; the curve tag is inserted before the extension")
        ->required();
    exp->add_option("--points", expPoints, "Grid points per curve")->check(CLI::Range(2, 1000000));
    exp->add_option("--decimals", expDecimals, "Render values as fixed-point decimals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*eval) return runEval(evalKind, evalN, evalK, evalX, evalS, evalQ, evalFormat);
        if (*table) return runTable(tableId);
        if (*verify) return runVerify(verifySuite, verifyNMax, verifySerial);
        if (*series) return runSeries(seriesKind, seriesOrder);
        if (*exp) return runExport(expFigure, expOut, expPoints, expDecimals);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return 2;
    }
    return 2;
}
