#include "qcheb/families.hpp"

#include "qcheb/incomplete.hpp"

#include <sstream>
#include <stdexcept>

namespace qcheb {

const std::vector<FamilySpec>& familyCatalog() {
    static const std::vector<FamilySpec> catalog = {
        // Second kind. The number families sit one index ahead of the
        // polynomial: sequence index n maps to polynomial index n - 1.
        {"chebyshevU", ChebKind::SecondKind, symbolicArg(Rational(1)), numericArg(Rational(-1)),
         Rational(1), Rational(1), 0},
        {"fibonacciPoly", ChebKind::SecondKind, symbolicArg(Rational(1, 2)), numericArg(Rational(1)),
         Rational(1), Rational(1), 1},
        {"fibonacciBivariatePoly", ChebKind::SecondKind, symbolicArg(Rational(1, 2)),
         symbolicArg(Rational(1)), Rational(1), Rational(1), 1},
        {"fibonacci", ChebKind::SecondKind, numericArg(Rational(1, 2)), numericArg(Rational(1)),
         Rational(1), Rational(1), 1},
        {"pellPoly", ChebKind::SecondKind, symbolicArg(Rational(1)), numericArg(Rational(1)),
         Rational(1), Rational(1), 1},
        {"pell", ChebKind::SecondKind, numericArg(Rational(1)), numericArg(Rational(1)), Rational(1),
         Rational(1), 1},
        {"jacobsthalPoly", ChebKind::SecondKind, numericArg(Rational(1, 2)), symbolicArg(Rational(2)),
         Rational(1), Rational(1), 1},
        {"jacobsthal", ChebKind::SecondKind, numericArg(Rational(1, 2)), numericArg(Rational(2)),
         Rational(1), Rational(1), 1},
        // First kind. The doubled families carry scale 2.
        {"chebyshevT", ChebKind::FirstKind, symbolicArg(Rational(1)), numericArg(Rational(-1)),
         Rational(1), Rational(1), 0},
        {"lucasPoly", ChebKind::FirstKind, symbolicArg(Rational(1, 2)), numericArg(Rational(1)),
         Rational(1), Rational(2), 0},
        {"lucasBivariatePoly", ChebKind::FirstKind, symbolicArg(Rational(1, 2)),
         symbolicArg(Rational(1)), Rational(1), Rational(2), 0},
        {"lucas", ChebKind::FirstKind, numericArg(Rational(1, 2)), numericArg(Rational(1)),
         Rational(1), Rational(2), 0},
        {"pellLucasPoly", ChebKind::FirstKind, symbolicArg(Rational(1)), numericArg(Rational(1)),
         Rational(1), Rational(2), 0},
        {"pellLucas", ChebKind::FirstKind, numericArg(Rational(1)), numericArg(Rational(1)),
         Rational(1), Rational(2), 0},
        {"jacobsthalLucasPoly", ChebKind::FirstKind, numericArg(Rational(1, 2)),
         symbolicArg(Rational(2)), Rational(1), Rational(2), 0},
        {"jacobsthalLucas", ChebKind::FirstKind, numericArg(Rational(1, 2)), numericArg(Rational(2)),
         Rational(1), Rational(2), 0},
    };
    return catalog;
}

const FamilySpec& familyByName(const std::string& name) {
    for (const auto& spec : familyCatalog()) {
        if (spec.name == name) return spec;
    }
    throw std::invalid_argument("unknown family: " + name);
}

MultiPoly familyPoly(const FamilySpec& spec, int n, std::optional<int> k) {
    const int index = n - spec.indexShift;
    if (index < 0) throw std::invalid_argument("familyPoly: index below the family's range");
    MultiPoly base;
    if (k) {
        base = spec.kind == ChebKind::SecondKind ? uIncomplete(index, *k) : tIncomplete(index, *k);
    } else {
        base = spec.kind == ChebKind::SecondKind ? uPoly(index) : tPoly(index);
    }
    // Scale-factor substitutions first (x -> c x is a coefficient rescale per
    // x-degree), then numeric substitution for the non-symbolic arguments.
    MultiPoly::Bindings numeric;
    numeric.q = spec.qVal;
    if (spec.xVal.symbolic) {
        MultiPoly rescaled;
        for (const auto& [m, c] : base.terms()) {
            rescaled = rescaled + MultiPoly::term(m, c * spec.xVal.factor.pow(
                                                            static_cast<unsigned>(m.xExp)));
        }
        base = rescaled;
    } else {
        numeric.x = spec.xVal.factor;
    }
    if (spec.sVal.symbolic) {
        MultiPoly rescaled;
        for (const auto& [m, c] : base.terms()) {
            rescaled = rescaled + MultiPoly::term(m, c * spec.sVal.factor.pow(
                                                            static_cast<unsigned>(m.sExp)));
        }
        base = rescaled;
    } else {
        numeric.s = spec.sVal.factor;
    }
    return spec.scale * base.substitute(numeric);
}

Rational familyValue(const FamilySpec& spec, int n, std::optional<int> k) {
    if (!spec.numeric())
        throw std::invalid_argument("familyValue: family '" + spec.name + "' is symbolic");
    return familyPoly(spec, n, k).constantValue();
}

std::int64_t classicalOracle(const std::string& name, int n) {
    if (n < 0) throw std::invalid_argument("classicalOracle: negative index");
    // Plain two-term integer recurrences, fully independent of the polynomial
    // code path.
    auto iterate = [n](std::int64_t a0, std::int64_t a1, std::int64_t p, std::int64_t q) {
        std::int64_t a = a0, b = a1;
        for (int i = 0; i < n; ++i) {
            std::int64_t next = p * b + q * a;
            a = b;
            b = next;
        }
        return a;
    };
    if (name == "fibonacci") return iterate(0, 1, 1, 1);
    if (name == "lucas") return iterate(2, 1, 1, 1);
    if (name == "pell") return iterate(0, 1, 2, 1);
    if (name == "pellLucas") return iterate(2, 2, 2, 1);
    if (name == "jacobsthal") return iterate(0, 1, 1, 2);
    if (name == "jacobsthalLucas") return iterate(2, 1, 1, 2);
    if (name == "chebyshevT") return iterate(1, 1, 2, -1);  // T_n(1)
    if (name == "chebyshevU") return iterate(1, 2, 2, -1);  // U_n(1)
    throw std::invalid_argument("classicalOracle: unknown name " + name);
}

const std::vector<TableColumn>& allTableColumns() {
    static const std::vector<TableColumn> all = {
        TableColumn::T4_T, TableColumn::T4_U, TableColumn::T5_F, TableColumn::T5_P,
        TableColumn::T5_J, TableColumn::T6_L, TableColumn::T6_Q, TableColumn::T6_j,
    };
    return all;
}

const char* tableColumnName(TableColumn col) {
    switch (col) {
        case TableColumn::T4_T: return "T4_T";
        case TableColumn::T4_U: return "T4_U";
        case TableColumn::T5_F: return "T5_F";
        case TableColumn::T5_P: return "T5_P";
        case TableColumn::T5_J: return "T5_J";
        case TableColumn::T6_L: return "T6_L";
        case TableColumn::T6_Q: return "T6_Q";
        case TableColumn::T6_j: return "T6_j";
    }
    return "?";
}

TableColumn tableColumnFromName(const std::string& name) {
    for (TableColumn col : allTableColumns()) {
        if (name == tableColumnName(col)) return col;
    }
    throw std::invalid_argument("unknown table column: " + name);
}

const FamilySpec& tableColumnFamily(TableColumn col) {
    static const FamilySpec chebInc[] = {
        // The two incomplete Chebyshev columns have no named sequence; their
        // cells are the raw polynomials at x = 1, s = -1, q = 1.
        {"chebyshevTAtOne", ChebKind::FirstKind, numericArg(Rational(1)), numericArg(Rational(-1)),
         Rational(1), Rational(1), 0},
        {"chebyshevUAtOne", ChebKind::SecondKind, numericArg(Rational(1)), numericArg(Rational(-1)),
         Rational(1), Rational(1), 0},
    };
    switch (col) {
        case TableColumn::T4_T: return chebInc[0];
        case TableColumn::T4_U: return chebInc[1];
        case TableColumn::T5_F: return familyByName("fibonacci");
        case TableColumn::T5_P: return familyByName("pell");
        case TableColumn::T5_J: return familyByName("jacobsthal");
        case TableColumn::T6_L: return familyByName("lucas");
        case TableColumn::T6_Q: return familyByName("pellLucas");
        case TableColumn::T6_j: return familyByName("jacobsthalLucas");
    }
    throw std::invalid_argument("unknown table column");
}

std::int64_t computeTableCell(TableColumn col, int n, int k) {
    const FamilySpec& spec = tableColumnFamily(col);
    // Table rows are indexed by the polynomial index, so feed familyValue the
    // matching sequence index.
    Rational value = familyValue(spec, n + spec.indexShift, k);
    if (!value.isInteger()) throw std::invalid_argument("computeTableCell: non-integer cell");
    return std::stoll(value.numeratorString());
}

bool TableDiff::clean() const {
    for (const auto& m : mismatches) {
        if (!m.known) return false;
    }
    return true;
}

const std::vector<TableColumn>& tableGroup(const std::string& tableId) {
    static const std::vector<TableColumn> t4 = {TableColumn::T4_T, TableColumn::T4_U};
    static const std::vector<TableColumn> t5 = {TableColumn::T5_F, TableColumn::T5_P,
                                                TableColumn::T5_J};
    static const std::vector<TableColumn> t6 = {TableColumn::T6_L, TableColumn::T6_Q,
                                                TableColumn::T6_j};
    if (tableId == "T4") return t4;
    if (tableId == "T5") return t5;
    if (tableId == "T6") return t6;
    throw std::invalid_argument("unknown table id: " + tableId);
}

TableDiff reproduceTable(const std::string& tableId) {
    TableDiff diff;
    for (TableColumn col : tableGroup(tableId)) {
        for (const GoldenCell& cell : goldenCells().at(col)) {
            std::int64_t computed = computeTableCell(col, cell.n, cell.k);
            if (computed == cell.value) continue;
            bool known = false;
            for (const auto& d : knownDiscrepancies()) {
                if (d.col == col && d.n == cell.n && d.k == cell.k && d.printedValue == cell.value &&
                    d.derivedValue == computed) {
                    known = true;
                    break;
                }
            }
            diff.mismatches.push_back({col, cell.n, cell.k, cell.value, computed, known});
        }
    }
    return diff;
}

std::string goldenToTsv() {
    std::ostringstream os;
    for (TableColumn col : allTableColumns()) {
        for (const GoldenCell& cell : goldenCells().at(col)) {
            os << tableColumnName(col) << '\t' << cell.n << '\t' << cell.k << '\t' << cell.value
               << '\n';
        }
    }
    return os.str();
}

std::map<TableColumn, std::vector<GoldenCell>> goldenFromTsv(const std::string& text) {
    std::map<TableColumn, std::vector<GoldenCell>> out;
    std::istringstream is(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string name, nStr, kStr, vStr;
        if (!std::getline(fields, name, '\t') || !std::getline(fields, nStr, '\t') ||
            !std::getline(fields, kStr, '\t') || !std::getline(fields, vStr)) {
            throw std::invalid_argument("goldenFromTsv: malformed line " + std::to_string(lineNo));
        }
        GoldenCell cell;
        cell.n = std::stoi(nStr);
        cell.k = std::stoi(kStr);
        cell.value = std::stoll(vStr);
        out[tableColumnFromName(name)].push_back(cell);
    }
    return out;
}

}  // namespace qcheb
