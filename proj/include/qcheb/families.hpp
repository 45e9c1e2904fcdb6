#pragma once

#include "qcheb/cheb.hpp"
#include "qcheb/multipoly.hpp"
#include "qcheb/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcheb {

// factor * variable when symbolic, else the constant factor itself.
struct FamilyArg {
    bool symbolic = false;
    Rational factor = Rational(1);
};

inline FamilyArg symbolicArg(const Rational& factor) { return {true, factor}; }
inline FamilyArg numericArg(const Rational& value) { return {false, value}; }

// One named specialization of the polynomial family: substitute xVal/sVal/qVal,
// multiply by scale. indexShift relates the family's own index to the
// polynomial index: sequence index n corresponds to polynomial index
// n - indexShift (e.g. the Fibonacci numbers sit one step ahead of the
// second-kind polynomials).
struct FamilySpec {
    std::string name;
    ChebKind kind = ChebKind::SecondKind;
    FamilyArg xVal;
    FamilyArg sVal;
    Rational qVal = Rational(1);
    Rational scale = Rational(1);
    int indexShift = 0;

    bool numeric() const { return !xVal.symbolic && !sVal.symbolic; }
};

const std::vector<FamilySpec>& familyCatalog();
const FamilySpec& familyByName(const std::string& name);  // throws std::invalid_argument

// Specialized polynomial of sequence index n (so the polynomial index is
// n - indexShift, which must be >= 0). With k, the incomplete polynomial.
MultiPoly familyPoly(const FamilySpec& spec, int n, std::optional<int> k = std::nullopt);

// Fully numeric specialization; requires spec.numeric().
Rational familyValue(const FamilySpec& spec, int n, std::optional<int> k = std::nullopt);

// Independent integer recurrences used only as test oracles; shares no code
// with the polynomial path. Names: fibonacci, lucas, pell, pellLucas,
// jacobsthal, jacobsthalLucas, chebyshevT (at x = 1), chebyshevU (at x = 1).
std::int64_t classicalOracle(const std::string& name, int n);

// --- embedded golden table data ---

enum class TableColumn { T4_T, T4_U, T5_F, T5_P, T5_J, T6_L, T6_Q, T6_j };

const std::vector<TableColumn>& allTableColumns();
const char* tableColumnName(TableColumn col);
TableColumn tableColumnFromName(const std::string& name);  // throws std::invalid_argument

// Which family specialization computes a column, and the sequence index its
// row number n refers to.
const FamilySpec& tableColumnFamily(TableColumn col);

struct GoldenCell {
    int n = 0;
    int k = 0;
    std::int64_t value = 0;
};

struct KnownDiscrepancy {
    TableColumn col;
    int n = 0;
    int k = 0;
    std::int64_t printedValue = 0;
    std::int64_t derivedValue = 0;
    std::string note;
};

// Transcribed table cells, rows n = 1..9, k = 0..floor(n/2) (29 per column).
const std::map<TableColumn, std::vector<GoldenCell>>& goldenCells();
const std::vector<KnownDiscrepancy>& knownDiscrepancies();

// Recomputes one cell from the definitions via the column's family.
std::int64_t computeTableCell(TableColumn col, int n, int k);

struct CellMismatch {
    TableColumn col;
    int n = 0;
    int k = 0;
    std::int64_t embedded = 0;
    std::int64_t computed = 0;
    bool known = false;  // listed in knownDiscrepancies
};

struct TableDiff {
    std::vector<CellMismatch> mismatches;       // all differing cells, known or not
    bool clean() const;                         // true iff every mismatch is known
};

// tableId is a group: "T4" covers columns T4_T/T4_U, "T5" the three
// second-kind number columns, "T6" the three doubled first-kind columns.
const std::vector<TableColumn>& tableGroup(const std::string& tableId);  // throws on bad id
TableDiff reproduceTable(const std::string& tableId);

// Flat interchange format: one cell per line, tab-separated
// "columnName<TAB>n<TAB>k<TAB>value", columns in enum order, cells by (n, k).
std::string goldenToTsv();
std::map<TableColumn, std::vector<GoldenCell>> goldenFromTsv(const std::string& text);

}  // namespace qcheb
