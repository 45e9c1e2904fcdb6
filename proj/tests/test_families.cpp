#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcheb/families.hpp"
#include "qcheb/incomplete.hpp"
#include "qcheb/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace qcheb;

namespace {

const MultiPoly kX = MultiPoly::variable(Var::X);
const MultiPoly kS = MultiPoly::variable(Var::S);

// Classical recurrences p_{n+1} = step * p_n + tail * p_{n-1}, test-local.
std::vector<MultiPoly> classicalSeq(MultiPoly p0, MultiPoly p1, const MultiPoly& step,
                                    const MultiPoly& tail, int count) {
    std::vector<MultiPoly> seq = {std::move(p0), std::move(p1)};
    while (static_cast<int>(seq.size()) < count) {
        const auto m = seq.size();
        seq.push_back(step * seq[m - 1] + tail * seq[m - 2]);
    }
    return seq;
}

}  // namespace

TEST_CASE("catalog integrity") {
    const auto& catalog = familyCatalog();
    CHECK(catalog.size() == 16);
    std::set<std::string> names;
    for (const auto& spec : catalog) names.insert(spec.name);
    CHECK(names.size() == catalog.size());
    CHECK(familyByName("fibonacci").indexShift == 1);
    CHECK(familyByName("lucas").scale == Rational(2));
    CHECK(familyByName("chebyshevU").numeric() == false);
    CHECK(familyByName("jacobsthal").numeric() == true);
    CHECK_THROWS_AS(familyByName("tribonacci"), std::invalid_argument);
}

TEST_CASE("number families match independent integer recurrences") {
    const char* names[] = {"fibonacci", "lucas",      "pell",
                           "pellLucas", "jacobsthal", "jacobsthalLucas"};
    for (const char* name : names) {
        const FamilySpec& spec = familyByName(name);
        for (int n = spec.indexShift; n <= 20; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(familyValue(spec, n) == Rational(classicalOracle(name, n)));
        }
    }
    // familyValue on a symbolic family is a caller bug
    CHECK_THROWS_AS(familyValue(familyByName("chebyshevT"), 3), std::invalid_argument);
    CHECK_THROWS_AS(familyPoly(familyByName("fibonacci"), 0), std::invalid_argument);
}

TEST_CASE("oracle sequence spot values") {
    CHECK(classicalOracle("fibonacci", 10) == 55);
    CHECK(classicalOracle("lucas", 9) == 76);
    CHECK(classicalOracle("pell", 10) == 2378);
    CHECK(classicalOracle("pellLucas", 9) == 2786);
    CHECK(classicalOracle("jacobsthal", 9) == 171);
    CHECK(classicalOracle("jacobsthalLucas", 9) == 511);
    CHECK(classicalOracle("chebyshevT", 7) == 1);
    CHECK(classicalOracle("chebyshevU", 7) == 8);
    CHECK_THROWS_AS(classicalOracle("fibonacci", -1), std::invalid_argument);
    CHECK_THROWS_AS(classicalOracle("golden", 3), std::invalid_argument);
}

TEST_CASE("polynomial families match their classical recurrences") {
    const int count = 21;
    const MultiPoly one(Rational(1)), two(Rational(2)), twoX = Rational(2) * kX;
    const MultiPoly twoS = Rational(2) * kS;

    const auto chebT = classicalSeq(one, kX, twoX, MultiPoly(Rational(-1)), count);
    const auto chebU = classicalSeq(one, twoX, twoX, MultiPoly(Rational(-1)), count);
    const auto fib = classicalSeq(one, kX, kX, one, count);          // F_1, F_2, ...
    const auto lucas = classicalSeq(two, kX, kX, one, count);        // L_0, L_1, ...
    const auto pell = classicalSeq(one, twoX, twoX, one, count);     // P_1, P_2, ...
    const auto pellLucas = classicalSeq(two, twoX, twoX, one, count);
    const auto jac = classicalSeq(one, one, one, twoS, count);       // J_1, J_2, ...
    const auto jacLucas = classicalSeq(two, one, one, twoS, count);
    const auto fibBi = classicalSeq(one, kX, kX, kS, count);
    const auto lucasBi = classicalSeq(two, kX, kX, kS, count);

    struct Row {
        const char* name;
        const std::vector<MultiPoly>* seq;
    };
    const Row rows[] = {
        {"chebyshevT", &chebT},     {"chebyshevU", &chebU},
        {"fibonacciPoly", &fib},    {"lucasPoly", &lucas},
        {"pellPoly", &pell},        {"pellLucasPoly", &pellLucas},
        {"jacobsthalPoly", &jac},   {"jacobsthalLucasPoly", &jacLucas},
        {"fibonacciBivariatePoly", &fibBi}, {"lucasBivariatePoly", &lucasBi},
    };
    for (const auto& row : rows) {
        const FamilySpec& spec = familyByName(row.name);
        for (int n = spec.indexShift; n <= 20; ++n) {
            CAPTURE(row.name);
            CAPTURE(n);
            CHECK(familyPoly(spec, n) == (*row.seq)[static_cast<std::size_t>(n - spec.indexShift)]);
        }
    }
}

TEST_CASE("incomplete family values line up with the integer partial sums") {
    const FamilySpec& fib = familyByName("fibonacci");
    const FamilySpec& lucas = familyByName("lucas");
    for (int n = 1; n <= 9; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            CHECK(familyValue(fib, n + 1, k) == Rational(incompleteFibonacci(n + 1, k)));
            CHECK(familyValue(lucas, n, k) == Rational(incompleteLucas(n, k)));
        }
    }
}

TEST_CASE("table columns and groups") {
    CHECK(allTableColumns().size() == 8);
    for (TableColumn col : allTableColumns()) {
        CHECK(tableColumnFromName(tableColumnName(col)) == col);
    }
    CHECK_THROWS_AS(tableColumnFromName("T9_Z"), std::invalid_argument);
    CHECK(tableGroup("T4").size() == 2);
    CHECK(tableGroup("T5").size() == 3);
    CHECK(tableGroup("T6").size() == 3);
    CHECK_THROWS_AS(tableGroup("T7"), std::invalid_argument);
}

TEST_CASE("golden data shape") {
    const auto& cells = goldenCells();
    CHECK(cells.size() == 8);
    int total = 0;
    for (const auto& [col, list] : cells) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(list[i].n >= 1);
            CHECK(list[i].n <= 9);
            CHECK(list[i].k >= 0);
            CHECK(2 * list[i].k <= list[i].n);
            if (i > 0) {
                const bool ordered = list[i - 1].n < list[i].n ||
                                     (list[i - 1].n == list[i].n && list[i - 1].k < list[i].k);
                CHECK(ordered);
            }
        }
        total += static_cast<int>(list.size());
        CHECK(list.size() == 29);  // rows 1..9, k = 0..floor(n/2)
    }
    CHECK(total == 232);
}

TEST_CASE("tables reproduce modulo the single known discrepancy") {
    const auto& known = knownDiscrepancies();
    REQUIRE(known.size() == 1);
    CHECK(known[0].col == TableColumn::T5_J);
    CHECK(known[0].n == 6);
    CHECK(known[0].k == 1);
    CHECK(known[0].printedValue == 114);
    CHECK(known[0].derivedValue == 11);
    CHECK_FALSE(known[0].note.empty());

    for (const char* tableId : {"T4", "T5", "T6"}) {
        const TableDiff diff = reproduceTable(tableId);
        CAPTURE(tableId);
        CHECK(diff.clean());
    }
    CHECK(reproduceTable("T4").mismatches.empty());
    CHECK(reproduceTable("T5").mismatches.size() == 1);
    CHECK(reproduceTable("T6").mismatches.empty());
    CHECK(computeTableCell(TableColumn::T5_J, 6, 1) == 11);
}

TEST_CASE("last populated k equals the complete classical number") {
    struct ColOracle {
        TableColumn col;
        const char* oracle;
        int shift;  // sequence index = row + shift
    };
    const ColOracle map[] = {
        {TableColumn::T4_T, "chebyshevT", 0}, {TableColumn::T4_U, "chebyshevU", 0},
        {TableColumn::T5_F, "fibonacci", 1},  {TableColumn::T5_P, "pell", 1},
        {TableColumn::T5_J, "jacobsthal", 1}, {TableColumn::T6_L, "lucas", 0},
        {TableColumn::T6_Q, "pellLucas", 0},  {TableColumn::T6_j, "jacobsthalLucas", 0},
    };
    for (const auto& m : map) {
        for (const GoldenCell& cell : goldenCells().at(m.col)) {
            if (cell.k != cell.n / 2) continue;
            CAPTURE(tableColumnName(m.col));
            CAPTURE(cell.n);
            CHECK(cell.value == classicalOracle(m.oracle, cell.n + m.shift));
        }
    }
}

TEST_CASE("tsv round trip and the checked-in data file") {
    const std::string tsv = goldenToTsv();
    const auto parsed = goldenFromTsv(tsv);
    REQUIRE(parsed.size() == goldenCells().size());
    for (const auto& [col, list] : goldenCells()) {
        const auto& back = parsed.at(col);
        REQUIRE(back.size() == list.size());
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(back[i].n == list[i].n);
            CHECK(back[i].k == list[i].k);
            CHECK(back[i].value == list[i].value);
        }
    }
    CHECK_THROWS_AS(goldenFromTsv("T4_T\t1\t0"), std::invalid_argument);
    CHECK_THROWS_AS(goldenFromTsv("nope\t1\t0\t1\n"), std::invalid_argument);

#ifdef QCHEB_DATA_FILE
    std::ifstream in(QCHEB_DATA_FILE, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == tsv);
#endif
}
