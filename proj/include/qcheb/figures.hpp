#pragma once

#include "qcheb/multipoly.hpp"
#include "qcheb/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qcheb {

// One exported curve: a fully q-substituted polynomial in x sampled on a
// uniform exact rational grid over [lo, hi].
struct FigureCurve {
    std::string fileTag;  // appended to the output stem, e.g. "qm0p5_n3"
    MultiPoly poly;       // polynomial in x only
    Rational lo;
    Rational hi;
};

// One exported surface: integer-valued cells over (n, k).
struct FigureSurface {
    std::string fileTag;
    std::vector<std::array<long long, 3>> rows;  // n, k, value
};

struct FigureData {
    std::vector<FigureCurve> curves;
    std::vector<FigureSurface> surfaces;
};

// figureId: F1..F6. Curve figures sample polynomial families at fixed q
// values; F6 is the pair of integer surfaces. Throws std::invalid_argument on
// unknown ids.
FigureData figureData(const std::string& figureId);

// Writes one CSV file per curve/surface next to outPath: the tag is inserted
// before the extension ("plots/f1.csv" -> "plots/f1_qm0p5_n3.csv"). Curve
// files have header "x,value"; surface files "n,k,value". points is the grid
// size per curve (>= 2); decimals switches both columns from exact rationals
// to fixed-point decimals. Returns the written paths in order; throws
// std::runtime_error when a file cannot be opened.
std::vector<std::string> exportFigure(const std::string& figureId, const std::string& outPath,
                                      int points = 201,
                                      std::optional<int> decimals = std::nullopt);

}  // namespace qcheb
