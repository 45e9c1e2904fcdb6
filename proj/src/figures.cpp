#include "qcheb/figures.hpp"

#include "qcheb/cheb.hpp"
#include "qcheb/incomplete.hpp"
#include "qcheb/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <utility>

namespace qcheb {

namespace {

// A group of curves sharing one q value and one x range.
struct Panel {
    const char* tag;  // decimal-free rendering of q, 'm' for minus, 'p' for the point
    Rational q;
    Rational lo;
    Rational hi;
};

// x -> factor * x is a per-term coefficient rescale.
MultiPoly scaleX(const MultiPoly& p, const Rational& factor) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        out = out + MultiPoly::term(m, c * factor.pow(static_cast<unsigned>(m.xExp)));
    }
    return out;
}

void addCurves(FigureData& data, const std::vector<Panel>& panels, const char* curvePrefix,
               int curveCount, const std::function<MultiPoly(int)>& rawPoly,
               const Rational& xFactor, const Rational& s) {
    for (const auto& panel : panels) {
        for (int i = 0; i < curveCount; ++i) {
            MultiPoly::Bindings bind;
            bind.s = s;
            bind.q = panel.q;
            FigureCurve curve;
            curve.fileTag = std::string("q") + panel.tag + "_" + curvePrefix + std::to_string(i);
            curve.poly = scaleX(rawPoly(i), xFactor).substitute(bind);
            curve.lo = panel.lo;
            curve.hi = panel.hi;
            data.curves.push_back(std::move(curve));
        }
    }
}

}  // namespace

FigureData figureData(const std::string& figureId) {
    const Rational one(1), negOne(-1), half(1, 2);
    FigureData data;
    if (figureId == "F1" || figureId == "F2") {
        // Full families at s = -1, six curves n = 0..5 per panel.
        const std::vector<Panel> panels = {
            {"m0p5", Rational(-1, 2), negOne, one},
            {"0p5", Rational(1, 2), negOne, one},
            {"0p9", Rational(9, 10), negOne, one},
            {"0p9999", Rational(9999, 10000), negOne, one},
        };
        const bool firstKind = figureId == "F1";
        addCurves(data, panels, "n", 6,
                  [firstKind](int n) { return firstKind ? tPoly(n) : uPoly(n); }, one, negOne);
    } else if (figureId == "F3") {
        const std::vector<Panel> panels = {
            {"m0p9", Rational(-9, 10), negOne, one},
            {"m0p5", Rational(-1, 2), negOne, one},
            {"0p5", Rational(1, 2), negOne, one},
            {"0p9", Rational(9, 10), Rational(-8, 5), Rational(8, 5)},
        };
        addCurves(data, panels, "k", 5, [](int k) { return uIncomplete(9, k); }, one, negOne);
    } else if (figureId == "F4") {
        const std::vector<Panel> panels = {
            {"m0p9", Rational(-9, 10), Rational(-6), Rational(6)},
            {"m0p5", Rational(-1, 2), Rational(-2), Rational(2)},
            {"0p5", Rational(1, 2), Rational(-2), Rational(2)},
            {"0p9", Rational(9, 10), Rational(-2), Rational(2)},
        };
        addCurves(data, panels, "k", 3, [](int k) { return tIncomplete(5, k); }, half, one);
    } else if (figureId == "F5") {
        const std::vector<Panel> panels = {
            {"m0p9", Rational(-9, 10), Rational(-8), Rational(8)},
            {"m0p5", Rational(-1, 2), Rational(-5, 2), Rational(5, 2)},
            {"0p5", Rational(1, 2), Rational(-5, 2), Rational(5, 2)},
            {"0p9", Rational(9, 10), Rational(-5, 2), Rational(5, 2)},
        };
        addCurves(data, panels, "k", 5, [](int k) { return uIncomplete(8, k); }, half, Rational(2));
    } else if (figureId == "F6") {
        FigureSurface fib{"fibonacci", {}};
        FigureSurface luc{"lucas", {}};
        for (int n = 1; n <= 9; ++n) {
            for (int k = 0; k <= n / 2; ++k) {
                fib.rows.push_back({n, k, incompleteFibonacci(n + 1, k)});
                luc.rows.push_back({n, k, incompleteLucas(n, k)});
            }
        }
        data.surfaces.push_back(std::move(fib));
        data.surfaces.push_back(std::move(luc));
    } else {
        throw std::invalid_argument("unknown figure id: " + figureId);
    }
    return data;
}

std::vector<std::string> exportFigure(const std::string& figureId, const std::string& outPath,
                                      int points, std::optional<int> decimals) {
    if (points < 2) throw std::invalid_argument("exportFigure: points must be >= 2");
    if (decimals && *decimals < 0) throw std::invalid_argument("exportFigure: negative decimals");
    const FigureData data = figureData(figureId);
    const std::filesystem::path base(outPath);
    const std::string stem = (base.parent_path() / base.stem()).string();
    const std::string ext = base.extension().string();
    std::vector<std::string> written;
    auto open = [&](const std::string& tag) {
        std::string path = stem + "_" + tag + ext;
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open " + path);
        written.push_back(std::move(path));
        return os;
    };
    auto render = [&](const Rational& r) {
        return decimals ? rationalToDecimal(r, *decimals) : r.str();
    };
    for (const auto& curve : data.curves) {
        std::ofstream os = open(curve.fileTag);
        os << "x,value\n";
        const Rational step = (curve.hi - curve.lo) / Rational(points - 1);
        for (int i = 0; i < points; ++i) {
            const Rational x = curve.lo + Rational(i) * step;
            MultiPoly::Bindings bind;
            bind.x = x;
            os << render(x) << ',' << render(curve.poly.substitute(bind).constantValue()) << '\n';
        }
    }
    for (const auto& surface : data.surfaces) {
        std::ofstream os = open(surface.fileTag);
        os << "n,k,value\n";
        for (const auto& row : surface.rows) {
            os << row[0] << ',' << row[1] << ',' << row[2] << '\n';
        }
    }
    return written;
}

}  // namespace qcheb
