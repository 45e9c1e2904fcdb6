#include "qcheb/report.hpp"

#include <tuple>

namespace qcheb {

const char* identityName(IdentityId id) {
    switch (id) {
        case IdentityId::QbinomPascalQk: return "qbinom-pascal-qk";
        case IdentityId::QbinomPascalQnk: return "qbinom-pascal-qnk";
        case IdentityId::QbinomRatioBase: return "qbinom-ratio-base";
        case IdentityId::QbinomRatioScaled: return "qbinom-ratio-scaled";
        case IdentityId::UDualRoute: return "u-dual-route";
        case IdentityId::TDualRoute: return "t-dual-route";
        case IdentityId::UDerivative: return "u-derivative";
        case IdentityId::TDerivative: return "t-derivative";
        case IdentityId::UStep: return "u-step";
        case IdentityId::UNonhomog: return "u-nonhomog";
        case IdentityId::TStep: return "t-step";
        case IdentityId::TNonhomogPrinted: return "t-nonhomog-plain";
        case IdentityId::TNonhomogX: return "t-nonhomog-x";
        case IdentityId::MixedFirstSecond: return "mixed-first-second";
        case IdentityId::MixedDilated: return "mixed-dilated";
        case IdentityId::MixedWeighted: return "mixed-weighted";
        case IdentityId::USum: return "u-sum";
        case IdentityId::TSum: return "t-sum";
        case IdentityId::SeriesU: return "series-u";
        case IdentityId::SeriesT: return "series-t";
        case IdentityId::SeriesTAltSign: return "series-t-alt-sign";
        case IdentityId::ResidualU: return "residual-u";
        case IdentityId::ResidualT: return "residual-t";
        case IdentityId::SchurSeq: return "schur-seq";
        case IdentityId::SchurResidual: return "schur-residual";
        case IdentityId::SchurResidualAltSign: return "schur-residual-alt-sign";
    }
    return "unknown";
}

bool isInformational(IdentityId id) {
    return id == IdentityId::TNonhomogPrinted || id == IdentityId::SeriesTAltSign ||
           id == IdentityId::SchurResidualAltSign;
}

bool reportOrder(const IdentityReport& a, const IdentityReport& b) {
    return std::tuple(static_cast<int>(a.id), a.n, a.k) <
           std::tuple(static_cast<int>(b.id), b.n, b.k);
}

}  // namespace qcheb
