#pragma once

#include "qcheb/report.hpp"

#include <string>
#include <vector>

namespace qcheb {

// Identity sweeps. Each suite exists in a serial reference form and an
// OpenMP-parallel form (parallel = true); both return the same reports,
// sorted by (id, n, k) so output is deterministic regardless of scheduling.
// Without OpenMP the parallel flag degrades to the serial path.

std::vector<IdentityReport> runQbinomSuite(int nMax, bool parallel = false);

// Dual-route equality and the x-cleared derivative identity, both kinds.
std::vector<IdentityReport> runChebSuite(int nMax, bool parallel = false);

// All incomplete-polynomial identities plus the sum theorems.
std::vector<IdentityReport> runIncompleteSuite(int nMax, bool parallel = false);

// Generating functions: series-vs-recurrence, operator residuals, Schur; the
// triangular solves are inherently sequential, so there is no parallel form.
std::vector<IdentityReport> runGenfunSuite(int nMax);

struct SuiteRun {
    std::string name;
    std::vector<IdentityReport> reports;
};

// suite: qbinom | cheb | incomplete | genfun | all. Throws std::invalid_argument
// on unknown names.
std::vector<SuiteRun> runSuites(const std::string& suite, int nMax, bool parallel = false);

// Pass iff every non-informational report passes.
bool allPass(const std::vector<SuiteRun>& runs);

// Deterministic text: per-id pass counts, failures listed, and adjudication
// notes for the dual-variant checks (which variant of the fixed-k first-kind
// step holds; which operator signs reproduce the recurrences).
std::string renderSummary(const std::vector<SuiteRun>& runs);

}  // namespace qcheb
