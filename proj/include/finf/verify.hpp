#pragma once

#include "finf/qdet.hpp"
#include "finf/statesum.hpp"

#include <functional>
#include <string>
#include <vector>

namespace finf {

// Values agree at s = q^N for N <= B and their q = 1 difference has (s - s^-1)-adic order > B.
CheckResult filtration_agree(const BivariateLaurent& a, const BivariateLaurent& b, int B);

// partial_trace, state sum and homological form exactly; qdet exactly for 2-braids and in the
// filtration otherwise.
CheckResult check_engine_agreement(const BraidWord& beta, int B);

// Conjugation by the rotation of the word and positive stabilization exactly, negative
// stabilization in the filtration. The detail names each outcome.
CheckResult check_markov(const BraidWord& beta, int B);

struct SuiteItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Runs the tasks on up to `threads` workers; results keep the task order. Exceptions become
// failed items.
std::vector<SuiteItem> run_suite(const std::vector<std::pair<std::string, std::function<CheckResult()>>>& tasks,
                                 int threads);

// Engine agreement, Markov, ADO symmetry and factorization for r = 2, 3, ado_qdet for r = 2, 3, MMR.
std::vector<SuiteItem> verify_all(const BraidWord& beta, int B, int threads);

// FINF_THREADS if set and positive, else 1.
int default_threads();

}  // namespace finf
