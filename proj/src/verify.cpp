#include "finf/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace finf {

CheckResult filtration_agree(const BivariateLaurent& a, const BivariateLaurent& b, int B) {
    CheckResult res;
    if (a == b) {
        res.detail = "exact";
        return res;
    }
    const BivariateLaurent d = a - b;
    for (int N = 0; N <= B; ++N)
        if (!specialize_s(d, N).is_zero()) {
            res.ok = false;
            res.detail = "differ at s = q^" + std::to_string(N);
            return res;
        }
    const UnivariateLaurent d1 = specialize_q1(d);
    const UnivariateLaurent base = UnivariateLaurent::monomial(1) - UnivariateLaurent::monomial(-1);
    const int ord = divisibility_order(d1, base, B + 1);
    if (ord <= B) {
        res.ok = false;
        res.detail = "q = 1 difference has (s - s^-1)-order " + std::to_string(ord);
        return res;
    }
    res.detail = "agree modulo the filtration";
    return res;
}

CheckResult check_engine_agreement(const BraidWord& beta, int B) {
    CheckResult res;
    const TruncatedSeries tr = f_infinity(beta, B, false);
    const TruncatedSeries ss = f_infinity_statesum(braid_closure_diagram(beta), B);
    const TruncatedSeries ho = homological_form(beta, B);
    if (tr.value != ss.value) return {false, "trace and statesum differ"};
    if (tr.value != ho.value) return {false, "trace and homological differ"};
    const TruncatedSeries qd = f_infinity_qdet(beta, B, false);
    const CheckResult q = filtration_agree(tr.value, qd.value, B);
    if (!q.ok) return {false, "qdet: " + q.detail};
    if (beta.strands == 2 && q.detail != "exact") return {false, "qdet not exact on a 2-braid"};
    res.detail = "trace = statesum = homological; qdet " + q.detail;
    return res;
}

CheckResult check_markov(const BraidWord& beta, int B) {
    const BivariateLaurent base = f_infinity(beta, B, true).value;
    std::string detail;
    bool ok = true;
    auto record = [&](const std::string& what, const BivariateLaurent& v, bool must_be_exact) {
        const CheckResult c = filtration_agree(base, v, B);
        const bool pass = c.ok && (!must_be_exact || c.detail == "exact");
        ok = ok && pass;
        if (!detail.empty()) detail += "; ";
        detail += what + ": " + (pass ? c.detail : "FAILED " + c.detail);
    };
    if (beta.letters.size() > 1) {
        BraidWord rot = beta;
        std::rotate(rot.letters.rbegin(), rot.letters.rbegin() + 1, rot.letters.rend());
        record("conjugation", f_infinity(rot, B, true).value, false);
    }
    for (int sign : {1, -1}) {
        BraidWord st = beta;
        st.strands += 1;
        st.letters.push_back(sign * beta.strands);
        record(sign > 0 ? "+stabilization" : "-stabilization", f_infinity(st, B, true).value, sign > 0);
    }
    return {ok, detail};
}

std::vector<SuiteItem> run_suite(const std::vector<std::pair<std::string, std::function<CheckResult()>>>& tasks,
                                 int threads) {
    std::vector<SuiteItem> out(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < tasks.size();) {
            out[i].name = tasks[i].first;
            try {
                const CheckResult c = tasks[i].second();
                out[i].ok = c.ok;
                out[i].detail = c.detail;
            } catch (const std::exception& e) {
                out[i].ok = false;
                out[i].detail = std::string("error: ") + e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<SuiteItem> verify_all(const BraidWord& beta, int B, int threads) {
    require_knot(beta);
    std::vector<std::pair<std::string, std::function<CheckResult()>>> tasks;
    tasks.push_back({"engine agreement B=" + std::to_string(B), [=] { return check_engine_agreement(beta, B); }});
    tasks.push_back({"markov B=" + std::to_string(B), [=] { return check_markov(beta, B); }});
    for (int r : {2, 3}) {
        const std::string rs = std::to_string(r);
        tasks.push_back({"ado symmetry r=" + rs, [=] { return verify_symmetry_ado(beta, r); }});
        tasks.push_back({"factorization r=" + rs, [=] { return verify_factorization(beta, r); }});
        tasks.push_back({"ado qdet r=" + rs, [=] {
                             const bool eq = ado_qdet(beta, r).value == ado(beta, r, true).value;
                             return CheckResult{eq, eq ? "equal to the trace engine" : "differs from the trace engine"};
                         }});
    }
    tasks.push_back({"mmr B=" + std::to_string(B), [=] { return verify_mmr(beta, B); }});
    return run_suite(tasks, threads);
}

int default_threads() {
    if (const char* env = std::getenv("FINF_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

}  // namespace finf
