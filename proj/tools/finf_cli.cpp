#include "finf.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kUsage = 1, kCheckFailed = 2 };

struct Options {
    std::string invariant;
    std::string braid;
    int strands = 0;
    std::string engine = "trace";
    int B = -1, N = -1, r = -1;
    std::string output = "text";
    bool normalize = true;
    int threads = 0;
};

int report_error() {
    std::fprintf(stderr, "error: %s\n", finf_last_error());
    return kUsage;
}

finf_braid* load_braid(const Options& o, int& code) {
    finf_braid* b = nullptr;
    const finf_status st = finf_braid_parse(o.braid.c_str(), o.strands, &b);
    if (st != FINF_OK) {
        code = report_error();
        return nullptr;
    }
    if (!finf_braid_is_knot(b)) {
        std::fprintf(stderr, "error: closure of %s is not a knot (permutation cycle type %s)\n", finf_braid_text(b),
                     finf_braid_cycles(b));
        finf_braid_free(b);
        code = kUsage;
        return nullptr;
    }
    return b;
}

const std::map<std::string, finf_engine> kEngines = {{"trace", FINF_ENGINE_TRACE},
                                                     {"statesum", FINF_ENGINE_STATESUM},
                                                     {"homological", FINF_ENGINE_HOMOLOGICAL},
                                                     {"qdet", FINF_ENGINE_QDET}};

std::vector<std::string> engines_for(const std::string& inv) {
    if (inv == "finf" || inv == "jones") return {"trace", "statesum", "homological", "qdet"};
    return {"trace", "qdet"};
}

int run_compute(const Options& o) {
    finf_invariant inv;
    int param = 0;
    if (o.invariant == "finf") {
        inv = FINF_INVARIANT_FINF;
        param = o.B;
    } else if (o.invariant == "jones") {
        inv = FINF_INVARIANT_JONES;
        param = o.N;
    } else if (o.invariant == "ado") {
        inv = FINF_INVARIANT_ADO;
        param = o.r;
    } else {
        inv = FINF_INVARIANT_ALEXANDER;
    }
    const bool wants_B = inv == FINF_INVARIANT_FINF, wants_N = inv == FINF_INVARIANT_JONES, wants_r = inv == FINF_INVARIANT_ADO;
    if ((o.B >= 0) != wants_B || (o.N >= 0) != wants_N || (o.r >= 0) != wants_r) {
        std::fprintf(stderr, "error: %s takes %s\n", o.invariant.c_str(),
                     wants_B ? "--B only" : wants_N ? "--N only" : wants_r ? "--r only" : "no parameter");
        return kUsage;
    }
    std::vector<std::string> engines = o.engine == "all" ? engines_for(o.invariant) : std::vector<std::string>{o.engine};
    for (const auto& e : engines) {
        const auto allowed = engines_for(o.invariant);
        if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) {
            std::fprintf(stderr, "error: engine %s is not available for %s\n", e.c_str(), o.invariant.c_str());
            return kUsage;
        }
    }
    int code = kOk;
    finf_braid* b = load_braid(o, code);
    if (!b) return code;

    std::vector<finf_result*> results;
    for (const auto& e : engines) {
        finf_result* r = nullptr;
        const finf_status st = finf_compute(b, inv, kEngines.at(e), param, o.normalize, &r);
        if (st != FINF_OK) {
            code = report_error();
            break;
        }
        results.push_back(r);
    }
    if (code == kOk) {
        if (o.output == "json") {
            if (results.size() == 1) {
                std::printf("%s\n", finf_result_json(results[0]));
            } else {
                std::printf("{");
                for (size_t i = 0; i < results.size(); ++i)
                    std::printf("%s\"%s\":%s", i ? "," : "", engines[i].c_str(), finf_result_json(results[i]));
                std::printf("}\n");
            }
        } else if (results.size() == 1) {
            std::printf("%s\n", finf_result_text(results[0]));
        } else {
            for (size_t i = 0; i < results.size(); ++i)
                std::printf("%s: %s\n", engines[i].c_str(), finf_result_text(results[i]));
        }
        for (size_t i = 1; i < results.size(); ++i) {
            if (finf_result_equal(results[0], results[i])) continue;
            // The qdet truncation of finf is a different representative of the same filtration class.
            if (inv == FINF_INVARIANT_FINF && engines[i] == "qdet" && finf_result_congruent(results[0], results[i], o.B)) {
                std::fprintf(stderr, "note: qdet agrees with trace modulo the B=%d filtration\n", o.B);
                continue;
            }
            char buf[512];
            finf_result_first_difference(results[0], results[i], buf, sizeof buf);
            std::fprintf(stderr, "error: engines %s and %s disagree, first difference at %s\n", engines[0].c_str(),
                         engines[i].c_str(), buf);
            code = kCheckFailed;
        }
    }
    for (auto* r : results) finf_result_free(r);
    finf_braid_free(b);
    return code;
}

int run_verify(const Options& o) {
    int code = kOk;
    finf_braid* b = load_braid(o, code);
    if (!b) return code;
    finf_report* rep = nullptr;
    const finf_status st = finf_verify_all(b, o.B < 0 ? 4 : o.B, o.threads, &rep);
    finf_braid_free(b);
    if (st != FINF_OK) return report_error();
    bool all = true;
    for (size_t i = 0; i < finf_report_count(rep); ++i) all = all && finf_report_passed(rep, i);
    if (o.output == "json") {
        std::printf("%s\n", finf_report_json(rep));
    } else {
        for (size_t i = 0; i < finf_report_count(rep); ++i)
            std::printf("%s %s: %s\n", finf_report_passed(rep, i) ? "PASS" : "FAIL", finf_report_name(rep, i),
                        finf_report_detail(rep, i));
    }
    finf_report_free(rep);
    return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unified knot invariant calculator (F-infinity, colored Jones, ADO, Alexander)"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--braid", o.braid, "signed letters like \"1 -2 1\" or a preset: unknot, trefoil, mirror-trefoil, figure8")
            ->required();
        sub->add_option("--strands", o.strands, "strand count (default: largest generator + 1)");
        sub->add_option("--output", o.output)->check(CLI::IsMember({"text", "json"}));
    };

    auto* compute = app.add_subcommand("compute", "compute an invariant");
    compute->add_option("invariant", o.invariant)->required()->check(CLI::IsMember({"finf", "jones", "ado", "alexander"}));
    add_common(compute);
    compute->add_option("--engine", o.engine)->check(CLI::IsMember({"trace", "statesum", "homological", "qdet", "all"}));
    compute->add_option("--B", o.B, "closure label bound (finf)")->check(CLI::NonNegativeNumber);
    compute->add_option("--N", o.N, "color, s = q^N (jones)")->check(CLI::NonNegativeNumber);
    compute->add_option("--r", o.r, "root order, q = exp(pi i / r) (ado)")->check(CLI::PositiveNumber);
    compute->add_flag("--normalize,!--no-normalize", o.normalize, "framing normalization (default on)");

    auto* verify = app.add_subcommand("verify", "run the cross-verification suite");
    std::string suite;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"all"}));
    add_common(verify);
    verify->add_option("--B", o.B, "closure label bound (default 4)")->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", o.threads, "worker threads (default: FINF_THREADS or 1)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    return compute->parsed() ? run_compute(o) : run_verify(o);
}
