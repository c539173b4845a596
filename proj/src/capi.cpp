#include "finf.h"

#include "finf/format.hpp"
#include "finf/verify.hpp"

#include <memory>
#include <string>

using namespace finf;

struct finf_braid {
    BraidWord word;
    std::string text;
    std::string cycles;
};

struct finf_result {
    finf_invariant invariant;
    BivariateLaurent bi;        // finf
    UnivariateLaurent uni;      // jones (q), alexander (t)
    CyclotomicLaurent cyc;      // ado
    std::string text;
    std::string json;
};

struct finf_report {
    std::vector<SuiteItem> items;
    std::string json;
};

namespace {

thread_local std::string g_error;

finf_status fail(finf_status code, const std::string& msg) {
    g_error = msg;
    return code;
}

template <class F>
finf_status guarded(F&& f) {
    try {
        g_error.clear();
        return f();
    } catch (const NotAKnotError& e) {
        return fail(FINF_ERR_NOT_A_KNOT, e.what());
    } catch (const BraidError& e) {
        return fail(FINF_ERR_PARSE, e.what());
    } catch (const DiagramError& e) {
        return fail(FINF_ERR_DIAGRAM, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FINF_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FINF_ERR_INTERNAL, e.what());
    }
}

const char* invariant_name(finf_invariant inv) {
    switch (inv) {
        case FINF_INVARIANT_FINF: return "finf";
        case FINF_INVARIANT_JONES: return "jones";
        case FINF_INVARIANT_ADO: return "ado";
        case FINF_INVARIANT_ALEXANDER: return "alexander";
    }
    return "?";
}

BivariateLaurent finf_value(const BraidWord& w, finf_engine engine, int B, bool normalize) {
    BivariateLaurent raw;
    switch (engine) {
        case FINF_ENGINE_TRACE: return f_infinity(w, B, normalize).value;
        case FINF_ENGINE_QDET: return f_infinity_qdet(w, B, normalize).value;
        case FINF_ENGINE_STATESUM: raw = f_infinity_statesum(braid_closure_diagram(w), B).value; break;
        case FINF_ENGINE_HOMOLOGICAL: raw = homological_form(w, B).value; break;
        default: throw std::invalid_argument("unknown engine");
    }
    return normalize ? raw.scaled({0, -w.writhe()}, Int(1)) : raw;
}

// Symmetric representative with value 1 at t = 1.
UnivariateLaurent symmetrize(const UnivariateLaurent& p) {
    if (p.is_zero()) return p;
    const int lo = p.terms().front().first, hi = p.terms().back().first;
    if ((lo + hi) % 2) throw std::logic_error("Alexander factor is not symmetric up to a unit");
    Int at1;
    for (const auto& t : p.terms()) at1 += t.second;
    return p.scaled(-(lo + hi) / 2, Int(at1.sign() < 0 ? -1 : 1));
}

}  // namespace

extern "C" {

const char* finf_last_error(void) { return g_error.c_str(); }

const char* finf_version(void) { return "0.1.0"; }

finf_status finf_braid_parse(const char* text, int strands, finf_braid** out) {
    if (!text || !out) return fail(FINF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string t(text);
        auto b = std::make_unique<finf_braid>();
        if (is_preset(t)) {
            b->word = preset_braid(t);
            if (strands > 0 && strands != b->word.strands)
                return fail(FINF_ERR_ARGUMENT, "preset " + t + " lives on " + std::to_string(b->word.strands) + " strands");
        } else {
            b->word = parse_braid(t, strands > 0 ? strands : 0);
        }
        b->text = b->word.str();
        b->cycles = cycle_structure(b->word);
        *out = b.release();
        return FINF_OK;
    });
}

void finf_braid_free(finf_braid* b) { delete b; }
int finf_braid_strands(const finf_braid* b) { return b ? b->word.strands : 0; }
int finf_braid_length(const finf_braid* b) { return b ? static_cast<int>(b->word.letters.size()) : 0; }
int finf_braid_writhe(const finf_braid* b) { return b ? b->word.writhe() : 0; }
int finf_braid_is_knot(const finf_braid* b) { return b && b->word.closure_is_knot(); }
const char* finf_braid_cycles(const finf_braid* b) { return b ? b->cycles.c_str() : ""; }
const char* finf_braid_text(const finf_braid* b) { return b ? b->text.c_str() : ""; }

finf_status finf_compute(const finf_braid* b, finf_invariant inv, finf_engine engine, int param, int normalize,
                         finf_result** out) {
    if (!b || !out) return fail(FINF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const BraidWord& w = b->word;
        auto r = std::make_unique<finf_result>();
        r->invariant = inv;
        nlohmann::ordered_json j;
        j["invariant"] = invariant_name(inv);
        j["braid"] = b->text;
        j["strands"] = w.strands;
        j["writhe"] = w.writhe();
        j["params"] = nlohmann::ordered_json::object();
        const bool norm = normalize != 0;
        nlohmann::ordered_json val;
        switch (inv) {
            case FINF_INVARIANT_FINF:
                if (param < 0) return fail(FINF_ERR_ARGUMENT, "B must be >= 0");
                r->bi = finf_value(w, engine, param, norm);
                j["params"]["B"] = param;
                r->text = to_text(r->bi);
                val = to_json(r->bi);
                break;
            case FINF_INVARIANT_JONES:
                if (param < 0) return fail(FINF_ERR_ARGUMENT, "N must be >= 0");
                if (engine == FINF_ENGINE_TRACE) r->uni = colored_jones(w, param, norm);
                else r->uni = specialize_s(finf_value(w, engine, param, norm), param);
                j["params"]["N"] = param;
                r->text = to_text(r->uni, "q");
                val = to_json(r->uni, false);
                break;
            case FINF_INVARIANT_ADO:
                if (param < 1) return fail(FINF_ERR_ARGUMENT, "r must be >= 1");
                if (engine == FINF_ENGINE_TRACE) r->cyc = ado(w, param, norm).value;
                else if (engine == FINF_ENGINE_QDET) {
                    r->cyc = ado_qdet(w, param).value;
                    if (!norm) r->cyc = r->cyc.scaled(-(param - 1) * w.writhe(), CyclotomicScalar(2 * param, Int(1)));
                } else {
                    return fail(FINF_ERR_ARGUMENT, "ado supports the trace and qdet engines");
                }
                j["params"]["r"] = param;
                r->text = to_text(r->cyc);
                val = to_json(r->cyc);
                break;
            case FINF_INVARIANT_ALEXANDER:
                if (engine == FINF_ENGINE_TRACE) r->uni = alexander(w);
                else if (engine == FINF_ENGINE_QDET) r->uni = symmetrize(alexander_factor(w));
                else return fail(FINF_ERR_ARGUMENT, "alexander supports the trace and qdet engines");
                r->text = to_text(r->uni, "t");
                val = to_json(r->uni, true);
                break;
            default:
                return fail(FINF_ERR_ARGUMENT, "unknown invariant");
        }
        j["normalized"] = inv == FINF_INVARIANT_ALEXANDER ? true : norm;
        j["value"] = val;
        r->json = j.dump();
        *out = r.release();
        return FINF_OK;
    });
}

int finf_result_congruent(const finf_result* a, const finf_result* b, int B) {
    if (!a || !b || a->invariant != FINF_INVARIANT_FINF || b->invariant != FINF_INVARIANT_FINF) return 0;
    try {
        return filtration_agree(a->bi, b->bi, B).ok;
    } catch (const std::exception& e) {
        g_error = e.what();
        return 0;
    }
}

void finf_result_free(finf_result* r) { delete r; }
const char* finf_result_text(const finf_result* r) { return r ? r->text.c_str() : ""; }
const char* finf_result_json(const finf_result* r) { return r ? r->json.c_str() : ""; }

int finf_result_equal(const finf_result* a, const finf_result* b) {
    if (!a || !b || a->invariant != b->invariant) return 0;
    return a->bi == b->bi && a->uni == b->uni && a->cyc == b->cyc;
}

int finf_result_first_difference(const finf_result* a, const finf_result* b, char* buf, size_t n) {
    if (finf_result_equal(a, b)) return 0;
    std::string msg;
    if (!a || !b || a->invariant != b->invariant) {
        msg = "results are for different invariants";
    } else {
        const auto ja = nlohmann::ordered_json::parse(a->json)["value"];
        const auto jb = nlohmann::ordered_json::parse(b->json)["value"];
        size_t i = 0;
        while (i < ja.size() && i < jb.size() && ja[i] == jb[i]) ++i;
        const std::string ta = i < ja.size() ? ja[i].dump() : "none";
        const std::string tb = i < jb.size() ? jb[i].dump() : "none";
        msg = "term " + std::to_string(i) + ": " + ta + " vs " + tb;
    }
    if (buf && n) {
        const size_t k = std::min(n - 1, msg.size());
        msg.copy(buf, k);
        buf[k] = '\0';
    }
    return 1;
}

finf_status finf_verify_all(const finf_braid* b, int B, int threads, finf_report** out) {
    if (!b || !out) return fail(FINF_ERR_ARGUMENT, "null argument");
    if (B < 0) return fail(FINF_ERR_ARGUMENT, "B must be >= 0");
    return guarded([&] {
        auto r = std::make_unique<finf_report>();
        r->items = verify_all(b->word, B, threads > 0 ? threads : default_threads());
        nlohmann::ordered_json j;
        j["braid"] = b->text;
        j["strands"] = b->word.strands;
        j["B"] = B;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& it : r->items) j["checks"].push_back({{"name", it.name}, {"passed", it.ok}, {"detail", it.detail}});
        r->json = j.dump();
        *out = r.release();
        return FINF_OK;
    });
}

void finf_report_free(finf_report* r) { delete r; }
size_t finf_report_count(const finf_report* r) { return r ? r->items.size() : 0; }
const char* finf_report_name(const finf_report* r, size_t i) { return r && i < r->items.size() ? r->items[i].name.c_str() : ""; }
int finf_report_passed(const finf_report* r, size_t i) { return r && i < r->items.size() && r->items[i].ok; }
const char* finf_report_detail(const finf_report* r, size_t i) {
    return r && i < r->items.size() ? r->items[i].detail.c_str() : "";
}
const char* finf_report_json(const finf_report* r) { return r ? r->json.c_str() : ""; }

}  // extern "C"
