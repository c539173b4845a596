#include "finf.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

namespace {

struct Braid {
    finf_braid* h = nullptr;
    explicit Braid(const char* text, int strands = 0) { REQUIRE(finf_braid_parse(text, strands, &h) == FINF_OK); }
    ~Braid() { finf_braid_free(h); }
};

struct Result {
    finf_result* h = nullptr;
    ~Result() { finf_result_free(h); }
};

}  // namespace

TEST_CASE("braid handles") {
    Braid t("trefoil");
    CHECK(finf_braid_strands(t.h) == 2);
    CHECK(finf_braid_writhe(t.h) == 3);
    CHECK(finf_braid_length(t.h) == 3);
    CHECK(finf_braid_is_knot(t.h));
    CHECK(std::string(finf_braid_text(t.h)) == "1 1 1");
    Braid l("1 1");
    CHECK_FALSE(finf_braid_is_knot(l.h));
    CHECK(std::string(finf_braid_cycles(l.h)) == "(1,1)");
    Braid w("1,-2", 4);
    CHECK(finf_braid_strands(w.h) == 4);

    finf_braid* bad = nullptr;
    CHECK(finf_braid_parse("1 x 2", 0, &bad) == FINF_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::string(finf_last_error()).size() > 0);
    CHECK(finf_braid_parse("3", 2, &bad) == FINF_ERR_PARSE);
    CHECK(finf_braid_parse("trefoil", 3, &bad) == FINF_ERR_ARGUMENT);
    CHECK(finf_braid_parse(nullptr, 0, &bad) == FINF_ERR_ARGUMENT);
}

TEST_CASE("compute and serialize") {
    Braid t("trefoil");
    Result r;
    REQUIRE(finf_compute(t.h, FINF_INVARIANT_JONES, FINF_ENGINE_TRACE, 1, 1, &r.h) == FINF_OK);
    CHECK(std::string(finf_result_text(r.h)) == "q⁻² + q⁻⁶ − q⁻⁸");
    const auto j = nlohmann::ordered_json::parse(finf_result_json(r.h));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"invariant", "braid", "strands", "writhe", "params", "normalized", "value"});
    CHECK(j["params"]["N"] == 1);
    CHECK(j["value"].dump() == R"([[-8,0,"-1"],[-6,0,"1"],[-2,0,"1"]])");

    Result again;
    REQUIRE(finf_compute(t.h, FINF_INVARIANT_JONES, FINF_ENGINE_TRACE, 1, 1, &again.h) == FINF_OK);
    CHECK(std::string(finf_result_json(again.h)) == finf_result_json(r.h));

    Braid f("figure8");
    Result a;
    REQUIRE(finf_compute(f.h, FINF_INVARIANT_ALEXANDER, FINF_ENGINE_TRACE, 0, 1, &a.h) == FINF_OK);
    CHECK(std::string(finf_result_text(a.h)) == "−t + 3 − t⁻¹");

    Result ado;
    REQUIRE(finf_compute(t.h, FINF_INVARIANT_ADO, FINF_ENGINE_TRACE, 2, 1, &ado.h) == FINF_OK);
    const auto ja = nlohmann::ordered_json::parse(finf_result_json(ado.h));
    CHECK(ja["value"][0][2]["order"] == 4);
    CHECK(ja["value"][0][2]["coeffs"].size() == 2);
}

TEST_CASE("engines agree through the API") {
    Braid f("figure8");
    Result tr, ss, ho, qd;
    REQUIRE(finf_compute(f.h, FINF_INVARIANT_FINF, FINF_ENGINE_TRACE, 2, 1, &tr.h) == FINF_OK);
    REQUIRE(finf_compute(f.h, FINF_INVARIANT_FINF, FINF_ENGINE_STATESUM, 2, 1, &ss.h) == FINF_OK);
    REQUIRE(finf_compute(f.h, FINF_INVARIANT_FINF, FINF_ENGINE_HOMOLOGICAL, 2, 1, &ho.h) == FINF_OK);
    REQUIRE(finf_compute(f.h, FINF_INVARIANT_FINF, FINF_ENGINE_QDET, 2, 1, &qd.h) == FINF_OK);
    CHECK(finf_result_equal(tr.h, ss.h));
    CHECK(finf_result_equal(tr.h, ho.h));
    CHECK_FALSE(finf_result_equal(tr.h, qd.h));
    CHECK(finf_result_congruent(tr.h, qd.h, 2));
    char buf[256];
    CHECK(finf_result_first_difference(tr.h, ss.h, buf, sizeof buf) == 0);
    CHECK(finf_result_first_difference(tr.h, qd.h, buf, sizeof buf) == 1);
    CHECK(std::string(buf).rfind("term ", 0) == 0);
}

TEST_CASE("API errors") {
    Braid link("1 1");
    Result r;
    CHECK(finf_compute(link.h, FINF_INVARIANT_FINF, FINF_ENGINE_TRACE, 2, 1, &r.h) == FINF_ERR_NOT_A_KNOT);
    CHECK(std::string(finf_last_error()).find("(1,1)") != std::string::npos);
    Braid t("trefoil");
    CHECK(finf_compute(t.h, FINF_INVARIANT_ADO, FINF_ENGINE_STATESUM, 2, 1, &r.h) == FINF_ERR_ARGUMENT);
    CHECK(finf_compute(t.h, FINF_INVARIANT_FINF, FINF_ENGINE_TRACE, -1, 1, &r.h) == FINF_ERR_ARGUMENT);
    CHECK(finf_compute(nullptr, FINF_INVARIANT_FINF, FINF_ENGINE_TRACE, 1, 1, &r.h) == FINF_ERR_ARGUMENT);
    CHECK(r.h == nullptr);
}

TEST_CASE("verification report") {
    Braid t("trefoil");
    finf_report* rep = nullptr;
    REQUIRE(finf_verify_all(t.h, 2, 2, &rep) == FINF_OK);
    CHECK(finf_report_count(rep) == 9);
    for (size_t i = 0; i < finf_report_count(rep); ++i) CHECK_MESSAGE(finf_report_passed(rep, i), finf_report_name(rep, i));
    const auto j = nlohmann::ordered_json::parse(finf_report_json(rep));
    CHECK(j["checks"].size() == 9);
    finf_report_free(rep);
}
