#include <doctest.h>

#include <sstream>

#include "cktweb/cli.hpp"
#include "cktweb/json_io.hpp"

using namespace cktweb;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json without_timing(Json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST_CASE("cli classify") {
    auto r = run({"classify", "--params", "1/4,0,1/2,1/2,0,1/4"});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["schema"] == "cktweb.report/1");
    CHECK(j["command"] == "classify");
    CHECK(j["results"]["type"] == "Toroidal");
    CHECK(j["results"]["invariant_classification"]["type"] == "Toroidal");
    CHECK(j["results"]["canonical"]["form"] == "I");
    CHECK(j["results"]["singular_polynomial"] == "1/4*z^4 + 1/2*z^2 + 1/4");
    CHECK(j["findings"].empty());

    r = run({"classify", "--quartic", "0,1,0,0,0"});
    REQUIRE(r.code == kExitOk);
    j = r.json();
    CHECK(j["results"]["type"] == "Cardioid");
    CHECK(j["results"]["invariant_classification"]["strict_order_type"] == "Bispherical");
    REQUIRE(j["findings"].size() == 1);
    CHECK(j["findings"][0]["severity"] == "note");

    r = run({"--float-probe", "classify", "--quartic", "1,0,-5,0,4"});
    REQUIRE(r.code == kExitOk);
    j = r.json();
    CHECK(j["results"]["type"] == "BiCyclide");
    CHECK(j["results"]["float_probe"]["delta_sign_agrees"] == true);
    CHECK(j["results"]["float_probe"]["real_roots_agree"] == true);
}

TEST_CASE("cli input errors") {
    auto r = run({"classify", "--params", "0,0,0,1,0,0"});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find(kNoWebMessage) != std::string::npos);
    CHECK(run({"classify", "--params", "1,2"}).code == kExitInputError);
    CHECK(run({"classify", "--params", "0.5,0,1,0,0,1"}).code == kExitInputError);
    CHECK(run({"classify"}).code == kExitInputError);
    CHECK(run({"classify", "--params", "1,0,0,0,0,1", "--quartic", "1,0,0,0,1"}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli tables") {
    for (const auto& args : {std::vector<std::string>{"tables"},
                             std::vector<std::string>{"tables", "--scale", "a=2", "--scale", "k=1/3"}}) {
        const auto r = run(args);
        REQUIRE(r.code == kExitOk);
        const auto j = r.json();
        CHECK(j["results"]["rows_matched"] == 15);
        CHECK(j["results"]["rows_total"] == 15);
        CHECK(j["results"]["equivalences"].size() == 6);
        for (const auto& e : j["results"]["equivalences"]) CHECK(e["match"] == true);
        for (const auto& row : j["results"]["rows"])
            if (row["name"] == "Cap cyclide") CHECK(row["by_roots"] == "FlatRingCyclide");
    }
    CHECK(run({"tables", "--scale", "k=1"}).code == kExitInputError);
    CHECK(run({"tables", "--scale", "b=1"}).code == kExitInputError);
    CHECK(run({"tables", "--scale", "a"}).code == kExitInputError);
    CHECK(run({"--table", "tables"}).out.find("Cap cyclide") != std::string::npos);
}

TEST_CASE("cli compat") {
    auto r = run({"compat", "-4/((x^2+y^2+z^2-1)^2+4*z^2)", "--E", "0"});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["results"]["type"] == "Toroidal");
    CHECK(j["results"]["solution"]["dimension"] == 2);
    CHECK(j["results"]["basis_verified_closed"] == true);

    r = run({"compat", "0", "--E", "1"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.json()["results"]["solution"]["dimension"] == 4);

    CHECK(run({"compat", "x^^2"}).code == kExitInputError);
    CHECK(run({"compat", "1/(x-x)"}).code == kExitInputError);
}

TEST_CASE("cli symmetry") {
    auto r = run({"symmetry", "R3", "--h", "0"});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    REQUIRE(j["results"]["spaces"].size() == 1);
    CHECK(j["results"]["spaces"][0]["dimension"] == 9);
    CHECK(j["results"]["spaces"][0]["tsn"]["dimension"] == 6);

    r = run({"symmetry", "D", "--h", "const"});
    REQUIRE(r.code == kExitOk);
    j = r.json();
    CHECK(j["results"]["integer_eigenvalues"].size() == 5);

    r = run({"symmetry", "X3", "--h", "0"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.json()["results"]["spaces"][0]["dimension"] == 9);

    CHECK(run({"symmetry", "Q7"}).code == kExitInputError);
    CHECK(run({"symmetry", "R3", "--h", "1"}).code == kExitInputError);
}

TEST_CASE("cli crosscheck and determinism") {
    const auto a = run({"crosscheck", "--seed", "5", "--per-type", "4"});
    const auto ja = a.json();
    CHECK(ja["results"]["total"] == 36);
    CHECK(ja["results"]["roots_recovered"] == 36);
    const int disagreements = 36 - ja["results"]["invariants_agree"].get<int>();
    CHECK(static_cast<int>(ja["findings"].size()) >= disagreements);
    CHECK(a.code == (disagreements == 0 ? kExitOk : kExitInconsistent));
    const auto b = run({"crosscheck", "--seed", "5", "--per-type", "4"});
    CHECK(without_timing(a.json()) == without_timing(b.json()));

    const auto c1 = run({"classify", "--params", "-1/4,0,5/4,5/4,0,-1"});
    const auto c2 = run({"classify", "--params", "-1/4,0,5/4,5/4,0,-1"});
    CHECK(without_timing(c1.json()).dump() == without_timing(c2.json()).dump());
    CHECK(run({"crosscheck", "--per-type", "0"}).code == kExitInputError);
}
