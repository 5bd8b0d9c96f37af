#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mfk/catalog.hpp"
#include "mfk/commands.hpp"

using namespace mfk;

namespace {

const char* kNodeBundle =
    "# node example\n"
    "ring 32003 x y\n"
    "potential x*y\n"
    "\n"
    "mf E 1\n"
    "x\n"
    "/\n"
    "y\n"
    "\n"
    "mf T 1\n"
    "1\n"
    "/\n"
    "x*y\n"
    "\n"
    "morphism zid E E\n"
    "x*y\n"
    "/\n"
    "x*y\n"
    "\n"
    "module k 1\n"
    "x\n"
    "y\n";

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path = "cli_test_" + std::to_string(counter++) + ".bundle";
    std::ofstream out(path);
    out << text;
    return path;
}

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bundle parse, validate, print round trip") {
    Bundle b = parse_bundle(kNodeBundle);
    CHECK(b.ctx->characteristic() == 32003);
    CHECK(b.ctx->wprime() == Poly::parse(b.ctx, "x*y"));
    CHECK(b.mfs.size() == 2);
    CHECK(b.morphisms.size() == 1);
    CHECK(b.modules.size() == 1);
    CHECK(b.module("k").presentation().cols() == 2);

    Bundle again = parse_bundle(b.str());
    CHECK(again == b);
}

TEST_CASE("bundle error reporting") {
    SUBCASE("syntax error carries the line number") {
        try {
            parse_bundle("ring 32003 x y\npotential x*y\nmf E one\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("validation failure names the identity") {
        std::string text = "ring 32003 x y\npotential x*y\nmf E 1\nx\n/\nx\n";
        try {
            parse_bundle(text);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("wprime") != std::string::npos);
        }
    }
    SUBCASE("nonconstant potential enforced") {
        CHECK_THROWS_AS(parse_bundle("ring 32003 x\npotential 5\nmf E 1\nx\n/\nx\n"), ParseError);
    }
    SUBCASE("value folds into the potential") {
        // W = x*y + 3 with w0 = 3 leaves wprime = x*y
        Bundle b =
            parse_bundle("ring 32003 x y\npotential x*y + 3\nvalue 3\nmf E 1\nx\n/\ny\n");
        CHECK(b.ctx->wprime() == Poly::parse(b.ctx, "x*y"));
        CHECK(b.ctx->critical_value() == 3);
    }
    SUBCASE("duplicate names rejected") {
        std::string text =
            "ring 32003 x y\npotential x*y\nmf E 1\nx\n/\ny\nmodule E 1\nx\n";
        CHECK_THROWS_AS(parse_bundle(text), ParseError);
    }
}

TEST_CASE("dispatch covers the command surface") {
    std::string path = write_temp(kNodeBundle);

    SUBCASE("check") {
        auto r = run({"check", path});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("mfs=2") != std::string::npos);
    }
    SUBCASE("shift output reparses") {
        auto r = run({"shift", path, "E"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("-y") != std::string::npos);
    }
    SUBCASE("homdim") {
        auto r = run({"homdim", path, "E", "E"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.substr(0, 1) == "1");
    }
    SUBCASE("contract trivial pair") {
        auto r = run({"contract", path, "T"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("CONTRACTIBLE") == 0);
    }
    SUBCASE("homotopy finds a witness for wprime*id") {
        auto r = run({"homotopy", path, "zid"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("NULL-HOMOTOPIC") == 0);
    }
    SUBCASE("cok, syzygy, resolve, mcm, stabilize") {
        CHECK(run({"cok", path, "E"}).code == kExitOk);
        CHECK(run({"syzygy", path, "E"}).code == kExitOk);
        auto rr = run({"resolve", path, "E", "5"});
        CHECK(rr.code == kExitOk);
        CHECK(rr.out.find("periodic_from: 0") != std::string::npos);
        auto rm = run({"mcm", path, "k"});
        CHECK(rm.code == kExitOk);
        CHECK(rm.out.find("NOT MCM") == 0);
        CHECK(run({"stabilize", path, "k"}).code == kExitOk);
    }
    SUBCASE("transport identity") {
        auto r = run({"transport", path, "E", "E"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("mf Fprime") != std::string::npos);
    }
    SUBCASE("stablehom and verify-ff") {
        auto r = run({"stablehom", path, "E", "E"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.substr(0, 1) == "1");
        auto v = run({"verify-ff", path, "E", "E"});
        CHECK(v.code == kExitOk);
        CHECK(v.out.find("PASS 1 = 1") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("exit code contract") {
    std::string path = write_temp(kNodeBundle);
    CHECK(run({}).code == kExitInput);
    CHECK(run({"frobnicate"}).code == kExitInput);
    CHECK(run({"check"}).code == kExitInput);
    CHECK(run({"check", "no_such_file.bundle"}).code == kExitInput);
    CHECK(run({"homdim", path, "E", "missing"}).code == kExitInput);
    CHECK(run({"--order", "weird", "check", path}).code == kExitInput);

    std::string bad = write_temp("ring 32003 x y\npotential x*y\nmf B 1\nx\n/\nx\n");
    CHECK(run({"check", bad}).code == kExitValidation);

    CHECK(run({"--max-steps", "1", "catalog", "--only", "cusp"}).code == kExitResource);
    // the cap guard restores limits for later in-process calls
    CHECK(run({"homdim", path, "E", "E"}).code == kExitOk);

    std::remove(path.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("json report schema") {
    std::string path = write_temp(kNodeBundle);
    auto r = run({"--json", "verify-ff", path, "E", "E"});
    CHECK(r.code == kExitOk);
    auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    for (const char* key : {"case", "op", "expected", "got", "pass"})
        CHECK(arr[0].contains(key));
    CHECK(arr[0]["op"] == "verify-ff");
    CHECK(arr[0]["pass"] == true);
    std::remove(path.c_str());
}

TEST_CASE("byte-identical output across runs") {
    std::string path = write_temp(kNodeBundle);
    auto a = run({"verify-ff", path, "E", "E"});
    auto b = run({"verify-ff", path, "E", "E"});
    CHECK(a.out == b.out);
    auto c = run({"--json", "catalog", "--only", "a2"});
    auto d = run({"--json", "catalog", "--only", "a2"});
    CHECK(c.out == d.out);
    std::remove(path.c_str());
}

TEST_CASE("catalog command") {
    auto r = run({"catalog", "--only", "a3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("hom-dimension table") != std::string::npos);
    auto bad = run({"catalog", "--only", "zz"});
    CHECK(bad.code == kExitInput);
}

TEST_CASE("catalog bundles reparse") {
    for (const auto& c : build_catalog()) {
        Bundle b = catalog_bundle(c);
        Bundle again = parse_bundle(b.str());
        CHECK(again == b);
    }
}
