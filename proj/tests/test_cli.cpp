// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "akl/cli_ops.hpp"
#include "akl/errors.hpp"

using namespace akl;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

std::string write_spec(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    out.close();
    return path.string();
}

std::string zero_spec() {
    return write_spec("akl-cli-zero.json",
                      R"({"A":"0","B":"0","C":"0","D":"0","E":"0","F":"0","U":"0","V":"0"})");
}

std::string oscillator_spec() {
    return write_spec("akl-cli-osc.json",
                      R"({"A":"0","B":"0","C":"0","D":"0","E":"x","F":"0","U":"0","V":"0"})");
}

std::string hyperbolic_spec() {
    return write_spec("akl-cli-hyp.json", R"({
  "A": "0", "B": "1/y", "C": "-1/y", "D": "0",
  "E": "0", "F": "-1/y", "U": "0", "V": "0",
  "base_point": ["0", "1"]
})");
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

// Restores the variable on scope exit so later cases see the default.
struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value == nullptr)
            unsetenv("AKL_PRECISION");
        else
            setenv("AKL_PRECISION", value, 1);
    }
    ~EnvGuard() { unsetenv("AKL_PRECISION"); }
};

} // namespace

TEST_CASE("double formatting") {
    CHECK(output_precision() == 17);
    CHECK(format_double(0.5, 17) == "0.5");
    CHECK(format_double(-0.0, 17) == "0");
    CHECK(format_double(1.0 / 3.0, 3) == "0.333");
    CHECK(format_double(-2.0, 17) == "-2");
    CHECK(format_double(0.03125, 17) == "0.03125"); // exactly representable
    CHECK(format_double(1e-17, 6) == "1e-17");
}

TEST_CASE("connection files") {
    std::string bp;
    const Connection2D c = load_connection_file(hyperbolic_spec(), &bp);
    CHECK(bp == "0,1");
    CHECK(c.B == parse_rational_function("1/y"));
    CHECK(c.F == parse_rational_function("-1/y"));

    CHECK_THROWS_AS(load_connection_file("/nonexistent/akl.json"), ParseError);
    CHECK_THROWS_AS(
        load_connection_file(write_spec("akl-cli-badjson.json", "{ not json")),
        ParseError);
    CHECK_THROWS_AS(
        load_connection_file(write_spec("akl-cli-missing.json", R"({"A":"0"})")),
        ParseError);
    CHECK_THROWS_AS(load_connection_file(write_spec(
                        "akl-cli-numfield.json",
                        R"({"A":0,"B":"0","C":"0","D":"0","E":"0","F":"0","U":"0","V":"0"})")),
                    ParseError);
    CHECK_THROWS_AS(load_connection_file(write_spec(
                        "akl-cli-badexpr.json",
                        R"({"A":"1+*","B":"0","C":"0","D":"0","E":"0","F":"0","U":"0","V":"0"})")),
                    ParseError);
}

TEST_CASE("classify subcommand") {
    SUBCASE("flat chart") {
        const CommandResult r = cmd_classify(zero_spec(), "0,0");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["label"] == "FlatTorsionFree");
        CHECK(doc["dim"] == 6);
        CHECK(doc["homogeneous_at_point"] == true);
        CHECK(doc["flat"] == true);
        CHECK(doc["torsion_free"] == true);
        CHECK(doc["stabilized"] == true);
        CHECK(doc["basis"].size() == 6);
        CHECK(doc["basis"][0].size() == 6);
        CHECK(doc["basis"][0][0].is_string()); // rationals are serialized as strings
        const std::string summary = doc["summary"].get<std::string>();
        CHECK(summary.find("FlatTorsionFree") != std::string::npos);
    }

    SUBCASE("family member") {
        const CommandResult r = cmd_classify(oscillator_spec(), "0,0");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["label"] == "Dim4Case");
        CHECK(doc["dim"] == 4);
        CHECK(doc["structure"].size() == 4);
    }

    SUBCASE("base point comes from the file when --point is absent") {
        const CommandResult r = cmd_classify(hyperbolic_spec(), "");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["label"] == "SL2");
        CHECK(doc["dim"] == 3);
        CHECK(doc["point"] == json::array({"0", "1"}));
    }

    SUBCASE("an explicit point overrides the file") {
        const CommandResult r = cmd_classify(hyperbolic_spec(), "1,2");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["label"] == "SL2");
        CHECK(doc["point"] == json::array({"1", "2"}));
    }

    SUBCASE("exit codes") {
        CHECK(cmd_classify(zero_spec(), "").exit_code == kExitParse); // no point anywhere
        CHECK(cmd_classify(zero_spec(), "1,junk").exit_code == kExitParse);
        CHECK(cmd_classify("/nonexistent/akl.json", "0,0").exit_code == kExitParse);
        // Coefficient pole at the base point.
        const std::string poley = write_spec(
            "akl-cli-poley.json",
            R"({"A":"1/y","B":"0","C":"0","D":"0","E":"0","F":"0","U":"0","V":"0"})");
        const CommandResult r = cmd_classify(poley, "0,0");
        CHECK(r.exit_code == kExitDomain);
        CHECK(r.error.find("error:") == 0);
        CHECK(r.output.empty());
    }
}

TEST_CASE("family subcommand") {
    SUBCASE("admissible member") {
        const CommandResult r = cmd_family("0,1,0,0");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["admissible"] == true);
        CHECK(doc["curvature_bracket"] == "1");
        CHECK(doc["curvature_bracket"].is_string());
        CHECK(doc["connection"]["E"] == "x");
        CHECK(doc["connection"]["U"] == "0");
        CHECK(doc["label"] == "Dim4Case");
        CHECK(doc["dim"] == 4);
        CHECK(doc["regime"]["kind"] == "ComplexPair");
        CHECK(doc["regime"]["a_exact"] == "0");
        CHECK(doc["regime"]["b_exact"] == "1");
        CHECK(doc["killing_basis"].size() == 4);
        CHECK_FALSE(doc.contains("normalization")); // delta is already zero
    }

    SUBCASE("inadmissible member") {
        const CommandResult r = cmd_family("2,1,1,0");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["admissible"] == false);
        CHECK(doc["curvature_bracket"] == "0");
        CHECK(doc["flat"] == true);
        CHECK(doc["label"] == "FlatTorsionFree");
        CHECK_FALSE(doc.contains("killing_basis"));
    }

    SUBCASE("delta normalization block") {
        const CommandResult r = cmd_family("3,2,0,0,6");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["normalization"]["q"] == "q(y) = -3");
        CHECK(doc["normalization"]["params"] == json::array({"3", "2", "0", "0", "0"}));
        CHECK(doc["regime"]["kind"] == "RealDistinct");
        CHECK(doc["regime"]["a1_exact"] == "-1");
        CHECK(doc["regime"]["a2_exact"] == "-2");
    }

    SUBCASE("rational parameters") {
        const CommandResult r = cmd_family("1/2,-3/4,0,1");
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["params"] == json::array({"1/2", "-3/4", "0", "1", "0"}));
    }

    SUBCASE("parse failures") {
        CHECK(cmd_family("junk").exit_code == kExitParse);
        CHECK(cmd_family("1,2").exit_code == kExitParse);
        CHECK(cmd_family("1,2,3,4,5,6").exit_code == kExitParse);
        CHECK(cmd_family("1,2,3,1/0").exit_code == kExitParse);
    }

    SUBCASE("output is byte-stable") {
        CHECK(cmd_family("0,1,0,0").output == cmd_family("0,1,0,0").output);
    }
}

TEST_CASE("holonomy subcommand") {
    const CommandResult r = cmd_holonomy("3,2,0,0", "0,1,0,0", "0,0,0,1");
    REQUIRE(r.exit_code == kExitOk);
    const json doc = json::parse(r.output);
    CHECK(doc["outcome"] == "NotCommuting");
    CHECK_FALSE(doc.contains("field1"));

    const double u2 = 1.0 - std::exp(-1.0);
    std::ostringstream g2;
    g2 << "-2,1," << u2 << ",0";
    const CommandResult c = cmd_holonomy("3,2,0,0", "-1,1,0,0", g2.str());
    REQUIRE(c.exit_code == kExitOk);
    const json cdoc = json::parse(c.output);
    CHECK(cdoc["outcome"] == "CommutingFields");
    CHECK(cdoc["has_degeneracy_curve"] == true);
    CHECK(cdoc["degeneracy_curve"] ==
          "(a1 - a2) x = c e^{a1 y} with a1 = -1, a2 = -2, c = 1");

    CHECK(cmd_holonomy("0,0,0,0", "0,1,0,0", "0,0,0,1").exit_code == kExitDomain);
    CHECK(cmd_holonomy("3,2,0,0", "a,b,c,d", "0,0,0,1").exit_code == kExitParse);
    CHECK(cmd_holonomy("3,2,0,0", "1,2,3", "0,0,0,1").exit_code == kExitParse);
}

TEST_CASE("group subcommand") {
    const CommandResult r =
        cmd_group("0,1,0,0", "0,1.5707963267948966,0,0", "0,0,1,0", "1,0");
    REQUIRE(r.exit_code == kExitOk);
    const json doc = json::parse(r.output);
    CHECK(doc["regime"] == "ComplexPair");
    CHECK(doc["psi_g1"][0][1] == "-1");
    CHECK(doc["psi_g1"][1][0] == "1");
    CHECK(doc["commutes"] == false);
    CHECK(doc["g1"]["h"][0].is_string());
    CHECK(doc["product"].contains("h"));
    CHECK(doc["product"].contains("k"));

    // Two K-translations commute; acting on (1, 0) adds u cos(y) + v sin(y).
    const CommandResult k = cmd_group("0,1,0,0", "0,0,1,0", "0,0,0,2", "1,0");
    REQUIRE(k.exit_code == kExitOk);
    const json kdoc = json::parse(k.output);
    CHECK(kdoc["commutes"] == true);
    CHECK(kdoc["g1_point"] == json::array({"2", "0"}));

    CHECK(cmd_group("0,0,0,0", "0,0,1,0", "0,0,0,2").exit_code == kExitDomain);
    CHECK(cmd_group("0,1,0,0", "0,0,1,0", "0,0,0,2", "bad").exit_code == kExitParse);
}

TEST_CASE("geodesic subcommand") {
    SUBCASE("csv shape and endpoint") {
        const CommandResult r = cmd_geodesic(oscillator_spec(), "1,0", "0,1", 1.0, 100);
        REQUIRE(r.exit_code == kExitOk);
        const auto lines = lines_of(r.output);
        REQUIRE(lines.size() == 102); // header + 101 samples
        CHECK(lines[0] == "t,x,y,vx,vy");
        CHECK(lines[1] == "0,1,0,0,1");

        std::istringstream last(lines.back());
        std::string cell;
        std::vector<double> row;
        while (std::getline(last, cell, ',')) row.push_back(std::stod(cell));
        REQUIRE(row.size() == 5);
        CHECK(row[0] == doctest::Approx(1.0));
        CHECK(row[1] == doctest::Approx(std::cos(1.0)).epsilon(1e-8));
        CHECK(row[2] == doctest::Approx(1.0));
        CHECK(row[3] == doctest::Approx(-std::sin(1.0)).epsilon(1e-8));
        CHECK(row[4] == doctest::Approx(1.0));
    }

    SUBCASE("deterministic output") {
        const CommandResult a = cmd_geodesic(oscillator_spec(), "1,0", "0,1", 0.5, 32);
        const CommandResult b = cmd_geodesic(oscillator_spec(), "1,0", "0,1", 0.5, 32);
        CHECK(a.output == b.output);
    }

    SUBCASE("file base point fallback") {
        const CommandResult r = cmd_geodesic(hyperbolic_spec(), "", "1,0", 0.3, 16);
        REQUIRE(r.exit_code == kExitOk);
        CHECK(lines_of(r.output)[1] == "0,0,1,1,0");
    }

    SUBCASE("errors") {
        // A bad flag value is a usage error, not a domain failure.
        CHECK(cmd_geodesic(oscillator_spec(), "1,0", "0,1", 1.0, 0).exit_code ==
              kExitParse);
        CHECK(cmd_geodesic(oscillator_spec(), "bad", "0,1", 1.0, 10).exit_code ==
              kExitParse);
        CHECK(cmd_geodesic(oscillator_spec(), "", "0,1", 1.0, 10).exit_code ==
              kExitParse); // no point in file or flag
    }
}

TEST_CASE("models subcommand") {
    const CommandResult r = cmd_models("verify");
    REQUIRE(r.exit_code == kExitOk);
    CHECK(r.output.find("10/10 model checks passed") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(cmd_models("list").exit_code == kExitParse);
}

TEST_CASE("verify subcommand") {
    SUBCASE("single certificate by filter") {
        const CommandResult r = cmd_verify("case6");
        REQUIRE(r.exit_code == kExitOk);
        CHECK(r.output.find("[PASS] case6:") != std::string::npos);
        CHECK(r.output.find("1/1 certificates passed") != std::string::npos);
    }

    SUBCASE("fault injections must fail") {
        const CommandResult broken_target = cmd_verify("case6", "case6-target");
        CHECK(broken_target.exit_code == kExitCertificate);
        CHECK(broken_target.output.find("[FAIL] case6:") != std::string::npos);

        const CommandResult broken_psi = cmd_verify("group-axioms", "psi-sign-flip");
        CHECK(broken_psi.exit_code == kExitCertificate);
        CHECK(broken_psi.output.find("[FAIL] group-axioms:") != std::string::npos);
    }

    SUBCASE("unknown names are parse errors") {
        CHECK(cmd_verify("no-such-certificate").exit_code == kExitParse);
        CHECK(cmd_verify("", "bogus-injection").exit_code == kExitParse);
    }
}

TEST_CASE("print precision environment variable") {
    SUBCASE("valid setting changes the geodesic table") {
        const EnvGuard guard("6");
        CHECK(output_precision() == 6);
        const CommandResult r = cmd_geodesic(oscillator_spec(), "1,0", "0,1", 1.0, 3);
        REQUIRE(r.exit_code == kExitOk);
        const auto lines = lines_of(r.output);
        // 1/3 rounds to six significant digits.
        CHECK(lines[2].substr(0, 9) == "0.333333,");
    }

    SUBCASE("junk values are parse errors") {
        const EnvGuard guard("abc");
        CHECK(cmd_family("0,1,0,0").exit_code == kExitParse);
        CHECK(cmd_geodesic(oscillator_spec(), "1,0", "0,1", 1.0, 3).exit_code ==
              kExitParse);
    }

    SUBCASE("out-of-range values are parse errors") {
        const EnvGuard guard("0");
        CHECK_THROWS_AS(output_precision(), ParseError);
        const EnvGuard wide("26");
        CHECK_THROWS_AS(output_precision(), ParseError);
    }
}
