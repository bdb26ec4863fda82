#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "geoquant/cli/commands.hpp"
#include "geoquant/cli/report.hpp"

using namespace geoquant::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Run run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    return run(std::move(args));
}

std::string temp_file(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / ("geoquant_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bracket") {
    auto r = run_json({"bracket", "p", "q"});
    CHECK(r.code == kExitOk);
    json report = r.report();
    CHECK(report["status"] == "ok");
    CHECK(report["payload"]["bracket"] == "1");
    CHECK(report["error"].is_null());
    CHECK(report["version"] == kVersion);
    CHECK(report["command"]["name"] == "bracket");
    CHECK(report["command"]["input_digest"].get<std::string>().size() == 64);

    CHECK(run_json({"bracket", "q^2*p", "p"}).report()["payload"]["bracket"] == "-2*p*q");
    CHECK(run({"bracket", "q^2*p", "p"}).out == "-2*p*q\n");

    std::string chart = temp_file("two.json", R"({"n":2,"q":["x","y"],"p":["u","v"]})");
    CHECK(run_json({"--chart", chart, "bracket", "u*v", "x*y"}).report()["payload"]["bracket"] == "u*x + v*y");
}

TEST_CASE("input errors exit with 2") {
    std::string bad = temp_file("bad.json", "{\"q\": [\"q\"], ");
    auto r = run_json({"--chart", bad, "bracket", "p", "q"});
    CHECK(r.code == kExitInput);
    json report = r.report();
    CHECK(report["status"] == "error");
    CHECK(report["payload"].is_null());
    CHECK(report["error"].get<std::string>().find("chart") != std::string::npos);

    CHECK(run({"--chart", "/nonexistent/chart.json", "bracket", "p", "q"}).code == kExitInput);
    CHECK(run({"bracket", "q ** p", "q"}).code == kExitInput);
    CHECK(run({"bracket", "z", "q"}).code == kExitInput);
    CHECK(run({"frobnicate"}).code == kExitInput);
    CHECK(run({}).code == kExitInput);
    CHECK(run({"quantize", "heisenberg", "q"}).code == kExitInput);
    auto human = run({"bracket", "q +", "p"});
    CHECK(human.err.find("error: ") == 0);
    CHECK(human.out.empty());
}

TEST_CASE("xfield") {
    json payload = run_json({"xfield", "(p^2+q^2)/2"}).report()["payload"];
    REQUIRE(payload["field"].size() == 2);
    CHECK(payload["field"][0] == json{{"coordinate", "q"}, {"component", "p"}});
    CHECK(payload["field"][1] == json{{"coordinate", "p"}, {"component", "-q"}});
}

TEST_CASE("quantize") {
    json s = run_json({"quantize", "schrodinger", "p"}).report()["payload"]["terms"];
    REQUIRE(s.size() == 1);
    CHECK(s[0]["index"] == "q:1");
    CHECK(s[0]["coefficient"] == "-i*hbar");

    json m = run_json({"quantize", "momentum", "q"}).report()["payload"]["terms"];
    REQUIRE(m.size() == 1);
    CHECK(m[0]["index"] == "p:1");
    CHECK(m[0]["coefficient"] == "i*hbar");

    auto rejected = run_json({"quantize", "schrodinger", "p^2"});
    CHECK(rejected.code == kExitNotQuantizable);
    CHECK(rejected.report()["error"].get<std::string>().find("p^2") != std::string::npos);

    json pre = run_json({"quantize", "prequantum", "q"}).report()["payload"]["terms"];
    CHECK(pre.size() == 2);
}

TEST_CASE("check") {
    json polarized = run_json({"check", "polarized", "--f", "q*p"}).report()["payload"];
    CHECK(polarized["result"] == true);
    CHECK(polarized["witness"].is_null());
    json violated = run_json({"check", "polarized", "--f", "p^2"}).report()["payload"];
    CHECK(violated["result"] == false);
    CHECK(violated["witness"].size() == 1);

    json sphere = run_json({"check", "integrality", "--manifold", "sphere", "--area", "4*pi"}).report()["payload"];
    CHECK(sphere["result"] == true);
    CHECK(sphere["class"] == 2);

    json five = run_json({"check", "integrality", "--manifold", "sphere", "--area", "5"}).report()["payload"];
    CHECK(five["result"] == false);
    CHECK(five["class"].is_null());
    CHECK(five["witness"].get<double>() == doctest::Approx(5.0 / (2 * std::numbers::pi)));

    CHECK(run_json({"check", "integrality"}).report()["payload"]["class"] == 0);
    CHECK(run({"check", "integrality", "--manifold", "sphere"}).code == kExitInput);

    std::string tilted = temp_file("tilted.json", R"({"span":[["1","i"]]})");
    CHECK(run_json({"check", "real", "--distribution", tilted}).report()["payload"]["result"] == false);
    CHECK(run_json({"check", "lagrangian", "--distribution", tilted}).report()["payload"]["result"] == true);
    CHECK(run_json({"check", "involutive"}).report()["payload"]["result"] == true);

    std::string chart2 = temp_file("chart2.json", R"({"n":2,"q":["q1","q2"],"p":["p1","p2"]})");
    std::string mixed = temp_file("mixed.json", R"({"span":[["1","0","0","0"],["0","q1","0","1"]]})");
    json inv = run_json({"--chart", chart2, "check", "involutive", "--distribution", mixed}).report()["payload"];
    CHECK(inv["result"] == false);
    CHECK(inv["witness"].is_string());
}

TEST_CASE("bs-spectrum") {
    auto r = run_json({"bs-spectrum", "q^2/2", "--d", "0.5", "--nmax", "3"});
    CHECK(r.code == kExitOk);
    json payload = r.report()["payload"];
    REQUIRE(payload["levels"].size() == 4);
    for (int n = 0; n <= 3; ++n) {
        json level = payload["levels"][static_cast<std::size_t>(n)];
        CHECK(level["n"] == n);
        CHECK(level["E_bs"].get<double>() == doctest::Approx(n + 0.5).epsilon(1e-12));
        CHECK(level["relError"].get<double>() <= 1e-4);
    }
    CHECK(payload["oracle"]["gridN"] == 4000);
    CHECK(payload["quadrature"]["nodes"] == 20);

    auto free = run_json({"bs-spectrum", "0"});
    CHECK(free.code == kExitGeometry);
    CHECK(free.report()["error"].get<std::string>().find("non-compact") != std::string::npos);

    // Semiclassical error of the quartic well: n >= 1 within 2%, the ground state about 18% off.
    json quartic = run_json({"bs-spectrum", "q^4", "--nmax", "2"}).report()["payload"]["levels"];
    REQUIRE(quartic.size() == 3);
    CHECK(quartic[0]["relError"].get<double>() == doctest::Approx(0.182).epsilon(0.01));
    CHECK(quartic[1]["relError"].get<double>() <= 0.02);
    CHECK(quartic[2]["relError"].get<double>() <= 0.02);

    json bare = run_json({"--hbar", "0.5", "bs-spectrum", "q^2/2", "--nmax", "1", "--no-oracle"}).report()["payload"];
    CHECK(bare["oracle"].is_null());
    CHECK(bare["levels"][1]["E_bs"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(bare["levels"][1]["E_oracle"].is_null());

    CHECK(run({"bs-spectrum", "(q^2-1)^2", "--nmax", "2"}).code == kExitGeometry);
    CHECK(run({"bs-spectrum", "q^2", "--grid-n", "50"}).code == kExitInput);
}

TEST_CASE("verify") {
    auto dirac = run_json({"verify", "dirac"});
    CHECK(dirac.code == kExitOk);
    json d = dirac.report()["payload"];
    CHECK(d["q3"]["passed"] == 30);
    CHECK(d["q3"]["total"] == 30);
    CHECK(d["q1"]["passed"] == d["q1"]["total"]);
    CHECK(d["q2"]["passed"] == d["q2"]["total"]);

    json j = run_json({"verify", "jacobi"}).report()["payload"];
    CHECK(j["passed"] == 50);
    CHECK(j["total"] == 50);

    json f = run_json({"verify", "fourier"}).report()["payload"];
    CHECK(f["worst_residual"].get<double>() < 1e-8);
    CHECK(f["unitarity_defect"].get<double>() <= 1e-12);

    CHECK(run({"verify", "everything"}).code == kExitInput);
}

TEST_CASE("reports are byte-stable and seeded") {
    auto a = run_json({"verify", "jacobi", "--seed", "42"});
    auto b = run_json({"--seed", "42", "verify", "jacobi"});
    CHECK(a.out == b.out);
    CHECK(a.report()["payload"]["seed"] == 42);
    auto c = run_json({"verify", "jacobi"});
    CHECK(c.report()["command"]["input_digest"] != a.report()["command"]["input_digest"]);

    auto first = run_json({"bs-spectrum", "q^4", "--nmax", "1"});
    auto second = run_json({"bs-spectrum", "q^4", "--nmax", "1"});
    CHECK(first.out == second.out);

    // Top-level keys come out sorted.
    std::vector<std::string> keys;
    json report = first.report();
    for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "error", "payload", "status", "version"});
    CHECK(first.out.find("\"command\"") < first.out.find("\"version\""));
}

TEST_CASE("digest") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("help and version") {
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("bs-spectrum") != std::string::npos);
    CHECK(run({"--version"}).out == std::string(kVersion) + "\n");
}

}  // TEST_SUITE
