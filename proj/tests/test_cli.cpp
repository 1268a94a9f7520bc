#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "vknot/catalog.hpp"
#include "vknot/gauss.hpp"
#include "vknot/render.hpp"

#ifndef VKNOT_CLI_PATH
#error "VKNOT_CLI_PATH must point at the vknot binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(VKNOT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/vknot-test-") + std::to_string(getpid()) + "-" + name;
}

}  // namespace

TEST_CASE("validate reports per-code results") {
    auto ok = run_cli("validate O1+U1+ @ unknot");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("ok O1+U1+") != std::string::npos);

    auto bad = run_cli("validate O1+U1+ O1+U1-");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("sign mismatch") != std::string::npos);
}

TEST_CASE("canon prints canonical forms") {
    auto r = run_cli("canon O2+U1+U2+O1+");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "O1+O2+U1+U2+\n");
}

TEST_CASE("invariants table in csv and json") {
    auto csv = run_cli("invariants virtual_trefoil unknot kprime");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("code,components,writhe,J,genus,f_polynomial,error") == 0);
    CHECK(csv.output.find("O1+O2+U1+U2+,1,2,2,1,") != std::string::npos);
    CHECK(csv.output.find("@,1,0,0,0,1*A^0,") != std::string::npos);

    // a bad row carries the error and processing continues
    auto witherr = run_cli("invariants O1+U1- virtual_trefoil");
    CHECK(witherr.exit_code == 0);
    CHECK(witherr.output.find("sign mismatch") != std::string::npos);
    CHECK(witherr.output.find("O1+O2+U1+U2+,1,2,2,1,") != std::string::npos);

    auto json = run_cli("invariants virtual_trefoil --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"J\": 2") != std::string::npos);
    CHECK(json.output.find("\"genus\": 1") != std::string::npos);

    // row order equals input order, also with --threads
    auto t4 = run_cli("invariants unknot trefoil virtual_trefoil kprime --threads 4");
    auto t1 = run_cli("invariants unknot trefoil virtual_trefoil kprime --threads 1");
    CHECK(t4.output == t1.output);
}

TEST_CASE("genus subcommand emits the JSON report") {
    auto r = run_cli("genus virtual_trefoil");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"crossings\":2,\"boundary_curves\":2,\"genus\":1,\"components\":"
          "[{\"crossings\":2,\"boundary_curves\":2,\"genus\":1}]}\n");
    auto csv = run_cli("genus trefoil --format csv");
    CHECK(csv.output.find("O1+U2+O3+U1+O2+U3+,3,5,0") != std::string::npos);
}

TEST_CASE("mirror and sum subcommands") {
    auto m = run_cli("mirror virtual_trefoil");
    CHECK(m.output == "U1-U2-O1-O2-\n");
    auto s = run_cli("sum virtual_trefoil 0 virtual_trefoil 0");
    CHECK(s.output == "O1+O2+U1+U2+O3+O4+U3+U4+\n");
    auto bad = run_cli("sum hopf_link 0 unknot 0");
    CHECK(bad.exit_code == 64);
}

TEST_CASE("search exit codes and certificate flow") {
    const std::string cert = temp_path("cert.txt");

    auto dist = run_cli("search virtual_trefoil unknot --regime virtual");
    CHECK(dist.exit_code == 1);
    CHECK(dist.output.find("odd_writhe 2 vs 0") != std::string::npos);

    auto proven = run_cli("search virtual_trefoil unknot --regime all-forbidden --cert " + cert);
    CHECK(proven.exit_code == 0);
    CHECK(proven.output.find("proven") != std::string::npos);

    auto replay = run_cli("replay " + cert);
    CHECK(replay.exit_code == 0);
    CHECK(replay.output.find("certificate valid") != std::string::npos);

    // tampering invalidates
    {
        std::ifstream in(cert);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        text.replace(text.find("end: @"), 6, "end: O1+U1+");
        std::ofstream out(cert, std::ios::trunc);
        out << text;
    }
    CHECK(run_cli("replay " + cert).exit_code == 1);
    std::remove(cert.c_str());

    auto one_move = run_cli("search O1+U2-U1+O2- unknot --regime virtual --cert " + cert);
    CHECK(one_move.exit_code == 0);
    CHECK(one_move.output.find("path length 1") != std::string::npos);
    std::remove(cert.c_str());

    auto unknown = run_cli("search kishino unknot --regime virtual --budget-nodes 300 "
                           "--budget-depth 4");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.output.find("unknown") != std::string::npos);

    auto usage = run_cli("search O1+U1- unknot");
    CHECK(usage.exit_code == 64);
}

TEST_CASE("orbit subcommand") {
    auto r = run_cli("orbit @ --max-arrows 1 --budget-depth 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "@\nO1+U1+\nO1-U1-\n");
}

TEST_CASE("render writes deterministic SVG") {
    const std::string path1 = temp_path("a.svg");
    const std::string path2 = temp_path("b.svg");
    CHECK(run_cli("render virtual_trefoil " + path1).exit_code == 0);
    CHECK(run_cli("render virtual_trefoil " + path2).exit_code == 0);
    std::ifstream f1(path1), f2(path2);
    std::stringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    CHECK(b1.str() == b2.str());
    CHECK(b1.str().find("<svg") == 0);
    // two arrows with their signs
    CHECK(b1.str().find("1+</text>") != std::string::npos);
    CHECK(b1.str().find("2+</text>") != std::string::npos);
    std::remove(path1.c_str());
    std::remove(path2.c_str());

    // a crossing-free circle renders the circle and basepoint only
    const std::string path3 = temp_path("c.svg");
    CHECK(run_cli("render @ " + path3).exit_code == 0);
    std::ifstream f3(path3);
    std::stringstream b3;
    b3 << f3.rdbuf();
    CHECK(b3.str().find("<circle") != std::string::npos);
    CHECK(b3.str().find("marker-end") == std::string::npos);
    std::remove(path3.c_str());

    // multi-circle layout: one <circle> element per component
    const std::string path4 = temp_path("d.svg");
    CHECK(run_cli("render hopf_link " + path4).exit_code == 0);
    std::ifstream f4(path4);
    std::stringstream b4;
    b4 << f4.rdbuf();
    std::size_t circles = 0, at = 0;
    while ((at = b4.str().find("<circle", at)) != std::string::npos) {
        ++circles;
        ++at;
    }
    CHECK(circles == 2);
    std::remove(path4.c_str());
}

TEST_CASE("library SVG output is byte-stable") {
    const vknot::GaussDiagram d = vknot::parse("O1+O2+U1+U2+");
    CHECK(vknot::render_svg(d) == vknot::render_svg(d));
}

TEST_CASE("catalog subcommand lists entries that round-trip") {
    auto r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    for (const auto& e : vknot::builtin_catalog()) {
        CHECK(r.output.find(e.name + " " + e.code) != std::string::npos);
        CHECK(vknot::serialize(vknot::parse(e.code)) == e.code);
    }
}

TEST_CASE("VKNOT_CATALOG overrides the builtin catalog") {
    const std::string path = temp_path("catalog.txt");
    {
        std::ofstream out(path);
        out << "# test catalog\nmyknot O1+U1+\n";
    }
    auto r = run_cli("catalog");  // builtin
    CHECK(r.output.find("myknot") == std::string::npos);

    const std::string command = "VKNOT_CATALOG=" + path + " " + VKNOT_CLI_PATH + " catalog";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    pclose(pipe);
    CHECK(output == "myknot O1+U1+\n");
    std::remove(path.c_str());
}

TEST_CASE("csv and json outputs are byte-stable across runs") {
    auto a = run_cli("invariants unknot trefoil virtual_trefoil kprime kishino "
                     "figure_eight_E hopf_link");
    auto b = run_cli("invariants unknot trefoil virtual_trefoil kprime kishino "
                     "figure_eight_E hopf_link");
    CHECK(a.output == b.output);
    auto ja = run_cli("invariants kishino figure_eight_E --format json");
    auto jb = run_cli("invariants kishino figure_eight_E --format json");
    CHECK(ja.output == jb.output);
}
