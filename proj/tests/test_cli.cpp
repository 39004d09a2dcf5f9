#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "orthocoord/json_io.hpp"

using orthocoord::io::Json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string("\"") + ORTHOCOORD_CLI + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(ORTHOCOORD_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/orthocoord_cli_" + name;
    std::ofstream(path) << text;
    return path;
}

// Everything except timing.
Json stable(Json j) {
    j.erase("timing_ms");
    return j;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("check ortholattice " + data("mo2.json")).code == 0);
    CHECK(run("check lattice " + data("pentagon.json")).code == 0);
    CHECK(run("check ortholattice " + data("pentagon.json")).code == 2);
    CHECK(run("rep ortho-check " + data("shear.json")).code == 1);
    CHECK(run("rep verify " + data("shear.json")).code == 0);
    CHECK(run("rep recover-star " + data("rotation_rep.json")).code == 0);
    CHECK(run("rep recover-star " + data("shear.json")).code == 1);
    CHECK(run("fact3 " + data("gf2_x_m2gf2.json")).code == 0);
    CHECK(run("fact3 " + data("m2gf2.json")).code == 0);
    CHECK(run("coord build " + data("gf3_3.json") + " " + data("frame_gf3.json")).code == 0);
    CHECK(run("pipeline theorem1 " + data("m3q.json") + " " + data("rotation_eta.json")).code == 0);
    CHECK(run("pipeline theorem1 " + data("m3gf3.json") + " " + data("gf3_eta.json")).code == 0);
    CHECK(run("frame verify " + data("mo2.json") + " " + data("mo2_frame.json")).code == 0);
    CHECK(run("semiframe build " + data("mo2.json") + " " + data("mo2_frame.json")).code == 0);
    CHECK(run("frame search " + data("sub_gf3_2.json") + " --kind skew --n 2").code == 0);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("check lattice /no/such/file.json").code == 2);
}

TEST_CASE("malformed input is located") {
    auto path = write_temp("bad.json", "{\"n\": 3, \"covers\": [[0, 1]");
    auto r = run("--json check lattice " + path);
    CHECK(r.code == 2);
    CHECK(r.out.find("line") != std::string::npos);
    // parses, but is not a lattice: a violation with a witness, not bad input
    auto notlat = write_temp("notlat.json", "{\"n\": 3, \"covers\": [[0, 1], [0, 2]]}");
    auto v = run("--json check lattice " + notlat);
    CHECK(v.code == 1);
    auto j = Json::parse(v.out);
    CHECK(j["verdict"] == "fail");
    CHECK(j["violations"][0]["claim"] == "NoBounds");
}

TEST_CASE("ortho-check report names the shear witness") {
    auto r = run("--json rep ortho-check " + data("shear.json"));
    REQUIRE(r.code == 1);
    auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "fail");
    CHECK(j["violations"][0]["claim"] == "PerpViolation");
    CHECK(j["seed"] == 0);
    CHECK(j["inputs"].size() == 1);
}

TEST_CASE("reports round-trip") {
    for (const std::string args : {"rep ortho-check " + data("shear.json"), "rep recover-star " + data("rotation_rep.json"),
                                   "coord build " + data("gf3_3.json") + " " + data("frame_gf3.json"),
                                   "pipeline theorem1 " + data("m3q.json") + " " + data("rotation_eta.json"),
                                   "fact3 " + data("gf2_x_m2gf2.json")}) {
        CAPTURE(args);
        auto first = run("--json --seed 3 " + args);
        auto j1 = Json::parse(first.out);
        std::string path = write_temp("report.json", first.out);
        // same subcommand, the report standing in for its inputs
        std::string cmd = args.substr(0, args.find(' ', args.find(' ') + 1));
        if (args.rfind("fact3", 0) == 0) cmd = "fact3";
        auto second = run("--json --seed 3 " + cmd + " " + path);
        CHECK(second.code == first.code);
        auto j2 = Json::parse(second.out);
        CHECK(stable(j1)["verdict"].dump() == stable(j2)["verdict"].dump());
        CHECK(j1["violations"].dump() == j2["violations"].dump());
        CHECK(j1["result"].dump() == j2["result"].dump());
        CHECK(j1["inputs"].dump() == j2["inputs"].dump());
    }
}

TEST_CASE("models emit loadable documents") {
    for (const std::string m : {"mo --k 3", "boolean --n 3", "subspace --field 3 --n 2"}) {
        auto path = write_temp("model.json", run("model " + m).out);
        CHECK(run("check ortholattice " + path).code == 0);
    }
    for (const std::string m : {"matrix-star-ring --n 2", "matrix-ring --field 2 --n 2", "product-ring"}) {
        auto path = write_temp("ring.json", run("model " + m).out);
        CHECK(run("check ring " + path).code == 0);
    }
    auto rep = write_temp("rep.json", run("model identity-rep --n 3").out);
    CHECK(run("rep recover-star " + rep).code == 0);
    CHECK(run("model no-such-model").code == 2);
}
