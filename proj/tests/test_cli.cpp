#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "doctest.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stderr is discarded; env is a prefix such as "HFA_WORKERS=2".
Run hfa(const std::string& args, const std::string& env = "")
{
    std::string cmd = (env.empty() ? "" : env + " ") + std::string(HFA_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name)
{
    auto p = fs::temp_directory_path() / ("hfa_test_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("classify P4 for editing")
{
    auto r = hfa("classify --problem edit --graph CL");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    for (const char* key : {"command", "version", "inputs", "outputs", "counterexamples", "runtime_seconds"})
        CHECK(j.contains(key));
    CHECK(j["outputs"]["status"] == "PolyKernel");
    CHECK(j["outputs"]["graph"] == "CL");
    CHECK(j["outputs"]["n"] == 4);
    CHECK(j["outputs"]["chain"].is_array());
}

TEST_CASE("graphs by name and on stdin")
{
    auto a = Json::parse(hfa("classify --problem del --graph P4").out);
    auto b = Json::parse(hfa("classify --problem del --graph -", "echo CL |").out);
    CHECK(a["outputs"] == b["outputs"]);
    auto f = hfa("classify --problem edit --graph 'F2(t=5)'");
    CHECK(f.code == 0);
}

TEST_CASE("regular tail campaign to n = 8")
{
    auto r = hfa("verify --campaign regular_tail --n-max 8");
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["outputs"]["exceptions"] == Json::array({"2K2", "C4", "C5"}));
    CHECK(j["outputs"]["complete"] == true);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("catalogue show H5 is the star with four leaves")
{
    auto r = hfa("catalogue show H5");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out)["outputs"];
    CHECK(j["edges"] == Json::parse("[[0,1],[0,2],[0,3],[0,4]]"));
    CHECK(j["degrees"] == Json::parse("[4,1,1,1,1]"));
    CHECK(j["in_W"] == true);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(hfa("").code == 2);
    CHECK(hfa("frobnicate").code == 2);
    CHECK(hfa("classify").code == 2);
    CHECK(hfa("classify --graph '!!'").code == 2);
    CHECK(hfa("classify --graph CL --problem sideways").code == 2);
    CHECK(hfa("catalogue show Q9").code == 2);
    CHECK(hfa("verify --campaign nope --n-max 5").code == 2);
    CHECK(hfa("verify --campaign case_lemmas --n-max 12").code == 2);
    CHECK(hfa("reduce --construction NoSuch --graph CL").code == 2);
    CHECK(hfa("reduce --construction TrickyA8c --graph C4 --k 1").code == 2);  // side condition
    CHECK(hfa("solve --graph CL --h CL --k 1 --forbidden 0-9").code == 2);
    CHECK(hfa("chain --graph CL").code == 2);
    CHECK(hfa("verify-gadgets --row P4").code == 2);
    CHECK(hfa("verify --campaign regular_tail --n-max 4", "HFA_WORKERS=zero").code == 2);
    CHECK(hfa("--help").code == 0);
}

TEST_CASE("HFA_WORKERS overrides the worker flag")
{
    auto j = Json::parse(hfa("verify --campaign regular_tail --n-max 5 --workers 1", "HFA_WORKERS=3").out);
    CHECK(j["inputs"]["workers"] == 3);
}

TEST_CASE("reports round-trip byte for byte")
{
    for (std::string args : {"classify --problem comp --graph A3", "catalogue show co-A1", "chain --graph 'F1(t=4)'",
                             "solve --graph C5 --h P4 --k 2 --mode del",
                             "reduce --construction ConMod --graph P4 --k 1 --param 2",
                             "verify --campaign W_closure --n-max 5"}) {
        CAPTURE(args);
        auto r = hfa(args);
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
    }
}

TEST_CASE("repeated runs agree apart from timing")
{
    auto strip = [](std::string s) {
        auto j = Json::parse(s);
        j.erase("runtime_seconds");
        j["outputs"].erase("seconds");
        return j;
    };
    for (const char* args : {"classify --problem del --graph D1", "verify --campaign case_lemmas --n-max 6 --workers 2"})
        CHECK(strip(hfa(args).out) == strip(hfa(args).out));
}

TEST_CASE("solve reports a valid witness")
{
    auto j = Json::parse(hfa("solve --graph C5 --h P4 --k 2 --mode del").out)["outputs"];
    CHECK(j["feasible"] == true);
    CHECK(j["witness"].size() == 2);
    CHECK(j["witness_valid"] == true);
    auto none = Json::parse(hfa("solve --graph C5 --h P4 --k 2 --mode del --forbidden 0-1,1-2,2-3").out)["outputs"];
    CHECK(none["feasible"] == false);
    auto ex = Json::parse(hfa("solve --graph C5 --h P4 --k 2 --mode del --exhaustive").out)["outputs"];
    CHECK(ex["feasible"] == true);
}

TEST_CASE("reduce emits graph6 for large formula instances")
{
    auto r = hfa("reduce --construction ConCai --row co-A1 --mode del --formula 0,1,2 --k 1");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out)["outputs"];
    CHECK(j["n"].get<int>() > 64);
    CHECK(j["graph"].get<std::string>()[0] == '~');
    CHECK(j["k"] == 15);
}

TEST_CASE("verify-gadgets for one target with controls")
{
    auto r = hfa("verify-gadgets --row co-A1 --n-host 5 --controls");
    CHECK(r.code == 0);
    auto j = Json::parse(r.out)["outputs"];
    CHECK(j["rows"].size() == 4);
    for (auto& c : j["controls"]) CHECK(c["failed_as_expected"] == true);
}

TEST_CASE("resumed campaign keeps prior levels and reports stored counterexamples")
{
    auto dir = scratch("resume");
    auto first = Json::parse(hfa("verify --campaign regular_tail --n-max 6 --resume " + dir.string()).out);
    REQUIRE(fs::exists(dir / "progress.json"));
    auto again = Json::parse(hfa("verify --campaign regular_tail --n-max 6 --resume " + dir.string()).out);
    CHECK(again["outputs"]["scanned"] == first["outputs"]["scanned"]);
    CHECK(again["outputs"]["exceptions"] == first["outputs"]["exceptions"]);

    // a checkpoint holding a counterexample must surface with exit 1
    Json progress;
    {
        std::ifstream in(dir / "progress.json");
        progress = Json::parse(in);
    }
    progress["counterexamples"] = Json::array({"DQw"});
    {
        std::ofstream out(dir / "progress.json");
        out << progress.dump(2);
    }
    auto bad = hfa("verify --campaign regular_tail --n-max 6 --resume " + dir.string());
    CHECK(bad.code == 1);
    CHECK(Json::parse(bad.out)["counterexamples"] == Json::array({"DQw"}));
    fs::remove_all(dir);
}
