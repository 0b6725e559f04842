#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = LFORTHO_CLI_PATH;

int run(const std::string& args) {
    const int rc = std::system((cli + " " + args + " >/dev/null 2>/dev/null").c_str());
    return WEXITSTATUS(rc);
}

std::filesystem::path tmp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("exit code taxonomy") {
    CHECK(run("compute --family f12 --a 1,2 --order 2 --bits 256") == 2);  // bad arity
    CHECK(run("verify --family f32 --eta 1.0 --bits 256") == 2);           // divergent spec
    CHECK(run("lf --family f32 --bits 256") == 5);                         // no 3F2 steps
    CHECK(run("nonsense") != 0);
}

TEST_CASE("non-convergent series maps to exit 4") {
    // eta this close to 1 cannot certify a tail within the term cap
    CHECK(run("compute --family f32 --eta 0.99999 --order 1 --bits 256") == 4);
}

TEST_CASE("json reports round-trip byte-identically") {
    const auto out = tmp_file("lfortho_rt.json");
    REQUIRE(run("verify --family f12 --order 8 --bits 256 --suites pascal --out " +
                out.string()) == 0);
    const std::string text = slurp(out);
    const auto doc = nlohmann::ordered_json::parse(text);
    CHECK(doc.dump(2) + "\n" == text);
    CHECK(doc["summary"]["fail"].get<int>() == doc["errata"].size() * 11);  // pi3 printed rows
}

TEST_CASE("suite selection filters the records") {
    const auto out = tmp_file("lfortho_suites.json");
    REQUIRE(run("verify --family f22 --order 8 --bits 256 --suites pascal --out " +
                out.string()) == 0);
    const auto doc = nlohmann::ordered_json::parse(slurp(out));
    for (const auto& r : doc["records"]) CHECK(r["suite"] == "pascal");
}

TEST_CASE("compute csv carries the contract columns") {
    const auto out = tmp_file("lfortho_cmp.csv");
    REQUIRE(run("compute --family f12 --order 4 --bits 256 --format csv --out " +
                out.string()) == 0);
    std::ifstream f(out);
    std::string header;
    std::getline(f, header);
    CHECK(header == "n,rho_n,H_n,beta_n,gamma_n,p1_n");
    int rows = 0;
    for (std::string line; std::getline(f, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 4);
}

TEST_CASE("lf with zero steps emits the seed-only table") {
    const auto out = tmp_file("lfortho_seed.csv");
    REQUIRE(run("lf --family f22 --steps 0 --bits 256 --format csv --out " + out.string()) ==
            0);
    std::ifstream f(out);
    int rows = -1;  // discount the header
    for (std::string line; std::getline(f, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 0);
}

TEST_CASE("config file supplies defaults and flags override") {
    const auto cfg = tmp_file("lfortho_cfg.ini");
    {
        std::ofstream f(cfg);
        f << "family=f22\nbits=256\norder=3\n";
    }
    const auto out = tmp_file("lfortho_cfg.json");
    REQUIRE(run("compute --config " + cfg.string() + " --order 2 --out " + out.string()) == 0);
    const auto doc = nlohmann::ordered_json::parse(slurp(out));
    CHECK(doc["manifest"]["family"] == "f22");
    CHECK(doc["manifest"]["bits"] == 256);
    CHECK(doc["manifest"]["order"] == 2);  // flag wins over file
}

TEST_CASE("LFORTHO_BITS overrides the default precision") {
    const auto out = tmp_file("lfortho_env.json");
    const int rc = std::system(("LFORTHO_BITS=320 " + cli + " compute --family f12 --order 2 --out " +
                                out.string() + " >/dev/null 2>/dev/null")
                                   .c_str());
    REQUIRE(WEXITSTATUS(rc) == 0);
    const auto doc = nlohmann::ordered_json::parse(slurp(out));
    CHECK(doc["manifest"]["bits"] == 320);
}
