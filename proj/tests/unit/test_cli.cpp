#include "corpus.hpp"

#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with `input` on stdin; stderr is discarded.
Run run_cli(const std::string& args, const std::string& input)
{
    namespace fs = std::filesystem;
    auto in_path = fs::temp_directory_path() / ("dindex_cli_in_" + std::to_string(::getpid()));
    {
        std::ofstream f(in_path);
        f << input;
    }
    std::string cmd = std::string(DINDEX_CLI) + " " + args + " < " + in_path.string() + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    fs::remove(in_path);
    return r;
}

std::vector<nlohmann::json> json_lines(const std::string& text)
{
    std::vector<nlohmann::json> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string::npos)
            end = text.size();
        if (end > pos)
            out.push_back(nlohmann::json::parse(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("cli exact")
{
    auto r = run_cli("exact", "Dhc\n");
    CHECK(r.status == 0);
    auto rows = json_lines(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].at("dprime") == 3);
    CHECK(rows[0].at("certificate").at("distinguishing") == true);

    auto empty = run_cli("exact", "");
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());

    auto bad = run_cli("exact", "Dhc\n!!\nBw\n");
    CHECK(bad.status == 1);
    auto bad_rows = json_lines(bad.out);
    REQUIRE(bad_rows.size() == 3);
    CHECK(bad_rows[1].contains("error"));
    CHECK(bad_rows[1].at("line") == 2);
    CHECK(bad_rows[2].at("dprime") == 3);
}

TEST_CASE("cli construct")
{
    auto c6 = run_cli("construct --mode thm23", "Es\\o\n");  // C_6
    CHECK(c6.status == 0);
    auto rows = json_lines(c6.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].at("labels_used").get<int>() <= 3);
    CHECK(rows[0].at("verified") == true);

    auto petersen = run_cli("construct --mode thm32", "IheA@GUAo\n");
    CHECK(petersen.status == 0);
    CHECK(json_lines(petersen.out).at(0).contains("skipped"));

    auto k6 = run_cli("construct --mode thm32", "E~~w\n");
    CHECK(k6.status == 0);
    auto k6_row = json_lines(k6.out).at(0);
    CHECK(k6_row.at("labels_used") == 2);
    CHECK(k6_row.at("route") == "hamiltonian");
}

TEST_CASE("cli verify")
{
    std::ifstream in(dindex::testing::data_path("graphs_n5.g6"));
    std::stringstream ss;
    ss << in.rdbuf();
    auto r = run_cli("verify --mode thm23 --workers 2", ss.str());
    CHECK(r.status == 0);
    auto rows = json_lines(r.out);
    REQUIRE(rows.size() == 35);
    CHECK(rows.back().at("summary").at("total") == 34);
    CHECK(rows.back().at("summary").at("failed") == 0);

    auto csv = run_cli("verify --format csv", "Dhc\nD??\n");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("graph6,n,m,", 0) == 0);
    CHECK(csv.out.find("D??,5,0,0,0,0,filtered") != std::string::npos);
}

TEST_CASE("cli formula and aut")
{
    auto f = run_cli("formula friendship 10", "");
    CHECK(f.status == 0);
    CHECK(json_lines(f.out).at(0).at("value") == 4);
    CHECK(json_lines(run_cli("formula cycle 5", "").out).at(0).at("value") == 3);

    auto a = run_cli("aut", "IheA@GUAo\n");
    CHECK(a.status == 0);
    CHECK(json_lines(a.out).at(0).at("order") == 120);
}

TEST_CASE("cli usage errors exit with 2")
{
    CHECK(run_cli("", "").status == 2);
    CHECK(run_cli("exact --budget-nodes -3", "").status == 2);
    CHECK(run_cli("verify --mode thm99", "").status == 2);
    CHECK(run_cli("formula bogus 1", "").status == 2);
    CHECK(run_cli("formula path", "").status == 2);
}
