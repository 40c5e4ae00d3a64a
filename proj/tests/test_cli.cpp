#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = polya::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    return parts;
}

} // namespace

TEST_CASE("loops table")
{
    const auto r = run({"loops", "--d", "2", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,loops,indecomposable\n0,1,0\n2,4,4\n4,36,20\n");
}

TEST_CASE("series table")
{
    const auto r = run({"series", "--d", "1", "--max-n", "4"});
    REQUIRE(r.code == 0);
    const auto lines = split(r.out, '\n');
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,p_n,p_n_decimal,q_n,q_n_decimal,partial_p,partial_p_decimal");
    CHECK(lines[5] == "4,1/8,0.125,3/8,0.375,5/8,0.625");
}

TEST_CASE("polya row")
{
    const auto r = run({"polya", "--d", "3"});
    REQUIRE(r.code == 0);
    const auto lines = split(r.out, '\n');
    REQUIRE(lines.size() == 2);
    const auto cells = split(lines[1], ',');
    REQUIRE(cells.size() == 4);
    CHECK(cells[0] == "3");
    CHECK(cells[1] == "transient");
    CHECK(std::fabs(std::stod(cells[2]) - 0.340537) < 1e-6);
    CHECK(std::stod(cells[3]) <= 1e-4);

    const auto rec = run({"polya", "--d", "1", "--d", "2"});
    CHECK(rec.out == "d,classification,p,error_estimate\n1,recurrent,1,0\n2,recurrent,1,0\n");
}

TEST_CASE("exit codes")
{
    const auto div = run({"qintegral", "--d", "2", "--z", "1"});
    CHECK(div.code == polya::cli::kDomain);
    CHECK(div.out.empty());
    CHECK(div.err.find("diverges") != std::string::npos);

    CHECK(run({}).code == polya::cli::kUsage);
    CHECK(run({"nonsense"}).code == polya::cli::kUsage);
    CHECK(run({"loops", "--d", "0"}).code == polya::cli::kUsage);
    CHECK(run({"qintegral", "--z", "1.5"}).code == polya::cli::kUsage);
    CHECK(run({"mc", "--horizon", "1"}).code == polya::cli::kUsage);
    CHECK(run({"qintegral", "--tol", "-1"}).code == polya::cli::kUsage);
    CHECK(run({"--help"}).code == polya::cli::kOk);
    CHECK(run({"qintegral", "--d", "3", "--z", "1", "--tol", "1e-8", "--split", "400"}).code ==
          polya::cli::kOk);
}

TEST_CASE("tolerance failure maps to exit 3")
{
    // Far below rounding noise: the panel cap stops the refinement.
    const auto r = run({"qintegral", "--d", "3", "--z", "0.5", "--tol", "1e-300"});
    CHECK(r.code == polya::cli::kTolerance);
}

TEST_CASE("--out writes the table to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "polya_cli_out_test.csv";
    std::filesystem::remove(path);
    const auto r = run({"loops", "--d", "1", "--max-n", "2", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "n,loops,indecomposable\n0,1,0\n2,2,2\n");
    std::filesystem::remove(path);
}

TEST_CASE("every subcommand is deterministic")
{
    const std::vector<std::vector<std::string>> commands = {
        {"loops", "--d", "3", "--max-n", "12"},
        {"series", "--d", "2", "--max-n", "20"},
        {"bessel", "--x", "0.5", "--x", "30"},
        {"qintegral", "--d", "3", "--z", "0.5", "--z", "1"},
        {"polya", "--d", "3", "--d", "4"},
        {"mc", "--d", "3", "--trials", "2000", "--horizon", "500", "--seed", "5"},
        {"compare", "--d", "3", "--trials", "2000", "--horizon", "500", "--max-n", "16"},
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd.front());
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("decimal cells round-trip at 17 significant digits")
{
    for (double v : {0.1, 1.0 / 3.0, 0.34053732955099947, 1e-300, 2.0396871734097258e+85, 0.0, -2.5})
        CHECK(std::strtod(polya::cli::format_double(v).c_str(), nullptr) == v);

    const auto r = run({"bessel", "--x", "1", "--x", "7.25"});
    REQUIRE(r.code == 0);
    const auto lines = split(r.out, '\n');
    for (std::size_t i = 1; i < lines.size(); ++i)
        for (const auto& cell : split(lines[i], ',')) {
            const double v = std::strtod(cell.c_str(), nullptr);
            CHECK(polya::cli::format_double(v) == cell);
        }
}
