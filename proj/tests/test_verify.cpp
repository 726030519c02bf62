#include <besselcx/verify.hpp>

#include "test_util.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace besselcx;

namespace {

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("besselcx_test_" + name)).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const std::string& out)
{
    std::string cmd = std::string(BESSELCX_CLI) + " " + args + " > " + out + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

} // namespace

TEST_SUITE("verify")
{
    TEST_CASE("compare_case")
    {
        VerificationCase a = compare_case("x", {}, 1.0 + 1e-7, 1.0, 1e-6);
        CHECK(a.status == "pass");
        REQUIRE(a.rel_diff);
        CHECK(*a.rel_diff == doctest::Approx(1e-7));
        CHECK(compare_case("x", {}, 1.1, 1.0, 1e-6).status == "fail");

        VerificationCase z = compare_case("x", {}, 1e-5, 0.0, 1e-4);
        CHECK_FALSE(z.rel_diff);
        CHECK(z.status == "pass");
        CHECK(compare_case("x", {}, 2e-4, 0.0, 1e-4).status == "fail");
        CHECK(compare_case("x", {}, 1.0005, 1.0, 1e-3, "absolute").status == "pass");
        CHECK(compare_case("x", {}, cplx(NAN, 0), 1.0, 1e-3).status == "fail");
    }

    TEST_CASE("report summary and schema")
    {
        VerificationReport r;
        r.suite = "demo";
        CHECK_FALSE(r.ok());
        r.cases.push_back(compare_case("a", {{"k", 1}}, 1.0, 1.0, 1e-6));
        CHECK(r.ok());
        VerificationCase rep = compare_case("b", {}, 1.0, 2.0, 1e-6);
        rep.status = "reported";
        r.cases.push_back(rep);
        CHECK(r.ok());
        VerificationCase err;
        err.status = "error";
        r.cases.push_back(err);
        CHECK_FALSE(r.ok());
        ReportSummary s = r.summary();
        CHECK(s.total == 3);
        CHECK(s.passed == 1);
        CHECK(s.reported == 1);
        CHECK(s.errors == 1);

        ojson j = r.to_json();
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it)
            keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"suite", "convention_header", "cases", "summary", "metadata"});
        CHECK(j["convention_header"] == convention_header);
        CHECK(j["cases"].size() == 3);

        std::string csv = r.to_csv();
        CHECK(csv.find("lhs_re,lhs_im,rhs_re,rhs_im") != std::string::npos);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    }

    TEST_CASE("option parsing")
    {
        std::vector<double> v = parse_double_list("0.2, 0.1,0.05");
        CHECK(v == std::vector<double>{0.2, 0.1, 0.05});
        CHECK_THROWS_AS(parse_double_list("0.2,abc"), DomainError);
        CHECK_THROWS_AS(parse_double_list(""), DomainError);

        std::string path = temp_path("config.txt");
        {
            std::ofstream out(path);
            out << "# comment\nepsilons = 0.4, 0.2, 0.1\nextrapolation_order = 1\nk_max = 12\ntolerance = 1e-5\n"
                << "edge_cases = false  # trailing\n";
        }
        VerifyOptions o;
        apply_config_file(path, o);
        CHECK(o.schedule.epsilons == std::vector<double>{0.4, 0.2, 0.1});
        CHECK(o.schedule.extrapolation_order == 1);
        CHECK(o.k_max == 12);
        CHECK(*o.tolerance == 1e-5);
        CHECK_FALSE(o.edge_cases);
        {
            std::ofstream out(path);
            out << "bogus = 1\n";
        }
        CHECK_THROWS_AS(apply_config_file(path, o), DomainError);
        {
            std::ofstream out(path);
            out << "epsilons = 0.1, 0.2, 0.05\n";
        }
        CHECK_THROWS_AS(apply_config_file(path, o), DomainError);
        std::remove(path.c_str());
    }

    TEST_CASE("weber suite")
    {
        VerificationReport r = verify_weber({1.0}, {2.0, 1.0}, {1});
        CHECK(r.ok());
        REQUIRE(r.cases.size() >= 2);
        CHECK(abs_err(*r.cases[0].rhs, 1 / pi) < 1e-12);
        CHECK(r.to_json().dump() == verify_weber({1.0}, {2.0, 1.0}, {1}).to_json().dump());
        CHECK_THROWS_AS(run_suite("nonsense"), DomainError);
    }

    TEST_CASE("theorem2 restricted")
    {
        VerifyOptions o;
        o.orders = {{0.1, 2}};
        VerificationReport r = run_suite("theorem2", o);
        CHECK(r.ok());
        for (const auto& c : r.cases)
            CHECK(c.status == "pass");
        CHECK(r.metadata.contains("options"));
    }

    TEST_CASE("cli")
    {
        std::string out = temp_path("cli_out.txt");
        CHECK(run_cli("eval --mu 0.25,0 --m 0 --z 0.0625,0 --form bold", out) == 0);
        CHECK(slurp(out) == "4\n");
        CHECK(run_cli("eval --mu 0.1 --m 1 --z 1,0 --form bold", out) == 2);
        CHECK(run_cli("eval --z 1", out) == 2);
        CHECK(run_cli("verify nosuch", out) == 2);
        CHECK(run_cli("frobnicate", out) == 2);

        std::string rep = temp_path("cli_report.json");
        CHECK(run_cli("verify theorem2 --mu 0.1,0 --m 2 --report " + rep, out) == 0);
        ojson j = ojson::parse(slurp(rep));
        CHECK(j["suite"] == "theorem2");
        CHECK(j["summary"]["failed"] == 0);
        CHECK(run_cli("verify weber --tol 1e-30", out) == 1);
        CHECK(run_cli("verify combinatorics --kmax 8 --format csv", out) == 0);
        CHECK(slurp(out).rfind("# ", 0) == 0);

        CHECK(run_cli("table --form j --nu 0.5 --radii 3.141592653589793 --angles 0", out) == 0);
        std::string t = slurp(out);
        CHECK(t.rfind("r,theta,re,im\n", 0) == 0);
        std::remove(out.c_str());
        std::remove(rep.c_str());
    }
}
