#include <besselcx/complex_bessel.hpp>
#include <besselcx/special_functions.hpp>
#include <besselcx/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace besselcx;

namespace {

cplx parse_complex(const std::string& s)
{
    std::vector<double> v = parse_double_list(s);
    if (v.size() > 2)
        throw DomainError("expected RE or RE,IM: " + s);
    return {v[0], v.size() == 2 ? v[1] : 0.0};
}

PolarPoint parse_polar(const std::string& s)
{
    std::vector<double> v = parse_double_list(s);
    if (v.size() != 2)
        throw DomainError("expected R,THETA: " + s);
    return PolarPoint(v[0], v[1]);
}

std::string format_value(cplx z)
{
    std::ostringstream os;
    os.precision(15);
    if (std::abs(z.imag()) <= 1e-15 * std::abs(z.real()))
        os << z.real();
    else
        os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

cplx evaluate(const std::string& form, cplx mu, int m, cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    OrderPair o{mu, m};
    if (form == "bold")
        return bold_j(o, z, cfg);
    if (form == "pair")
        return j_pair(o, z, cfg);
    if (form == "sq")
        return bold_j_sq(o, z, cfg);
    if (form == "j")
        return bessel_j(nu, z, cfg);
    if (form == "i")
        return bessel_i(nu, z, cfg);
    if (form == "k")
        return bessel_k(nu, z, cfg);
    if (form == "h1")
        return hankel_h1(nu, z, cfg);
    if (form == "h2")
        return hankel_h2(nu, z, cfg);
    throw DomainError("unknown form " + form);
}

const std::vector<std::string> forms = {"bold", "pair", "sq", "j", "i", "k", "h1", "h2"};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bessel kernels over the complex numbers: evaluation and identity checks"};
    app.require_subcommand(1);

    std::string mu_s = "0,0", nu_s = "0,0", z_s, form = "bold", config_path;
    int m = 0;
    auto* eval = app.add_subcommand("eval", "Evaluate a kernel or a classical Bessel function at one point");
    eval->add_option("--mu", mu_s, "kernel parameter RE,IM");
    eval->add_option("--m", m, "kernel integer parameter");
    eval->add_option("--nu", nu_s, "order of a classical function RE,IM");
    eval->add_option("--z", z_s, "argument R,THETA (angle unreduced)")->required();
    eval->add_option("--form", form, "bold|pair|sq|j|i|k|h1|h2")->check(CLI::IsMember(forms));

    std::string suite, tol_s, eps_s, report_path, format = "json";
    std::vector<std::string> mus;
    std::vector<int> ms;
    int kmax = 40;
    bool timing = false, no_edge = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", suite, "theorem1|theorem2|weber|corollary|combinatorics|asymptotics|ode|all")
        ->required()
        ->check(CLI::IsMember(suites));
    verify->add_option("--tol", tol_s, "tolerance for every asserted case");
    verify->add_option("--eps-schedule", eps_s, "decreasing regularization parameters, comma separated");
    verify->add_option("--report", report_path, "write the report here instead of stdout");
    verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--mu", mus, "restrict to these mu (RE,IM); pairs with --m");
    verify->add_option("--m", ms, "restrict to these m");
    verify->add_option("--kmax", kmax, "index bound of the exact certificates");
    verify->add_option("--config", config_path, "key = value file");
    verify->add_flag("--timing", timing, "record elapsed times in the report");
    verify->add_flag("--no-edge", no_edge, "skip the cases reported but not asserted");

    std::string rgrid = "1,2,4,8", agrid = "0,0.785398163397448,1.5707963267949";
    auto* table = app.add_subcommand("table", "Print values over a polar grid as CSV");
    table->add_option("--mu", mu_s, "kernel parameter RE,IM");
    table->add_option("--m", m, "kernel integer parameter");
    table->add_option("--nu", nu_s, "order of a classical function RE,IM");
    table->add_option("--form", form, "bold|pair|sq|j|i|k|h1|h2")->check(CLI::IsMember(forms));
    table->add_option("--radii", rgrid, "comma separated radii");
    table->add_option("--angles", agrid, "comma separated angles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            cplx v = evaluate(form, parse_complex(mu_s), m, parse_complex(nu_s), parse_polar(z_s), {});
            std::cout << format_value(v) << "\n";
            return 0;
        }
        if (*table) {
            cplx mu = parse_complex(mu_s), nu = parse_complex(nu_s);
            std::cout << "r,theta,re,im\n";
            std::cout.precision(17);
            for (double r : parse_double_list(rgrid))
                for (double a : parse_double_list(agrid)) {
                    cplx v = evaluate(form, mu, m, nu, PolarPoint(r, a), {});
                    std::cout << r << "," << a << "," << v.real() << "," << v.imag() << "\n";
                }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    VerifyOptions opts;
    try {
        if (!config_path.empty())
            apply_config_file(config_path, opts);
        if (!tol_s.empty())
            opts.tolerance = parse_double_list(tol_s).at(0);
        if (!eps_s.empty()) {
            opts.schedule.epsilons = parse_double_list(eps_s);
            if (opts.schedule.epsilons.size() == 1)
                opts.schedule.extrapolation_order = 1;
            opts.schedule.validate();
        }
        if (!mus.empty() || !ms.empty()) {
            if (mus.empty())
                mus.push_back("0.1");
            if (ms.empty())
                ms.push_back(0);
            for (const auto& mu : mus)
                for (int mm : ms)
                    opts.orders.push_back({parse_complex(mu), mm});
        }
        opts.k_max = kmax;
        opts.timing = timing;
        opts.edge_cases = !no_edge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    VerificationReport report;
    try {
        report = run_suite(suite, opts);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string text = format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return 2;
        }
        out << text;
    }
    ReportSummary s = report.summary();
    std::cerr << suite << ": " << s.passed << " passed, " << s.failed << " failed, " << s.errors << " errors, "
              << s.reported << " reported\n";
    return report.ok() ? 0 : 1;
}
