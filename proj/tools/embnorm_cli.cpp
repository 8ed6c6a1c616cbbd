#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <embnorm/bounds.hpp>
#include <embnorm/errors.hpp>
#include <embnorm/verify.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

struct RunConfig {
    std::string weights = "product";
    std::string gammas_text;
    double omega = 1.0;
    int q = 1;
    double c = 1.0;
    double beta1 = 0.5;
    double beta2 = 1.0;
    std::string file;
    std::string p_text = "2";
    int s = 0;
    std::string s_range;
    std::string out;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    int max_iters = 50000;
    std::string suite;
    int max_s = 10;
};

std::vector<double> parse_gammas(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad gamma entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("--gammas is empty");
    return out;
}

embnorm::WeightScheme make_scheme(const RunConfig& cfg, int s) {
    using namespace embnorm;
    if (cfg.weights == "product") {
        if (cfg.gammas_text.empty())
            throw std::invalid_argument("product weights need --gammas");
        std::vector<double> g = parse_gammas(cfg.gammas_text);
        if (g.size() == 1) g.assign(static_cast<std::size_t>(s), g.front());
        if (g.size() != static_cast<std::size_t>(s))
            throw std::invalid_argument("--gammas needs 1 or s entries");
        return WeightScheme{ProductWeights{std::move(g)}};
    }
    if (cfg.weights == "fow")
        return WeightScheme{FiniteOrderWeights{cfg.omega, cfg.q}};
    if (cfg.weights == "fdw")
        return WeightScheme{FiniteDiameterWeights{cfg.omega, cfg.q}};
    if (cfg.weights == "pod")
        return WeightScheme{PodWeights{cfg.c, cfg.beta1, cfg.beta2}};
    if (cfg.weights == "explicit") {
        if (cfg.file.empty())
            throw std::invalid_argument("explicit weights need --file");
        return load_explicit_weights_file(cfg.file, s);
    }
    throw std::invalid_argument("unknown weight scheme '" + cfg.weights + "'");
}

embnorm::BoundOptions make_options(const RunConfig& cfg) {
    embnorm::BoundOptions opts;
    opts.power.tol = cfg.tol;
    opts.power.max_iters = cfg.max_iters;
    opts.power.seed = cfg.seed;
    return opts;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_p(double p) { return std::isinf(p) ? "inf" : fmt17(p); }

nlohmann::ordered_json report_json(const embnorm::BoundReport& r) {
    nlohmann::ordered_json j;
    j["scheme"] = r.scheme;
    j["s"] = r.s;
    j["p"] = std::isinf(r.p) ? nlohmann::ordered_json("inf")
                             : nlohmann::ordered_json(r.p);
    j["lower_bound"] = r.lower_bound;
    j["lower_bound_simple"] = r.lower_bound_simple;
    j["exact"] = r.exact ? nlohmann::ordered_json(*r.exact)
                         : nlohmann::ordered_json(nullptr);
    j["upper_bound"] = r.upper_bound ? nlohmann::ordered_json(*r.upper_bound)
                                     : nlohmann::ordered_json(nullptr);
    j["method"] = r.method;
    j["iterations"] = r.iterations;
    j["residual"] = r.residual;
    return j;
}

std::string csv_row(const embnorm::BoundReport& r) {
    std::string row = std::to_string(r.s) + "," + fmt_p(r.p) + "," +
                      fmt17(r.lower_bound) + "," + fmt17(r.lower_bound_simple) + ",";
    row += r.upper_bound ? fmt17(*r.upper_bound) : std::string();
    row += ",";
    row += r.exact ? fmt17(*r.exact) : std::string();
    row += "," + r.method;
    return row;
}

void print_text(const embnorm::BoundReport& r) {
    std::cout << "scheme             " << r.scheme << "\n"
              << "s                  " << r.s << "\n"
              << "p                  " << fmt_p(r.p) << "\n"
              << "lower_bound        " << fmt17(r.lower_bound) << "\n"
              << "lower_bound_simple " << fmt17(r.lower_bound_simple) << "\n"
              << "exact              " << (r.exact ? fmt17(*r.exact) : "n/a") << "\n"
              << "upper_bound        "
              << (r.upper_bound ? fmt17(*r.upper_bound) : "n/a") << "\n"
              << "method             " << r.method << "\n"
              << "iterations         " << r.iterations << "\n"
              << "residual           " << fmt17(r.residual) << "\n";
}

std::vector<int> parse_s_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3)
        throw std::invalid_argument("--s-range wants a:b[:log|:lin]");
    const int a = std::stoi(parts[0]);
    const int b = std::stoi(parts[1]);
    const std::string mode = parts.size() == 3 ? parts[2] : "log";
    if (a < 1 || b < a) throw std::invalid_argument("--s-range must be ascending");
    std::vector<int> out;
    if (mode == "log") {
        for (long long s = a; s <= b; s *= 2) out.push_back(static_cast<int>(s));
        if (out.back() != b) out.push_back(b);
    } else if (mode == "lin") {
        const int n = std::min(33, b - a + 1);
        for (int i = 0; i < n; ++i) {
            const int s = a + static_cast<int>(
                std::llround(static_cast<double>(i) * (b - a) / std::max(1, n - 1)));
            if (out.empty() || out.back() != s) out.push_back(s);
        }
    } else {
        throw std::invalid_argument("--s-range mode must be log or lin");
    }
    return out;
}

int run_compute(const RunConfig& cfg) {
    if (cfg.s < 1) throw std::invalid_argument("compute needs --s >= 1");
    const auto exps = embnorm::ExponentPair::parse(cfg.p_text);
    const auto scheme = make_scheme(cfg, cfg.s);
    const auto report = embnorm::compute_report(scheme, cfg.s, exps, make_options(cfg));
    if (!report.orderings_hold()) {
        std::cerr << "internal error: report violates bound orderings\n";
        return kExitInvariant;
    }
    const std::string out = cfg.out.empty() ? "json" : cfg.out;
    if (out == "json") {
        std::cout << report_json(report).dump(2) << "\n";
    } else if (out == "csv") {
        std::cout << "s,p,lower_bound,lower_bound_simple,upper_bound,exact,method\n"
                  << csv_row(report) << "\n";
    } else if (out == "text") {
        print_text(report);
    } else {
        throw std::invalid_argument("--out must be json, csv or text");
    }
    return kExitOk;
}

int run_scan(const RunConfig& cfg) {
    if (cfg.s_range.empty()) throw std::invalid_argument("scan needs --s-range");
    if (!cfg.out.empty() && cfg.out != "csv")
        throw std::invalid_argument("scan emits CSV only");
    const auto exps = embnorm::ExponentPair::parse(cfg.p_text);
    const auto svals = parse_s_range(cfg.s_range);
    const auto opts = make_options(cfg);

    std::vector<std::future<embnorm::BoundReport>> rows;
    rows.reserve(svals.size());
    for (int s : svals)
        rows.push_back(std::async(std::launch::async, [&cfg, s, &exps, &opts] {
            return embnorm::compute_report(make_scheme(cfg, s), s, exps, opts);
        }));

    std::cout << "s,p,lower_bound,lower_bound_simple,upper_bound,exact,method\n";
    std::vector<std::pair<double, double>> growth;
    for (auto& f : rows) {
        const auto report = f.get();
        if (!report.orderings_hold()) {
            std::cerr << "internal error: report violates bound orderings at s = "
                      << report.s << "\n";
            return kExitInvariant;
        }
        std::cout << csv_row(report) << "\n";
        growth.emplace_back(report.s, report.lower_bound);
    }
    if (growth.size() >= 5)
        std::cout << "# growth_exponent," << fmt17(embnorm::fit_growth_rate(growth))
                  << "\n";
    else
        std::cout << "# growth_exponent,n/a\n";
    return kExitOk;
}

int run_verify(const RunConfig& cfg) {
    const auto results = embnorm::run_suites(cfg.suite, cfg.max_s, cfg.seed);
    bool all = true;
    for (const auto& r : results) {
        std::cout << r.name << " " << (r.passed ? "pass" : "FAIL")
                  << " worst_residual=" << fmt17(r.worst_residual);
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.passed;
    }
    return all ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embedding norms between weighted anchored and ANOVA spaces"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--weights", cfg.weights,
                        "product|fow|fdw|pod|explicit");
        sub->add_option("--gammas", cfg.gammas_text, "comma-separated gamma_j");
        sub->add_option("--omega", cfg.omega, "omega for fow/fdw");
        sub->add_option("--q", cfg.q, "order / diameter cap");
        sub->add_option("--c", cfg.c, "POD scale c");
        sub->add_option("--beta1", cfg.beta1, "POD factorial exponent");
        sub->add_option("--beta2", cfg.beta2, "POD coordinate decay exponent");
        sub->add_option("--file", cfg.file, "explicit weight table path");
        sub->add_option("--p", cfg.p_text, "exponent: decimal, fraction or inf");
        sub->add_option("--out", cfg.out, "json|csv|text");
        sub->add_option("--tol", cfg.tol, "power-iteration tolerance");
        sub->add_option("--seed", cfg.seed, "seed for randomized starts");
        sub->add_option("--max-iters", cfg.max_iters, "power-iteration cap");
    };

    CLI::App* compute = app.add_subcommand("compute", "one report for fixed s");
    add_common(compute);
    compute->add_option("--s", cfg.s, "number of variables");

    CLI::App* scan = app.add_subcommand("scan", "CSV scaling study over s");
    add_common(scan);
    scan->add_option("--s-range", cfg.s_range, "a:b[:log|:lin]");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle suites");
    verify->add_option("--suite", cfg.suite,
                       "eqell|endpoint|kronecker|witness|support (default all)");
    verify->add_option("--max-s", cfg.max_s, "largest dimension to enumerate");
    verify->add_option("--seed", cfg.seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (compute->parsed()) return run_compute(cfg);
        if (scan->parsed()) return run_scan(cfg);
        return run_verify(cfg);
    } catch (const embnorm::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
