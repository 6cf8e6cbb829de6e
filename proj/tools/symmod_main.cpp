//
// symmod command-line front end: run verifier suites, run sharpness searches,
// print the worked example. Exit status is nonzero iff any record fails or an
// error occurs.
//

#include "symmod/symmod.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

namespace {

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_summary(const symmod::Report& report) {
    const symmod::json j = symmod::report_to_json(report);
    if (j.contains("result")) {
        const auto& r = j.at("result");
        std::cout << "search target " << r.at("target").get<std::string>()
                  << ": best value " << r.at("best_value").get<double>() << " ("
                  << r.at("budget_used").get<long>() << " evaluations)\n";
        return;
    }
    if (!j.contains("aggregates")) return;
    for (const auto& [key, a] : j.at("aggregates").at("by_statement").items()) {
        std::cout << key << ": " << a.value("records", 0) << " records, pass rate "
                  << a.value("pass_rate", 0.0);
        if (a.contains("worst_margin"))
            std::cout << ", worst margin " << a.at("worst_margin").get<double>();
        if (a.contains("max_ratio"))
            std::cout << ", max ratio " << a.at("max_ratio").get<double>();
        std::cout << '\n';
    }
    const auto& overall = j.at("aggregates").at("overall");
    std::cout << "overall pass rate: " << overall.value("pass_rate", 0.0) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmod: triangle inequalities for the operator symmetric modulus"};
    app.require_subcommand(1);

    symmod::RunConfig cfg;
    cfg.threads = default_threads();

    std::string dims_csv = "2,3,4,5";
    std::string m_csv = "1,2,3";

    auto parse_int_list = [](const std::string& csv) {
        std::vector<int> out;
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(std::stoi(item));
        if (out.empty()) throw CLI::ValidationError("list must be nonempty");
        return out;
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verifier suite over random trials");
    verify->add_option("--suite", cfg.suite, "suite id (thm-2.1, cor-2.2, ..., eqc2, all)")
        ->required();
    verify->add_option("--trials", cfg.trials, "trials per suite")->capture_default_str();
    verify->add_option("--dims", dims_csv, "comma-separated dimensions")->capture_default_str();
    verify->add_option("--m", m_csv, "comma-separated family sizes")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "root seed")
        ->envname("SYMMOD_SEED")
        ->capture_default_str();
    verify->add_option("--tol", cfg.tol_rel, "relative tolerance")->capture_default_str();
    verify->add_option("--out", cfg.out_path, "report output path");
    verify->add_option("--format", cfg.format, "json or csv-summary")->capture_default_str();
    verify->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    verify->add_option("--input", cfg.input_path,
                       "matrix JSON file: verify the suite on these matrices instead of "
                       "sampling");

    CLI::App* search_cmd = app.add_subcommand("search", "run a sharpness/counterexample search");
    search_cmd
        ->add_option("--target", cfg.target,
                     "target id (opnorm-triangle-failure-m2, cor25-best-constant, "
                     "quarter-sharpness-m3, frobenius-constant, cor24-best-constant)")
        ->required();
    search_cmd->add_option("--budget", cfg.budget, "objective evaluations")->capture_default_str();
    search_cmd->add_option("--dim", cfg.dim, "matrix dimension (0 = target default)")
        ->capture_default_str();
    search_cmd->add_option("--m", cfg.m, "family size where applicable")->capture_default_str();
    search_cmd->add_option("--seed", cfg.seed, "root seed")
        ->envname("SYMMOD_SEED")
        ->capture_default_str();
    search_cmd->add_option("--out", cfg.out_path, "report output path");
    search_cmd->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();

    CLI::App* demo = app.add_subcommand("demo", "print the worked nilpotent example");

    CLI11_PARSE(app, argc, argv);

    try {
        if (demo->parsed()) {
            std::cout << symmod::demo_text();
            return 0;
        }
        cfg.dims = parse_int_list(dims_csv);
        cfg.m_values = parse_int_list(m_csv);

        symmod::Report report;
        if (verify->parsed())
            report = symmod::run_verify(cfg);
        else
            report = symmod::run_search(cfg);

        if (!cfg.out_path.empty())
            symmod::write_report(report, cfg.out_path, cfg.format, /*include_witnesses=*/true);
        print_summary(report);
        return report.any_fail ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
