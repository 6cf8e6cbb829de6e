#pragma once
//
// symmod/report.hpp
//
// Suite orchestration and machine-readable reports: runs a named verifier
// suite (or a search target) across a deterministic trial grid, fans trials
// out to a worker pool, and assembles a single JSON document (or a CSV
// summary) whose numeric content replays bit-identically for a fixed config.
//

#include "symmod/matcore.hpp"
#include "symmod/probe.hpp"
#include "symmod/sampler.hpp"
#include "symmod/theorem_suite.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#ifndef SYMMOD_VERSION
#define SYMMOD_VERSION "0.0.0"
#endif

namespace symmod {

using json = nlohmann::json;

struct RunConfig {
    std::string suite;   // verify
    std::string target;  // search
    long trials = 50;
    std::vector<int> dims{2, 3, 4, 5};
    std::vector<int> m_values{1, 2, 3};
    std::uint64_t seed = 42;
    double tol_rel = 1e-8;
    std::string out_path;
    std::string format = "json";  // json | csv-summary
    int threads = 1;
    std::string input_path;  // ad-hoc matrices for verify
    long budget = 10000;     // search
    int dim = 0;             // search (0 = target default)
    int m = 0;               // search (0 = target default)

    Tolerance tolerance() const { return Tolerance{tol_rel, 1e-12}; }
};

struct TrialRecord {
    std::string suite;
    long trial = 0;
    std::uint64_t seed = 0;
    int dim = 0;
    int m = 0;
    std::string ensemble;
    WitnessReport report;
};

struct Report {
    RunConfig config;
    std::vector<TrialRecord> records;
    json search_result;  // only for searches
    double wall_time_sec = 0.0;
    bool any_fail = false;
};

// --------------------------------------------------------------------------
// Matrix file I/O: {"n": int, "re": row-major, "im": row-major}, either a
// single object, an array, {"matrices": [...]}, or a search report carrying
// result.argmax.
// --------------------------------------------------------------------------

inline json matrix_to_json(const cmat& m) {
    json j;
    j["n"] = m.rows();
    std::vector<double> re, im;
    re.reserve(m.size());
    im.reserve(m.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index jj = 0; jj < m.cols(); ++jj) {
            re.push_back(m(i, jj).real());
            im.push_back(m(i, jj).imag());
        }
    j["re"] = re;
    j["im"] = im;
    return j;
}

inline cmat matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re"))
        throw std::invalid_argument("matrix json must carry fields n and re");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix json: n must be >= 1");
    const auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(static_cast<std::size_t>(n) * n, 0.0);
    if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
    if (re.size() != static_cast<std::size_t>(n) * n || im.size() != re.size())
        throw std::invalid_argument("matrix json: entry arrays must have n*n values");
    cmat m(n, n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            m(i, jj) = complexd(re[idx], im[idx]);
            ++idx;
        }
    detail::require_finite(m, "matrix_from_json");
    return m;
}

inline std::vector<cmat> matrices_from_json(const json& doc) {
    std::vector<cmat> out;
    if (doc.is_array()) {
        for (const auto& item : doc) out.push_back(matrix_from_json(item));
    } else if (doc.contains("matrices")) {
        for (const auto& item : doc.at("matrices")) out.push_back(matrix_from_json(item));
    } else if (doc.contains("result") && doc.at("result").contains("argmax")) {
        for (const auto& item : doc.at("result").at("argmax")) out.push_back(matrix_from_json(item));
    } else {
        out.push_back(matrix_from_json(doc));
    }
    if (out.empty()) throw std::invalid_argument("matrix file contains no matrices");
    return out;
}

inline std::vector<cmat> load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    json doc;
    in >> doc;
    return matrices_from_json(doc);
}

// --------------------------------------------------------------------------
// Suite registry
// --------------------------------------------------------------------------

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> suites{
        "thm-2.1",  "cor-2.2", "cor-2.3", "cor-2.4",     "cor-2.5",  "cor-1.2-1.4",
        "thm-3.4",  "cor-3.5", "cor-3.6", "cor-3.7",     "cor-4.2",  "eq-schur",
        "cor-5.1",  "eqc2",    "thm-6.2", "cor-6.3",     "question-6.4"};
    return suites;
}

namespace detail {

// Families for the general statements rotate through Ginibre tuples, normal
// tuples, and splits of an involution.
inline std::vector<cmat> general_family(Rng& rng, int n, int m, int rot, std::string& name) {
    switch (rot % 3) {
        case 0: {
            name = "ginibre";
            std::vector<cmat> xs;
            for (int k = 0; k < m; ++k) xs.push_back(sample_ginibre(n, rng));
            return xs;
        }
        case 1: {
            name = "normal";
            std::vector<cmat> xs;
            EnsembleSpec spec{EnsembleSpec::Kind::normal, n};
            for (int k = 0; k < m; ++k) xs.push_back(sample(spec, rng));
            return xs;
        }
        default: {
            name = "involution-split";
            EnsembleSpec spec{EnsembleSpec::Kind::involution, n};
            return split_sum(sample(spec, rng), m, rng);
        }
    }
}

// Families whose sum is polar Hermitian by construction.
inline std::vector<cmat> polar_hermitian_family(Rng& rng, int n, int m, int rot,
                                                std::string& name) {
    EnsembleSpec spec;
    spec.dim = n;
    switch (rot % 3) {
        case 0:
            name = "polar-hermitian-split";
            spec.kind = EnsembleSpec::Kind::polar_hermitian;
            break;
        case 1:
            name = "involution-split";
            spec.kind = EnsembleSpec::Kind::involution;
            break;
        default:
            name = "hermitian-unitary-split";
            spec.kind = EnsembleSpec::Kind::hermitian_unitary;
            break;
    }
    return split_sum(sample(spec, rng), m, rng);
}

inline cmat expansive_sample(Rng& rng, int n) {
    const cmat u = sample_haar_unitary(n, rng);
    const cmat w = sample_haar_unitary(n, rng);
    const cmat g = sample_ginibre(n, rng);
    const cmat p = g.adjoint() * g / static_cast<double>(n);
    return u * (cmat::Identity(n, n) + p) * w.adjoint();
}

}  // namespace detail

// Runs one trial of a named suite on freshly sampled inputs. Returns the
// reports plus the ensemble label used.
inline std::vector<WitnessReport> run_suite_trial(const std::string& suite, Rng& rng, int n,
                                                  int m, int rot, const Tolerance& tol,
                                                  std::string& ensemble,
                                                  long search_budget = 4000,
                                                  std::uint64_t search_seed = 0) {
    if (suite == "thm-2.1")
        return {verify_thm_2_1(detail::general_family(rng, n, m, rot, ensemble),
                               default_beta_grid(), tol)};
    if (suite == "cor-2.2")
        return {verify_cor_2_2(detail::general_family(rng, n, m, rot, ensemble), tol)};
    if (suite == "cor-2.3")
        return {verify_cor_2_3(detail::general_family(rng, n, m, rot, ensemble),
                               default_beta_grid(), tol)};
    if (suite == "cor-2.4")
        return {verify_cor_2_4(detail::general_family(rng, n, m, rot, ensemble), tol)};
    if (suite == "cor-2.5")
        return {verify_cor_2_5(detail::general_family(rng, n, m, rot, ensemble), tol)};
    if (suite == "cor-1.2-1.4") {
        ensemble = "ginibre";
        return {verify_cor_1_2_1_4(sample_ginibre(n, rng), tol)};
    }
    if (suite == "thm-3.4")
        return {verify_thm_3_4(detail::polar_hermitian_family(rng, n, m, rot, ensemble),
                               default_beta_grid(), tol)};
    if (suite == "cor-3.5")
        return {verify_cor_3_5(detail::polar_hermitian_family(rng, n, m, rot, ensemble), tol)};
    if (suite == "cor-3.6") {
        ensemble = "hermitian-unitary-split";
        EnsembleSpec spec{EnsembleSpec::Kind::hermitian_unitary, n};
        return {verify_cor_3_6(split_sum(sample(spec, rng), m, rng), tol)};
    }
    if (suite == "cor-3.7")
        return {verify_cor_3_7(detail::polar_hermitian_family(rng, n, m, rot, ensemble), tol)};
    if (suite == "cor-4.2") {
        ensemble = "normal";
        EnsembleSpec spec{EnsembleSpec::Kind::normal, n};
        const cmat a = sample(spec, rng);
        const cmat b = sample(spec, rng);
        return {verify_cor_4_2(a, b, tol)};
    }
    if (suite == "eq-schur") {
        ensemble = "normal";
        EnsembleSpec spec{EnsembleSpec::Kind::normal, n};
        const cmat a = sample(spec, rng);
        const cmat b = sample(spec, rng);
        return {verify_eq_schur(a, b, tol)};
    }
    if (suite == "cor-5.1") {
        ensemble = "ginibre";
        const cmat a = sample_ginibre(n, rng);
        const cmat b = sample_ginibre(n, rng);
        return {verify_cor_5_1(a, b, search_budget, search_seed, tol)};
    }
    if (suite == "eqc2") {
        ensemble = "ginibre";
        std::vector<cmat> as;
        for (int k = 0; k < m; ++k) as.push_back(sample_ginibre(n, rng));
        return {verify_eqc2(as, tol)};
    }
    if (suite == "thm-6.2")
        return {verify_thm_6_2(detail::polar_hermitian_family(rng, n, m, rot, ensemble),
                               GeoMeanConfig{}, tol)};
    if (suite == "cor-6.3")
        return {verify_cor_6_3(detail::polar_hermitian_family(rng, n, m, rot, ensemble), tol)};
    if (suite == "question-6.4") {
        ensemble = "expansive-split";
        const cmat x = detail::expansive_sample(rng, n);
        return {verify_question_6_4_probe(x, split_sum(x, m, rng), tol)};
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

// Ad-hoc verification of user-supplied matrices.
inline std::vector<WitnessReport> run_suite_on_matrices(const std::string& suite,
                                                        const std::vector<cmat>& xs,
                                                        const Tolerance& tol) {
    auto need = [&xs, &suite](std::size_t k) {
        if (xs.size() != k)
            throw std::invalid_argument(suite + ": expected " + std::to_string(k) +
                                        " matrices, got " + std::to_string(xs.size()));
    };
    if (suite == "thm-2.1") return {verify_thm_2_1(xs, default_beta_grid(), tol)};
    if (suite == "cor-2.2") return {verify_cor_2_2(xs, tol)};
    if (suite == "cor-2.3") return {verify_cor_2_3(xs, default_beta_grid(), tol)};
    if (suite == "cor-2.4") return {verify_cor_2_4(xs, tol)};
    if (suite == "cor-2.5") return {verify_cor_2_5(xs, tol)};
    if (suite == "cor-1.2-1.4") {
        need(1);
        return {verify_cor_1_2_1_4(xs[0], tol)};
    }
    if (suite == "thm-3.4") return {verify_thm_3_4(xs, default_beta_grid(), tol)};
    if (suite == "cor-3.5") return {verify_cor_3_5(xs, tol)};
    if (suite == "cor-3.6") return {verify_cor_3_6(xs, tol)};
    if (suite == "cor-3.7") return {verify_cor_3_7(xs, tol)};
    if (suite == "cor-4.2") {
        need(2);
        return {verify_cor_4_2(xs[0], xs[1], tol)};
    }
    if (suite == "eq-schur") {
        need(2);
        return {verify_eq_schur(xs[0], xs[1], tol)};
    }
    if (suite == "cor-5.1") {
        need(2);
        return {verify_cor_5_1(xs[0], xs[1], 20000, 0, tol)};
    }
    if (suite == "eqc2") return {verify_eqc2(xs, tol)};
    if (suite == "thm-6.2") return {verify_thm_6_2(xs, GeoMeanConfig{}, tol)};
    if (suite == "cor-6.3") return {verify_cor_6_3(xs, tol)};
    if (suite == "question-6.4") {
        if (xs.size() < 2)
            throw std::invalid_argument("question-6.4: need the target followed by its parts");
        return {verify_question_6_4_probe(xs[0], {xs.begin() + 1, xs.end()}, tol)};
    }
    if (suite == "opnorm-triangle-failure") {
        // Confirms that a loaded pair really breaks the operator-norm triangle
        // inequality for the symmetric modulus (while the sqrt(2) bound holds).
        need(2);
        WitnessReport rep;
        rep.statement_id = "opnorm-triangle-failure";
        rep.inputs_digest = detail::digest_all(xs);
        const double den = op_norm(sym_modulus(xs[0])) + op_norm(sym_modulus(xs[1]));
        rep.ratio = den > tol.abs_floor ? op_norm(sym_modulus(xs[0] + xs[1])) / den : 0.0;
        rep.bound = 1.0;
        rep.pass = rep.ratio > 1.0;
        const WitnessReport cap = verify_cor_2_5(xs, tol);
        rep.notes = "triangle ratio " + detail::fmt(rep.ratio) + " (counterexample iff > 1); " +
                    "sqrt2 norm ratio " + detail::fmt(cap.ratio) +
                    (cap.pass ? " within bound" : " EXCEEDS BOUND");
        rep.pass = rep.pass && cap.pass;
        return {rep};
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

// --------------------------------------------------------------------------
// Orchestration
// --------------------------------------------------------------------------

namespace detail {

inline void append_trial_records(std::vector<TrialRecord>& out, const std::string& suite,
                                 long trial, std::uint64_t trial_seed, int n, int m,
                                 const std::string& ensemble,
                                 std::vector<WitnessReport>&& reports) {
    for (auto& rep : reports) {
        TrialRecord rec;
        rec.suite = suite;
        rec.trial = trial;
        rec.seed = trial_seed;
        rec.dim = n;
        rec.m = m;
        rec.ensemble = ensemble;
        rec.report = std::move(rep);
        out.push_back(std::move(rec));
    }
}

inline std::vector<TrialRecord> run_suite_batch(const std::string& suite, const RunConfig& cfg) {
    const Tolerance tol = cfg.tolerance();
    const long trials = std::max<long>(cfg.trials, 1);
    const int nd = static_cast<int>(cfg.dims.size());
    const int nm = static_cast<int>(cfg.m_values.size());
    if (nd == 0 || nm == 0) throw std::invalid_argument("dims and m lists must be nonempty");
    for (int d : cfg.dims)
        if (d < 1) throw std::invalid_argument("dims must be >= 1");
    for (int m : cfg.m_values)
        if (m < 1) throw std::invalid_argument("m values must be >= 1");

    std::uint64_t suite_salt = 14695981039346656037ULL;  // FNV-1a, stable across platforms
    for (unsigned char c : suite) {
        suite_salt ^= c;
        suite_salt *= 1099511628211ULL;
    }
    auto run_one = [&](long t) {
        std::vector<TrialRecord> out;
        const int n = cfg.dims[static_cast<std::size_t>(t % nd)];
        const int m = cfg.m_values[static_cast<std::size_t>((t / nd) % nm)];
        const int rot = static_cast<int>(t);
        const std::uint64_t trial_seed = seed_stream(cfg.seed ^ suite_salt, static_cast<std::uint64_t>(t));
        Rng rng(trial_seed);
        std::string ensemble = "?";
        try {
            auto reports = run_suite_trial(suite, rng, n, m, rot, tol, ensemble, 4000, trial_seed);
            append_trial_records(out, suite, t, trial_seed, n, m, ensemble, std::move(reports));
        } catch (const std::exception& e) {
            WitnessReport rep;
            rep.statement_id = suite;
            rep.pass = false;
            rep.notes = std::string("error: ") + e.what();
            append_trial_records(out, suite, t, trial_seed, n, m, ensemble, {rep});
        }
        return out;
    };

    std::vector<std::vector<TrialRecord>> per_trial(static_cast<std::size_t>(trials));
    const int workers = std::max(1, cfg.threads);
    if (workers == 1) {
        for (long t = 0; t < trials; ++t) per_trial[static_cast<std::size_t>(t)] = run_one(t);
    } else {
        std::atomic<long> next{0};
        std::vector<std::future<void>> futs;
        for (int wkr = 0; wkr < workers; ++wkr)
            futs.push_back(std::async(std::launch::async, [&] {
                for (long t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
                    per_trial[static_cast<std::size_t>(t)] = run_one(t);
            }));
        for (auto& f : futs) f.get();
    }

    std::vector<TrialRecord> records;
    for (auto& chunk : per_trial)
        for (auto& rec : chunk) records.push_back(std::move(rec));
    return records;
}

}  // namespace detail

inline Report run_verify(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.config = cfg;

    if (!cfg.input_path.empty()) {
        const std::vector<cmat> xs = load_matrix_file(cfg.input_path);
        auto reports = run_suite_on_matrices(cfg.suite, xs, cfg.tolerance());
        detail::append_trial_records(report.records, cfg.suite, 0, cfg.seed,
                                     static_cast<int>(xs.front().rows()),
                                     static_cast<int>(xs.size()), "file", std::move(reports));
    } else {
        std::vector<std::string> suites;
        if (cfg.suite == "all")
            suites = all_suites();
        else
            suites = {cfg.suite};
        for (const auto& s : suites) {
            auto recs = detail::run_suite_batch(s, cfg);
            for (auto& r : recs) report.records.push_back(std::move(r));
        }
    }

    for (const auto& rec : report.records)
        if (!rec.report.pass) report.any_fail = true;
    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

inline Report run_search(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.config = cfg;
    const SearchTarget target = SearchTarget::from_name(cfg.target, cfg.dim, cfg.m);
    const SearchResult res = search(target, cfg.budget, cfg.seed, std::max(1, cfg.threads),
                                    cfg.tolerance());
    json jr;
    jr["target"] = target.name();
    jr["dim"] = target.dim;
    jr["m"] = target.m;
    jr["best_value"] = res.best_value;
    jr["budget_used"] = res.budget_used;
    jr["restart_best"] = res.restart_best;
    json argmax = json::array();
    for (const auto& mat : res.argmax) argmax.push_back(matrix_to_json(mat));
    jr["argmax"] = argmax;
    report.search_result = jr;
    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// --------------------------------------------------------------------------
// Serialization
// --------------------------------------------------------------------------

namespace detail {

inline void put_finite(json& j, const char* key, double v) {
    if (std::isfinite(v)) j[key] = v;
}

}  // namespace detail

inline json report_to_json(const Report& report, bool include_witnesses = false) {
    json j;
    json jc;
    jc["suite"] = report.config.suite;
    jc["target"] = report.config.target;
    jc["trials"] = report.config.trials;
    jc["dims"] = report.config.dims;
    jc["m_values"] = report.config.m_values;
    jc["seed"] = report.config.seed;
    jc["tol"] = report.config.tol_rel;
    jc["format"] = report.config.format;
    jc["input"] = report.config.input_path;
    jc["budget"] = report.config.budget;
    j["config"] = jc;
    j["tool_version"] = SYMMOD_VERSION;

    if (!report.search_result.is_null()) j["result"] = report.search_result;

    json records = json::array();
    std::map<std::string, json> agg;
    double worst_margin = std::numeric_limits<double>::infinity();
    double max_ratio = -std::numeric_limits<double>::infinity();
    std::uint64_t argext_seed = 0;
    long pass_count = 0;
    for (const auto& rec : report.records) {
        json r;
        r["suite"] = rec.suite;
        r["statement_id"] = rec.report.statement_id;
        r["trial"] = rec.trial;
        r["seed"] = rec.seed;
        r["dim"] = rec.dim;
        r["m"] = rec.m;
        r["ensemble"] = rec.ensemble;
        r["digest"] = rec.report.inputs_digest;
        r["pass"] = rec.report.pass;
        detail::put_finite(r, "margin", rec.report.margin);
        detail::put_finite(r, "ratio", rec.report.ratio);
        detail::put_finite(r, "bound", rec.report.bound);
        if (!rec.report.notes.empty()) r["notes"] = rec.report.notes;
        if (include_witnesses && !rec.report.witnesses.empty()) {
            json w = json::array();
            for (const auto& mat : rec.report.witnesses) w.push_back(matrix_to_json(mat));
            r["witnesses"] = w;
        }
        records.push_back(std::move(r));

        auto& a = agg[rec.report.statement_id];
        if (a.is_null()) a = json::object();
        a["records"] = a.value("records", 0) + 1;
        a["pass_count"] = a.value("pass_count", 0) + (rec.report.pass ? 1 : 0);
        if (std::isfinite(rec.report.margin) &&
            rec.report.margin < a.value("worst_margin", std::numeric_limits<double>::infinity())) {
            a["worst_margin"] = rec.report.margin;
            a["worst_margin_seed"] = rec.seed;
        }
        if (std::isfinite(rec.report.ratio) &&
            rec.report.ratio > a.value("max_ratio", -std::numeric_limits<double>::infinity())) {
            a["max_ratio"] = rec.report.ratio;
            a["max_ratio_seed"] = rec.seed;
        }
        if (rec.report.pass) ++pass_count;
        if (std::isfinite(rec.report.margin) && rec.report.margin < worst_margin) {
            worst_margin = rec.report.margin;
            argext_seed = rec.seed;
        }
        if (std::isfinite(rec.report.ratio)) max_ratio = std::max(max_ratio, rec.report.ratio);
    }
    if (!report.records.empty()) {
        j["records"] = std::move(records);
        json by_statement;
        for (auto& [k, v] : agg) {
            v["pass_rate"] = static_cast<double>(v.value("pass_count", 0)) /
                             std::max(1, v.value("records", 0));
            by_statement[k] = v;
        }
        json overall;
        overall["records"] = report.records.size();
        overall["pass_rate"] =
            static_cast<double>(pass_count) / static_cast<double>(report.records.size());
        if (std::isfinite(worst_margin)) {
            overall["worst_margin"] = worst_margin;
            overall["argext_trial_seed"] = argext_seed;
        }
        if (std::isfinite(max_ratio)) overall["max_ratio"] = max_ratio;
        j["aggregates"] = {{"overall", overall}, {"by_statement", by_statement}};
    }
    j["wall_time_sec"] = report.wall_time_sec;
    return j;
}

inline std::string report_to_csv_summary(const Report& report) {
    const json j = report_to_json(report);
    std::ostringstream os;
    os << "statement_id,records,pass_rate,worst_margin,max_ratio\n";
    if (j.contains("aggregates"))
        for (const auto& [key, a] : j.at("aggregates").at("by_statement").items()) {
            os << key << ',' << a.value("records", 0) << ',' << a.value("pass_rate", 0.0) << ',';
            if (a.contains("worst_margin")) os << a.at("worst_margin").get<double>();
            os << ',';
            if (a.contains("max_ratio")) os << a.at("max_ratio").get<double>();
            os << '\n';
        }
    return os.str();
}

inline void write_report(const Report& report, const std::string& path,
                         const std::string& format, bool include_witnesses = false) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (format == "csv-summary")
        out << report_to_csv_summary(report);
    else
        out << report_to_json(report, include_witnesses).dump(2) << '\n';
}

// --------------------------------------------------------------------------
// Worked example on the elementary nilpotent matrix.
// --------------------------------------------------------------------------

inline std::string demo_text() {
    std::ostringstream os;
    os.precision(6);
    cmat z(2, 2);
    z << 0, 1, 0, 0;
    auto print_mat = [&os](const std::string& label, const cmat& m) {
        os << label << " =\n";
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            os << "    ";
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                const complexd v = m(i, j);
                os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i) ";
            }
            os << '\n';
        }
    };

    os << "Worked example: the elementary nilpotent Z = [[0,1],[0,0]].\n\n";
    print_mat("Z", z);
    print_mat("right modulus |Z|", abs_right(z));
    print_mat("left modulus |Z*|", abs_left(z));
    print_mat("symmetric modulus |Z|_sym", sym_modulus(z));
    print_mat("quadratic symmetric modulus |Z|_qsym", qsym_modulus(z));

    const PolarParts pp = polar_decompose(z);
    print_mat("polar unitary factor V (canonical completion; Z is singular)", pp.unitary);
    print_mat("polar modulus", pp.modulus);

    os << "\nOrbit bound for the single-term family {Z}:\n";
    const MainTheoremWitness w = main_theorem_witness({z});
    for (double beta : {0.25, 0.5, 1.0}) {
        os << "  beta = " << beta << ": scaled PSD margin of the bound = " << w.margin(beta)
           << '\n';
    }
    os << "  (beta = 1/2 is the equality case: both sides equal I/2.)\n";

    os << "\nPolar-Hermitian certificate of the sum:\n";
    const PolarHermitianWitness ph = polar_hermitian_witness({z});
    print_mat("Hermitian unitary W", ph.w);
    os << "  phase theta = " << ph.theta << " rad, orbit-identity residual = "
       << ph.identity_residual << '\n';
    os << "  single-witness bound margin at beta = 1/2: " << ph.margin(0.5) << '\n';

    const GeoMeanWitness gw = geomean_witness({z});
    os << "\nGeometric-mean refinement margin: " << gw.margin
       << "  (equality: mean of I/2 with itself)\n";
    return os.str();
}

}  // namespace symmod
