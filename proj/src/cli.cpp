#include "fmoments/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmoments/congruence.hpp"
#include "fmoments/golden.hpp"
#include "fmoments/moments.hpp"
#include "fmoments/report.hpp"
#include "fmoments/weight_spec.hpp"

namespace fmoments {

namespace {

using nlohmann::json;

struct Globals {
    std::string format = "text";
    std::string out_path;
    unsigned jobs = 1;
    std::size_t max_coeffs = 0;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Applies `f` to 0..count-1 on up to `jobs` threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F f) {
    std::vector<std::optional<T>> slots(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) slots[i].emplace(f(i));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void emit(const Globals& g, std::ostream& out, const std::string& payload) {
    if (g.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + g.out_path + "'");
    file << payload;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

Ensemble parse_ensemble(const std::string& name) {
    try {
        return ensemble_by_name(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

BoundMode parse_mode(const std::string& text) {
    try {
        return parse_bound_mode(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

SturmConfig parse_level(const std::string& text, BoundMode mode) {
    if (text == "natural") return {mode, LevelModel::Natural, 1};
    if (text == "safe") return {mode, LevelModel::Safe, 1};
    try {
        std::size_t used = 0;
        const auto level = std::stoull(text, &used);
        if (used == text.size() && level >= 1) return SturmConfig::custom(mode, level);
    } catch (const std::exception&) {
    }
    throw UsageError("bad --level '" + text + "' (expected natural, safe or a positive integer L)");
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
    std::string ensemble = "ordinary";
    std::string weight;
    std::vector<unsigned> m_list;
    unsigned m_odd_max = 25;
    std::vector<std::uint64_t> ell_list;
    std::uint64_t ell_min = 5;
    std::uint64_t ell_max = 97;
    std::size_t n_scan = 2000;
    bool no_r0 = false;
    bool certify_hits = false;
    std::string mode = "sharp24";
    std::string level = "safe";
};

int cmd_scan(const ScanOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
    const Ensemble ensemble = parse_ensemble(o.ensemble);
    DivisorWeight weight{1, Unweighted{}};
    if (!o.weight.empty()) {
        const WeightSpec spec = parse_weight_selector(o.weight);
        weight.selector = spec.selector;
    }
    weight = resolve_weight(ensemble, weight);

    ScanParameters params;
    params.m_values = o.m_list.empty() ? odd_range(o.m_odd_max) : o.m_list;
    params.ells = o.ell_list.empty() ? prime_range(o.ell_min, o.ell_max) : o.ell_list;
    params.n_scan = o.n_scan;
    params.include_r0 = !o.no_r0;
    params.jobs = g.jobs;
    if (params.m_values.empty() || params.ells.empty()) throw UsageError("scan: empty m or ell range");
    for (auto ell : params.ells)
        if (!is_prime(ell)) throw UsageError("scan: ell=" + std::to_string(ell) + " is not prime");
    if (params.n_scan + 1 > g.max_coeffs) throw ResourceLimitError("scan: n_scan exceeds the coefficient budget");

    err << "scan: " << params.m_values.size() << " exponents x " << params.ells.size() << " primes, n_scan="
        << params.n_scan << ", jobs=" << g.jobs << "\n";
    const ScanReport report = scan(ensemble, weight, params);
    if (!o.certify_hits) {
        if (g.format == "json")
            emit(g, out, dump_json(to_json(report)));
        else if (g.format == "csv")
            emit(g, out, to_csv(report));
        else
            emit(g, out, to_text(report));
        return kExitPass;
    }

    // Second tier: every surviving (m, ell, r) goes through the Sturm check.
    const SturmConfig config = parse_level(o.level, parse_mode(o.mode));
    const bool filtered = !std::holds_alternative<Unweighted>(weight.selector) &&
                          !std::holds_alternative<ExponentSequence>(weight.selector);
    const auto triples = report.triples();
    const std::vector<std::tuple<unsigned, std::uint64_t, std::uint64_t>> hits(triples.begin(), triples.end());
    err << "scan: certifying " << hits.size() << " hits\n";
    CertifyOptions options;
    options.max_coefficients = g.max_coeffs;
    const auto records = parallel_map<CertificationRecord>(hits.size(), g.jobs, [&](std::size_t i) {
        const auto& [m, ell, r] = hits[i];
        const DivisorWeight w = weight.with_exponent(m);
        const Progression prog = Progression::make(ell, r);
        return filtered ? certify_filtered(w, prog, ell, config, options) : certify(ensemble, w, prog, ell, config, options);
    });
    const bool all_pass = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.passed(); });
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& rec : records) arr.push_back(to_json(rec));
        emit(g, out, dump_json({{"scan", to_json(report)}, {"certifications", arr}, {"all_pass", all_pass}}));
    } else if (g.format == "csv") {
        emit(g, out, to_csv(records));
    } else {
        std::string text = to_text(report) + "\n=== certifications ===\n";
        for (const auto& rec : records) text += to_text(rec);
        emit(g, out, text);
    }
    return all_pass ? kExitPass : kExitFailure;
}

// ---------------------------------------------------------------- certify

struct CertifyOptionsCli {
    std::string ensemble = "ordinary";
    std::string weight;
    std::optional<unsigned> m;
    std::optional<std::uint64_t> ell, r, prime;
    std::string mode = "conservative12";
    std::string level = "safe";
    bool both_levels = false;
    std::vector<std::string> tasks;
};

struct TaskSpec {
    unsigned m;
    std::uint64_t ell, r, prime;
};

TaskSpec parse_task(const std::string& text) {
    std::vector<std::uint64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad --task '" + text + "' (expected m:ell:r[:prime])");
        }
    }
    if (parts.size() != 3 && parts.size() != 4) throw UsageError("bad --task '" + text + "' (expected m:ell:r[:prime])");
    return {static_cast<unsigned>(parts[0]), parts[1], parts[2], parts.size() == 4 ? parts[3] : parts[1]};
}

int cmd_certify(const CertifyOptionsCli& o, const Globals& g, std::ostream& out, std::ostream& err) {
    const Ensemble ensemble = parse_ensemble(o.ensemble);
    const WeightSpec spec = o.weight.empty() ? WeightSpec{} : parse_weight_selector(o.weight);
    const bool filtered = !std::holds_alternative<Unweighted>(spec.selector);
    if (filtered && ensemble.name != "ordinary")
        throw UsageError("certify: twisted and filtered weights are only supported for the ordinary ensemble");

    const BoundMode mode = parse_mode(o.mode);
    std::vector<SturmConfig> configs;
    if (o.both_levels)
        configs = {SturmConfig{mode, LevelModel::Natural, 1}, SturmConfig{mode, LevelModel::Safe, 1}};
    else
        configs = {parse_level(o.level, mode)};

    std::vector<TaskSpec> tasks;
    for (const auto& t : o.tasks) tasks.push_back(parse_task(t));
    if (tasks.empty()) {
        const auto m = o.m ? o.m : spec.m;
        if (!m || !o.ell || !o.r) throw UsageError("certify: give --m, --ell and --r, or one or more --task");
        tasks.push_back({*m, *o.ell, *o.r, o.prime.value_or(*o.ell)});
    }

    // Reject every invalid task before any computation starts.
    for (const auto& t : tasks) {
        if (t.m % 2 == 0) throw UsageError("certify: m=" + std::to_string(t.m) + " must be odd");
        if (!is_prime(t.ell)) throw UsageError("certify: ell=" + std::to_string(t.ell) + " is not prime");
        if (t.r >= t.ell) throw UsageError("certify: r must satisfy 0 <= r < ell");
        if (!is_prime(t.prime)) throw UsageError("certify: prime=" + std::to_string(t.prime) + " is not prime");
        if (t.prime >= (std::uint64_t{1} << 32)) throw UsageError("certify: prime must be below 2^32");
    }
    std::sort(tasks.begin(), tasks.end(), [](const TaskSpec& a, const TaskSpec& b) {
        return std::tie(a.m, a.ell, a.r, a.prime) < std::tie(b.m, b.ell, b.r, b.prime);
    });

    struct Job {
        TaskSpec task;
        SturmConfig config;
    };
    std::vector<Job> jobs;
    for (const auto& t : tasks)
        for (const auto& c : configs) jobs.push_back({t, c});

    CertifyOptions options;
    options.max_coefficients = g.max_coeffs;
    const auto records = parallel_map<CertificationRecord>(jobs.size(), g.jobs, [&](std::size_t i) {
        const auto& [t, config] = jobs[i];
        const DivisorWeight weight = resolve_weight(ensemble, DivisorWeight{t.m, spec.selector});
        const Progression prog = Progression::make(t.ell, t.r);
        return filtered ? certify_filtered(weight, prog, t.prime, config, options)
                        : certify(ensemble, weight, prog, t.prime, config, options);
    });
    for (const auto& rec : records)
        err << "certify: m=" << rec.m << " ell=" << rec.ell << " r=" << rec.r << " L=" << rec.level_l
            << (rec.passed() ? " PASS" : " FAIL") << "\n";

    const bool all_pass = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.passed(); });
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& rec : records) arr.push_back(to_json(rec));
        emit(g, out, dump_json({{"records", arr}, {"all_pass", all_pass}}));
    } else if (g.format == "csv") {
        emit(g, out, to_csv(records));
    } else {
        std::string text;
        for (const auto& rec : records) text += to_text(rec);
        emit(g, out, text);
    }
    return all_pass ? kExitPass : kExitFailure;
}

// ---------------------------------------------------------------- tables

int cmd_tables(const std::string& which, const Globals& g, std::ostream& out, std::ostream& err) {
    std::vector<GoldenTable> tables;
    if (which == "all")
        tables = {GoldenTable::Ordinary, GoldenTable::Overpartition, GoldenTable::Filtered};
    else
        try {
            tables = {parse_golden_table(which)};
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }

    std::vector<GoldenRow> rows;
    for (auto t : tables)
        for (const auto& row : golden_rows(t)) rows.push_back(row);

    CertifyOptions options;
    options.max_coefficients = g.max_coeffs;
    const auto results = parallel_map<GoldenComparison>(rows.size(), g.jobs, [&](std::size_t i) {
        auto cmp = reproduce(rows[i], options);
        return cmp;
    });

    bool all_match = true;
    json jtables = json::array();
    std::ostringstream text, csv;
    csv << csv_header_certification() << ",table,expected_B,expected_max_index,match\n";
    for (auto t : tables) {
        std::size_t total = 0, matched = 0;
        json jrows = json::array();
        text << "=== " << to_string(t) << " ===\n";
        text << "   m  ell    r  prime  L        model               B (exp/got)      max index (exp/got)  status     match\n";
        for (const auto& cmp : results) {
            if (cmp.row.table != t) continue;
            ++total;
            const bool ok = cmp.matches();
            matched += ok;
            all_match = all_match && ok;
            const auto& rec = cmp.record;
            json jr = to_json(rec);
            jr["expected_B"] = cmp.row.expected_B;
            jr["expected_max_index"] = cmp.row.expected_max_index;
            jr["expected_status"] = cmp.row.expected_pass ? "PASS" : "FAIL";
            jr["match"] = ok;
            jrows.push_back(jr);

            char line[256];
            std::snprintf(line, sizeof line, "%4u %4llu %4llu %6llu  %-8llu %-18s %6llu/%-6llu     %7llu/%-7llu      %-10s %s\n",
                          rec.m, static_cast<unsigned long long>(rec.ell), static_cast<unsigned long long>(rec.r),
                          static_cast<unsigned long long>(rec.modulus), static_cast<unsigned long long>(rec.level_l),
                          level_model_label(rec.level_model).c_str(),
                          static_cast<unsigned long long>(cmp.row.expected_B),
                          static_cast<unsigned long long>(rec.bound_B),
                          static_cast<unsigned long long>(cmp.row.expected_max_index),
                          static_cast<unsigned long long>(rec.max_index_checked),
                          rec.passed() ? "CERTIFIED" : "FAIL", ok ? "yes" : "NO");
            text << line;
            csv << to_csv_row(rec) << ',' << to_string(t) << ',' << cmp.row.expected_B << ','
                << cmp.row.expected_max_index << ',' << (ok ? "yes" : "no") << '\n';
        }
        text << to_string(t) << ": " << matched << "/" << total << " rows match\n\n";
        err << "tables: " << to_string(t) << " " << matched << "/" << total << " rows match\n";
        jtables.push_back({{"table", to_string(t)}, {"rows", jrows}, {"matched", matched}, {"total", total}});
    }

    if (g.format == "json")
        emit(g, out, dump_json({{"tables", jtables}, {"all_match", all_match}}));
    else if (g.format == "csv")
        emit(g, out, csv.str());
    else
        emit(g, out, text.str());
    return all_match ? kExitPass : kExitFailure;
}

// ---------------------------------------------------------------- identities

struct IdentityOptions {
    std::string check = "all";
    std::optional<std::size_t> n;
    std::string ensemble;
    unsigned fermat_max_m = 25;
    std::size_t fermat_samples = 200;
    std::uint64_t seed = 20240601;
};

int cmd_identities(const IdentityOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> kChecks = {"ford", "moebius", "m1", "fermat", "tau691", "j"};
    std::vector<std::string> checks;
    if (o.check == "all")
        checks = kChecks;
    else if (std::find(kChecks.begin(), kChecks.end(), o.check) != kChecks.end())
        checks = {o.check};
    else
        throw UsageError("unknown identity check '" + o.check + "'");

    std::vector<std::function<IdentityResult()>> work;
    for (const auto& name : checks) {
        if (name == "ford") {
            work.push_back([n = o.n.value_or(500)] { return ford_recursion_check(n); });
        } else if (name == "moebius") {
            const std::size_t n = o.n.value_or(40);
            if (n > kOracleGuard) throw UsageError("moebius: n is limited to " + std::to_string(kOracleGuard));
            work.push_back([n] { return mobius_identity_check(n); });
        } else if (name == "m1") {
            std::vector<std::string> names =
                o.ensemble.empty() ? std::vector<std::string>{"ordinary", "overpartition"}
                                   : std::vector<std::string>{o.ensemble};
            for (const auto& en : names) {
                const Ensemble ens = parse_ensemble(en);
                if (!ens.self_companion()) throw UsageError("m1: ensemble '" + en + "' has an explicit companion");
                work.push_back([ens, n = o.n.value_or(2000)] { return first_moment_check(ens, n); });
            }
        } else if (name == "fermat") {
            work.push_back([&o] {
                static const std::vector<std::uint64_t> ells = prime_range(5, 31);
                return fermat_value_check(o.fermat_max_m, ells, o.n.value_or(200), o.fermat_samples, o.seed);
            });
        } else if (name == "tau691") {
            work.push_back([n = o.n.value_or(300)] { return tau_convolution_check(n); });
        } else {
            work.push_back([n = o.n.value_or(40)] { return j_identity_check(n); });
        }
    }

    const auto results =
        parallel_map<IdentityResult>(work.size(), g.jobs, [&](std::size_t i) { return work[i](); });
    bool all_pass = true;
    json arr = json::array();
    std::ostringstream text, csv;
    csv << "check,status,first_failure,detail\n";
    for (const auto& r : results) {
        all_pass = all_pass && r.passed;
        arr.push_back(to_json(r));
        text << r.name << ": " << (r.passed ? "PASS" : "FAIL");
        if (r.first_failure) text << " (first failure at n=" << *r.first_failure << ")";
        if (!r.detail.empty()) text << "  " << r.detail;
        text << "\n";
        csv << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ','
            << (r.first_failure ? std::to_string(*r.first_failure) : "") << ",\"" << r.detail << "\"\n";
        err << "identities: " << r.name << (r.passed ? " PASS" : " FAIL") << "\n";
    }
    if (g.format == "json")
        emit(g, out, dump_json({{"checks", arr}, {"all_pass", all_pass}}));
    else if (g.format == "csv")
        emit(g, out, csv.str());
    else
        emit(g, out, text.str());
    return all_pass ? kExitPass : kExitFailure;
}

// ---------------------------------------------------------------- dump-series

struct DumpOptions {
    std::string ensemble = "ordinary";
    std::string ring = "ZZ";
    std::size_t n = 50;
    std::string kind = "generating";
    std::string weight = "m=1";
    bool allow_large_plane = false;
};

int cmd_dump(const DumpOptions& o, const Globals& g, std::ostream& out) {
    const Ensemble ensemble = parse_ensemble(o.ensemble);
    CoefficientRing ring = CoefficientRing::exact_integer();
    try {
        ring = CoefficientRing::parse(o.ring);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.n + 1 > g.max_coeffs) throw ResourceLimitError("dump-series: N exceeds the coefficient budget");
    GenerationOptions gen;
    gen.allow_large_plane_partition = o.allow_large_plane;

    std::string label = ensemble.name;
    Series series = Series::zero(ring, o.n);
    if (o.kind == "generating") {
        series = ensemble.generating_function(o.n, ring, gen);
    } else if (o.kind == "companion") {
        series = ensemble.companion(o.n, ring, gen);
    } else if (o.kind == "moments") {
        const DivisorWeight weight = resolve_weight(ensemble, parse_weight_spec(o.weight));
        series = moment_series(ensemble, weight, o.n, ring).values;
        label += " weight=" + weight.descriptor();
    } else {
        throw UsageError("unknown series kind '" + o.kind + "' (expected generating, companion or moments)");
    }

    if (g.format == "json") {
        json coeffs = json::array();
        for (std::size_t i = 0; i < series.size(); ++i) coeffs.push_back(series.coefficient_string(i));
        emit(g, out,
             dump_json({{"ring", ring.describe()}, {"N", series.nmax()}, {"ensemble", label}, {"kind", o.kind},
                        {"coefficients", coeffs}}));
    } else {
        std::ostringstream text;
        write_series_dump(text, series, label);
        emit(g, out, text.str());
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fmoments: frequency moments of partition ensembles and their congruences"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a flat key = value file; flags override it");

    Globals g;
    g.max_coeffs = default_coefficient_cap();
    const auto add_globals = [&](CLI::App* sub) {
        sub->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", g.out_path, "Write the report here instead of standard output");
        sub->add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
        sub->add_option("--max-coeffs", g.max_coeffs, "Coefficient budget (default: FMOMENTS_MAX_COEFFS or 2^25)")
            ->check(CLI::PositiveNumber);
    };

    ScanOptions scan_o;
    auto* scan_cmd = app.add_subcommand("scan", "Heuristic search for vanishing progressions");
    scan_cmd->add_option("--ensemble", scan_o.ensemble, "ordinary, overpartition, plane, theta or coloured:<k>");
    scan_cmd->add_option("--weight", scan_o.weight, "Weight selector, e.g. twist=kronecker(5) (any m is ignored)");
    scan_cmd->add_option("--m", scan_o.m_list, "Explicit exponents")->delimiter(',');
    scan_cmd->add_option("--m-odd-max", scan_o.m_odd_max, "Scan odd m up to this value");
    scan_cmd->add_option("--ell", scan_o.ell_list, "Explicit primes")->delimiter(',');
    scan_cmd->add_option("--ell-min", scan_o.ell_min, "Smallest prime of the range");
    scan_cmd->add_option("--ell-max", scan_o.ell_max, "Largest prime of the range");
    scan_cmd->add_option("--nscan", scan_o.n_scan, "Coefficients checked per progression");
    scan_cmd->add_flag("--no-r0", scan_o.no_r0, "Skip the r = 0 classes");
    scan_cmd->add_flag("--certify-hits", scan_o.certify_hits, "Sturm-certify every hit (prime = ell)");
    scan_cmd->add_option("--mode", scan_o.mode, "Bound mode for --certify-hits");
    scan_cmd->add_option("--level", scan_o.level, "natural, safe or L for --certify-hits");
    add_globals(scan_cmd);

    CertifyOptionsCli cert_o;
    auto* cert_cmd = app.add_subcommand("certify", "Sturm-bound certification of M(ell n + r) = 0 (mod prime)");
    cert_cmd->add_option("--ensemble", cert_o.ensemble, "Partition ensemble");
    cert_cmd->add_option("--weight", cert_o.weight, "Weight spec, e.g. m=3,twist=kronecker(5)");
    cert_cmd->add_option("--m", cert_o.m, "Odd exponent");
    cert_cmd->add_option("--ell", cert_o.ell, "Prime modulus of the progression");
    cert_cmd->add_option("--r", cert_o.r, "Residue of the progression");
    cert_cmd->add_option("--prime", cert_o.prime, "Prime of the congruence (default: ell)");
    cert_cmd->add_option("--mode", cert_o.mode, "sharp24 or conservative12");
    cert_cmd->add_option("--level", cert_o.level, "natural, safe, or an explicit L");
    cert_cmd->add_flag("--both-levels", cert_o.both_levels, "Certify at both natural and safe levels");
    cert_cmd->add_option("--task", cert_o.tasks, "Batch task m:ell:r[:prime]; repeatable");
    add_globals(cert_cmd);

    std::string which = "all";
    auto* tables_cmd = app.add_subcommand("tables", "Reproduce the reference certification tables");
    tables_cmd->add_option("--which", which, "ordinary, overpartition, filtered or all");
    add_globals(tables_cmd);

    IdentityOptions id_o;
    auto* id_cmd = app.add_subcommand("identities", "Run the exact identity checks");
    id_cmd->add_option("--check", id_o.check, "ford, moebius, m1, fermat, tau691, j or all");
    id_cmd->add_option("--n", id_o.n, "Depth of the check");
    id_cmd->add_option("--ensemble", id_o.ensemble, "Ensemble for the m1 check");
    id_cmd->add_option("--fermat-max-m", id_o.fermat_max_m, "Largest odd m sampled by the fermat check");
    id_cmd->add_option("--fermat-samples", id_o.fermat_samples, "Number of sampled (m, ell, n) triples");
    id_cmd->add_option("--seed", id_o.seed, "Seed for the fermat sampler");
    add_globals(id_cmd);

    DumpOptions dump_o;
    auto* dump_cmd = app.add_subcommand("dump-series", "Print a truncated q-series");
    dump_cmd->add_option("--ensemble", dump_o.ensemble, "Partition ensemble");
    dump_cmd->add_option("--ring", dump_o.ring, "ZZ, QQ or mod:<n>");
    dump_cmd->add_option("--n", dump_o.n, "Truncation order");
    dump_cmd->add_option("--kind", dump_o.kind, "generating, companion or moments");
    dump_cmd->add_option("--weight", dump_o.weight, "Weight spec for --kind moments");
    dump_cmd->add_flag("--allow-large-plane", dump_o.allow_large_plane, "Lift the plane-partition order cap");
    add_globals(dump_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*scan_cmd) return cmd_scan(scan_o, g, out, err);
        if (*cert_cmd) return cmd_certify(cert_o, g, out, err);
        if (*tables_cmd) return cmd_tables(which, g, out, err);
        if (*id_cmd) return cmd_identities(id_o, g, out, err);
        if (*dump_cmd) return cmd_dump(dump_o, g, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResources;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace fmoments
