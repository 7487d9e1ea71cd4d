#include "fmoments/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace fmoments {

Progression Progression::make(std::uint64_t ell, std::uint64_t r) {
    if (!is_prime(ell)) throw std::invalid_argument("progression: ell must be prime");
    if (r >= ell) throw std::invalid_argument("progression: residue must satisfy 0 <= r < ell");
    return {ell, r};
}

Series project(const MomentSeries& moments, const Progression& prog) {
    if (prog.r >= prog.ell) throw std::invalid_argument("project: residue must satisfy 0 <= r < ell");
    if (moments.values.nmax() < prog.r) throw std::invalid_argument("project: truncation below the residue");
    return moments.values.stride(prog.r, prog.ell);
}

namespace {

CertificationRecord run_certification(const Ensemble& ensemble, const DivisorWeight& weight, const Progression& prog,
                                      std::uint64_t modulus, const SturmConfig& config, std::uint64_t level_l,
                                      const CertifyOptions& options) {
    const unsigned m = weight.exponent;
    if (m % 2 == 0) throw std::invalid_argument("certify: m must be odd");
    if (!is_prime(modulus)) throw std::invalid_argument("certify: modulus must be prime");
    if (!is_prime(prog.ell) || prog.r >= prog.ell) throw std::invalid_argument("certify: invalid progression");

    CertificationRecord rec;
    rec.ensemble = ensemble.name;
    rec.weight = weight.descriptor();
    rec.m = m;
    rec.ell = prog.ell;
    rec.r = prog.r;
    rec.modulus = modulus;
    rec.mode = config.mode;
    rec.level_model = config.level_model;
    rec.level_l = level_l;
    rec.bound_B = sturm_bound_at_level(m, config.mode, level_l);

    const std::uint64_t n_max = prog.ell * rec.bound_B + prog.r;
    if (n_max + 1 > options.max_coefficients)
        throw ResourceLimitError("certification needs " + std::to_string(n_max + 1) +
                                 " coefficients, above the budget of " + std::to_string(options.max_coefficients));

    const auto ring = CoefficientRing::integers_mod(modulus);
    const Series sigma = weighted_sigma_table(weight, n_max, ring);
    const Series companion = ensemble.companion(n_max, ring);
    const Series projected = progression_moments(sigma, companion, prog.ell, prog.r, rec.bound_B + 1);
    const auto values = projected.values<std::uint64_t>();
    for (std::uint64_t n = 0; n < values.size(); ++n) {
        if (values[n] != 0) {
            const std::uint64_t t = prog.ell * n + prog.r;
            rec.failure = FailWitness{n, t, values[n]};
            rec.max_index_checked = t;
            return rec;
        }
    }
    rec.max_index_checked = n_max;
    return rec;
}

}  // namespace

CertificationRecord certify(const Ensemble& ensemble, const DivisorWeight& weight, const Progression& prog,
                            std::uint64_t modulus, const SturmConfig& config, const CertifyOptions& options) {
    if (config.level_model != LevelModel::Custom && !is_prime(prog.ell))
        throw std::invalid_argument("certify: ell must be prime");
    return run_certification(ensemble, weight, prog, modulus, config, resolve_level(config, prog.ell), options);
}

std::uint64_t filtered_level(const SturmConfig& config, std::uint64_t ell, std::uint64_t twist_modulus) {
    const std::uint64_t base = std::lcm(ell, twist_modulus);
    switch (config.level_model) {
        case LevelModel::Natural:
            return base;
        case LevelModel::Safe:
            return base * base;
        case LevelModel::Custom:
            return resolve_level(config, ell);
    }
    throw std::logic_error("unreachable level model");
}

CertificationRecord certify_filtered(const DivisorWeight& weight, const Progression& prog, std::uint64_t modulus,
                                     const SturmConfig& config, const CertifyOptions& options) {
    // every supported character spec is real-valued, so only the selector kind needs checking
    if (!std::holds_alternative<DirichletCharacterSpec>(weight.selector) &&
        !std::holds_alternative<GlaisherFilter>(weight.selector)) {
        throw std::invalid_argument("certify_filtered: weight must carry a character twist or a filter");
    }
    return run_certification(ordinary_ensemble(), weight, prog, modulus, config,
                             filtered_level(config, prog.ell, weight.twist_modulus()), options);
}

std::vector<unsigned> odd_range(unsigned max_m) {
    std::vector<unsigned> out;
    for (unsigned m = 1; m <= max_m; m += 2) out.push_back(m);
    return out;
}

std::vector<std::uint64_t> prime_range(std::uint64_t min_ell, std::uint64_t max_ell) {
    std::vector<std::uint64_t> out;
    for (auto p : primes_up_to(max_ell).primes)
        if (p >= min_ell) out.push_back(p);
    return out;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> ScanReport::zero_class() const {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> out;
    for (const auto& [key, ms] : hits)
        if (key.second == 0) out.emplace(key, ms);
    return out;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> ScanReport::nonzero_class() const {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> out;
    for (const auto& [key, ms] : hits)
        if (key.second != 0) out.emplace(key, ms);
    return out;
}

std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> ScanReport::triples() const {
    std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> out;
    for (const auto& [key, ms] : hits)
        for (unsigned m : ms) out.emplace(m, key.first, key.second);
    return out;
}

ScanReport scan(const Ensemble& ensemble, const DivisorWeight& weight, const ScanParameters& params) {
    for (auto ell : params.ells) {
        if (!is_prime(ell)) throw std::invalid_argument("scan: every ell must be prime");
        if (params.n_scan < ell) throw std::invalid_argument("scan: n_scan must be at least max(ell)");
    }

    // Companions depend only on ell and are shared read-only by the workers.
    std::vector<Series> companions;
    companions.reserve(params.ells.size());
    for (auto ell : params.ells)
        companions.push_back(ensemble.companion(params.n_scan, CoefficientRing::integers_mod(ell)));

    struct Task {
        std::size_t m_index, ell_index;
        std::vector<std::uint64_t> residues;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < params.m_values.size(); ++i)
        for (std::size_t j = 0; j < params.ells.size(); ++j) tasks.push_back({i, j, {}});

    auto run_task = [&](Task& task) {
        const std::uint64_t ell = params.ells[task.ell_index];
        const auto ring = CoefficientRing::integers_mod(ell);
        const Series sigma = weighted_sigma_table(weight.with_exponent(params.m_values[task.m_index]), params.n_scan, ring);
        const MomentSeries moments = master_transform(sigma, companions[task.ell_index]);
        const auto values = moments.values.values<std::uint64_t>();
        for (std::uint64_t r = params.include_r0 ? 0 : 1; r < ell; ++r) {
            bool vanishes = true;
            for (std::size_t t = r; t <= params.n_scan && vanishes; t += ell) vanishes = values[t] == 0;
            if (vanishes) task.residues.push_back(r);
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(params.jobs, static_cast<unsigned>(tasks.size())));
    if (workers == 1) {
        for (auto& task : tasks) run_task(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(tasks[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    ScanReport report;
    report.ensemble = ensemble.name;
    report.weight = weight.selector_descriptor();
    report.parameters = params;
    for (const auto& task : tasks)
        for (auto r : task.residues)
            report.hits[{params.ells[task.ell_index], r}].push_back(params.m_values[task.m_index]);
    for (auto& [key, ms] : report.hits) std::sort(ms.begin(), ms.end());
    return report;
}

std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> predicted_hits(const std::vector<unsigned>& m_values,
                                                                            const std::vector<std::uint64_t>& ells) {
    struct BaseCase {
        unsigned m;
        std::uint64_t ell, r;
    };
    static constexpr BaseCase kBase[] = {{3, 7, 0}, {3, 7, 5}, {3, 11, 0}, {3, 11, 6}, {7, 11, 6}};
    static constexpr std::pair<std::uint64_t, std::uint64_t> kRamanujan[] = {{5, 4}, {7, 5}, {11, 6}};

    std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> out;
    for (unsigned m : m_values) {
        for (auto ell : ells) {
            const unsigned reduced = fermat_reduce(m, ell);
            if (reduced == 1) {
                out.emplace(m, ell, 0);
                for (const auto& [p, r] : kRamanujan)
                    if (p == ell) out.emplace(m, ell, r);
            }
            for (const auto& b : kBase)
                if (b.m == reduced && b.ell == ell) out.emplace(m, ell, b.r);
        }
    }
    return out;
}

}  // namespace fmoments
