#include "fmoments/report.hpp"

#include <sstream>

namespace fmoments {

using nlohmann::json;

std::string level_model_label(LevelModel model) {
    switch (model) {
        case LevelModel::Natural:
            return "Gamma0(4*ell)";
        case LevelModel::Safe:
            return "Gamma0(4*ell^2)";
        case LevelModel::Custom:
            return "Gamma0(4*L)";
    }
    return "?";
}

json to_json(const CertificationRecord& rec) {
    json j;
    j["ensemble"] = rec.ensemble;
    j["weight"] = rec.weight;
    j["m"] = rec.m;
    j["ell"] = rec.ell;
    j["r"] = rec.r;
    j["modulus"] = rec.modulus;
    j["mode"] = to_string(rec.mode);
    j["level_model"] = to_string(rec.level_model);
    j["L"] = rec.level_l;
    j["level"] = rec.level();
    j["bound_B"] = rec.bound_B;
    j["max_index_checked"] = rec.max_index_checked;
    j["status"] = rec.passed() ? "PASS" : "FAIL";
    if (rec.failure)
        j["fail_witness"] = {{"n", rec.failure->n}, {"t", rec.failure->t}, {"residue", rec.failure->residue}};
    else
        j["fail_witness"] = nullptr;
    return j;
}

namespace {

json classes_to_json(const std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>>& classes) {
    json arr = json::array();
    for (const auto& [key, ms] : classes) arr.push_back({{"ell", key.first}, {"r", key.second}, {"m", ms}});
    return arr;
}

std::string join_m(const std::vector<unsigned>& ms, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? sep : "") + std::to_string(ms[i]);
    return out;
}

}  // namespace

json to_json(const ScanReport& report) {
    json j;
    j["ensemble"] = report.ensemble;
    j["weight"] = report.weight;
    j["parameters"] = {{"m_values", report.parameters.m_values},
                       {"ells", report.parameters.ells},
                       {"n_scan", report.parameters.n_scan},
                       {"include_r0", report.parameters.include_r0}};
    j["zero_class"] = classes_to_json(report.zero_class());
    j["nonzero_class"] = classes_to_json(report.nonzero_class());
    return j;
}

json to_json(const IdentityResult& result) {
    json j;
    j["check"] = result.name;
    j["status"] = result.passed ? "PASS" : "FAIL";
    j["first_failure"] = result.first_failure ? json(*result.first_failure) : json(nullptr);
    j["detail"] = result.detail;
    return j;
}

std::string csv_header_certification() { return "m,ell,r,prime,L,model,sturm_B,max_index,status"; }

std::string to_csv_row(const CertificationRecord& rec) {
    std::ostringstream out;
    out << rec.m << ',' << rec.ell << ',' << rec.r << ',' << rec.modulus << ',' << rec.level_l << ','
        << level_model_label(rec.level_model) << ',' << rec.bound_B << ',' << rec.max_index_checked << ','
        << (rec.passed() ? "CERTIFIED" : "FAIL");
    return out.str();
}

std::string to_csv(const std::vector<CertificationRecord>& records) {
    std::string out = csv_header_certification() + "\n";
    for (const auto& rec : records) out += to_csv_row(rec) + "\n";
    return out;
}

std::string to_csv(const ScanReport& report) {
    std::string out = "ell,r,class,m_values\n";
    for (const auto& [key, ms] : report.hits)
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + (key.second == 0 ? "zero" : "nonzero") +
               "," + join_m(ms, " ") + "\n";
    return out;
}

std::string to_text(const CertificationRecord& rec) {
    std::ostringstream out;
    out << "Certifying (m=" << rec.m << ", ell=" << rec.ell << ", r=" << rec.r << ") mod " << rec.modulus << " for "
        << rec.ensemble << " [" << rec.weight << "] with " << level_model_label(rec.level_model) << ", L=" << rec.level_l
        << ", " << to_string(rec.mode) << ":\n";
    out << "  Sturm bound B=" << rec.bound_B << ", indices up to N_max=" << rec.ell * rec.bound_B + rec.r << "\n";
    if (rec.failure)
        out << "  FAIL at n=" << rec.failure->n << ", t=" << rec.failure->t << ", residue=" << rec.failure->residue
            << "\n";
    else
        out << "  PASS\n";
    return out.str();
}

std::string to_text(const ScanReport& report) {
    std::ostringstream out;
    out << "Summary for " << report.ensemble << " [" << report.weight << "], n_scan=" << report.parameters.n_scan
        << " (grouped by (ell,r) -> list of m):\n";
    auto section = [&](const char* title, const auto& classes) {
        out << "\n=== " << title << " ===\n";
        if (classes.empty()) out << "(none)\n";
        for (const auto& [key, ms] : classes)
            out << "(ell,r)=(" << key.first << "," << key.second << "): m = [" << join_m(ms, ", ") << "]\n";
    };
    if (report.parameters.include_r0) section("r = 0 classes", report.zero_class());
    section("1 <= r < ell classes", report.nonzero_class());
    return out.str();
}

}  // namespace fmoments
