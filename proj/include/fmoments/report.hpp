#pragma once

// Serialisation of certification records and scan reports. JSON field names
// and the CSV column order are part of the external interface.

#include <string>
#include <vector>

#include <json.hpp>

#include "fmoments/congruence.hpp"
#include "fmoments/moments.hpp"

namespace fmoments {

nlohmann::json to_json(const CertificationRecord& rec);
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const IdentityResult& result);

/// Header: m,ell,r,prime,L,model,sturm_B,max_index,status
std::string csv_header_certification();
std::string to_csv_row(const CertificationRecord& rec);
std::string to_csv(const std::vector<CertificationRecord>& records);

/// One line per (ell, r) class: ell,r,class,m_values (m values separated by spaces).
std::string to_csv(const ScanReport& report);

/// Human-readable forms mirroring the classic scan/certify driver output.
std::string to_text(const CertificationRecord& rec);
std::string to_text(const ScanReport& report);

/// "Gamma0(4*ell)", "Gamma0(4*ell^2)" or "Gamma0(4*L)".
std::string level_model_label(LevelModel model);

}  // namespace fmoments
