#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "padc/metrology.hpp"

namespace padc {

nlohmann::json linearity_to_json(const LinearityReport& rep);
LinearityReport linearity_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const SpectrumReport& rep);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

// Fixed column orders: code,dnl_lsb,inl_lsb and
// bin,normalized_frequency,power_db.
void write_linearity_csv(const LinearityReport& rep, std::ostream& out);
void write_spectrum_csv(const SpectrumReport& rep, std::ostream& out);

// Minimal CSV reader for the files this tool writes (no quoting or escapes).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  double num(std::size_t row, std::size_t col) const;
};
CsvTable read_csv(std::istream& in);

// Run manifests are "key: value" lines; order-preserving.
std::vector<std::pair<std::string, std::string>> read_manifest(
    std::istream& in);

}  // namespace padc
