#include "padc/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "padc/io_util.hpp"

namespace padc {

using nlohmann::json;

json linearity_to_json(const LinearityReport& rep) {
  json j;
  j["method"] = rep.method;
  j["resolution"] = rep.resolution;
  j["codes_tested"] = rep.codes_tested;
  j["inl_convention"] = rep.inl_convention;
  j["worst_dnl_lsb"] = rep.worst_dnl;
  j["worst_inl_lsb"] = rep.worst_inl;
  j["dnl_lsb"] = rep.dnl;
  j["inl_lsb"] = rep.inl;
  j["warnings"] = rep.warnings;
  return j;
}

LinearityReport linearity_from_json(const json& j) {
  LinearityReport rep;
  rep.method = j.at("method").get<std::string>();
  rep.resolution = j.at("resolution").get<int>();
  rep.codes_tested = j.at("codes_tested").get<int>();
  rep.inl_convention = j.at("inl_convention").get<std::string>();
  rep.worst_dnl = j.at("worst_dnl_lsb").get<double>();
  rep.worst_inl = j.at("worst_inl_lsb").get<double>();
  rep.dnl = j.at("dnl_lsb").get<std::vector<double>>();
  rep.inl = j.at("inl_lsb").get<std::vector<double>>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  return rep;
}

json spectrum_to_json(const SpectrumReport& rep) {
  json j;
  j["nfft"] = rep.nfft;
  j["signal_bin"] = rep.signal_bin;
  j["sndr_db"] = rep.sndr_db;
  j["sfdr_db"] = rep.sfdr_db;
  j["enob_bits"] = rep.enob_bits;
  j["power_db"] = rep.power_db;
  return j;
}

SpectrumReport spectrum_from_json(const json& j) {
  SpectrumReport rep;
  rep.nfft = j.at("nfft").get<std::size_t>();
  rep.signal_bin = j.at("signal_bin").get<std::size_t>();
  rep.sndr_db = j.at("sndr_db").get<double>();
  rep.sfdr_db = j.at("sfdr_db").get<double>();
  rep.enob_bits = j.at("enob_bits").get<double>();
  rep.power_db = j.at("power_db").get<std::vector<double>>();
  return rep;
}

void write_linearity_csv(const LinearityReport& rep, std::ostream& out) {
  out << "code,dnl_lsb,inl_lsb\n";
  for (std::size_t i = 0; i < rep.dnl.size(); ++i) {
    out << (i + 1) << ',' << fmt_double(rep.dnl[i]) << ','
        << fmt_double(rep.inl[i]) << '\n';
  }
}

void write_spectrum_csv(const SpectrumReport& rep, std::ostream& out) {
  out << "bin,normalized_frequency,power_db\n";
  for (std::size_t m = 0; m < rep.power_db.size(); ++m) {
    const double f =
        static_cast<double>(m) / static_cast<double>(rep.nfft);
    out << m << ',' << fmt_double(f) << ',' << fmt_double(rep.power_db[m])
        << '\n';
  }
}

double CsvTable::num(std::size_t row, std::size_t col) const {
  const std::string& cell = rows.at(row).at(col);
  try {
    return std::stod(cell);
  } catch (const std::exception&) {
    throw std::runtime_error("read_csv: non-numeric cell \"" + cell + "\"");
  }
}

std::vector<std::pair<std::string, std::string>> read_manifest(
    std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t colon = line.find(": ");
    if (colon == std::string::npos) {
      throw std::runtime_error("read_manifest: malformed line \"" + line +
                               "\"");
    }
    entries.emplace_back(line.substr(0, colon), line.substr(colon + 2));
  }
  return entries;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = cells;
      first = false;
      continue;
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace padc
