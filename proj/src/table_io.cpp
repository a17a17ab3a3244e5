#include "depolar/table_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace depolar {

std::string rational_string(const ExactScalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string float_string(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("float formatting failed");
  return {buf, ptr};
}

void write_csv(std::ostream& out, const SpectralTable& table) {
  out << "frame,weight_numerator,weight_denominator,weight_float\n";
  for (const auto& [frame, weight] : table.entries) {
    out << '"' << frame.to_string() << "\"," << weight.get_num().get_str() << ',' << weight.get_den().get_str() << ','
        << float_string(weight.get_d()) << '\n';
  }
}

nlohmann::ordered_json to_json(const SpectralTable& table) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [frame, weight] : table.entries) {
    entries.push_back({{"frame", frame.to_string()}, {"weight", rational_string(weight)}, {"weight_float", weight.get_d()}});
  }
  return {{"n", table.n}, {"d", table.d}, {"entries", std::move(entries)}};
}

void write_sweep_csv(std::ostream& out, const std::vector<ExactScalar>& grid, const std::vector<SpectralTable>& columns,
                     bool exact) {
  if (grid.size() != columns.size()) throw std::invalid_argument("sweep: one table per grid value expected");
  out << "frame";
  for (const auto& q : grid) out << ",q=" << rational_string(q);
  out << '\n';
  if (columns.empty()) return;
  for (std::size_t row = 0; row < columns.front().entries.size(); ++row) {
    out << '"' << columns.front().entries[row].first.to_string() << '"';
    for (const auto& column : columns) {
      const auto& weight = column.entries.at(row).second;
      out << ',' << (exact ? rational_string(weight) : float_string(weight.get_d()));
    }
    out << '\n';
  }
}

}  // namespace depolar
