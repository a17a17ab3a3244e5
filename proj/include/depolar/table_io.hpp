#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "depolar/spectral.hpp"

namespace depolar {

/// "num/den" (denominator always written, "0/1" for zero).
std::string rational_string(const ExactScalar& value);
/// Shortest round-trip decimal form of the nearest double.
std::string float_string(double value);

/// Columns frame,weight_numerator,weight_denominator,weight_float; the frame
/// cell is quoted ("4,0").
void write_csv(std::ostream& out, const SpectralTable& table);
/// {"n":..,"d":..,"entries":[{"frame":"4,0","weight":"5/8","weight_float":0.625},..]}
nlohmann::ordered_json to_json(const SpectralTable& table);

/// One row per frame, one column per q. Cells hold "num/den" when `exact`,
/// otherwise floats. All tables must share n and d.
void write_sweep_csv(std::ostream& out, const std::vector<ExactScalar>& grid,
                     const std::vector<SpectralTable>& columns, bool exact);

}  // namespace depolar
