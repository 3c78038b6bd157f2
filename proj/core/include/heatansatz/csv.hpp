#ifndef HEATANSATZ_CSV_HPP
#define HEATANSATZ_CSV_HPP

#include <heatansatz/dynsys.hpp>

#include <functional>
#include <string>
#include <vector>

namespace heatansatz
{

/// %.17g, so every double round-trips.
std::string format_double(double value);

/// Header line then one line per row, LF endings. Fields containing a comma,
/// quote or newline are quoted. Throws std::invalid_argument on ragged rows.
std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

/// "t,z,value" for every t (outer) and z (inner).
std::string grid_csv(const std::function<double(double, double)>& f, const std::vector<double>& z,
                     const std::vector<double>& t);

/// "t,x1,...,x{dim}" one row per state.
std::string trajectory_csv(const std::vector<DynState<double>>& states);

} // namespace heatansatz

#endif
