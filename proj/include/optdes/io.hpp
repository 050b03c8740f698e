#ifndef OPTDES_IO_HPP
#define OPTDES_IO_HPP

#include <filesystem>
#include <string>

#include "optdes/presets.hpp"

namespace optdes {

/// CSV with one row per node: coordinates, mu_i, f_i, f_i*mu_i.
/// UTF-8, header row, '.' decimal separator, 17 significant digits.
void emit_density_csv(const DesignDensity& f, const QuadratureGrid& grid,
                      const std::filesystem::path& path);

void emit_history_csv(const std::vector<IterationRecord>& history,
                      const std::filesystem::path& path);

void emit_support_csv(const std::vector<SupportPoint>& support,
                      double residual_mass, int dimension,
                      const std::filesystem::path& path);

/// Reads the f column of a density CSV back onto a grid of matching size.
DesignDensity read_density_csv(const std::filesystem::path& path,
                               const QuadratureGrid& grid);

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace optdes

#endif  // OPTDES_IO_HPP
