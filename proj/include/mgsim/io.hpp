#ifndef MGSIM_IO_HPP
#define MGSIM_IO_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mgsim/region.hpp"

namespace mgsim {

inline constexpr int kCsvSchema = 1;

/// Writes to the path, or to stdout when the path is empty.
void write_output(const std::string& path, const std::string& content);

std::string config_comment(const nlohmann::json& config);

/// One row per polygon vertex: schema,curve,index,su,se.
std::string region_csv(const nlohmann::json& config,
                       const std::vector<std::pair<std::string, MGRegion>>& curves);

/// Static plot of the labeled curves with axes.
std::string region_svg(const nlohmann::json& config,
                       const std::vector<std::pair<std::string, MGRegion>>& curves);

std::string coefficient_csv(const nlohmann::json& config,
                            const std::vector<std::array<std::string, 5>>& rows);

}  // namespace mgsim

#endif
