#pragma once

#include <filesystem>
#include <string>

#include "netprice/model.hpp"

namespace netprice {

/// Instance file format:
///   {"n": 3, "G": [[0, 0.2, 0], ...], "a": [...], "b": [...], "c": 0.5}
/// Shapes, finiteness, the zero diagonal, entries in [0,1] and b > 0 are
/// checked on load (InvalidArgument / InvalidInstance). The concavity and
/// participation conditions are left to validate() and the solvers.
MarketInstance parse_instance(const std::string& json_text);
MarketInstance load_instance(const std::filesystem::path& path);

std::string instance_to_json(const MarketInstance& instance);
void save_instance(const std::filesystem::path& path, const MarketInstance& instance);

/// Either a bare array or {"p": [...]}.
PriceVector parse_prices(const std::string& json_text);
PriceVector load_prices(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace netprice
