// output.hpp: CSV/JSON tables with pinned float formatting
//
// Floats are printed with 12 significant digits (printf %.12g); values that
// print as integers get a trailing ".0" so every float column reads as one.

#pragma once

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qrabi::cli {

std::string format_number(double x);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& t);
nlohmann::ordered_json table_json(const Table& t, const nlohmann::ordered_json& spec);

// Writes text to path, creating parent directories. Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qrabi::cli
