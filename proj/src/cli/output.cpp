#include "qrabi/cli/output.hpp"

#include "qrabi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace qrabi::cli {

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0.0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json table_json(const Table& t, const nlohmann::ordered_json& spec) {
    nlohmann::ordered_json j;
    j["spec"] = spec;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        // Round through the CSV text so both artifacts carry the same values.
        for (double x : row) r.push_back(std::strtod(format_number(x).c_str(), nullptr));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing " + path.string());
}

}  // namespace qrabi::cli
