// plot.hpp: minimal self-contained figure output
//
// SVG line charts for spectra and entropy curves, SVG heatmaps for Wigner
// grids, and gnuplot splot scripts for the 3D surface view. No external
// runtime is needed to view the SVGs.

#pragma once

#include "qrabi/cli/config.hpp"
#include "qrabi/entanglement.hpp"
#include "qrabi/errors.hpp"
#include "qrabi/phasespace.hpp"
#include "qrabi/spectra.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qrabi::cli {

class UnsupportedFormat : public ConfigError {
public:
    using ConfigError::ConfigError;
};

std::string spectrum_svg(const SpectrumSweep& sweep, const std::string& title);
std::string entropy_svg(const std::vector<EntropyPoint>& table, const std::string& title);
std::string wigner_svg(const WignerGrid& w, const std::string& title);

// Data block ("q p w" rows, blank line between p rows) plus a script that
// plots it; data_name is the file name the script refers to.
std::string wigner_gnuplot_data(const WignerGrid& w);
std::string wigner_gnuplot_script(const std::string& data_name, const std::string& title);

// Writes stem + extension(s) for the requested format and returns the paths.
// Only svg is available for spectra and entropy tables; Wigner grids accept
// svg and gnuplot. Anything else throws UnsupportedFormat.
std::vector<std::filesystem::path> emit_plot(const SpectrumSweep& sweep, Format f,
                                             const std::filesystem::path& stem, const std::string& title);
std::vector<std::filesystem::path> emit_plot(const std::vector<EntropyPoint>& table, Format f,
                                             const std::filesystem::path& stem, const std::string& title);
std::vector<std::filesystem::path> emit_plot(const WignerGrid& w, Format f, const std::filesystem::path& stem,
                                             const std::string& title);

}  // namespace qrabi::cli
