// experiment.hpp: runs one ExperimentSpec and writes its artifacts

#pragma once

#include "qrabi/cli/config.hpp"
#include "qrabi/cli/output.hpp"
#include "qrabi/entanglement.hpp"
#include "qrabi/phasespace.hpp"
#include "qrabi/spectra.hpp"

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qrabi::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitIo = 4 };

struct RunResult {
    std::vector<std::filesystem::path> artifacts;  // in write order, manifest.json last
    std::vector<std::string> warnings;
};

Table spectrum_table(const SpectrumSweep& sweep);
Table entropy_table(const std::vector<EntropyPoint>& points);
Table wigner_table(const WignerGrid& w);
Table crossings_table(const std::vector<CrossingReport>& reports);

// Identical specs produce byte-identical csv/json files.
RunResult run(const ExperimentSpec& spec);

// Maps an in-flight exception to the documented exit status.
int exit_code_for(std::exception_ptr e);

// Full command-line entry point: parse, run, report. Diagnostics go to err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrabi::cli
