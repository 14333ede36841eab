#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gammalase_cli/config.hpp"
#include "gammalase_cli/csv.hpp"
#include "gammalase_cli/report.hpp"

namespace gammalase::cli {

struct CommandResult {
    std::optional<CsvTable> table;
    RunReport report;
};

/// Forward harmonic-1 photon energy over the configured energy sweep.
CommandResult cmd_kinematics(ScenarioConfig const& config, unsigned workers);

/// Energy, averaged cross section (times 1e6) and polarisation over theta.
CommandResult cmd_angular(ScenarioConfig const& config, unsigned workers);

/// Tube profile of a multi-section chain, or per-cycle output of the cyclic
/// intensifier when tube.cycles > 1.
CommandResult cmd_tube(ScenarioConfig const& config, unsigned workers);

/// Probe-electron wavelength shift and inferred coherent intensity.
CommandResult cmd_coherence(ScenarioConfig const& config, unsigned workers);

/// eA, critical density, gain length and wiggling radius.
CommandResult cmd_limits(ScenarioConfig const& config, unsigned workers);

/// Full command line entry point. Returns the process exit code:
/// 0 success, 2 configuration or usage error, 3 numeric or domain error.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace gammalase::cli
