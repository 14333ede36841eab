#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammalase/beamfield.hpp"

namespace gammalase::cli {

/// Bad configuration input. The message always starts with the field path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LaserSettings {
    double wavelength_nm = 785.0;
    double intensity_W_m2 = 1e19;
};

struct BeamSettings {
    double energy_MeV = 307.0;
    Direction direction = Direction::head_on;
    Spin spin = Spin::up;
    double density_m3 = 1e18;
};

struct SweepSettings {
    int theta_points = 2000;
    double energy_min_MeV = 100.0;
    double energy_max_MeV = 1000.0;
    int energy_points = 181;
    int harmonic_max = 8;
};

struct TubeSettings {
    double section_length_m = 0.01;
    int sections = 1;
    double seed_density = 0.0;  // m^-3
    double reflection_efficiency = 1.0;
    int cycles = 1;
    int samples = 101;
};

/// Probe-electron measurement of the coherent part of an emitted beam. The
/// radiation is the forward emission of a source beam in the configured laser.
struct CoherenceSettings {
    double source_energy_MeV = 7.68;
    double probe_energy_MeV = 5.135;
    double radiation_intensity_W_m2 = 1e26;
    double theta_over_pi = 1.0;
    std::optional<double> measured_shift;
};

enum class ReportFormat { text, json };

struct OutputSettings {
    std::string path;
    ReportFormat format = ReportFormat::text;
};

struct ScenarioConfig {
    LaserSettings laser;
    BeamSettings beam;
    SweepSettings sweep;
    TubeSettings tube;
    CoherenceSettings coherence;
    OutputSettings output;

    LaserField make_laser() const;
    ElectronBeam make_beam() const;

    /// Effective settings as canonical "section.key = value" lines.
    std::vector<std::pair<std::string, std::string>> echo() const;
    /// FNV-1a hash of the canonical echo, as 16 hex digits.
    std::string hash() const;
};

/// Apply one `section.key = value` assignment. Throws ConfigError naming the
/// key for unknown keys, malformed values or out-of-range values.
void apply_setting(ScenarioConfig& config, std::string const& key,
                   std::string const& value);

/// Parse configuration text. Lines are `section.key = value` or, after a
/// `[section]` header, `key = value`. `#` and `;` start comments.
void apply_text(ScenarioConfig& config, std::string const& text,
                std::string const& origin = "<config>");

/// Defaults, then the file at `path` (if non-empty), then each `key=value`
/// override in order. Cross-field consistency is checked at the end.
ScenarioConfig parse_config(std::string const& path,
                            std::vector<std::string> const& overrides);

/// Checks that need more than one field. Throws ConfigError.
void validate(ScenarioConfig const& config);

}  // namespace gammalase::cli
