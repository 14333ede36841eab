#include "gammalase_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gammalase/constants.hpp"
#include "gammalase/errors.hpp"
#include "gammalase_cli/csv.hpp"

namespace gammalase::cli {

namespace {

std::string trim(std::string const& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::string const& key, std::string const& what)
{
    throw ConfigError(key + ": " + what);
}

double parse_double(std::string const& key, std::string const& text)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end || text.empty()) {
        fail(key, "expected a number, got '" + text + "'");
    }
    if (!std::isfinite(v)) {
        fail(key, "value must be finite");
    }
    return v;
}

int parse_int(std::string const& key, std::string const& text)
{
    int v = 0;
    const char* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end || text.empty()) {
        fail(key, "expected an integer, got '" + text + "'");
    }
    return v;
}

void require(bool ok, std::string const& key, std::string const& what)
{
    if (!ok) {
        fail(key, what);
    }
}

using Setter = std::function<void(ScenarioConfig&, std::string const&, std::string const&)>;

std::map<std::string, Setter> const& setters()
{
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        t["laser.wavelength_nm"] = [](auto& c, auto const& k, auto const& v) {
            c.laser.wavelength_nm = parse_double(k, v);
            require(c.laser.wavelength_nm > 0.0, k, "must be > 0");
        };
        t["laser.intensity_W_m2"] = [](auto& c, auto const& k, auto const& v) {
            c.laser.intensity_W_m2 = parse_double(k, v);
            require(c.laser.intensity_W_m2 >= 0.0, k, "must be >= 0");
        };
        t["beam.energy_MeV"] = [](auto& c, auto const& k, auto const& v) {
            c.beam.energy_MeV = parse_double(k, v);
            require(c.beam.energy_MeV > codata2018.electron_mass_MeV, k,
                    "must exceed the electron rest energy 0.51099895 MeV");
        };
        t["beam.direction"] = [](auto& c, auto const& k, auto const& v) {
            if (v == "head_on") {
                c.beam.direction = Direction::head_on;
            } else if (v == "co_propagating") {
                c.beam.direction = Direction::co_propagating;
            } else {
                fail(k, "expected head_on or co_propagating, got '" + v + "'");
            }
        };
        t["beam.spin"] = [](auto& c, auto const& k, auto const& v) {
            if (v == "up" || v == "+1" || v == "1") {
                c.beam.spin = Spin::up;
            } else if (v == "down" || v == "-1") {
                c.beam.spin = Spin::down;
            } else {
                fail(k, "expected up or down, got '" + v + "'");
            }
        };
        t["beam.density_m3"] = [](auto& c, auto const& k, auto const& v) {
            c.beam.density_m3 = parse_double(k, v);
            require(c.beam.density_m3 >= 0.0, k, "must be >= 0");
        };
        t["sweep.theta_points"] = [](auto& c, auto const& k, auto const& v) {
            c.sweep.theta_points = parse_int(k, v);
            require(c.sweep.theta_points >= 1, k, "must be >= 1");
        };
        t["sweep.energy_min_MeV"] = [](auto& c, auto const& k, auto const& v) {
            c.sweep.energy_min_MeV = parse_double(k, v);
            require(c.sweep.energy_min_MeV > codata2018.electron_mass_MeV, k,
                    "must exceed the electron rest energy 0.51099895 MeV");
        };
        t["sweep.energy_max_MeV"] = [](auto& c, auto const& k, auto const& v) {
            c.sweep.energy_max_MeV = parse_double(k, v);
            require(c.sweep.energy_max_MeV > codata2018.electron_mass_MeV, k,
                    "must exceed the electron rest energy 0.51099895 MeV");
        };
        t["sweep.energy_points"] = [](auto& c, auto const& k, auto const& v) {
            c.sweep.energy_points = parse_int(k, v);
            require(c.sweep.energy_points >= 1, k, "must be >= 1");
        };
        t["sweep.harmonic_max"] = [](auto& c, auto const& k, auto const& v) {
            c.sweep.harmonic_max = parse_int(k, v);
            require(c.sweep.harmonic_max >= 1, k, "must be >= 1");
        };
        t["tube.section_length_m"] = [](auto& c, auto const& k, auto const& v) {
            c.tube.section_length_m = parse_double(k, v);
            require(c.tube.section_length_m >= 0.0, k, "must be >= 0");
        };
        t["tube.sections"] = [](auto& c, auto const& k, auto const& v) {
            c.tube.sections = parse_int(k, v);
            require(c.tube.sections >= 1, k, "must be >= 1");
        };
        t["tube.seed_density"] = [](auto& c, auto const& k, auto const& v) {
            c.tube.seed_density = parse_double(k, v);
            require(c.tube.seed_density >= 0.0, k, "must be >= 0");
        };
        t["tube.reflection_efficiency"] = [](auto& c, auto const& k, auto const& v) {
            c.tube.reflection_efficiency = parse_double(k, v);
            require(c.tube.reflection_efficiency >= 0.0
                        && c.tube.reflection_efficiency <= 1.0,
                    k, "must lie in [0, 1]");
        };
        t["tube.cycles"] = [](auto& c, auto const& k, auto const& v) {
            c.tube.cycles = parse_int(k, v);
            require(c.tube.cycles >= 1, k, "must be >= 1");
        };
        t["tube.samples"] = [](auto& c, auto const& k, auto const& v) {
            c.tube.samples = parse_int(k, v);
            require(c.tube.samples >= 2, k, "must be >= 2");
        };
        t["coherence.source_energy_MeV"] = [](auto& c, auto const& k, auto const& v) {
            c.coherence.source_energy_MeV = parse_double(k, v);
            require(c.coherence.source_energy_MeV > codata2018.electron_mass_MeV, k,
                    "must exceed the electron rest energy 0.51099895 MeV");
        };
        t["coherence.probe_energy_MeV"] = [](auto& c, auto const& k, auto const& v) {
            c.coherence.probe_energy_MeV = parse_double(k, v);
            require(c.coherence.probe_energy_MeV > codata2018.electron_mass_MeV, k,
                    "must exceed the electron rest energy 0.51099895 MeV");
        };
        t["coherence.radiation_intensity_W_m2"] = [](auto& c, auto const& k,
                                                      auto const& v) {
            c.coherence.radiation_intensity_W_m2 = parse_double(k, v);
            require(c.coherence.radiation_intensity_W_m2 >= 0.0, k, "must be >= 0");
        };
        t["coherence.theta_over_pi"] = [](auto& c, auto const& k, auto const& v) {
            c.coherence.theta_over_pi = parse_double(k, v);
            require(c.coherence.theta_over_pi > 0.0 && c.coherence.theta_over_pi <= 1.0,
                    k, "must lie in (0, 1]");
        };
        t["coherence.measured_shift"] = [](auto& c, auto const& k, auto const& v) {
            const double s = parse_double(k, v);
            require(s >= 0.0, k, "must be >= 0");
            c.coherence.measured_shift = s;
        };
        t["output.path"] = [](auto& c, auto const&, auto const& v) {
            c.output.path = v;
        };
        t["output.format"] = [](auto& c, auto const& k, auto const& v) {
            if (v == "text") {
                c.output.format = ReportFormat::text;
            } else if (v == "json") {
                c.output.format = ReportFormat::json;
            } else {
                fail(k, "expected text or json, got '" + v + "'");
            }
        };
        return t;
    }();
    return table;
}

}  // namespace

LaserField ScenarioConfig::make_laser() const
{
    return gammalase::make_laser(laser.wavelength_nm * 1e-9, laser.intensity_W_m2);
}

ElectronBeam ScenarioConfig::make_beam() const
{
    return gammalase::make_beam(beam.energy_MeV, beam.direction, beam.spin,
                                beam.density_m3);
}

std::vector<std::pair<std::string, std::string>> ScenarioConfig::echo() const
{
    auto num = [](double v) { return format_shortest(v); };
    auto integer = [](int v) { return std::to_string(v); };
    return {
        {"laser.wavelength_nm", num(laser.wavelength_nm)},
        {"laser.intensity_W_m2", num(laser.intensity_W_m2)},
        {"beam.energy_MeV", num(beam.energy_MeV)},
        {"beam.direction",
         beam.direction == Direction::head_on ? "head_on" : "co_propagating"},
        {"beam.spin", beam.spin == Spin::up ? "up" : "down"},
        {"beam.density_m3", num(beam.density_m3)},
        {"sweep.theta_points", integer(sweep.theta_points)},
        {"sweep.energy_min_MeV", num(sweep.energy_min_MeV)},
        {"sweep.energy_max_MeV", num(sweep.energy_max_MeV)},
        {"sweep.energy_points", integer(sweep.energy_points)},
        {"sweep.harmonic_max", integer(sweep.harmonic_max)},
        {"tube.section_length_m", num(tube.section_length_m)},
        {"tube.sections", integer(tube.sections)},
        {"tube.seed_density", num(tube.seed_density)},
        {"tube.reflection_efficiency", num(tube.reflection_efficiency)},
        {"tube.cycles", integer(tube.cycles)},
        {"tube.samples", integer(tube.samples)},
        {"coherence.source_energy_MeV", num(coherence.source_energy_MeV)},
        {"coherence.probe_energy_MeV", num(coherence.probe_energy_MeV)},
        {"coherence.radiation_intensity_W_m2", num(coherence.radiation_intensity_W_m2)},
        {"coherence.theta_over_pi", num(coherence.theta_over_pi)},
        {"coherence.measured_shift",
         coherence.measured_shift ? num(*coherence.measured_shift) : "none"},
        {"output.path", output.path},
        {"output.format", output.format == ReportFormat::json ? "json" : "text"},
    };
}

std::string ScenarioConfig::hash() const
{
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::string const& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (auto const& [k, v] : echo()) {
        // The output destination does not change the data.
        if (k.rfind("output.", 0) == 0) {
            continue;
        }
        mix(k);
        mix("=");
        mix(v);
        mix("\n");
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

void apply_setting(ScenarioConfig& config, std::string const& key,
                   std::string const& value)
{
    auto const& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) {
        fail(key, "unknown configuration key");
    }
    it->second(config, key, value);
}

void apply_text(ScenarioConfig& config, std::string const& text,
                std::string const& origin)
{
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(origin + ":" + std::to_string(lineno)
                                  + ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(lineno)
                              + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!section.empty() && key.find('.') == std::string::npos) {
            key = section + "." + key;
        }
        apply_setting(config, key, value);
    }
}

void validate(ScenarioConfig const& config)
{
    if (config.sweep.energy_min_MeV > config.sweep.energy_max_MeV) {
        fail("sweep.energy_min_MeV", "must not exceed sweep.energy_max_MeV");
    }
    if (config.sweep.energy_points == 1
        && config.sweep.energy_min_MeV != config.sweep.energy_max_MeV) {
        fail("sweep.energy_points",
             "a single-point sweep needs energy_min_MeV == energy_max_MeV");
    }
    if (config.sweep.energy_points > 1
        && config.sweep.energy_min_MeV == config.sweep.energy_max_MeV) {
        fail("sweep.energy_points",
             "must be 1 when energy_min_MeV == energy_max_MeV");
    }
}

ScenarioConfig parse_config(std::string const& path,
                            std::vector<std::string> const& overrides)
{
    ScenarioConfig config;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("--config: cannot open '" + path + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        apply_text(config, buf.str(), path);
    }
    for (auto const& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--set: expected section.key=value, got '" + o + "'");
        }
        apply_setting(config, trim(o.substr(0, eq)), trim(o.substr(eq + 1)));
    }
    validate(config);
    return config;
}

}  // namespace gammalase::cli
