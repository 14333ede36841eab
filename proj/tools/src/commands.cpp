#include "gammalase_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gammalase/constants.hpp"
#include "gammalase/emission.hpp"
#include "gammalase/errors.hpp"
#include "gammalase/kinematics.hpp"
#include "gammalase/parallel.hpp"
#include "gammalase/tube.hpp"

#ifndef GAMMALASE_VERSION
#define GAMMALASE_VERSION "unknown"
#endif

namespace gammalase::cli {

namespace {

CsvTable make_table(std::string const& command, ScenarioConfig const& config,
                    std::vector<std::string> columns)
{
    CsvTable table(std::move(columns));
    table.add_comment(std::string("gammalase ") + GAMMALASE_VERSION + " " + command);
    table.add_comment("config_hash " + config.hash());
    for (auto const& [k, v] : config.echo()) {
        if (k.rfind("output.", 0) != 0) {
            table.add_comment(k + " = " + v);
        }
    }
    return table;
}

RunReport make_report(std::string const& command, ScenarioConfig const& config)
{
    RunReport r;
    r.command = command;
    r.config = config.echo();
    return r;
}

EmissionOptions emission_options(ScenarioConfig const& config)
{
    EmissionOptions o;
    o.harmonic_max = config.sweep.harmonic_max;
    return o;
}

std::vector<double> energy_grid(SweepSettings const& s)
{
    std::vector<double> grid(static_cast<std::size_t>(s.energy_points));
    for (int i = 0; i < s.energy_points; ++i) {
        grid[i] = s.energy_points == 1
                      ? s.energy_min_MeV
                      : s.energy_min_MeV
                            + (s.energy_max_MeV - s.energy_min_MeV) * i
                                  / (s.energy_points - 1);
    }
    grid.back() = s.energy_max_MeV;
    return grid;
}

}  // namespace

CommandResult cmd_kinematics(ScenarioConfig const& config, unsigned workers)
{
    const LaserField laser = config.make_laser();
    const std::vector<double> energies = energy_grid(config.sweep);
    const auto kprime = parallel_map(energies.size(), workers, [&](std::size_t i) {
        const ElectronBeam b = make_beam(energies[i], config.beam.direction,
                                         config.beam.spin, config.beam.density_m3);
        return to_MeV(emitted_photon_energy(pi, 1, b, laser));
    });

    CommandResult res{make_table("kinematics", config, {"E_MeV", "k_prime_MeV"}),
                      make_report("kinematics", config)};
    for (std::size_t i = 0; i < energies.size(); ++i) {
        res.table->add_row({energies[i], kprime[i]});
    }
    const ElectronBeam beam = config.make_beam();
    res.report.headlines.push_back({"k_prime_forward",
                                    to_MeV(emitted_photon_energy(pi, 1, beam, laser)),
                                    "MeV", "closed-form photon energy, N=1, theta=pi"});
    res.report.headlines.push_back({"coherence_amplitude_eA", laser.amplitude, "m_e",
                                    "fully coherent amplitude relation"});
    return res;
}

CommandResult cmd_angular(ScenarioConfig const& config, unsigned workers)
{
    const LaserField laser = config.make_laser();
    const ElectronBeam beam = config.make_beam();
    const int points = config.sweep.theta_points;
    const AngularSpectrum spectrum
        = angular_spectrum(beam, laser, uniform_theta_grid(points), 0,
                           emission_options(config), workers);

    CommandResult res{make_table("angular", config,
                                 {"theta_over_pi", "k_prime_MeV",
                                  "y_avg_xsec_times_1e6", "pol_x_re", "pol_x_im",
                                  "pol_y_re", "pol_y_im"}),
                      make_report("angular", config)};
    for (std::size_t i = 0; i < spectrum.rows.size(); ++i) {
        auto const& row = spectrum.rows[i];
        const double x = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        res.table->add_row({x, to_MeV(row.k_prime), 1e6 * row.averaged_xsec,
                            row.polarization[0].real(), row.polarization[0].imag(),
                            row.polarization[1].real(), row.polarization[1].imag()});
    }
    const auto peak = std::max_element(
        spectrum.rows.begin(), spectrum.rows.end(),
        [](AngularRow const& a, AngularRow const& b) {
            return a.averaged_xsec < b.averaged_xsec;
        });
    res.report.headlines.push_back({"k_prime_forward",
                                    to_MeV(emitted_photon_energy(pi, 1, beam, laser)),
                                    "MeV", "closed-form photon energy, N=1, theta=pi"});
    res.report.headlines.push_back({"peak_theta_over_pi", peak->theta / pi, "",
                                    "spin-averaged cross section maximum"});
    res.report.headlines.push_back({"peak_avg_xsec", peak->averaged_xsec,
                                    "m_e^-2 sr^-1", "spin-averaged cross section"});
    if (auto w = density_warning(beam, laser)) {
        res.report.warnings.push_back(*w);
    }
    return res;
}

CommandResult cmd_tube(ScenarioConfig const& config, unsigned /*workers*/)
{
    const LaserField laser = config.make_laser();
    const ElectronBeam beam = config.make_beam();
    const EmissionOptions opts = emission_options(config);
    auto const& t = config.tube;

    if (t.cycles > 1) {
        const CyclicResult cyc
            = run_cyclic(beam, laser, t.section_length_m, t.sections, t.cycles,
                         t.reflection_efficiency, t.seed_density, opts);
        CommandResult res{make_table("tube", config,
                                     {"cycle", "N_m3", "intensity_W_m2"}),
                          make_report("tube", config)};
        for (std::size_t c = 0; c < cyc.cycle_density_m3.size(); ++c) {
            res.table->add_row({static_cast<double>(c + 1), cyc.cycle_density_m3[c],
                                output_intensity(cyc.cycle_density_m3[c],
                                                 cyc.photon_energy)});
        }
        res.report.headlines.push_back({"photon_energy", to_MeV(cyc.photon_energy),
                                        "MeV", "closed-form photon energy"});
        res.report.headlines.push_back({"final_photon_density", cyc.final_density_m3,
                                        "m^-3", "cyclic chain of seeded sections"});
        res.report.headlines.push_back({"output_intensity", cyc.intensity_W_m2, "W/m^2",
                                        "I = N k' c"});
        res.report.warnings = cyc.warnings;
        return res;
    }

    const MultiSectionResult ms = run_multi_section(
        beam, laser, t.section_length_m, t.sections, t.seed_density, t.samples, opts);
    CommandResult res{make_table("tube", config,
                                 {"section", "l_m", "n", "n_prime", "N", "n_m3",
                                  "n_prime_m3", "N_m3"}),
                      make_report("tube", config)};
    for (std::size_t j = 0; j < ms.sections.size(); ++j) {
        const double offset = static_cast<double>(j) * t.section_length_m;
        for (auto const& s : ms.sections[j].samples) {
            res.table->add_row({static_cast<double>(j + 1), offset + s.l_m, s.n,
                                s.n_prime, s.N, to_si_density(s.n),
                                to_si_density(s.n_prime), to_si_density(s.N)});
        }
    }
    const double n0 = to_compton_density(beam.density_m3);
    const double seed = to_compton_density(t.seed_density);
    auto& h = res.report.headlines;
    h.push_back({"gain_coefficient_a", ms.gain.a, "",
                 "forward averaged cross section times unit solid angle"});
    h.push_back({"gain_length", ms.gain.gain_length_m * 1e9, "nm", "lambda_c / a"});
    h.push_back({"photon_energy", to_MeV(ms.photon_energy), "MeV",
                 "closed-form photon energy, N=1, theta=pi"});
    h.push_back({"N_inf_exact", to_si_density(seeded_asymptote(n0, seed)), "m^-3",
                 "seeded asymptote N0 + n0 - r1 (first section)"});
    h.push_back({"N_inf_half_rule", t.seed_density + 0.5 * beam.density_m3, "m^-3",
                 "half-density rule n0/2 (first section)"});
    h.push_back({"output_intensity", ms.half_rule_intensity_W_m2, "W/m^2",
                 "half-density rule per section, I = N k' c"});
    h.push_back({"output_intensity_exact", ms.intensity_W_m2, "W/m^2",
                 "exact seeded chain, I = N k' c"});
    h.push_back({"final_photon_density_exact", ms.final_density_m3, "m^-3",
                 "exact seeded chain"});
    res.report.warnings = ms.warnings;
    if (n0 > 0.0 && n0 < 1.0) {
        res.report.warnings.push_back(
            "output_intensity uses the half-density rule; output_intensity_exact "
            "follows the seeded closed form and is about twice as large here");
    }
    return res;
}

CommandResult cmd_coherence(ScenarioConfig const& config, unsigned /*workers*/)
{
    auto const& c = config.coherence;
    const LaserField laser = config.make_laser();
    const ElectronBeam source = make_beam(c.source_energy_MeV, Direction::head_on,
                                          config.beam.spin);
    const double k_rad = emitted_photon_energy(pi, 1, source, laser);
    const double lambda_rad = wavelength_from_natural_energy(k_rad);
    const LaserField radiation = make_laser(lambda_rad, c.radiation_intensity_W_m2);
    const ElectronBeam probe_beam = make_beam(c.probe_energy_MeV,
                                              Direction::co_propagating, config.beam.spin);
    const double theta = c.theta_over_pi * pi;
    const CoherenceProbe probe = make_coherence_probe(probe_beam, radiation, theta);

    CommandResult res{std::nullopt, make_report("coherence", config)};
    auto& h = res.report.headlines;
    h.push_back({"radiation_wavelength", lambda_rad * 1e9, "nm",
                 "closed-form photon energy of the source beam"});
    h.push_back({"radiation_eA", radiation.amplitude, "m_e",
                 "fully coherent amplitude relation"});
    h.push_back({"lambda_prime_0", probe.compton_wavelength_m * 1e9, "nm",
                 "Compton backscatter energy"});
    h.push_back({"lambda_prime", probe.shifted_wavelength_m * 1e9, "nm",
                 "lambda'_0 (1 + shift)"});
    h.push_back({"wavelength_shift", probe.shift, "", "wavelength-shift formula"});
    if (c.measured_shift) {
        const double coherent = coherent_intensity_from_shift(*c.measured_shift, theta,
                                                              probe_beam, lambda_rad);
        h.push_back({"coherent_intensity", coherent, "W/m^2",
                     "inverse of the wavelength-shift formula"});
        if (c.radiation_intensity_W_m2 > 0.0) {
            h.push_back({"coherent_fraction", coherent / c.radiation_intensity_W_m2, "",
                         "coherent intensity / radiation intensity"});
        }
    }
    return res;
}

CommandResult cmd_limits(ScenarioConfig const& config, unsigned /*workers*/)
{
    const LaserField laser = config.make_laser();
    const ElectronBeam beam = config.make_beam();
    CommandResult res{std::nullopt, make_report("limits", config)};
    auto& h = res.report.headlines;
    h.push_back({"coherence_amplitude_eA", laser.amplitude, "m_e",
                 "fully coherent amplitude relation"});
    h.push_back({"laser_photon_energy", laser.wave_number, "m_e", "k = 2 pi lambda_c / lambda"});
    h.push_back({"critical_density", critical_density(laser), "m^-3",
                 "Coulomb force equals laser force"});
    const GainCoefficient g = gain_coefficient(beam, laser, emission_options(config));
    h.push_back({"gain_length", g.gain_length_m * 1e9, "nm", "lambda_c / a"});
    const double R = wiggling_radius(beam.energy, beam.p_z, laser);
    h.push_back({"wiggling_radius", R, "lambda_c", "eA / (k (E - p_z))"});
    h.push_back({"wiggling_radius_m", to_metres(R), "m", "eA / (k (E - p_z))"});
    h.push_back({"k_prime_forward", to_MeV(emitted_photon_energy(pi, 1, beam, laser)),
                 "MeV", "closed-form photon energy, N=1, theta=pi"});
    if (auto w = density_warning(beam, laser)) {
        res.report.warnings.push_back(*w);
    }
    return res;
}

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gamma-photon emission from electrons wiggling in a laser"};
    app.set_version_flag("--version", GAMMALASE_VERSION);
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    unsigned threads = 0;
    app.add_option("--config", config_path, "Scenario file (section.key = value)");
    app.add_option("--set", overrides, "Override one setting, section.key=value")
        ->allow_extra_args(false);
    app.add_option("--out", out_path, "Output file (overrides output.path)");
    app.add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    app.require_subcommand(1);

    using Command = CommandResult (*)(ScenarioConfig const&, unsigned);
    const std::vector<std::pair<std::string, std::pair<Command, std::string>>> commands{
        {"kinematics", {cmd_kinematics, "Forward photon energy versus beam energy"}},
        {"angular", {cmd_angular, "Angular cross section and polarisation"}},
        {"tube", {cmd_tube, "Photon density along the active tube"}},
        {"coherence", {cmd_coherence, "Coherence diagnostics from a probe beam"}},
        {"limits", {cmd_limits, "Amplitude, critical density, gain length, radius"}},
    };
    for (auto const& [name, entry] : commands) {
        app.add_subcommand(name, entry.second)->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string name;
    Command command = nullptr;
    for (auto const& [n, entry] : commands) {
        if (app.got_subcommand(n)) {
            name = n;
            command = entry.first;
        }
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        ScenarioConfig config = parse_config(config_path, overrides);
        if (!out_path.empty()) {
            config.output.path = out_path;
        }
        CommandResult res = command(config, threads);
        res.report.wall_time_s = std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
        const std::string report = config.output.format == ReportFormat::json
                                       ? res.report.to_json()
                                       : res.report.to_text();

        std::ofstream file;
        if (!config.output.path.empty()) {
            file.open(config.output.path);
            if (!file) {
                err << "output.path: cannot open '" << config.output.path << "'\n";
                return 2;
            }
        }
        std::ostream& data = file.is_open() ? static_cast<std::ostream&>(file) : out;
        if (res.table) {
            res.table->write(data);
            // Keep the report off the data stream when both would share it.
            (file.is_open() ? out : err) << report;
        } else {
            data << report;
        }
        return 0;
    } catch (ConfigError const& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace gammalase::cli
