#include "gammalase_cli/report.hpp"

#include <sstream>

#include "gammalase_cli/csv.hpp"
#include "json.hpp"

namespace gammalase::cli {

Headline const* RunReport::find(std::string const& name) const
{
    for (auto const& h : headlines) {
        if (h.name == name) {
            return &h;
        }
    }
    return nullptr;
}

std::string RunReport::to_text() const
{
    std::ostringstream out;
    out << "command: " << command << '\n';
    out << "config:\n";
    for (auto const& [k, v] : config) {
        out << "  " << k << " = " << v << '\n';
    }
    out << "headlines:\n";
    for (auto const& h : headlines) {
        out << "  " << h.name << " = " << format_number(h.value);
        if (!h.unit.empty()) {
            out << ' ' << h.unit;
        }
        out << "  [" << h.source << "]\n";
    }
    for (auto const& w : warnings) {
        out << "warning: " << w << '\n';
    }
    out << "wall_time_s: " << format_number(wall_time_s) << '\n';
    return out.str();
}

std::string RunReport::to_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (auto const& [k, v] : config) {
        cfg[k] = v;
    }
    j["config"] = cfg;
    j["headlines"] = nlohmann::ordered_json::array();
    for (auto const& h : headlines) {
        j["headlines"].push_back(
            {{"name", h.name}, {"value", h.value}, {"unit", h.unit}, {"source", h.source}});
    }
    j["warnings"] = warnings;
    j["wall_time_s"] = wall_time_s;
    return j.dump(2) + "\n";
}

}  // namespace gammalase::cli
