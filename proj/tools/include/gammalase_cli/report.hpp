#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gammalase::cli {

struct Headline {
    std::string name;
    double value = 0.0;
    std::string unit;
    std::string source;  // formula the value comes from
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Headline> headlines;
    std::vector<std::string> warnings;
    double wall_time_s = 0.0;

    Headline const* find(std::string const& name) const;

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace gammalase::cli
