#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gammalase::cli {

/// Scientific notation with 12 significant digits; -0 prints as 0.
std::string format_number(double v);

/// Shortest round-trip representation, used for config echoes.
std::string format_shortest(double v);

/// Comma-separated table with leading `#` metadata lines.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_comment(std::string line);
    void add_row(std::vector<double> const& values);

    std::size_t rows() const { return rows_.size(); }
    void write(std::ostream& out) const;

private:
    std::vector<std::string> comments_;
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

/// Parsed CSV body for regression comparisons: comment lines are skipped and
/// the first remaining line is the header.
struct CsvData {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments;
};
CsvData read_csv(std::string const& text);

}  // namespace gammalase::cli
