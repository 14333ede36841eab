#include "gammalase_cli/csv.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gammalase::cli {

std::string format_number(double v)
{
    if (v == 0.0) {
        v = 0.0;
    }
    std::array<char, 64> buf{};
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::scientific, 11);
    (void)ec;
    return std::string(buf.data(), p);
}

std::string format_shortest(double v)
{
    std::array<char, 64> buf{};
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), p);
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_comment(std::string line)
{
    comments_.push_back(std::move(line));
}

void CsvTable::add_row(std::vector<double> const& values)
{
    if (values.size() != columns_.size()) {
        throw std::logic_error("CSV row width does not match the header");
    }
    rows_.push_back(values);
}

void CsvTable::write(std::ostream& out) const
{
    for (auto const& c : comments_) {
        out << "# " << c << '\n';
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << columns_[i];
    }
    out << '\n';
    for (auto const& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
}

CsvData read_csv(std::string const& text)
{
    CsvData data;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            data.comments.push_back(line);
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (header) {
            data.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        for (auto const& c : cells) {
            double v = 0.0;
            auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
            if (ec != std::errc{} || p != c.data() + c.size()) {
                throw std::runtime_error("CSV cell is not a number: '" + c + "'");
            }
            row.push_back(v);
        }
        data.rows.push_back(std::move(row));
    }
    return data;
}

}  // namespace gammalase::cli
