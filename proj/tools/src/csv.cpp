#include "csv.hpp"

#include <cstdio>
#include <stdexcept>

#include "cra/version.hpp"

namespace cra::cli {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_cell(const std::optional<double>& value) {
    return value ? format_number(*value) : std::string{};
}

std::string params_line(const ModelParams& params) {
    return "omega_c=" + format_number(params.omega_c()) + " omega=" + format_number(params.omega()) +
           " J=" + format_number(params.hopping()) + " g0=" + format_number(params.g0()) +
           " g1=" + format_number(params.g1());
}

CsvWriter::CsvWriter(std::ostream& out, const std::string& command) : out_(out) {
    out_ << "# cra " << kVersion << ' ' << command << '\n';
}

void CsvWriter::meta(const std::string& line) { out_ << "# " << line << '\n'; }

void CsvWriter::columns(const std::vector<std::string>& names) {
    width_ = names.size();
    row(names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (width_ != 0 && cells.size() != width_) throw std::logic_error("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

void CsvWriter::row_numbers(const std::vector<std::optional<double>>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (const auto& v : values) cells.push_back(format_cell(v));
    row(cells);
}

void CsvWriter::trailer(const std::string& line) { meta(line); }

}  // namespace cra::cli
