#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cra/model.hpp"

namespace cra::cli {

std::string format_number(double value);
std::string format_cell(const std::optional<double>& value);

/// "omega_c=200 omega=200 J=1 g0=1 g1=1"
std::string params_line(const ModelParams& params);

class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::string& command);

    void meta(const std::string& line);
    void columns(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);
    void row_numbers(const std::vector<std::optional<double>>& values);
    void trailer(const std::string& line);

private:
    std::ostream& out_;
    std::size_t width_ = 0;
};

}  // namespace cra::cli
