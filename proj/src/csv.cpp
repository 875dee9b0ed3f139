#include "radmax/csv.hpp"

#include "radmax/errors.hpp"

#include <cmath>
#include <cstdio>

namespace radmax {

std::string format_csv_value(const CsvValue& v) {
    if (std::holds_alternative<double>(v)) {
        const double x = std::get<double>(v);
        if (std::isnan(x)) return "nan";
        if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.16e", x);
        return buf;
    }
    if (std::holds_alternative<std::int64_t>(v))
        return std::to_string(std::get<std::int64_t>(v));
    if (std::holds_alternative<std::uint64_t>(v))
        return std::to_string(std::get<std::uint64_t>(v));
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "1" : "0";
    return std::get<std::string>(v);
}

CsvWriter::CsvWriter(std::ostream& os, const std::string& experiment,
                     std::vector<std::string> columns)
    : os_(os), columns_(columns.size()) {
    os_ << "# " << kToolVersion << "; csv-schema=" << kCsvSchemaVersion
        << "; experiment=" << experiment
        << "; convention=radial-moment (common spherical surface factor dropped)\n";
    for (size_t i = 0; i < columns.size(); ++i)
        os_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::comment(const std::string& text) { os_ << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<CsvValue>& values) {
    if (values.size() != columns_)
        throw InvalidInput("CsvWriter: row width does not match the header");
    for (size_t i = 0; i < values.size(); ++i)
        os_ << format_csv_value(values[i]) << (i + 1 < values.size() ? "," : "\n");
    ++rows_;
}

} // namespace radmax
