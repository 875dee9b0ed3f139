#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace radmax {

// One CSV cell: reals are emitted in scientific notation with 17 significant
// digits, '.' decimal separator, so reruns diff bitwise.
using CsvValue = std::variant<double, std::int64_t, std::uint64_t, bool, std::string>;

std::string format_csv_value(const CsvValue& v);

class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::string& experiment,
              std::vector<std::string> columns);

    void comment(const std::string& text);
    void row(const std::vector<CsvValue>& values);
    size_t rows_written() const { return rows_; }

private:
    std::ostream& os_;
    size_t columns_;
    size_t rows_ = 0;
};

inline constexpr const char* kToolVersion = "radmax 0.1.0";
inline constexpr const char* kCsvSchemaVersion = "1";

} // namespace radmax
