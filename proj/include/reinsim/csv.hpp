#pragma once

#include <string>
#include <vector>

namespace reinsim {

// Rectangular numeric table with a single '#'-prefixed comment line recording
// the resolved config. Serialized UTF-8, comma delimited, '.' decimals.
struct CsvTable {
    std::string comment;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const; // -1 when absent
    std::string to_string() const;
    void write(const std::string& path) const;
};

} // namespace reinsim
