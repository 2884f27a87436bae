#include "reinsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "reinsim/errors.hpp"

namespace reinsim {

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

std::string CsvTable::to_string() const {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << "\n";
    char buf[32];
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw NumericalError("CsvTable: ragged row");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.10g", row[i]);
            out << (i ? "," : "") << buf;
        }
        out << "\n";
    }
    return out.str();
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("CsvTable: cannot write '" + path + "'");
    out << to_string();
}

} // namespace reinsim
