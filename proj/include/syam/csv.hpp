#pragma once

#include <string>
#include <vector>

#include "syam/link.hpp"

namespace syam {

/// Full-precision decimal formatting (17 significant digits) so written
/// doubles round-trip exactly.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Write a numeric CSV atomically (temp file then rename).
void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

/// Atomic whole-file text write.
void write_text_file(const std::string& path, const std::string& content);

/// Spectrum interchange: columns mode_index, eigenvalue, multiplicity.
void spectrum_to_csv(const SpectrumTable& table, const std::string& path);
SpectrumTable spectrum_from_csv(const std::string& path);

/// Solution profiles: columns x, u.
void solution_to_csv(const std::vector<double>& x, const std::vector<double>& u,
                     const std::string& path);
void solution_from_csv(const std::string& path, std::vector<double>& x, std::vector<double>& u);

}  // namespace syam
