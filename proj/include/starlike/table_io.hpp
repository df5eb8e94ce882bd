#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "starlike/radius_solver.hpp"

namespace starlike {

enum class TableFormat { kCsv, kJson };

struct TableSpec {
  std::vector<FamilyKind> families;
  std::vector<double> nu_grid;
  std::vector<double> beta_grid;
  TableFormat format = TableFormat::kCsv;
};

/// Rows ordered family, then nu, then beta. Throws DomainError on an empty
/// grid or a grid value outside a family's constraints.
std::vector<RadiusResult> compute_table(const TableSpec& spec);

/// "%.12g"; residuals use scientific notation.
std::string format_number(double x);
std::string format_residual(double x);

inline constexpr const char* kCsvHeader = "family,nu,beta,radius,residual,branch";

std::string to_csv(const std::vector<RadiusResult>& rows);
std::string to_json(const std::vector<RadiusResult>& rows);

/// Parses the CSV layout above. Bracket, alpha and equation_root are not
/// stored in CSV and come back zeroed.
std::vector<RadiusResult> parse_csv(const std::string& text);
std::vector<RadiusResult> parse_json(const std::string& text);

/// Writes via a temporary sibling and renames; nothing is left behind on failure.
void write_table(const TableSpec& spec, const std::filesystem::path& out);

}  // namespace starlike
