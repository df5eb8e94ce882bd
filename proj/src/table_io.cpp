#include "starlike/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

using nlohmann::json;

double rounded(double x) { return std::stod(format_number(x)); }

Branch parse_branch(const std::string& s) {
  if (s == "J_EQUATION") return Branch::kJEquation;
  if (s == "I_EQUATION") return Branch::kIEquation;
  throw std::runtime_error("unknown branch '" + s + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_residual(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::vector<RadiusResult> compute_table(const TableSpec& spec) {
  if (spec.families.empty()) throw DomainError("family list is empty");
  if (spec.nu_grid.empty()) throw DomainError("nu grid is empty");
  if (spec.beta_grid.empty()) throw DomainError("beta grid is empty");
  std::vector<RadiusResult> rows;
  rows.reserve(spec.families.size() * spec.nu_grid.size() * spec.beta_grid.size());
  for (FamilyKind kind : spec.families) {
    for (double nu : spec.nu_grid) {
      for (double beta : spec.beta_grid) rows.push_back(radius_starlike(RadiusQuery(kind, nu, beta)));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<RadiusResult>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const RadiusResult& r : rows) {
    out += std::string(family_name(r.family)) + "," + format_number(r.nu) + "," + format_number(r.beta) +
           "," + format_number(r.radius) + "," + format_residual(r.equation_residual) + "," +
           branch_name(r.branch) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<RadiusResult>& rows) {
  json arr = json::array();
  for (const RadiusResult& r : rows) {
    arr.push_back({
        {"family", family_name(r.family)},
        {"nu", rounded(r.nu)},
        {"beta", rounded(r.beta)},
        {"radius", rounded(r.radius)},
        {"residual", std::stod(format_residual(r.equation_residual))},
        {"bracket", {rounded(r.bracket.lo), rounded(r.bracket.hi)}},
        {"branch", branch_name(r.branch)},
        {"defining_alpha", rounded(r.defining_alpha)},
        {"equation_root", rounded(r.equation_root)},
    });
  }
  return arr.dump(2) + "\n";
}

std::vector<RadiusResult> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing CSV header");
  std::vector<RadiusResult> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 6) throw std::runtime_error("malformed CSV row: " + line);
    RadiusResult r;
    r.family = parse_family(cells[0]);
    r.nu = std::stod(cells[1]);
    r.beta = std::stod(cells[2]);
    r.radius = std::stod(cells[3]);
    r.equation_residual = std::stod(cells[4]);
    r.branch = parse_branch(cells[5]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<RadiusResult> parse_json(const std::string& text) {
  const json arr = json::parse(text);
  std::vector<RadiusResult> rows;
  for (const json& o : arr) {
    RadiusResult r;
    r.family = parse_family(o.at("family").get<std::string>());
    r.nu = o.at("nu").get<double>();
    r.beta = o.at("beta").get<double>();
    r.radius = o.at("radius").get<double>();
    r.equation_residual = o.at("residual").get<double>();
    r.bracket = {o.at("bracket").at(0).get<double>(), o.at("bracket").at(1).get<double>()};
    r.branch = parse_branch(o.at("branch").get<std::string>());
    r.defining_alpha = o.at("defining_alpha").get<double>();
    r.equation_root = o.at("equation_root").get<double>();
    rows.push_back(r);
  }
  return rows;
}

void write_table(const TableSpec& spec, const std::filesystem::path& out) {
  const std::vector<RadiusResult> rows = compute_table(spec);
  const std::string body = spec.format == TableFormat::kJson ? to_json(rows) : to_csv(rows);
  std::filesystem::path tmp = out;
  tmp += ".partial";
  try {
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      f << body;
      f.flush();
      if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, out);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

}  // namespace starlike
