#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "starlike/errors.hpp"
#include "starlike/table_io.hpp"

using namespace starlike;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(STARLIKE_TEST_TMP) / "table_io";
  fs::create_directories(dir);
  return dir / name;
}

TableSpec small_spec() {
  TableSpec spec;
  spec.families = {FamilyKind::kF, FamilyKind::kG, FamilyKind::kH};
  spec.nu_grid = {-0.5, 0.5, 2.0};
  spec.beta_grid = {0.0, 0.25, 0.5};
  return spec;
}
}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.8411837813406593) == "1.84118378134");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_residual(1.5e-17) == "1.500e-17");
}

TEST_CASE("compute_table: ordering and monotone rows") {
  const std::vector<RadiusResult> rows = compute_table(small_spec());
  REQUIRE(rows.size() == 27);
  CHECK(rows.front().family == FamilyKind::kF);
  CHECK(rows.back().family == FamilyKind::kH);
  for (std::size_t i = 0; i < rows.size(); i += 3) {
    CHECK(rows[i].nu == rows[i + 2].nu);
    CHECK(rows[i].radius > rows[i + 1].radius);
    CHECK(rows[i + 1].radius > rows[i + 2].radius);
  }
}

TEST_CASE("compute_table rejects empty grids and invalid values") {
  TableSpec spec = small_spec();
  spec.beta_grid.clear();
  CHECK_THROWS_AS(compute_table(spec), DomainError);
  spec = small_spec();
  spec.nu_grid.clear();
  CHECK_THROWS_AS(compute_table(spec), DomainError);
  spec = small_spec();
  spec.families.clear();
  CHECK_THROWS_AS(compute_table(spec), DomainError);
  spec = small_spec();
  spec.beta_grid = {1.0};
  CHECK_THROWS_AS(compute_table(spec), DomainError);
}

TEST_CASE("CSV and JSON round trip") {
  const std::vector<RadiusResult> rows = compute_table(small_spec());
  const std::string csv = to_csv(rows);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  for (const auto& back : {parse_csv(csv), parse_json(to_json(rows))}) {
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(back[i].family == rows[i].family);
      CHECK(back[i].nu == rows[i].nu);
      CHECK(back[i].beta == rows[i].beta);
      CHECK(std::abs(back[i].radius - rows[i].radius) <= 1e-11 * rows[i].radius);
      CHECK(back[i].branch == rows[i].branch);
    }
  }
  CHECK_THROWS(parse_csv("nonsense\n1,2\n"));
  CHECK_THROWS(parse_json("{"));
}

TEST_CASE("write_table writes atomically") {
  const fs::path out = scratch("radii.csv");
  fs::remove(out);
  write_table(small_spec(), out);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_csv(compute_table(small_spec())));
  CHECK_FALSE(fs::exists(fs::path(out.string() + ".partial")));
}

TEST_CASE("write_table leaves nothing behind on failure") {
  // Renaming a file onto a non-empty directory fails after the temporary
  // has been written.
  const fs::path blocker = scratch("blocked");
  fs::create_directories(blocker / "child");
  CHECK_THROWS(write_table(small_spec(), blocker));
  CHECK_FALSE(fs::exists(fs::path(blocker.string() + ".partial")));

  const fs::path missing = scratch("no_such_dir") / "radii.csv";
  CHECK_THROWS(write_table(small_spec(), missing));
  CHECK_FALSE(fs::exists(missing));
}
