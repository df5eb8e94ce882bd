#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "starlike/disk_verifier.hpp"

namespace starlike {

/// Settings shared by the numerical audit claims run by `starlike verify`.
struct AuditOptions {
  double eps = kDefaultEps;
  int angles = kDefaultAngles;
  std::uint64_t seed = 0;
  int route_samples = 1000;
  int inequality_samples = 10000;
  int table_zeros = kMaxTableZeros;
  std::filesystem::path golden;
};

/// Per-claim overrides for single-claim invocations.
struct ClaimParams {
  std::optional<double> nu;
  std::optional<double> beta;
  std::optional<double> alpha;
};

/// Published threshold order for starlikeness of h on the unit disk.
inline constexpr double kReferenceNu0 = -0.5623;

const std::vector<double>& audit_nu_grid();
const std::vector<double>& audit_beta_grid();

/// Claims run by --all, in order.
std::vector<std::string> all_claim_ids();

/// Runs one claim. Besides the --all ids this accepts
/// starlike-inside-{f,g,h} and starlike-outside-{f,g,h} (nu, beta required)
/// and halfplane with an explicit alpha.
VerificationReport run_claim(const std::string& id, const AuditOptions& opts, const ClaimParams& params = {});

std::vector<VerificationReport> run_all(const AuditOptions& opts);

std::filesystem::path default_golden_path();

}  // namespace starlike
