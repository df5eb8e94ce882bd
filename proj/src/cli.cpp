#include "starlike/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "starlike/audit.hpp"
#include "starlike/errors.hpp"
#include "starlike/radius_solver.hpp"
#include "starlike/table_io.hpp"

namespace starlike {

namespace {

std::string format_point(cplx z) {
  return "(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")";
}

std::string format_bracket(const Bracket& b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.16g, %.16g]", b.lo, b.hi);
  return buf;
}

void print_radius(const RadiusResult& r, bool as_json, std::ostream& out) {
  if (as_json) {
    // Single object, same schema as one element of `table --format json`.
    const nlohmann::json arr = nlohmann::json::parse(to_json({r}));
    out << arr.at(0).dump(2) << "\n";
    return;
  }
  out << "family    " << family_name(r.family) << "\n"
      << "nu        " << format_number(r.nu) << "\n"
      << "beta      " << format_number(r.beta) << "\n"
      << "radius    " << format_number(r.radius) << "\n"
      << "residual  " << format_residual(r.equation_residual) << "\n"
      << "bracket   " << format_bracket(r.bracket) << "\n"
      << "branch    " << branch_name(r.branch) << "\n"
      << "alpha     " << format_number(r.defining_alpha) << "\n";
  if (r.family == FamilyKind::kH) out << "dini_root " << format_number(r.equation_root) << "\n";
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << (r.pass ? "PASS " : "FAIL ") << r.claim_id << "  margin=" << format_residual(r.worst_margin)
      << "  at=" << format_point(r.worst_point) << "  samples=" << r.samples;
  if (!r.detail.empty()) out << "  # " << r.detail;
  out << "\n";
}

// Empty tokens are dropped so that `--beta ""` is an empty grid.
std::vector<double> parse_grid(const std::vector<std::string>& tokens, const char* what) {
  std::vector<double> out;
  for (const std::string& t : tokens) {
    if (t.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) throw DomainError(std::string("invalid ") + what + " value '" + t + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<FamilyKind> parse_families(const std::vector<std::string>& names) {
  std::vector<FamilyKind> out;
  for (const std::string& n : names) out.push_back(parse_family(n));
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radii of starlikeness for normalized Bessel functions"};
  app.require_subcommand(1);

  // radius
  auto* radius = app.add_subcommand("radius", "radius of starlikeness of order beta");
  std::string family;
  double nu = 0.0;
  double beta = 0.0;
  bool as_json = false;
  radius->add_option("family", family, "f, g or h")->required();
  radius->add_option("--nu", nu, "Bessel order (> -1)")->required();
  radius->add_option("--beta", beta, "order of starlikeness in [0,1)")->default_val(0.0);
  radius->add_flag("--json", as_json, "emit JSON");

  // zeros
  auto* zeros = app.add_subcommand("zeros", "positive zeros of J_nu or of a Dini function");
  double z_nu = 0.0;
  int z_count = 1;
  std::optional<double> dini_alpha;
  bool imaginary = false;
  zeros->add_option("--nu", z_nu, "Bessel order (> -1)")->required();
  zeros->add_option("--n", z_count, "number of zeros of J_nu (1..64)")->default_val(1);
  zeros->add_option("--dini-alpha", dini_alpha, "smallest zero of r J'(r) + alpha J(r) instead");
  zeros->add_flag("--imaginary", imaginary, "with --dini-alpha: the purely imaginary zero pair");

  // verify
  auto* verify = app.add_subcommand("verify", "numerical audit claims");
  std::string claim;
  bool all = false;
  AuditOptions opts;
  ClaimParams params;
  std::string golden;
  verify->add_option("claim", claim, "claim id (see --list)");
  verify->add_flag("--all", all, "run every claim");
  bool list = false;
  verify->add_flag("--list", list, "list claim ids");
  verify->add_option("--eps", opts.eps, "relative offset of the inner/outer circles")->default_val(kDefaultEps);
  verify->add_option("--angles", opts.angles, "angular samples per circle")->default_val(kDefaultAngles);
  verify->add_option("--seed", opts.seed, "seed for random sample sets")->default_val(0);
  verify->add_option("--nu", params.nu, "order for single-radius claims");
  verify->add_option("--beta", params.beta, "beta for single-radius claims");
  verify->add_option("--alpha", params.alpha, "alpha for the halfplane claim");
  verify->add_option("--golden", golden, "golden radii CSV");

  // table
  auto* table = app.add_subcommand("table", "grid of radii as CSV or JSON");
  std::vector<std::string> t_families;
  TableSpec spec;
  std::string format = "csv";
  std::string out_path;
  table->add_option("--family", t_families, "families (comma separated)")->required()->delimiter(',');
  std::vector<std::string> t_nu;
  std::vector<std::string> t_beta;
  table->add_option("--nu", t_nu, "nu grid (comma separated)")->required()->delimiter(',');
  table->add_option("--beta", t_beta, "beta grid (comma separated)")->required()->delimiter(',');
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output file (default: stdout)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("starlike");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (radius->parsed()) {
      const RadiusQuery q(parse_family(family), nu, beta);
      print_radius(radius_starlike(q), as_json, out);
      return kExitOk;
    }
    if (zeros->parsed()) {
      const Order order(z_nu);
      if (dini_alpha) {
        const DiniParameter p(*dini_alpha);
        if (imaginary) {
          const DiniZero d = dini_imaginary_zero(order, p);
          out << "imaginary_zero " << format_number(d.root) << "  residual " << format_residual(d.residual)
              << "  # zeros at +-i*xi\n";
        } else {
          const DiniZero d = dini_smallest_positive_zero(order, p);
          out << "dini_zero " << format_number(d.root) << "  residual " << format_residual(d.residual) << "\n";
        }
        return kExitOk;
      }
      const ZeroTable t = bessel_zeros(order, z_count);
      for (std::size_t i = 0; i < t.count(); ++i) out << (i + 1) << " " << format_number(t.zeros()[i]) << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      if (list) {
        for (const std::string& id : all_claim_ids()) out << id << "\n";
        out << "starlike-inside-{f,g,h}\nstarlike-outside-{f,g,h}\n";
        return kExitOk;
      }
      if (!golden.empty()) opts.golden = golden;
      std::vector<VerificationReport> reports;
      if (all) {
        reports = run_all(opts);
      } else if (!claim.empty()) {
        reports.push_back(run_claim(claim, opts, params));
      } else {
        err << "usage error: give a claim id or --all\n";
        return kExitUsage;
      }
      bool ok = true;
      for (const VerificationReport& r : reports) {
        print_report(r, out);
        ok = ok && r.pass;
      }
      return ok ? kExitOk : kExitClaimFailed;
    }
    if (table->parsed()) {
      spec.families = parse_families(t_families);
      spec.nu_grid = parse_grid(t_nu, "nu");
      spec.beta_grid = parse_grid(t_beta, "beta");
      spec.format = format == "json" ? TableFormat::kJson : TableFormat::kCsv;
      if (out_path.empty()) {
        const auto rows = compute_table(spec);
        out << (spec.format == TableFormat::kJson ? to_json(rows) : to_csv(rows));
      } else {
        write_table(spec, out_path);
      }
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace starlike
