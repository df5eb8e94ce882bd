#include "starlike/audit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "starlike/errors.hpp"
#include "starlike/radius_solver.hpp"
#include "starlike/table_io.hpp"

#ifndef STARLIKE_DEFAULT_GOLDEN
#define STARLIKE_DEFAULT_GOLDEN "golden/radii.csv"
#endif

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

VerificationReport make_report(std::string id) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.worst_margin = kInf;
  r.pass = true;
  return r;
}

// Folds one margin into the report; `ok` decides pass independently.
void record(VerificationReport& r, double margin, cplx point, bool ok) {
  ++r.samples;
  if (margin < r.worst_margin) {
    r.worst_margin = margin;
    r.worst_point = point;
  }
  if (!ok) r.pass = false;
}

std::vector<FamilyKind> radius_families() { return {FamilyKind::kF, FamilyKind::kG, FamilyKind::kH}; }

// First sign change of J_nu' scanned directly, independent of the Dini
// function assembly used by the solver.
double first_critical_point(const Order& order) {
  auto jp = [&](double x) { return bessel_j_prime(order, x).value.real(); };
  const auto br = scan_sign_change(jp, 1e-3, 40.0, 0.05);
  if (!br) throw BracketError("J_nu' has no sign change below 40");
  return bisect(jp, br->lo, br->hi, 1e-14).root;
}

VerificationReport nu0_anchor() {
  VerificationReport r = make_report("nu0-anchor");
  const double nu0 = solve_nu0();
  const double err = std::abs(nu0 - kReferenceNu0);
  record(r, 5e-4 - err, nu0, err <= 5e-4);
  r.detail = "nu0 = " + format_number(nu0);
  return r;
}

VerificationReport h_radius_at_nu0() {
  VerificationReport r = make_report("h-radius-at-nu0");
  const double nu0 = solve_nu0();
  const RadiusResult res = radius_starlike(RadiusQuery(FamilyKind::kH, nu0, 0.0));
  const double err = std::abs(res.radius - 1.0);
  record(r, 5e-3 - err, res.radius, err <= 5e-3);
  r.detail = "r*(h_nu0) = " + format_number(res.radius);
  return r;
}

VerificationReport f_critical_point() {
  VerificationReport r = make_report("f-critical-point");
  for (double nu : {0.5, 1.0, 2.0, 5.0}) {
    const double solver = radius_starlike(RadiusQuery(FamilyKind::kF, nu, 0.0)).radius;
    const double scan = first_critical_point(Order(nu));
    const double rel = std::abs(solver - scan) / scan;
    record(r, 1e-9 - rel, solver, rel <= 1e-9);
  }
  r.detail = "r*(f_nu) vs first zero of J_nu' (relative, tol 1e-9)";
  return r;
}

VerificationReport zero_bounds() {
  VerificationReport r = make_report("zero-bounds");
  for (FamilyKind kind : radius_families()) {
    for (double nu : audit_nu_grid()) {
      const Order order(nu);
      const double j1 = bessel_zeros(order, 1).first();
      for (double beta : audit_beta_grid()) {
        const RadiusResult res = radius_starlike(RadiusQuery(kind, nu, beta));
        double bound = 0.0;
        double value = 0.0;
        if (res.branch == Branch::kIEquation) {
          bound = imaginary_zero_bound_sq(order, DiniParameter(res.defining_alpha), j1);
          value = res.radius * res.radius;
        } else {
          bound = kind == FamilyKind::kH ? j1 * j1 : j1;
          value = res.radius;
        }
        record(r, bound - value, res.radius, bound - value > 1e-12);
      }
    }
  }
  r.detail = "J-branch radius < j_{nu,1} (j^2 for h); I-branch xi^2 below the imaginary-zero ceiling";
  return r;
}

VerificationReport zero_interlacing() {
  VerificationReport r = make_report("zero-interlacing");
  constexpr int kCount = 20;
  for (double nu : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.7, 5.0}) {
    const ZeroTable a = bessel_zeros(Order(nu), kCount);
    const ZeroTable b = bessel_zeros(Order(nu + 1), kCount);
    for (int n = 0; n < kCount; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const double next = n + 1 < kCount ? a.zeros()[i + 1] : a.next_zero();
      const double margin = std::min(b.zeros()[i] - a.zeros()[i], next - b.zeros()[i]);
      const double resid = std::abs(bessel_j_real(a.order(), a.zeros()[i]));
      record(r, margin, a.zeros()[i], margin > 0.0 && resid <= 1e-10);
    }
  }
  r.detail = "j_{nu,n} < j_{nu+1,n} < j_{nu,n+1}, |J_nu(j)| <= 1e-10";
  return r;
}

VerificationReport route_agreement(const AuditOptions& opts) {
  VerificationReport r = make_report("mittag-leffler-routes");
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<FamilyKind> kinds = radius_families();
  for (int i = 0; i < opts.route_samples; ++i) {
    const FamilyKind kind = kinds[static_cast<std::size_t>(unit(rng) * 3) % 3];
    double nu = -0.9 + 5.9 * unit(rng);
    if (kind == FamilyKind::kF && std::abs(nu) < 0.05) nu = 0.05;
    const ZeroTable table = bessel_zeros(Order(nu), opts.table_zeros);
    const double j1 = table.first();
    const double reach = kind == FamilyKind::kH ? j1 * j1 : j1;
    const cplx z = std::polar(0.9 * reach * std::sqrt(unit(rng)), 2 * kPi * unit(rng));
    const Family fam(kind, Order(nu));
    const StarValue a = star_direct(fam, z);
    const StarValue b = star_mittag_leffler(fam, z, table);
    const double bound = a.tail_bound + b.tail_bound;
    const double diff = std::abs(a.value - b.value);
    record(r, bound - diff, z, diff <= bound);
  }
  r.detail = std::to_string(opts.route_samples) + " samples, " + std::to_string(opts.table_zeros) +
             " zeros, seed " + std::to_string(opts.seed);
  return r;
}

VerificationReport ratio_expansion(const AuditOptions& opts) {
  VerificationReport r = make_report("ratio-expansion");
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double nu : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0}) {
    const ZeroTable table = bessel_zeros(Order(nu), opts.table_zeros);
    for (int i = 0; i < 25; ++i) {
      const cplx z = std::polar(0.9 * table.first() * std::sqrt(unit(rng)), 2 * kPi * unit(rng));
      const RatioExpansion e = bessel_ratio_expansion(table, z);
      const double diff = std::abs(e.direct - e.partial_sum);
      record(r, e.tail_bound - diff, z, diff <= e.tail_bound);
    }
  }
  r.detail = "J_{nu+1}/J_nu against the partial-fraction sum over zeros";
  return r;
}

VerificationReport disk_maximality(const AuditOptions& opts) {
  VerificationReport r = make_report("disk-maximality");
  int failures = 0;
  for (FamilyKind kind : radius_families()) {
    for (double nu : audit_nu_grid()) {
      for (double beta : audit_beta_grid()) {
        const RadiusQuery q(kind, nu, beta);
        const RadiusResult res = radius_starlike(q);
        const RadiusCertificate c = verify_starlike_radius(q.family(), beta, res.radius, opts.eps, opts.angles);
        const bool ok = c.inside.pass && c.outside.pass;
        if (!ok) ++failures;
        record(r, std::min(c.inside.worst_margin, -c.outside.worst_margin), c.outside.worst_point, ok);
      }
    }
  }
  r.detail = std::to_string(failures) + " radii failed inside/outside certification";
  return r;
}

std::vector<cplx> disk_samples(std::mt19937_64& rng, double radius, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(std::polar(radius * std::sqrt(unit(rng)), 2 * kPi * unit(rng)));
  return out;
}

// max |slack| / max(1, |z|/(alpha-|z|)) over the given equality samples.
double equality_defect(const std::vector<double>& slack, std::span<const cplx> pts, double alpha) {
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double m = std::abs(pts[i]);
    worst = std::max(worst, std::abs(slack[i]) / std::max(1.0, m / (alpha - m)));
  }
  return worst;
}

std::vector<cplx> axis_samples(double reach, bool imaginary) {
  std::vector<cplx> pts;
  for (int k = 1; k < 100; ++k) {
    const double t = reach * k / 100.0;
    pts.push_back(imaginary ? cplx(0.0, t) : cplx(t, 0.0));
    pts.push_back(imaginary ? cplx(0.0, -t) : cplx(-t, 0.0));
  }
  return pts;
}

VerificationReport halfplane(const AuditOptions& opts, double alpha) {
  std::mt19937_64 rng(opts.seed + 2);
  const std::vector<cplx> pts = disk_samples(rng, alpha, opts.inequality_samples);
  VerificationReport r = check_halfplane_inequalities(alpha, pts);

  const std::vector<cplx> reals = axis_samples(alpha, false);
  std::vector<cplx> positive;
  for (const cplx& z : reals) {
    if (z.real() > 0) positive.push_back(z);
  }
  const double defect = equality_defect(halfplane_slacks(alpha, positive).upper, positive, alpha);
  if (defect > 1e-14) r.pass = false;
  r.detail += "; equality at positive real samples within " + format_residual(defect);
  return r;
}

VerificationReport term_inequalities(const AuditOptions& opts) {
  std::mt19937_64 rng(opts.seed + 3);
  const ZeroTable table = bessel_zeros(Order(0.0), 8);
  const std::vector<cplx> pts = disk_samples(rng, table.first() * (1 - 1e-9), opts.inequality_samples);
  VerificationReport r = check_term_inequalities(table, pts);

  // z real: z^2 is a positive real (upper equality); z imaginary: z^2 is a
  // negative real (lower equality).
  double defect = 0.0;
  for (double j : table.zeros()) {
    const double alpha = j * j;
    for (bool imaginary : {false, true}) {
      std::vector<cplx> sq;
      for (const cplx& z : axis_samples(table.first(), imaginary)) sq.push_back(z * z);
      const HalfplaneSlacks s = halfplane_slacks(alpha, sq);
      defect = std::max(defect, equality_defect(imaginary ? s.lower : s.upper, sq, alpha));
    }
  }
  if (defect > 1e-14) r.pass = false;
  r.detail += "; equality cases within " + format_residual(defect);
  return r;
}

VerificationReport q_profile() {
  VerificationReport r = make_report("q-profile");
  std::vector<double> grid;
  for (int k = 1; k <= 400; ++k) grid.push_back(0.025 * k);
  for (double nu : {-0.9, -0.5, -0.1}) {
    for (double beta : audit_beta_grid()) {
      const Order order(nu);
      const std::vector<double> q = q_nu_profile(order, beta, grid);
      double min_step = kInf;
      int sign_changes = 0;
      for (std::size_t i = 1; i < q.size(); ++i) {
        min_step = std::min(min_step, q[i] - q[i - 1]);
        if ((q[i - 1] < 0) != (q[i] < 0)) ++sign_changes;
      }
      const std::vector<double> tiny = q_nu_profile(order, beta, std::vector<double>{1e-6});
      const double limit_err = std::abs(tiny[0] + beta * nu - nu);
      const bool ok = min_step > 0.0 && limit_err <= 1e-4 && sign_changes == 1 && q.front() < 0;
      record(r, std::min(min_step, 1e-4 - limit_err), nu, ok);
    }
  }
  r.detail = "strictly increasing, small-r limit nu, exactly one sign change on (0, 10]";
  return r;
}

VerificationReport lambda_derivative() {
  VerificationReport r = make_report("lambda-derivative");
  const std::vector<double> steps = {0.2, 0.1, 0.05, 0.025};
  for (double nu : {-0.5, 0.0, 1.0}) {
    for (double z : {0.3, 0.5, 1.0}) {
      std::vector<double> res;
      for (double h : steps) res.push_back(lambda_derivative_check(Order(nu), z, h));
      for (std::size_t i = 1; i < res.size(); ++i) {
        const double order = std::log2(res[i - 1] / res[i]);
        record(r, order - 1.9, z, order >= 1.9);
      }
    }
  }
  r.detail = "observed convergence order of the central difference minus 1.9";
  return r;
}

VerificationReport golden(const AuditOptions& opts) {
  VerificationReport r = make_report("golden-radii");
  const std::filesystem::path path = opts.golden.empty() ? default_golden_path() : opts.golden;
  std::ifstream in(path);
  if (!in) {
    r.pass = false;
    r.detail = "cannot read " + path.string();
    return r;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const std::vector<RadiusResult> rows = parse_csv(ss.str());
  for (const RadiusResult& g : rows) {
    const RadiusResult now = radius_starlike(RadiusQuery(g.family, g.nu, g.beta));
    const double tol = 1e-10 * std::max(1.0, std::abs(g.radius));
    const double diff = std::abs(now.radius - g.radius);
    record(r, tol - diff, now.radius, diff <= tol && now.branch == g.branch);
  }
  if (rows.empty()) r.pass = false;
  r.detail = std::to_string(rows.size()) + " rows from " + path.string();
  return r;
}

VerificationReport single_radius(const std::string& id, const AuditOptions& opts, const ClaimParams& p) {
  if (!p.nu || !p.beta) throw DomainError(id + " requires --nu and --beta");
  const bool inside = id.rfind("starlike-inside-", 0) == 0;
  const std::string fam = id.substr(inside ? 16 : 17);
  const RadiusQuery q(parse_family(fam), *p.nu, *p.beta);
  const RadiusResult res = radius_starlike(q);
  const RadiusCertificate c = verify_starlike_radius(q.family(), *p.beta, res.radius, opts.eps, opts.angles);
  VerificationReport r = inside ? c.inside : c.outside;
  r.detail += "; radius " + format_number(res.radius);
  return r;
}

}  // namespace

const std::vector<double>& audit_nu_grid() {
  static const std::vector<double> grid = {-0.9, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0, 5.0};
  return grid;
}

const std::vector<double>& audit_beta_grid() {
  static const std::vector<double> grid = {0.0, 0.25, 0.5, 0.9};
  return grid;
}

std::filesystem::path default_golden_path() { return STARLIKE_DEFAULT_GOLDEN; }

std::vector<std::string> all_claim_ids() {
  return {"nu0-anchor",        "h-radius-at-nu0", "f-critical-point", "zero-bounds",
          "zero-interlacing",  "mittag-leffler-routes", "ratio-expansion", "disk-maximality",
          "halfplane",         "term-inequalities", "q-profile",       "lambda-derivative",
          "golden-radii"};
}

VerificationReport run_claim(const std::string& id, const AuditOptions& opts, const ClaimParams& params) {
  if (id == "nu0-anchor") return nu0_anchor();
  if (id == "h-radius-at-nu0") return h_radius_at_nu0();
  if (id == "f-critical-point") return f_critical_point();
  if (id == "zero-bounds") return zero_bounds();
  if (id == "zero-interlacing") return zero_interlacing();
  if (id == "mittag-leffler-routes") return route_agreement(opts);
  if (id == "ratio-expansion") return ratio_expansion(opts);
  if (id == "disk-maximality") return disk_maximality(opts);
  if (id == "halfplane") return halfplane(opts, params.alpha.value_or(2.0));
  if (id == "term-inequalities") return term_inequalities(opts);
  if (id == "q-profile") return q_profile();
  if (id == "lambda-derivative") return lambda_derivative();
  if (id == "golden-radii") return golden(opts);
  if (id.rfind("starlike-inside-", 0) == 0 || id.rfind("starlike-outside-", 0) == 0) {
    return single_radius(id, opts, params);
  }
  throw DomainError("unknown claim '" + id + "'");
}

std::vector<VerificationReport> run_all(const AuditOptions& opts) {
  std::vector<VerificationReport> out;
  for (const std::string& id : all_claim_ids()) out.push_back(run_claim(id, opts));
  return out;
}

}  // namespace starlike
