#include "dhyp/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "dhyp/bessel_ops.hpp"
#include "dhyp/errors.hpp"

namespace dhyp {

double pde_residual_char(const FieldFn& u, double beta, SpectralSquare mu, double xi, double eta, double h,
                         std::optional<Triangle> domain) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (domain && !(xi - h > domain->a && eta + h < domain->b && xi + h < eta - h))
    throw DomainError("residual stencil leaves the open triangle");
  const double upp = u(xi + h, eta + h), upm = u(xi + h, eta - h);
  const double ump = u(xi - h, eta + h), umm = u(xi - h, eta - h);
  const double u_xe = (upp - upm - ump + umm) / (4.0 * h * h);
  const double u_x = (u(xi + h, eta) - u(xi - h, eta)) / (2.0 * h);
  const double u_e = (u(xi, eta + h) - u(xi, eta - h)) / (2.0 * h);
  return u_xe - beta / (eta - xi) * (u_e - u_x) + 0.25 * mu.mu * u(xi, eta);
}

double pde_residual_orig(const std::function<double(double, double)>& U, double m, SpectralSquare mu, double x,
                         double y, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (!(y - h > 0.0)) throw DomainError("residual stencil touches the degeneration line");
  const double c = U(x, y);
  const double uxx = (U(x + h, y) - 2.0 * c + U(x - h, y)) / (h * h);
  const double uyy = (U(x, y + h) - 2.0 * c + U(x, y - h)) / (h * h);
  const double ym = std::pow(y, m);
  return ym * uxx - uyy + mu.mu * ym * c;
}

double ResidualReport::max_abs() const {
  double r = 0.0;
  for (double v : residuals) {
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
    r = std::max(r, std::abs(v));
  }
  return r;
}

ResidualReport residual_report(const FieldFn& u, double beta, SpectralSquare mu,
                               const std::vector<std::pair<double, double>>& points, double h,
                               std::optional<Triangle> domain) {
  ResidualReport rep;
  rep.points = points;
  rep.fd_step = h;
  double m1 = 0.0, m2 = 0.0;
  for (const auto& [xi, eta] : points) {
    const double r1 = pde_residual_char(u, beta, mu, xi, eta, h, domain);
    const double r2 = pde_residual_char(u, beta, mu, xi, eta, 0.5 * h, domain);
    rep.residuals.push_back(r1);
    rep.residuals_half.push_back(r2);
    m1 = std::isfinite(r1) ? std::max(m1, std::abs(r1)) : std::numeric_limits<double>::infinity();
    m2 = std::isfinite(r2) ? std::max(m2, std::abs(r2)) : std::numeric_limits<double>::infinity();
  }
  rep.convergence_order = (m1 > 0.0 && m2 > 0.0 && std::isfinite(m1 + m2)) ? std::log2(m1 / m2) : 0.0;
  return rep;
}

double richardson(const std::vector<double>& eps, const std::vector<double>& values, double p1, double p2) {
  const std::size_t n = std::min<std::size_t>(std::min(eps.size(), values.size()), 3);
  if (n == 0) throw DomainError("richardson needs at least one sample");
  if (n == 1) return values[0];
  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = std::pow(eps[i], p1);
    if (n == 3) A(i, 2) = std::pow(eps[i], p2);
    rhs(i) = values[i];
  }
  return A.colPivHouseholderQr().solve(rhs)(0);
}

namespace {

double d5(const std::function<double(double)>& f, double x, double d) {
  return (-f(x + 2.0 * d) + 8.0 * f(x + d) - 8.0 * f(x - d) + f(x - 2.0 * d)) / (12.0 * d);
}

}  // namespace

LimitEstimate cauchy_data_limit(const FieldFn& u, double m, double xi, const std::vector<double>& epsilons) {
  if (epsilons.empty()) throw DomainError("cauchy_data_limit needs epsilons");
  for (std::size_t i = 1; i < epsilons.size(); ++i)
    if (!(epsilons[i] < epsilons[i - 1])) throw DomainError("epsilons must be decreasing");
  const double beta = m / (2.0 * (m + 2.0));
  const double pre = std::pow(0.25 * (m + 2.0), 2.0 * beta);
  LimitEstimate est;
  for (double eps : epsilons) {
    const double eta = xi + eps;
    const double d = eps / 10.0;
    const double u_xi = d5([&](double s) { return u(s, eta); }, xi, d);
    const double u_eta = d5([&](double s) { return u(xi, s); }, eta, d);
    est.raw.push_back(pre * std::pow(eps, 2.0 * beta) * (u_xi - u_eta));
  }
  est.value = richardson(epsilons, est.raw, 1.0 + 2.0 * beta, 1.0);
  for (std::size_t i = 2; i < est.raw.size(); ++i)
    if (std::abs(est.raw[i] - est.raw[i - 1]) > std::abs(est.raw[i - 1] - est.raw[i - 2])) est.diverging = true;
  return est;
}

double trace_check(const FieldFn& u, Edge edge, const std::function<double(double)>& expected, int sample_count,
                   const ProblemParameters& params) {
  if (sample_count < 2) throw DomainError("trace_check needs at least 2 samples");
  const double a = params.a, b = params.b, L = b - a;
  const double beta = derive_coefficients(params).beta;
  double worst = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    double err = 0.0;
    switch (edge) {
      case Edge::xi_equals_a: {
        const double eta = a + L * (i + 1) / sample_count;
        err = u(a, eta) - expected(eta);
        break;
      }
      case Edge::eta_equals_b: {
        const double xi = a + L * i / sample_count;
        err = u(xi, b) - expected(xi);
        break;
      }
      case Edge::diagonal: {
        const double x = a + L * (i + 0.5) / sample_count;
        const std::vector<double> eps{1e-3 * L, 1e-4 * L, 1e-5 * L};
        std::vector<double> vals;
        for (double e : eps) vals.push_back(u(x - 0.5 * e, x + 0.5 * e));
        err = richardson(eps, vals, 1.0 - 2.0 * beta, 1.0) - expected(x);
        break;
      }
    }
    if (!std::isfinite(err)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(err));
  }
  return worst;
}

// ---- identity suite --------------------------------------------------------

bool IdentityReport::all_passed() const { return failures() == 0; }

int IdentityReport::failures() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

namespace {

using Clock = std::chrono::steady_clock;

struct TestFn {
  const char* name;
  DataFunction f;
};

std::vector<TestFn> inversion_functions() {
  return {{"1", DataFunction::constant(1.0)},
          {"x", DataFunction::polynomial({0.0, 1.0})},
          {"x^2", DataFunction::polynomial({0.0, 0.0, 1.0})},
          {"sin x", DataFunction(DataTerm{DataKind::sine, {1.0, 1.0, 0.0}})},
          {"exp x", DataFunction(DataTerm{DataKind::exponential, {1.0, 1.0}})}};
}

// max of |e| that keeps NaN visible
double worst(double acc, double e) {
  return std::isfinite(e) ? std::max(acc, std::abs(e)) : std::numeric_limits<double>::infinity();
}

IdentityResult finish(IdentityResult r, Clock::time_point start) {
  r.passed = std::isfinite(r.worst_error) && r.worst_error < r.tolerance;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

IdentityResult check_inversion(const IdentitySuiteOptions& opt) {
  const auto start = Clock::now();
  IdentityResult r{"operator inversion B(A f) = A(B f) = f", 0.0, opt.tolerances.inversion};
  const std::vector<std::pair<double, double>> intervals{{0.0, 1.0}, {0.3, 1.7}};
  for (const auto& tf : inversion_functions()) {
    const Sampler f = tf.f.sampler();
    for (int n : {0, 1})
      for (double mu : opt.mus)
        for (const auto& [lo, hi] : intervals) {
          OperatorSpec spec;
          spec.n = n;
          spec.mu = {mu};
          spec.left = lo;
          spec.anchor = hi;
          auto B = [&](const Sampler& g, double x) {
            const double v = op_B(spec, g, x, opt.order);
            return opt.corrupt_b ? 2.0 * g(x) - v : v;
          };
          const Sampler Af = Sampler::values_only([&](double t) { return op_A(spec, f, t, opt.order); });
          const Sampler Bf = Sampler::values_only([&](double t) { return B(f, t); });
          for (int k = 1; k <= 9; ++k) {
            const double x = lo + (hi - lo) * k / 10.0;
            const double e1 = std::abs(B(Af, x) - f(x));
            const double e2 = std::abs(op_A(spec, Bf, x, opt.order) - f(x));
            r.worst_error = worst(worst(r.worst_error, e1), e2);
            r.cases += 2;
          }
        }
  }
  return finish(r, start);
}

IdentityResult check_f_k(const IdentitySuiteOptions& opt) {
  const auto start = Clock::now();
  IdentityResult r{"F_k(z) = 0", 0.0, opt.tolerances.f_k};
  for (int k = 0; k <= 10; ++k)
    for (double z : {-2.0, -0.5, 0.0, 0.3, 0.9, 2.0}) {
      const FkValue v = f_k_coefficient(k, z);
      r.worst_error = worst(r.worst_error, v.largest_term > 0.0 ? v.value / v.largest_term : v.value);
      ++r.cases;
    }
  return finish(r, start);
}

IdentityResult check_kernel_l(const IdentitySuiteOptions& opt) {
  const auto start = Clock::now();
  IdentityResult r{"composition kernel L = 0", 0.0, opt.tolerances.kernel_l};
  for (double mu : opt.mus) {
    OperatorSpec spec;
    spec.mu = {mu};
    spec.left = 0.0;
    spec.anchor = 1.0;
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        const double x = (i + 0.5) / 10.0;
        const double t = x * (j + 0.5) / 10.0;
        r.worst_error = worst(r.worst_error, kernel_L(x, t, spec, opt.order));
        ++r.cases;
      }
  }
  return finish(r, start);
}

IdentityResult check_lemma1(const IdentitySuiteOptions& opt) {
  const auto start = Clock::now();
  IdentityResult r{"bridge identities (left and right)", 0.0, opt.tolerances.lemma1};
  const std::vector<DataFunction> fs{DataFunction::polynomial({0.0, 1.0}),
                                     DataFunction(DataTerm{DataKind::cosine, {1.0, 2.0, 0.0}}),
                                     DataFunction(DataTerm{DataKind::exponential, {1.0, -1.0}})};
  for (double beta : {-0.1, -0.25, -0.4})
    for (double mu : {0.0, -1.0, 1.0})
      for (const auto& fd : fs) {
        const Sampler f = fd.sampler();
        for (int k = 1; k <= 5; ++k) {
          const double x = k / 6.0;
          for (auto side : {LemmaSide::left, LemmaSide::right}) {
            const auto [lhs, rhs] = lemma1_check(side, f, 0.0, 1.0, beta, {mu}, x, opt.order);
            r.worst_error = worst(r.worst_error, lhs - rhs);
            ++r.cases;
          }
        }
      }
  return finish(r, start);
}

IdentityReport run_identity_suite(const IdentitySuiteOptions& opt) {
  IdentityReport rep;
  rep.results.push_back(check_inversion(opt));
  rep.results.push_back(check_f_k(opt));
  rep.results.push_back(check_kernel_l(opt));
  rep.results.push_back(check_lemma1(opt));
  return rep;
}

// ---- problem checks ----------------------------------------------------------

namespace {

CheckRow row(std::string name, double value, double tol, std::string note = {}) {
  return {std::move(name), value, tol, std::isfinite(value) && value < tol, std::move(note)};
}

}  // namespace

std::vector<CheckRow> verify_problem(ProblemKind kind, const ProblemData& data, const ProblemParameters& params,
                                     int order, bool normalize_corner, const VerifyTolerances& tol) {
  const auto c = derive_coefficients(params);
  const FieldFn u = make_solution(kind, data, params, order, normalize_corner);
  const double a = params.a, L = params.b - params.a;
  std::vector<CheckRow> rows;

  const std::vector<std::pair<double, double>> pts{
      {a + 0.2 * L, a + 0.5 * L}, {a + 0.3 * L, a + 0.8 * L}, {a + 0.5 * L, a + 0.7 * L}};
  const ResidualReport rep = residual_report(u, c.beta, params.mu, pts, 1e-3 * L, Triangle{params.a, params.b});
  const double rmax = rep.max_abs();
  rows.push_back(row("pde residual at h", rmax, tol.residual));
  if (rmax > tol.residual_floor) {
    CheckRow r = row("residual order", rep.convergence_order, 0.0);
    r.tolerance = 2.0;
    r.passed = std::abs(rep.convergence_order - 2.0) <= tol.order_band;
    r.note = "expected 2 +- " + std::to_string(tol.order_band);
    rows.push_back(r);
  }

  auto edge_rows = [&](Edge edge, const std::function<double(double)>& expected, const char* name) {
    rows.push_back(row(name, trace_check(u, edge, expected, 20, params), tol.trace));
  };
  auto limit_rows = [&](const std::function<double(double)>& nu) {
    double worst = 0.0;
    bool diverging = false;
    for (double f : {0.3, 0.6}) {
      const double xi = a + f * L;
      const auto est = cauchy_data_limit(u, params.m, xi, {1e-3 * L, 1e-4 * L, 1e-5 * L});
      const double err = std::abs(est.value - nu(xi));
      worst = std::isfinite(err) ? std::max(worst, err) : std::numeric_limits<double>::infinity();
      diverging = diverging || est.diverging;
    }
    rows.push_back(row("degeneration-line limit vs nu", worst, tol.limit, diverging ? "estimates diverging" : ""));
  };
  auto fn = [](const std::optional<DataFunction>& f) { return [g = *f](double x) { return g(x); }; };

  switch (kind) {
    case ProblemKind::cauchy:
      edge_rows(Edge::diagonal, fn(data.tau), "diagonal trace vs tau");
      limit_rows(fn(data.nu));
      break;
    case ProblemKind::cauchy_goursat_2a:
      edge_rows(Edge::xi_equals_a, fn(data.phi_a), "trace xi=a vs phi_a");
      limit_rows(fn(data.nu));
      break;
    case ProblemKind::cauchy_goursat_2b:
      edge_rows(Edge::eta_equals_b, fn(data.phi_b), "trace eta=b vs phi_b");
      limit_rows(fn(data.nu));
      break;
    case ProblemKind::goursat_2a:
    case ProblemKind::goursat_2b:
      edge_rows(Edge::xi_equals_a, fn(data.phi_a), "trace xi=a vs phi_a");
      edge_rows(Edge::eta_equals_b, fn(data.phi_b), "trace eta=b vs phi_b");
      break;
    case ProblemKind::counterexample: {
      auto zero = [](double) { return 0.0; };
      edge_rows(Edge::xi_equals_a, zero, "trace xi=a vs 0");
      limit_rows(zero);
      break;
    }
    case ProblemKind::particular: {
      auto zero = [](double) { return 0.0; };
      const double c1 = data.c1, c2 = data.c2;
      const SpectralSquare mu = params.mu;
      edge_rows(Edge::diagonal, [=](double x) { return particular_solution(c1, c2, mu, x, x); },
                "diagonal trace vs w(x,x)");
      limit_rows(zero);
      break;
    }
  }
  return rows;
}

}  // namespace dhyp
