#include "commands.hpp"

#include "shearcst/conditions.hpp"
#include "shearcst/cst.hpp"
#include "shearcst/dynamics.hpp"
#include "shearcst/errors.hpp"
#include "shearcst/group.hpp"
#include "shearcst/io.hpp"
#include "shearcst/representations.hpp"
#include "shearcst/spectral.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <iostream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace shearcst::cli {

using std::numbers::pi;

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void write_report(std::ostream& out, const Report& r, io::Format f) {
  if (f == io::Format::json) {
    nlohmann::json doc;
    doc["rng_seed"] = r.rng_seed;
    doc["passed"] = r.passed();
    auto& arr = doc["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
      arr.push_back({{"name", c.name},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance},
                     {"passed", c.passed},
                     {"note", c.note}});
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# rng_seed " << r.rng_seed << '\n';
  out << "name,residual,tolerance,pass,note\n";
  for (const auto& c : r.checks)
    out << c.name << ',' << io::format_double(c.residual) << ',' << io::format_double(c.tolerance) << ','
        << (c.passed ? "pass" : "fail") << ',' << c.note << '\n';
}

namespace {

const cplx I(0.0, 1.0);

std::unique_ptr<HeatProfile> make_seed(const RunConfig& c) {
  if (c.seed_kind == "polynomial") {
    std::vector<cplx> coeffs(c.seed_coefficients.begin(), c.seed_coefficients.end());
    return std::make_unique<HeatPolynomial>(std::move(coeffs), c.params);
  }
  return std::make_unique<GaussianSeed>(c.seed_alpha, c.params);
}

/// Wider grids for analytically sampled volumes (vacuum, eigenstates, evolutions).
UniformGrid analytic_grid1(const RunConfig& c) { return UniformGrid::centered(c.grid_n * 3 / 2, c.grid_step); }
UniformGrid analytic_grid3(const RunConfig& c) { return UniformGrid::centered(c.grid_n * 2, c.grid_step); }

double l2(const PhaseVolume& v) {
  double acc = 0.0;
  for (const auto& s : v.slices())
    for (const auto& z : s.values) acc += std::norm(z);
  return std::sqrt(acc);
}

double rel_l2(const PhaseVolume& a, const PhaseVolume& b) { return l2(a - b) / l2(b); }

double rel_l2(const SampledLine& a, const SampledLine& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    num += std::norm(a.values[k] - b.values[k]);
    den += std::norm(b.values[k]);
  }
  return std::sqrt(num / den);
}

/// Smooth random state: a few Gaussian packets with random centres, widths and phases.
SampledLine random_state(std::mt19937_64& rng, const UniformGrid& grid, Measure m) {
  std::uniform_real_distribution<double> centre(-1.0, 1.0), width(1.0, 3.0), phase(0.0, 2.0 * pi),
      wave(-1.5, 1.5);
  struct Packet {
    double c, w, k, ph;
  };
  std::vector<Packet> packets(3);
  for (auto& pk : packets) pk = {centre(rng), width(rng), wave(rng), phase(rng)};
  return SampledLine::sample(
      grid,
      [&](double y) {
        cplx acc = 0.0;
        for (const auto& pk : packets)
          acc += std::polar(std::exp(-pk.w * (y - pk.c) * (y - pk.c)), pk.k * y + pk.ph);
        return acc;
      },
      m);
}

class Checker {
public:
  explicit Checker(Report& r) : report_(r) {}

  template <class F>
  void run(const std::string& name, double tolerance, F&& body) {
    CheckResult res{name, 0.0, tolerance, false, ""};
    try {
      res.residual = body();
      res.passed = res.residual <= tolerance;
    } catch (const Error& e) {
      res.residual = std::numeric_limits<double>::infinity();
      res.note = std::string(to_string(e.code()));
    }
    report_.checks.push_back(std::move(res));
  }

private:
  Report& report_;
};

double max_abs_diff(const PhaseSlice& a, const PhaseSlice& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

}  // namespace

Report run_verify(const RunConfig& c) {
  c.validate();
  Report report;
  report.rng_seed = c.rng_seed;
  std::mt19937_64 rng(c.rng_seed);
  Checker check(report);
  const ModelParams& p = c.params;
  const double E = c.fiducial.E;
  const UniformGrid y = c.grid1(), g2 = c.grid2();
  const double x2c = c.x2_center;

  check.run("algebra.associativity", 1e-12, [&] {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      GroupElement g{d(rng), d(rng), d(rng), d(rng)}, h{d(rng), d(rng), d(rng), d(rng)},
          k{d(rng), d(rng), d(rng), d(rng)};
      const auto a = multiply(multiply(g, h), k), b = multiply(g, multiply(h, k));
      worst = std::max({worst, std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3),
                        std::abs(a.x4 - b.x4)});
    }
    return worst;
  });
  check.run("algebra.brackets", 0.0, [&] {
    const auto X = [](int k) { return AlgebraVector::basis(k); };
    double bad = 0.0;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        AlgebraVector expected;
        if (i == 1 && j == 2) expected = X(3);
        if (i == 2 && j == 1) expected = X(3) * -1.0;
        if (i == 1 && j == 3) expected = X(4);
        if (i == 3 && j == 1) expected = X(4) * -1.0;
        if (!(bracket(X(i), X(j)) == expected)) bad += 1.0;
      }
    return bad;
  });

  const SampledLine phi = make_fiducial(c.fiducial, y, p);
  const SampledLine state = make_fiducial({FiducialKind::gaussian, c.state_q, 0.0, c.fiducial.normalization}, y, p);

  check.run("representations.dpi_commutator", 1e-6, [&] {
    const auto X = [](int k) { return AlgebraVector::basis(k); };
    const auto lhs = derived_pi(X(1), derived_pi(X(2), state, p), p);
    auto diff = lhs;
    const auto rhs = derived_pi(X(2), derived_pi(X(1), state, p), p);
    for (std::size_t k = 0; k < diff.values.size(); ++k) diff.values[k] -= rhs.values[k];
    return rel_l2(diff, derived_pi(X(3), state, p));
  });

  const PhaseVolume W = cst_volume(state, phi, g2, p);
  check.run("representations.lie_commutator", 1e-4, [&] {
    const auto X = [](int k) { return AlgebraVector::basis(k); };
    const auto comm = lie_derivative(X(1), lie_derivative(X(2), W, p), p) -
                      lie_derivative(X(2), lie_derivative(X(1), W, p), p);
    return rel_l2(comm, lie_derivative(X(3), W, p));
  });
  check.run("cst.closed_form", 1e-8, [&] {
    const PhaseSlice s = cst_slice(state, phi, x2c, p);
    return rel_l2(PhaseVolume({s}), PhaseVolume({cst_closed_form_slice(c.state_q, E, s.grid1, s.grid3, x2c, p)}));
  });
  check.run("cst.orthogonality", 1e-6, [&] {
    const double n2 = phi.norm(p) * phi.norm(p);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      const SampledLine f = random_state(rng, y, phi.measure), g = random_state(rng, y, phi.measure);
      const cplx expected = f.inner(g, p) * n2;
      const double scale = f.norm(p) * g.norm(p) * n2;
      for (double x2 : {-0.5, -0.25, 0.0, 0.25, 0.5}) {
        const cplx got = inner_product_x2(cst_slice(f, phi, x2, p), cst_slice(g, phi, x2, p), p);
        worst = std::max(worst, std::abs(got - expected) / scale);
      }
    }
    return worst;
  });
  check.run("cst.x2_independence", 1e-6, [&] {
    const SampledLine f = random_state(rng, y, phi.measure);
    const double ref = norm_x2(cst_slice(f, phi, 0.0, p), p);
    double worst = 0.0;
    for (double x2 : {-1.0, -0.3, 0.2, 0.7, 1.5}) worst = std::max(worst, std::abs(norm_x2(cst_slice(f, phi, x2, p), p) - ref) / ref);
    return worst;
  });
  check.run("cst.reconstruction", 1e-6, [&] {
    const SampledLine f = random_state(rng, y, phi.measure);
    const SampledLine back = reconstruct(cst_slice(f, phi, x2c, p), phi, p);
    const double n2 = phi.norm(p) * phi.norm(p);
    auto scaled = back;
    for (auto& v : scaled.values) v /= n2;
    return rel_l2(scaled, f);
  });
  check.run("conditions.C", 1e-5, [&] { return residual(W, apply_C(W, E, p), ConditionOperator::C, p).relative; });
  check.run("conditions.S", 1e-5, [&] { return residual(W, apply_S(W, p), ConditionOperator::S, p).relative; });
  check.run("conditions.casimir_actions", 1e-10, [&] {
    return rel_l2(casimir_action(W, CasimirAction::lie_derivative, p),
                  casimir_action(W, CasimirAction::derived_pi_tilde, p));
  });

  const auto seed = make_seed(c);
  const UniformGrid a1 = analytic_grid1(c), a3 = analytic_grid3(c);
  const UniformGrid quarter{-0.25, 0.25, 3};
  const std::vector<double> times{0.0, 0.3 / p.omega, 1.1 / p.omega};

  check.run("conditions.eigenstates", 1e-5, [&] {
    StencilOptions wide;
    wide.x2_accuracy = static_cast<int>(g2.count) - 1;
    double worst = 0.0;
    for (int j = 0; j <= 6; ++j) {
      const PhaseVolume Pj = eigenstate(j, a1, a3, g2, E, p);
      worst = std::max({worst, residual(Pj, apply_C(Pj, E, p), ConditionOperator::C, p).relative,
                        residual(Pj, apply_S(Pj, p, wide), ConditionOperator::S, p).relative});
    }
    return worst;
  });
  check.run("dynamics.schrodinger", 1e-4, [&] {
    const double dt = 1e-3 / p.omega;
    double worst = 0.0;
    for (double t : times) {
      std::vector<PhaseVolume> F;
      for (int k = -2; k <= 2; ++k) F.push_back(evolve_G(*seed, E, t + k * dt, a1, a3, quarter, p));
      PhaseVolume dF = F[0] - 8.0 * F[1];
      dF += 8.0 * F[3] - F[4];
      dF *= 1.0 / (12.0 * dt);
      const PhaseVolume H = hamiltonian_G(F[2], p);
      const PhaseVolume r = cplx(0.0, p.hbar4) * dF - H;
      worst = std::max(worst, interior_norm(r, p) / interior_norm(H, p));
    }
    return worst;
  });
  check.run("dynamics.H1_equivalence", 1e-4, [&] {
    const PhaseVolume V = evolve_G(*seed, E, times[1], a1, a3, g2, p);
    const PhaseVolume H = hamiltonian_G(V, p);
    return interior_norm(H - reduced_H1(V, E, p), p) / interior_norm(H, p);
  });
  check.run("dynamics.reduction_identity", 1e-10, [&] {
    const HeatPolynomial poly({0.3, I, 0.5, 0.2}, p);
    const HeatPolynomial mode = eigen_profile(3, p);
    const std::vector<const HeatProfile*> seeds{seed.get(), &poly, &mode};
    double worst = 0.0;
    for (const HeatProfile* s : seeds)
      for (double t : times) {
        const PhaseSlice G = evolve_G(*s, p.m_omega(), t, a1, a3, {0.0, 1.0, 1}, p)[0];
        const PhaseSlice H = evolve_heisenberg(heisenberg_profile(*s, p), t, a1, a3, p);
        worst = std::max(worst, max_abs_diff(G, H));
      }
    return worst;
  });
  check.run("dynamics.coefficient_audit", 1e-14, [&] {
    const auto target = reduced_H1_operator(E, p);
    return polyop::max_coefficient_difference(reduction_expansion_G(E, p), target) / target.max_abs();
  });

  const UniformGrid single{x2c, 1.0, 1};
  const int j_top = std::min(c.j_max, 8);
  std::vector<PhaseVolume> modes;
  for (int j = 0; j <= j_top; ++j) modes.push_back(eigenstate(j, a1, a3, single, E, p));
  check.run("spectrum.eigenvalues", 1e-5, [&] {
    double worst = 0.0;
    for (int j = 0; j <= j_top; ++j) {
      const PhaseVolume H = hamiltonian_G(modes[j], p);
      const cplx val = inner_product_x2(H[0], modes[j][0], p) / inner_product_x2(modes[j][0], modes[j][0], p);
      worst = std::max(worst, std::abs(val - p.hbar4 * p.omega * (j + 0.5)));
    }
    return worst;
  });
  check.run("spectrum.lowering", 1e-5, [&] {
    double worst = 0.0;
    for (int j = 1; j <= j_top; ++j)
      worst = std::max(worst, rel_l2(ladder_minus(modes[j], p), std::sqrt(static_cast<double>(j)) * modes[j - 1]));
    return worst;
  });
  check.run("spectrum.orthonormality", 1e-5, [&] {
    double worst = 0.0;
    for (int j = 0; j <= j_top; ++j)
      for (int k = 0; k <= j_top; ++k)
        worst = std::max(worst, std::abs(inner_product_x2(modes[j][0], modes[k][0], p) - (j == k ? 1.0 : 0.0)));
    return worst;
  });
  check.run("spectrum.ladder_commutator", 1e-8, [&] {
    const PhaseVolume comm = ladder_minus(ladder_plus(modes[0], p), p) - ladder_plus(ladder_minus(modes[0], p), p);
    return rel_l2(comm, modes[0]);
  });

  check.run("geometry.cayley_circle", 1e-12, [&] {
    double worst = 0.0;
    for (double e : c.geometry_E) {
      const auto geo = squeeze_geometry(e, p);
      for (int k = -50; k <= 50; ++k) {
        const cplx u = cayley_map(0.2 * k * p.m_omega(), e, p);
        worst = std::max(worst, std::abs(std::abs(u - geo.center) - geo.radius));
      }
    }
    return worst;
  });
  check.run("geometry.squeeze_bounds", 0.0, [&] {
    const auto [lo, hi] = squeeze_bounds(1.0 / 3.0, p);
    return std::abs(lo - 0.5 * p.m_omega()) + std::abs(hi - 2.0 * p.m_omega());
  });
  check.run("geometry.jump_times", 1e-12, [&] {
    double worst = 0.0;
    for (double e : c.geometry_E)
      for (double x2 : {-1.0, -0.25, 0.25, 1.0}) {
        const cplx u = cayley_map(x2, e, p);
        for (double t : jump_times(x2, e, p)) worst = std::max(worst, std::abs((std::polar(1.0, -2.0 * p.omega * t) * u).real()));
      }
    return worst;
  });
  check.run("heat.gaussian", 1e-6, [&] {
    const double alpha = 0.7;
    const GaussianSeed closed(alpha, p);
    const SampledLine g = SampledLine::sample(UniformGrid::centered(2048, 1.0 / 128.0),
                                              [&](double xi) { return std::exp(-alpha * xi * xi); });
    const cplx u(-0.3, 0.2);
    double worst = 0.0;
    for (double z : {-1.0, -0.3, 0.0, 0.5, 1.2}) worst = std::max(worst, std::abs(heat_propagate_at(g, z, u, p) - closed.value(z, u)));
    return worst;
  });
  check.run("heat.pde", 1e-4, [&] {
    const double alpha = 0.7, h = 1.0 / 128.0, du = 1e-3;
    const UniformGrid xi = UniformGrid::centered(2048, h);
    const SampledLine g = SampledLine::sample(xi, [&](double s) { return std::exp(-alpha * s * s); });
    const cplx u(-0.3, 0.2);
    const auto at = [&](double z, cplx uu) { return heat_propagate_at(g, z, uu, p); };
    const double D = heat_diffusion(p);
    double num = 0.0, den = 0.0;
    for (double z : {-1.0, -0.5, 0.0, 0.25, 0.8}) {
      const cplx fu = (at(z, u - 2.0 * du) - 8.0 * at(z, u - du) + 8.0 * at(z, u + du) - at(z, u + 2.0 * du)) / (12.0 * du);
      const cplx fzz = (-at(z - 2 * h, u) + 16.0 * at(z - h, u) - 30.0 * at(z, u) + 16.0 * at(z + h, u) - at(z + 2 * h, u)) /
                       (12.0 * h * h);
      num = std::max(num, std::abs(fu - D * fzz));
      den = std::max(den, std::abs(fu));
    }
    return num / den;
  });
  check.run("io.roundtrip", 0.0, [&] {
    double bad = 0.0;
    for (auto f : {io::Format::csv, io::Format::json}) {
      std::stringstream ss;
      io::write_volume(ss, W, f);
      const PhaseVolume back = io::read_volume(ss, f);
      for (std::size_t k = 0; k < W.size(); ++k)
        for (std::size_t n = 0; n < W[k].values.size(); ++n)
          if (back[k].values[n] != W[k].values[n]) bad += 1.0;
    }
    return bad;
  });
  return report;
}

int cmd_verify(const RunConfig& c) {
  const Report r = run_verify(c);
  const auto path = c.out / (std::string("verify.") + std::string(io::to_string(c.format)));
  io::write_file(path, [&](std::ostream& out) { write_report(out, r, c.format); });
  for (const auto& chk : r.checks)
    std::cout << (chk.passed ? "PASS " : "FAIL ") << chk.name << " residual=" << chk.residual
              << " tol=" << chk.tolerance << (chk.note.empty() ? "" : " (" + chk.note + ")") << '\n';
  std::cout << "report: " << path.string() << '\n';
  return r.passed() ? exit_pass : exit_failure;
}

int cmd_evolve(const RunConfig& c) {
  c.validate();
  const ModelParams& p = c.params;
  const auto seed = make_seed(c);
  const UniformGrid g1 = c.grid1(), g3 = c.grid3();
  const std::string ext = std::string(".") + std::string(io::to_string(c.format));
  for (std::size_t k = 0; k < c.times.size(); ++k) {
    const double t = c.times[k];
    PhaseVolume v;
    std::string name;
    if (c.scenario == Scenario::heisenberg) {
      v = PhaseVolume({evolve_heisenberg(heisenberg_profile(*seed, p), t, g1, g3, p)});
      name = "evolve_heisenberg_";
    } else {
      v = evolve_G(*seed, c.fiducial.E, t, g1, g3, c.grid2(), p);
      name = "evolve_G_";
    }
    const auto path = c.out / (name + std::to_string(k) + ext);
    io::write_file(path, [&](std::ostream& out) {
      if (c.format == io::Format::csv) out << "# t " << io::format_double(t) << '\n';
      io::write_volume(out, v, c.format);
    });
    std::cout << path.string() << '\n';
  }
  return exit_pass;
}

int cmd_geometry(const RunConfig& c) {
  c.validate();
  const ModelParams& p = c.params;
  const double mw = p.m_omega();
  const std::string ext = std::string(".") + std::string(io::to_string(c.format));

  io::Table circle{{"E", "x2", "re_u", "im_u", "center", "radius"}, {}};
  io::Table arcs{{"E", "R", "x2", "re_u", "im_u"}, {}};
  io::Table jumps{{"E", "x2", "t"}, {}};
  for (double E : c.geometry_E) {
    const auto geo = squeeze_geometry(E, p);
    for (int k = -200; k <= 200; ++k) {
      const double x2 = std::tan(pi * k / 402.0) * (mw + E);
      const cplx u = cayley_map(x2, E, p);
      circle.rows.push_back({E, x2, u.real(), u.imag(), geo.center, geo.radius});
    }
    if (const auto half = admissible_x2(c.geometry_R, E, p)) {
      for (int k = -50; k <= 50; ++k) {
        const double x2 = *half * k / 50.0;
        const cplx u = cayley_map(x2, E, p);
        arcs.rows.push_back({E, c.geometry_R, x2, u.real(), u.imag()});
      }
    }
    for (double x2 : {-1.0, -0.25, 0.0, 0.25, 1.0}) {
      try {
        for (double t : jump_times(x2, E, p)) jumps.rows.push_back({E, x2, t});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CenterPoint) throw;
      }
    }
  }
  io::Table lattice{{"x2", "x1", "x3", "x1_sheared", "x3_sheared"}, {}};
  for (double x2 : {0.0, 0.5, 1.0})
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) {
        const auto [a, b] = shear(i, j, x2);
        lattice.rows.push_back({x2, static_cast<double>(i), static_cast<double>(j), a, b});
      }
  for (const auto& [name, table] : {std::pair<const char*, const io::Table*>{"cayley_circle", &circle},
                                    {"admissible_arcs", &arcs},
                                    {"jump_times", &jumps},
                                    {"shear_lattice", &lattice}}) {
    const auto path = c.out / (std::string(name) + ext);
    io::write_file(path, [&](std::ostream& out) { io::write_table(out, *table, c.format); });
    std::cout << path.string() << '\n';
  }
  return exit_pass;
}

int cmd_spectrum(const RunConfig& c) {
  c.validate();
  if (c.j_max > max_eigen_degree)
    throw Error(ErrorCode::DegreeTooHigh, "spectrum.j_max above " + std::to_string(max_eigen_degree));
  const ModelParams& p = c.params;
  const UniformGrid a1 = analytic_grid1(c), a3 = analytic_grid3(c), single{c.x2_center, 1.0, 1};
  const std::string ext = std::string(".") + std::string(io::to_string(c.format));
  io::Table table{{"j", "measured", "expected", "residual"}, {}};
  bool ok = true;
  for (int j = 0; j <= c.j_max; ++j) {
    const PhaseVolume Pj = eigenstate(j, a1, a3, single, c.fiducial.E, p);
    const PhaseVolume H = hamiltonian_G(Pj, p);
    const double measured = (inner_product_x2(H[0], Pj[0], p) / inner_product_x2(Pj[0], Pj[0], p)).real();
    const double expected = p.hbar4 * p.omega * (j + 0.5);
    const double res = std::abs(measured - expected);
    ok = ok && res < 1e-5;
    table.rows.push_back({static_cast<double>(j), measured, expected, res});
    const auto mode = c.out / ("mode_" + std::to_string(j) + ext);
    io::write_file(mode, [&](std::ostream& out) { io::write_volume(out, Pj, c.format); });
  }
  const auto path = c.out / ("spectrum" + ext);
  io::write_file(path, [&](std::ostream& out) { io::write_table(out, table, c.format); });
  std::cout << path.string() << '\n';
  return ok ? exit_pass : exit_failure;
}

int cmd_cst(const RunConfig& c) {
  c.validate();
  const ModelParams& p = c.params;
  const UniformGrid y = c.grid1();
  const SampledLine phi = make_fiducial(c.fiducial, y, p);
  const SampledLine f = make_fiducial({FiducialKind::gaussian, c.state_q, 0.0, c.fiducial.normalization}, y, p);
  const PhaseVolume W = cst_volume(f, phi, c.grid2(), p);
  const auto path = c.out / (std::string("cst.") + std::string(io::to_string(c.format)));
  io::write_file(path, [&](std::ostream& out) { io::write_volume(out, W, c.format); });
  std::cout << path.string() << '\n';
  return exit_pass;
}

}  // namespace shearcst::cli
