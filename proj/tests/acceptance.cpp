// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include "commands.hpp"
#include "config.hpp"

#include "shearcst/conditions.hpp"
#include "shearcst/cst.hpp"
#include "shearcst/diagnostics.hpp"
#include "shearcst/dynamics.hpp"
#include "shearcst/errors.hpp"
#include "shearcst/group.hpp"
#include "shearcst/io.hpp"
#include "shearcst/representations.hpp"
#include "shearcst/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace shearcst;
using std::numbers::pi;

namespace {

const ModelParams P;
const cplx I(0.0, 1.0);

struct Part {
  std::string name;
  double residual;
  double tolerance;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::vector<Part>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Part> parts;
  std::string error;
  try {
    parts = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  bool ok = error.empty() && !parts.empty();
  for (const auto& p : parts) ok = ok && p.residual <= p.tolerance;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s AC%d %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (const auto& p : parts)
    std::printf("    %-44s %.3e <= %.1e %s\n", p.name.c_str(), p.residual, p.tolerance, p.residual <= p.tolerance ? "" : "<-");
  if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  if (!ok) ++failures;
}

double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double n = 0.0, d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    n += std::norm(a[k] - b[k]);
    d += std::norm(b[k]);
  }
  return std::sqrt(n / d);
}

double rel_l2(const PhaseVolume& a, const PhaseVolume& b) {
  double n = 0.0, d = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t k = 0; k < a[s].values.size(); ++k) {
      n += std::norm(a[s].values[k] - b[s].values[k]);
      d += std::norm(b[s].values[k]);
    }
  return std::sqrt(n / d);
}

double max_abs_diff(const PhaseSlice& a, const PhaseSlice& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

SampledLine random_state(std::mt19937_64& rng, const UniformGrid& grid, Measure m) {
  std::uniform_real_distribution<double> centre(-1.0, 1.0), width(1.0, 3.0), phase(0.0, 2.0 * pi), wave(-1.5, 1.5);
  std::vector<std::array<double, 4>> packets(3);
  for (auto& pk : packets) pk = {centre(rng), width(rng), wave(rng), phase(rng)};
  return SampledLine::sample(
      grid,
      [&](double y) {
        cplx acc = 0.0;
        for (const auto& [c, w, k, ph] : packets) acc += std::polar(std::exp(-w * (y - c) * (y - c)), k * y + ph);
        return acc;
      },
      m);
}

const UniformGrid Y = UniformGrid::centered(64, 0.125);
const UniformGrid X2_FINE{-4.0 / 256.0, 1.0 / 256.0, 9};
const UniformGrid A1 = UniformGrid::centered(96, 0.125);
const UniformGrid A3 = UniformGrid::centered(128, 0.125);

PhaseVolume cst_image(double q, double E, const UniformGrid& g2) {
  const auto phi = make_fiducial({FiducialKind::gaussian, E}, Y, P);
  const auto f = make_fiducial({FiducialKind::gaussian, q}, Y, P);
  return cst_volume(f, phi, g2, P);
}

}  // namespace

int main() {
  set_diagnostic_handler([](const std::string&) {});
  const auto X = [](int k) { return AlgebraVector::basis(k); };

  criterion(1, "algebra: associativity and bracket table", [&] {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const GroupElement g{d(rng), d(rng), d(rng), d(rng)}, h{d(rng), d(rng), d(rng), d(rng)}, k{d(rng), d(rng), d(rng), d(rng)};
      const auto a = multiply(multiply(g, h), k), b = multiply(g, multiply(h, k));
      worst = std::max({worst, std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3), std::abs(a.x4 - b.x4)});
    }
    double table = 0.0;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        AlgebraVector expected;
        if (i == 1 && j == 2) expected = X(3);
        if (i == 2 && j == 1) expected = X(3) * -1.0;
        if (i == 1 && j == 3) expected = X(4);
        if (i == 3 && j == 1) expected = X(4) * -1.0;
        if (!(bracket(X(i), X(j)) == expected)) table += 1.0;
      }
    return std::vector<Part>{{"1000 random triples", worst, 1e-12}, {"bracket table mismatches", table, 0.0}};
  });

  criterion(2, "operator commutators", [&] {
    std::vector<Part> parts;
    const auto y = UniformGrid::centered(128, 0.0625);
    const auto f = SampledLine::sample(y, [](double t) { return std::polar(std::exp(-1.5 * (t - 0.2) * (t - 0.2)), -0.7 * t); });
    const auto W = cst_image(1.0, 1.5, X2_FINE);
    for (auto [i, j, k] : {std::array{1, 2, 3}, std::array{1, 3, 4}}) {
      auto comm = derived_pi(X(i), derived_pi(X(j), f, P), P);
      const auto back = derived_pi(X(j), derived_pi(X(i), f, P), P);
      for (std::size_t n = 0; n < comm.values.size(); ++n) comm.values[n] -= back.values[n];
      const std::string tag = "[X" + std::to_string(i) + ",X" + std::to_string(j) + "]";
      parts.push_back({"dpi " + tag, rel_l2(comm.values, derived_pi(X(k), f, P).values), 1e-6});
      const auto lie = lie_derivative(X(i), lie_derivative(X(j), W, P), P) - lie_derivative(X(j), lie_derivative(X(i), W, P), P);
      parts.push_back({"Lie " + tag, rel_l2(lie, lie_derivative(X(k), W, P)), 1e-4});
      const auto left = derived_pi_tilde(X(i), derived_pi_tilde(X(j), W, P), P) -
                        derived_pi_tilde(X(j), derived_pi_tilde(X(i), W, P), P);
      parts.push_back({"dpi~ " + tag, rel_l2(left, derived_pi_tilde(X(k), W, P)), 1e-4});
    }
    return parts;
  });

  criterion(3, "transform pipeline vs closed form, 64x64", [&] {
    std::vector<Part> parts;
    for (auto [q, E] : {std::pair{1.0, 1.0}, {1.0, 1.5}, {2.0, 0.7}}) {
      double worst = 0.0;
      const auto phi = make_fiducial({FiducialKind::gaussian, E}, Y, P);
      const auto f = make_fiducial({FiducialKind::gaussian, q}, Y, P);
      for (double x2 : {-0.25, 0.0, 0.25}) {
        const auto s = cst_slice(f, phi, x2, P);
        worst = std::max(worst, rel_l2(s.values, cst_closed_form_slice(q, E, s.grid1, s.grid3, x2, P).values));
      }
      char name[64];
      std::snprintf(name, sizeof name, "q=%g E=%g", q, E);
      parts.push_back({name, worst, 1e-8});
    }
    return parts;
  });

  criterion(4, "isometry and orthogonality", [&] {
    std::mt19937_64 rng(4);
    const auto phi = make_fiducial({FiducialKind::gaussian, 1.5}, Y, P);
    const double n2 = std::norm(phi.norm(P));
    const std::vector<double> x2s{-0.5, -0.25, 0.0, 0.25, 0.5};
    double iso = 0.0, orth = 0.0, indep = 0.0;
    for (int n = 0; n < 20; ++n) {
      const auto f = random_state(rng, Y, phi.measure), g = random_state(rng, Y, phi.measure);
      const cplx expected = f.inner(g, P) * n2;
      const double scale = f.norm(P) * g.norm(P) * n2;
      std::vector<double> norms;
      for (double x2 : x2s) {
        const auto Wf = cst_slice(f, phi, x2, P), Wg = cst_slice(g, phi, x2, P);
        orth = std::max(orth, std::abs(inner_product_x2(Wf, Wg, P) - expected) / scale);
        const double nf = norm_x2(Wf, P);
        iso = std::max(iso, std::abs(nf - f.norm(P) * phi.norm(P)) / (f.norm(P) * phi.norm(P)));
        norms.push_back(nf);
      }
      for (double v : norms) indep = std::max(indep, std::abs(v - norms[2]) / norms[2]);
    }
    return std::vector<Part>{{"norm preserved", iso, 1e-6}, {"inner products preserved", orth, 1e-6}, {"norm independent of x2", indep, 1e-6}};
  });

  criterion(5, "image-space conditions", [&] {
    std::vector<Part> parts;
    double c_cst = 0.0, s_cst = 0.0, casimir = 0.0;
    for (auto [q, E] : {std::pair{1.0, 1.0}, {1.0, 1.5}, {2.0, 0.7}})
      for (double centre : {0.0, 0.25}) {
        const UniformGrid g2{centre - 4.0 / 256.0, 1.0 / 256.0, 9};
        const auto W = cst_image(q, E, g2);
        c_cst = std::max(c_cst, residual(W, apply_C(W, E, P), ConditionOperator::C, P).relative);
        s_cst = std::max(s_cst, residual(W, apply_S(W, P), ConditionOperator::S, P).relative);
        const auto a = casimir_action(W, CasimirAction::lie_derivative, P);
        casimir = std::max(casimir, max_abs(a - casimir_action(W, CasimirAction::derived_pi_tilde, P)) / max_abs(a));
      }
    StencilOptions wide;
    wide.x2_accuracy = 8;
    double c_eig = 0.0, s_eig = 0.0;
    for (int j = 0; j <= 6; ++j) {
      const auto Pj = eigenstate(j, A1, A3, X2_FINE, 1.5, P);
      c_eig = std::max(c_eig, residual(Pj, apply_C(Pj, 1.5, P), ConditionOperator::C, P).relative);
      s_eig = std::max(s_eig, residual(Pj, apply_S(Pj, P, wide), ConditionOperator::S, P).relative);
    }
    parts.push_back({"C on transform images", c_cst, 1e-5});
    parts.push_back({"S on transform images", s_cst, 1e-5});
    parts.push_back({"C on Phi_j, j<=6", c_eig, 1e-5});
    parts.push_back({"S on Phi_j, j<=6", s_eig, 1e-5});
    parts.push_back({"Casimir left vs right action", casimir, 1e-10});
    return parts;
  });

  criterion(6, "dynamics: Schrodinger residual and H_G vs H1", [&] {
    const double E = 1.5 * P.m_omega(), dt = 1e-3 / P.omega;
    const GaussianSeed gauss(0.5, P);
    const HeatPolynomial poly({0.3, I, 0.5, 0.2}, P);
    const UniformGrid quarter{-0.25, 0.25, 3};
    double sch = 0.0, h1 = 0.0;
    for (const HeatProfile* seed : {static_cast<const HeatProfile*>(&gauss), static_cast<const HeatProfile*>(&poly)}) {
      for (double t : {0.0, 0.3 / P.omega, 1.1 / P.omega}) {
        std::vector<PhaseVolume> F;
        for (int k = -2; k <= 2; ++k) F.push_back(evolve_G(*seed, E, t + k * dt, A1, A3, quarter, P));
        PhaseVolume dF = F[0] - 8.0 * F[1];
        dF += 8.0 * F[3] - F[4];
        dF *= 1.0 / (12.0 * dt);
        const auto H = hamiltonian_G(F[2], P);
        sch = std::max(sch, interior_norm(cplx(0.0, P.hbar4) * dF - H, P) / interior_norm(H, P));
        const auto V = evolve_G(*seed, E, t, A1, A3, X2_FINE, P);
        const auto HV = hamiltonian_G(V, P);
        h1 = std::max(h1, interior_norm(HV - reduced_H1(V, E, P), P) / interior_norm(HV, P));
      }
    }
    return std::vector<Part>{{"i hbar dF/dt - H_G F", sch, 1e-4}, {"H_G F - H1 F", h1, 1e-4}};
  });

  criterion(7, "reduction identity at x2 = 0, E = m omega", [&] {
    const GaussianSeed gauss(0.5, P);
    const HeatPolynomial poly({0.3, I, 0.5, 0.2}, P);
    const HeatPolynomial mode = eigen_profile(3, P);
    std::vector<Part> parts;
    for (auto [name, seed] : {std::pair<const char*, const HeatProfile*>{"gaussian seed", &gauss}, {"cubic seed", &poly}, {"Phi_3 profile", &mode}}) {
      double worst = 0.0;
      for (double t : {0.0, 0.3, 1.1, 2.5}) {
        const auto G = evolve_G(*seed, P.m_omega(), t, A1, A3, {0.0, 1.0, 1}, P)[0];
        const auto H = evolve_heisenberg(heisenberg_profile(*seed, P), t, A1, A3, P);
        worst = std::max(worst, max_abs_diff(G, H));
      }
      parts.push_back({name, worst, 1e-10});
    }
    return parts;
  });

  criterion(8, "spectrum and ladder operators", [&] {
    const double E = 1.5 * P.m_omega();
    double eig = 0.0, lower = 0.0, ortho = 0.0, comm = 0.0;
    for (double x2 : {-0.25, 0.0, 0.25}) {
      const UniformGrid g2{x2, 1.0, 1};
      std::vector<PhaseVolume> modes;
      for (int j = 0; j <= 8; ++j) modes.push_back(eigenstate(j, A1, A3, g2, E, P));
      for (int j = 0; j <= 8; ++j) {
        const auto H = hamiltonian_G(modes[j], P);
        const cplx v = inner_product_x2(modes[j][0], H[0], P) / inner_product_x2(modes[j][0], modes[j][0], P);
        eig = std::max(eig, std::abs(v - P.hbar4 * P.omega * (j + 0.5)));
        if (j > 0) lower = std::max(lower, rel_l2(ladder_minus(modes[j], P), std::sqrt(double(j)) * modes[j - 1]));
        for (int k = 0; k <= 8; ++k)
          ortho = std::max(ortho, std::abs(inner_product_x2(modes[j][0], modes[k][0], P) - (j == k ? 1.0 : 0.0)));
        const auto c = ladder_minus(ladder_plus(modes[j], P), P) - ladder_plus(ladder_minus(modes[j], P), P);
        if (j <= 4) comm = std::max(comm, rel_l2(c, modes[j]));
      }
    }
    return std::vector<Part>{{"<Phi_j, H Phi_j> - hbar w (j + 1/2), j<=8", eig, 1e-5},
                             {"[L-, L+] = I", comm, 1e-8},
                             {"L- Phi_j = sqrt(j) Phi_{j-1}", lower, 1e-5},
                             {"orthonormality", ortho, 1e-5}};
  });

  criterion(9, "squeeze geometry", [&] {
    double circle = 0.0, jumps = 0.0;
    for (double E : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      const auto geo = squeeze_geometry(E, P);
      if (std::abs(geo.center + E / (P.m_omega() + E)) > 0.0 || std::abs(geo.radius - P.m_omega() / (P.m_omega() + E)) > 0.0)
        circle = 1.0;
      for (int k = -100; k <= 100; ++k) {
        const double x2 = std::tan(pi * k / 202.0) * (P.m_omega() + E);
        circle = std::max(circle, std::abs(std::abs(cayley_map(x2, E, P) - geo.center) - geo.radius));
        if (std::abs(cayley_map(x2, E, P)) < 1e-15) continue;
        for (double t : jump_times(x2, E, P))
          jumps = std::max(jumps, std::abs((std::polar(1.0, -2.0 * P.omega * t) * cayley_map(x2, E, P)).real()));
      }
    }
    const auto [lo, hi] = squeeze_bounds(1.0 / 3.0, P);
    const double bounds = std::abs(lo - 0.5 * P.m_omega()) + std::abs(hi - 2.0 * P.m_omega());
    return std::vector<Part>{{"distance from circle", circle, 1e-12}, {"squeeze_bounds(1/3) - (0.5, 2)", bounds, 0.0}, {"jump condition", jumps, 1e-12}};
  });

  criterion(10, "heat propagator", [&] {
    const double alpha = 0.7, h = 1.0 / 128.0, du = 1e-3;
    const SampledLine g = SampledLine::sample(UniformGrid::centered(2048, h), [&](double s) { return std::exp(-alpha * s * s); });
    const GaussianSeed closed(alpha, P);
    const auto at = [&](double z, cplx u) { return heat_propagate_at(g, z, u, P); };
    const double D = heat_diffusion(P);
    double match = 0.0, num = 0.0, den = 0.0;
    for (cplx u : {cplx(-0.3, 0.2), cplx(-0.1, -0.4), cplx(-1.0, 0.0)})
      for (double z : {-1.0, -0.5, 0.0, 0.25, 0.8}) {
        match = std::max(match, std::abs(at(z, u) - closed.value(z, u)));
        const cplx fu = (at(z, u - 2.0 * du) - 8.0 * at(z, u - du) + 8.0 * at(z, u + du) - at(z, u + 2.0 * du)) / (12.0 * du);
        const cplx fzz = (-at(z - 2 * h, u) + 16.0 * at(z - h, u) - 30.0 * at(z, u) + 16.0 * at(z + h, u) - at(z + 2 * h, u)) / (12.0 * h * h);
        num = std::max(num, std::abs(fu - D * fzz));
        den = std::max(den, std::abs(fu));
      }
    return std::vector<Part>{{"quadrature vs closed form", match, 1e-6}, {"heat equation residual", num / den, 1e-4}};
  });

  criterion(11, "command line: verify exit code and round trip", [&] {
    cli::RunConfig c;
    c.out = std::filesystem::temp_directory_path() / "shearcst_acceptance";
    std::filesystem::remove_all(c.out);
    std::ostringstream sink;
    auto* saved = std::cout.rdbuf(sink.rdbuf());
    const double code = cli::cmd_verify(c);
    double mismatches = 0.0;
    const auto W = cst_image(c.state_q, c.fiducial.E, c.grid2());
    for (auto f : {io::Format::csv, io::Format::json}) {
      c.format = f;
      cli::cmd_cst(c);
      std::ifstream in(c.out / (std::string("cst.") + std::string(io::to_string(f))));
      const auto back = io::read_volume(in, f);
      for (std::size_t s = 0; s < W.size(); ++s)
        for (std::size_t k = 0; k < W[s].values.size(); ++k) mismatches += back[s].values[k] != W[s].values[k];
    }
    std::cout.rdbuf(saved);
    return std::vector<Part>{{"verify exit code", code, 0.0}, {"round-trip mismatches", mismatches, 0.0}};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
