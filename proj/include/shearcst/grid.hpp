#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace shearcst {

using cplx = std::complex<double>;

/// Physical constants shared by every formula. Defaults give the dimensionless run
/// (hbar4 = 1, h2 = 1/2, m = omega = 1).
struct ModelParams {
  double hbar4 = 1.0;
  double h2 = 0.5;
  double m = 1.0;
  double omega = 1.0;

  double m_omega() const { return m * omega; }
  /// Throws InvalidArgument unless hbar4, m, omega are positive and h2 is finite.
  void validate() const;
};

/// Uniform 1-D grid: origin + i * step for i in [0, count).
struct UniformGrid {
  double origin = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double at(std::size_t i) const { return origin + static_cast<double>(i) * step; }
  double length() const { return step * static_cast<double>(count); }
  std::vector<double> points() const;

  /// Index i with at(i) == x within tol * step, if any.
  std::optional<std::size_t> index_of(double x, double tol = 1e-9) const;

  /// Grid of `count` points with origin -(count/2) * step, so that 0 is a node.
  static UniformGrid centered(std::size_t count, double step);

  /// Centered dual grid for the hbar4-scaled Fourier transform:
  /// step_dual = 1 / (hbar4 * count * step).
  UniformGrid dual(double hbar4) const;

  void validate(std::size_t min_count = 2) const;
  bool matches(const UniformGrid& other, double tol = 1e-12) const;
  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

/// Weighting of the L2(R) inner product of sampled states: plain dy, or the
/// dimensionless measure sqrt(hbar4 / h2) dy.
enum class Measure { lebesgue, dimensionless };

double measure_factor(Measure measure, const ModelParams& p);

/// Complex function on a uniform grid (a state in L2(R)).
struct SampledLine {
  UniformGrid grid;
  std::vector<cplx> values;
  Measure measure = Measure::lebesgue;

  static SampledLine sample(const UniformGrid& grid, const std::function<cplx(double)>& f,
                            Measure measure = Measure::lebesgue);

  cplx inner(const SampledLine& other, const ModelParams& p) const;  ///< <this, other>
  double norm(const ModelParams& p) const;
  void validate() const;
};

/// Complex function on an (x1, x3) grid at fixed shear x2, stored x1-major:
/// values[i1 * n3 + i3].
struct PhaseSlice {
  UniformGrid grid1;
  UniformGrid grid3;
  double x2 = 0.0;
  std::vector<cplx> values;

  PhaseSlice() = default;
  PhaseSlice(UniformGrid g1, UniformGrid g3, double x2_value);

  std::size_t n1() const { return grid1.count; }
  std::size_t n3() const { return grid3.count; }
  cplx& at(std::size_t i1, std::size_t i3) { return values[i1 * grid3.count + i3]; }
  const cplx& at(std::size_t i1, std::size_t i3) const { return values[i1 * grid3.count + i3]; }

  bool same_grid(const PhaseSlice& other) const;
  void validate() const;

  PhaseSlice& operator+=(const PhaseSlice& o);
  PhaseSlice& operator-=(const PhaseSlice& o);
  PhaseSlice& operator*=(cplx s);
};

PhaseSlice operator+(PhaseSlice a, const PhaseSlice& b);
PhaseSlice operator-(PhaseSlice a, const PhaseSlice& b);
PhaseSlice operator*(cplx s, PhaseSlice a);

/// Slices over a uniform x2 grid sharing grid1 and grid3 (a function on G/Z).
class PhaseVolume {
public:
  PhaseVolume() = default;
  /// Slices must share grids and have uniformly increasing x2.
  explicit PhaseVolume(std::vector<PhaseSlice> slices);

  /// Samples f(x1, x2, x3) on the product grid.
  static PhaseVolume sample(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2,
                            const std::function<cplx(double, double, double)>& f);
  static PhaseVolume zeros(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2);

  std::size_t size() const { return slices_.size(); }
  const PhaseSlice& operator[](std::size_t k) const { return slices_[k]; }
  PhaseSlice& operator[](std::size_t k) { return slices_[k]; }
  const std::vector<PhaseSlice>& slices() const { return slices_; }
  const UniformGrid& grid1() const { return slices_.front().grid1; }
  const UniformGrid& grid3() const { return slices_.front().grid3; }
  /// Uniform x2 grid; a single-slice volume reports step 1.
  UniformGrid grid2() const;

  bool same_grid(const PhaseVolume& other) const;

  PhaseVolume& operator+=(const PhaseVolume& o);
  PhaseVolume& operator-=(const PhaseVolume& o);
  PhaseVolume& operator*=(cplx s);

private:
  std::vector<PhaseSlice> slices_;
};

PhaseVolume operator+(PhaseVolume a, const PhaseVolume& b);
PhaseVolume operator-(PhaseVolume a, const PhaseVolume& b);
PhaseVolume operator*(cplx s, PhaseVolume a);

/// Pointwise multiplication by a function of (x1, x2, x3).
PhaseVolume multiply_by(PhaseVolume v, const std::function<cplx(double, double, double)>& f);
PhaseSlice multiply_by(PhaseSlice s, const std::function<cplx(double, double)>& f);

/// Max-abs over all samples.
double max_abs(const PhaseVolume& v);
double max_abs(std::span<const cplx> values);

}  // namespace shearcst
