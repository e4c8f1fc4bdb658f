#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rcbf {

/// Axis-aligned safe rectangle. Invariant: x_min < x_max, y_min < y_max.
struct RectBounds {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
};

/// Circular keep-out region. The stored radius is final, i.e. already
/// inflated by half the robot length.
struct CircleObstacle {
  Eigen::Vector2d center{0.0, 0.0};
  double radius = 0.0;
};

/// Sinusoidal reference path: x_d(t) = v_ref * t,
/// y_d(t) = a_d * sin(c_d * x_d(t) + phi_d).
struct ReferenceParams {
  double v_ref = 0.25;  // m/s
  double a_d = 1.5;     // m
  double c_d = 1.52;    // rad/m
  double phi_d = 0.0;   // rad
};

struct Gains {
  double k_v = 1.0;      // 1/s
  double k_omega = 2.5;  // 1/s
};

struct InputBox {
  double v_min = -2.0;
  double v_max = 2.0;
  double omega_min = -2.0;
  double omega_max = 2.0;
};

enum class GridSpacing { Logarithmic, Linear };

/// Knobs for the online robustness-parameter search.
struct AdaptationConfig {
  int n_samples = 100;      // perturbed states per sigma-hat estimate
  double gamma_lo = 1e-4;   // mesh floor (> 0)
  double gamma_hi = 4.0;    // mesh ceiling
  int n1 = 400;             // full-mesh counts per axis
  int n2 = 400;
  GridSpacing spacing = GridSpacing::Logarithmic;
  bool coarse_first = true;  // live-loop mode: coarse mesh + one refinement
  int coarse_n1 = 20;
  int coarse_n2 = 20;
  int adapt_every = 1;  // run the search every k-th control step
};

/// Discretization and iteration knobs for the field solve.
struct SolverKnobs {
  double resolution = 0.05;       // m
  double interior_forcing = -4.0;
  double exterior_forcing = 4.0;
  double tol = 1e-6;              // residual max-norm
  int max_iters = 200000;         // SOR sweeps
  double sor_omega = 1.9;
};

/// Full declarative description of one experiment: world geometry,
/// reference, gains, noise model, and solver knobs.
struct Scenario {
  RectBounds bounds;
  std::vector<CircleObstacle> obstacles;
  ReferenceParams reference;
  Gains gains;
  double alpha_slope = 3.0;  // linear class-K slope, 1/s
  double mu = 3.3;           // heading-term weight in the modified barrier
  double alpha_q = 1.0;      // half-Sontag q(b) = alpha_q * b
  Eigen::Vector3d error_box{0.0, 0.0, 0.0};  // per-axis half-widths (m, m, rad)
  AdaptationConfig adaptation;
  InputBox input_box;
  double dt = 0.02;       // s
  double duration = 40.0; // s
  Eigen::Vector3d x0{0.0, -0.35, 0.0};
  std::uint64_t seed = 1;
  std::array<double, 2> tunable_etas{2.0, 2.0};
  SolverKnobs solver;
  bool frozen_noise = false;  // hold one error draw for the whole run

  /// Throws ConfigError if any invariant is violated.
  void validate() const;

  /// The simulation-study scenario: 12.3 m x 4 m rectangle, two unit-radius
  /// obstacles on the centerline, sinusoidal reference, bounded
  /// measurement-error box.
  static Scenario paper();
  /// Same geometry with a zero error box (perfect state estimate).
  static Scenario paper_nominal();
  /// Same geometry with the softer barrier slope used on hardware.
  static Scenario hardware();
};

/// Parses the `.scenario` key/value format (INI-style sections, `#` comments,
/// one `[obstacle]` section per obstacle). Throws ConfigError on unknown keys
/// or malformed values.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

/// Serializes a scenario back to the file format. parse(serialize(s)) == s
/// field-for-field.
std::string serialize_scenario(const Scenario& s);

bool operator==(const Scenario& a, const Scenario& b);

}  // namespace rcbf
