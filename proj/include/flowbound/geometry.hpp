#ifndef FLOWBOUND_GEOMETRY_HPP_
#define FLOWBOUND_GEOMETRY_HPP_

#include <string>
#include <vector>

namespace flowbound::geometry {

// Channel Q = (-L,L)^3 with an obstacle K enclosed by the box
// P = (-a,a) x (-b,b) x (-c,c).  Every downstream constant depends on K only
// through its volume and the box half-extents, so this is the whole geometry
// state of the artifact.
struct ChannelGeometry {
  double L = 0.0;      // channel half-width
  double a = 0.0;      // box half-extents, L > a >= b >= c > 0
  double b = 0.0;
  double c = 0.0;
  double vol_K = 0.0;  // obstacle volume, 0 < vol_K <= 8abc

  double vol_Q() const { return 8.0 * L * L * L; }
  bool cubic_box() const { return a == b && b == c; }
};

// sigma/gamma are the polynomial volume factors of the solenoidal-extension
// estimate; M is the dimensionless constant multiplying the divergence norm
// in Phi(h).
struct BogovskiiConstants {
  double sigma = 0.0;
  double gamma = 0.0;
  double M = 0.0;
};

// Which argument attains min{ cbrt(3(|Q|-|K|)/(2pi)), 4L/3 }.
enum class MinBranch { CubeRoot, Box };

struct MinBranchResult {
  double m = 0.0;
  MinBranch branch = MinBranch::Box;
};

// Coefficients of the extension estimate inside M.  They appear here and
// nowhere else; tests reference these names.
inline constexpr double kExtCoeffBase = 327.23;
inline constexpr double kExtCoeffSqrtSigma = 445.17;
inline constexpr double kExtCoeffSigma = 153.85;
inline constexpr double kExtCoeffTraceBase = 22.4;
inline constexpr double kExtCoeffTraceSlope = 15.79;

// |Q|/(|Q|-|K|) value at which the two min-branch arguments coincide,
// 81/(16 pi).
double break_even_ratio();

// Obstacle-volume threshold (8/81)(81-16pi)L^3 above which the cube-root
// branch is forced.
double conda_volume_threshold(double L);

// Empty result means the geometry satisfies every invariant; otherwise one
// message per violated constraint.
std::vector<std::string> validate(const ChannelGeometry& g);

// Throws std::invalid_argument listing all violations.
void ensure_valid(const ChannelGeometry& g);

// sigma = 7L^3 - (a+b+c)L^2 - (ab+ac+bc)L - abc
// gamma = 6L^3 - 2(a+b+c)L^2 - 2(ab+ac+bc)L + 6abc
// Both strictly positive on valid geometries.
struct SigmaGamma {
  double sigma = 0.0;
  double gamma = 0.0;
};
SigmaGamma derived_sigma_gamma(const ChannelGeometry& g);

double bogovskii_constant_M(const ChannelGeometry& g);

BogovskiiConstants bogovskii_constants(const ChannelGeometry& g);

// m = min{ cbrt(3(|Q|-|K|)/(2pi)), 4L/3 }; exact ties report CubeRoot.
MinBranchResult min_branch(const ChannelGeometry& g);

// True iff vol_K > (8/81)(81-16pi)L^3, which forces the CubeRoot branch.
bool conda_check(const ChannelGeometry& g);

}  // namespace flowbound::geometry

#endif  // FLOWBOUND_GEOMETRY_HPP_
