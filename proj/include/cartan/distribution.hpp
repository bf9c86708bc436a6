#pragma once

#include <array>
#include <string>
#include <vector>

#include "cartan/forms.hpp"
#include "cartan/linalg.hpp"

namespace cartan {

// Local frame spanning a distribution.
struct Frame {
  std::vector<VectorField> fields;
};

// Annihilating coframe of a distribution (all forms degree 1).
struct Coframe {
  std::vector<KForm> forms;
};

enum class FlagMode { weak, strong };

// Ranks of the iterated-bracket flag at sample points. ranks[i][l-1] is the
// rank at points[i] of the depth-l generating set; non-decreasing in l.
struct DerivedFlagReport {
  FlagMode mode = FlagMode::weak;
  int depth = 0;
  std::vector<Point> points;
  std::vector<std::vector<int>> ranks;
};

// Per-point verdict with the labels of failed conditions (empty iff ok).
struct PointCheck {
  Point point;
  bool ok = true;
  std::vector<std::string> failures;
};

// Combined generic (polynomial-identity) and per-point report.
struct CoframeReport {
  bool generic_ok = true;
  std::vector<std::string> generic_failures;
  std::vector<PointCheck> points;
};

// One entry per congruence; a congruence holds generically when its defect
// form is the zero polynomial form.
struct StructureReport {
  std::array<bool, 3> generic_congruences{false, false, false};
  std::vector<PointCheck> points;
};

// Formal Cartan-type structure data: nested annihilators plus three 2-forms.
struct AlmostCartanTuple {
  std::array<KForm, 3> alphas;  // rank-2 distribution D = ker(all three)
  std::array<KForm, 3> omegas;  // E = ker(alphas[0], alphas[1])
};

struct Almost35Tuple {
  std::array<KForm, 2> alphas;
  std::array<KForm, 2> omegas;
};

// Iterated-bracket flag ranks; weak mode brackets the frame against the
// previous level, strong mode brackets the previous level with itself.
DerivedFlagReport derived_flag(const Frame& frame, FlagMode mode, int max_depth,
                               const std::vector<Point>& points);

// Rank-2 coframe characterization on 5 charts: the three 5-form conditions and
// independence of the two associated 4-forms.
CoframeReport is_cartan_coframe(const Coframe& c, const std::vector<Point>& points);

// Rank-3 characterization: independence of the two 4-forms alpha1^alpha2^d(alpha_i).
CoframeReport is_35_coframe(const Coframe& c, const std::vector<Point>& points);

// The adapted-coframe congruences d(a1) = a3^a4, d(a2) = a3^a5 mod (a1,a2) and
// d(a3) = a4^a5 mod (a1,a2,a3), each tested through its wedge defect.
StructureReport check_structure_equations(const std::vector<KForm>& coframe5,
                                          const std::vector<Point>& points);

// Pointwise conditions on an almost Cartan tuple: omega1, omega2 vanish on D,
// omega3 does not, and omega1, omega2 restrict independently to E.
// Failure labels: rank reasons, "(1)-(i)", "(1)-(ii)", "(2)".
std::vector<PointCheck> check_almost_cartan(const AlmostCartanTuple& t,
                                            const std::vector<Point>& points);

// Pointwise independence of the two restricted 2-forms on ker(alpha1, alpha2).
std::vector<PointCheck> check_almost_35(const Almost35Tuple& t,
                                        const std::vector<Point>& points);

// Assembles the tuple (alpha1, alpha2, gamma; gamma^beta1, gamma^beta2,
// beta1^beta2) from a coframe splitting.
AlmostCartanTuple build_almost_cartan_from_splitting(const KForm& beta1, const KForm& beta2,
                                                     const KForm& gamma, const KForm& alpha1,
                                                     const KForm& alpha2);

// The tuple induced by a rank-2 annihilator coframe: omegas are the exterior
// derivatives of the alphas.
AlmostCartanTuple induced_almost_cartan(const Coframe& c);

// Frame of the common kernel of the given 1-forms, computed by exact
// elimination over the rational-function field; components are polynomial
// (denominators cleared), content-normalized, deterministic.
Frame coframe_kernel_frame(const Coframe& c);

// Kernel of the evaluated coframe at a point (rows of rational coefficients).
std::vector<std::array<Rational, 5>> pointwise_kernel(const std::vector<KForm>& forms,
                                                      const Point& p);

// Value of a constant-coefficient 2-form on a pair of vectors.
Rational two_form_on_vectors(const KForm& w, const std::array<Rational, 5>& u,
                             const std::array<Rational, 5>& v);

}  // namespace cartan
