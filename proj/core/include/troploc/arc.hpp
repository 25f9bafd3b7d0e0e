#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "troploc/cone.hpp"
#include "troploc/error.hpp"
#include "troploc/lattice.hpp"
#include "troploc/newton.hpp"
#include "troploc/series.hpp"

namespace troploc {

using Complex = std::complex<double>;

enum class CoefficientMode { exact, floating };

/// Precision value of a coordinate that is known exactly.
inline constexpr long kExact = std::numeric_limits<long>::max() / 4;

/// A truncated arc in the torus of X_sigma, given by its n coordinates as
/// Laurent polynomials in t. precision[i] is the absolute t-order below
/// which coordinate i is known; kExact when it is known completely.
template <class K>
struct Arc {
  Cone ambient;
  std::vector<std::map<long, K>> coords;
  std::vector<long> precision;

  std::size_t rank() const { return coords.size(); }
  /// Smallest coordinate precision.
  long truncation_order() const;
};

using ExactArc = Arc<Rational>;
using FloatArc = Arc<Complex>;

/// Over the positive orthant with every coordinate known up to `order`.
ExactArc make_exact_arc(std::vector<std::map<long, Rational>> coords, long order);
FloatArc make_float_arc(std::vector<std::map<long, Complex>> coords, long order);

/// Coefficients with absolute value at most tol count as zero in float mode.
inline constexpr double kDefaultTol = 1e-10;

/// t-adic orders of the coordinates; the monoid morphism m -> ord(chi^m) in
/// N. Must lie in the ambient cone.
LatticeVector arc_weight(const ExactArc& a);
LatticeVector arc_weight(const FloatArc& a, double tol = kDefaultTol);

/// f(a(t)) truncated to the terms that the arc determines. validity is the
/// order from which terms are unknown (kExact when the result is exact).
template <class K>
struct Evaluation {
  std::map<long, K> terms;
  long validity = kExact;
};

Evaluation<Rational> evaluate_on_arc(const Series& f, const ExactArc& a);
Evaluation<Complex> evaluate_on_arc(const Series& f, const FloatArc& a, double tol = kDefaultTol);

/// t-adic order of an element on the arc, or "infinite up to truncation" when
/// no nonzero term appears below the validity order.
struct SemivaluationValue {
  std::optional<long> value;
  long validity = kExact;
  bool infinite() const { return !value.has_value(); }
  std::string to_string() const;
};

std::vector<SemivaluationValue> semivaluation_on(const ExactArc& a,
                                                 const std::vector<Series>& elements);
std::vector<SemivaluationValue> semivaluation_on(const FloatArc& a,
                                                 const std::vector<Series>& elements,
                                                 double tol = kDefaultTol);

/// A solution of the edge equation sum f_ab x^a y^b = 0 over a compact edge
/// with inner normal `weight`.
template <class K>
struct EdgeRoot {
  K xp;
  K yq;
  std::size_t multiplicity = 1;
};

template <class K>
struct NewtonStep {
  LatticeVector weight;
  /// The edge polynomial with x_p = 1, in the variable y.
  std::string edge_polynomial;
  std::vector<EdgeRoot<K>> roots;
  /// Set when some roots could not be found (exact mode: non-rational roots);
  /// holds the unsolved factor.
  std::optional<std::string> unsolved;
};

/// Exact mode returns rational pairs (x_p, y_q), one per root of the edge
/// polynomial in y^p / x^q. Float mode fixes x_p = 1 and returns every
/// nonzero root y_q.
NewtonStep<Rational> newton_step_exact(const Series& f, const CompactFace& edge);
NewtonStep<Complex> newton_step_float(const Series& f, const CompactFace& edge);

struct PuiseuxOptions {
  CoefficientMode mode = CoefficientMode::exact;
  long depth = 10;
  double tol = kDefaultTol;
  std::size_t max_steps = 16;
};

template <class K>
struct PuiseuxBranch {
  Arc<K> arc;
  std::vector<LatticeVector> edge_normals;  // one per Newton step
  /// Order of f on the polynomial arc; nullopt when f vanishes on it.
  std::optional<long> residual_order;
  /// Largest residual coefficient below the requested depth (float mode).
  double residual_magnitude = 0.0;
};

struct PuiseuxFailure {
  std::vector<LatticeVector> edge_normals;
  Errc code;
  std::string message;
};

template <class K>
struct PuiseuxResult {
  std::vector<PuiseuxBranch<K>> branches;
  std::vector<PuiseuxFailure> failures;
};

/// Newton-Puiseux iteration for a plane curve over the 2-orthant, run until
/// the residual order of f on each branch reaches options.depth.
PuiseuxResult<Rational> puiseux_expand_exact(const Series& f, const PuiseuxOptions& options);
PuiseuxResult<Complex> puiseux_expand_float(const Series& f, const PuiseuxOptions& options);

}  // namespace troploc
