#include "troploc/arc.hpp"

#include <algorithm>

#include "troploc/error.hpp"
#include "univariate.hpp"

namespace troploc {

using detail::is_zero;
using detail::saturating_add;

template <class K>
long Arc<K>::truncation_order() const {
  long t = kExact;
  for (long p : precision) t = std::min(t, p);
  return t;
}

template struct Arc<Rational>;
template struct Arc<Complex>;

ExactArc make_exact_arc(std::vector<std::map<long, Rational>> coords, long order) {
  ExactArc a;
  a.ambient = Cone::orthant(coords.size());
  a.precision.assign(coords.size(), order);
  a.coords = std::move(coords);
  return a;
}

FloatArc make_float_arc(std::vector<std::map<long, Complex>> coords, long order) {
  FloatArc a;
  a.ambient = Cone::orthant(coords.size());
  a.precision.assign(coords.size(), order);
  a.coords = std::move(coords);
  return a;
}

namespace {

template <class K>
void check_shape(const Arc<K>& a) {
  require(a.rank() > 0, Errc::invalid_input, "arc has no coordinates");
  require(a.ambient.rank() == a.rank(), Errc::rank_mismatch,
          "arc rank does not match its ambient cone");
  require(a.precision.size() == a.rank(), Errc::invalid_input,
          "arc needs one precision per coordinate");
  for (long p : a.precision) require(p >= 1, Errc::invalid_input, "truncation order must be positive");
}

template <class K>
LatticeVector weight_impl(const Arc<K>& a, double tol) {
  check_shape(a);
  std::vector<Integer> w;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::optional<long> order;
    for (const auto& [e, c] : a.coords[i]) {
      if (e >= a.precision[i]) break;
      if (!is_zero(c, tol)) {
        order = e;
        break;
      }
    }
    require(order.has_value(), Errc::undetermined_weight,
            "coordinate " + std::to_string(i + 1) + " vanishes up to its truncation order");
    w.emplace_back(*order);
  }
  LatticeVector out(std::move(w), Lattice::N);
  require(a.ambient.contains(out), Errc::invalid_input,
          "arc weight " + out.to_string() + " lies outside the ambient cone");
  return out;
}

template <class K>
Evaluation<K> evaluate_impl(const Series& f, const Arc<K>& a, double tol) {
  require(f.rank() == a.rank(), Errc::rank_mismatch, "series and arc ranks differ");
  const LatticeVector w = weight_impl(a, tol);
  const std::size_t n = a.rank();

  // Unit parts u_i = x_i / t^(w_i), known to relative precision rel[i].
  std::vector<std::vector<K>> unit(n);
  std::vector<long> rel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long v = w[i].get_si();
    rel[i] = a.precision[i] >= kExact ? kExact : a.precision[i] - v;
    for (const auto& [e, c] : a.coords[i]) {
      if (e < v || e >= a.precision[i]) continue;
      const std::size_t k = static_cast<std::size_t>(e - v);
      if (unit[i].size() <= k) unit[i].resize(k + 1, K(0));
      unit[i][k] = c;
    }
  }

  Evaluation<K> out;
  long top = std::numeric_limits<long>::min();
  bool needs_inverse = false;
  for (const auto& [m, c] : f.terms()) {
    if (m.is_zero()) continue;
    const long e = pairing(w, m).get_si();
    top = std::max(top, e);
    long r = kExact;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      r = std::min(r, rel[i]);
      if (m[i] < 0 && unit[i].size() > 1) needs_inverse = true;
    }
    out.validity = std::min(out.validity, saturating_add(e, r));
  }
  if (out.validity >= kExact && needs_inverse) out.validity = top + 32;
  const long bound = out.validity;

  for (const auto& [m, c] : f.terms()) {
    const long e = pairing(w, m).get_si();
    long len = -1;
    if (bound < kExact) {
      len = bound - e;
      if (len <= 0) continue;
    }
    std::vector<K> prod{K(1)};
    for (std::size_t i = 0; i < n && !prod.empty(); ++i) {
      if (m[i] == 0) continue;
      prod = detail::mul_trunc(prod, detail::power_trunc(unit[i], m[i].get_si(), len), len);
    }
    const K coef = detail::from_rational<K>(c);
    for (std::size_t k = 0; k < prod.size(); ++k) out.terms[e + static_cast<long>(k)] += coef * prod[k];
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (is_zero(it->second, tol) || it->first >= out.validity) {
      it = out.terms.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

template <class K>
std::vector<SemivaluationValue> semivaluation_impl(const Arc<K>& a,
                                                   const std::vector<Series>& elements,
                                                   double tol) {
  std::vector<SemivaluationValue> out;
  for (const auto& g : elements) {
    require(!g.is_zero(), Errc::zero_series, "semivaluation of the zero series");
    Evaluation<K> ev = evaluate_impl(g, a, tol);
    SemivaluationValue v;
    v.validity = ev.validity;
    for (const auto& [e, c] : ev.terms) {
      if (!is_zero(c, tol)) {
        v.value = e;
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

LatticeVector arc_weight(const ExactArc& a) { return weight_impl(a, 0.0); }
LatticeVector arc_weight(const FloatArc& a, double tol) { return weight_impl(a, tol); }

Evaluation<Rational> evaluate_on_arc(const Series& f, const ExactArc& a) {
  return evaluate_impl(f, a, 0.0);
}
Evaluation<Complex> evaluate_on_arc(const Series& f, const FloatArc& a, double tol) {
  return evaluate_impl(f, a, tol);
}

std::string SemivaluationValue::to_string() const {
  if (value) return std::to_string(*value);
  if (validity >= kExact) return "inf";
  return "inf(>=" + std::to_string(validity) + ")";
}

std::vector<SemivaluationValue> semivaluation_on(const ExactArc& a,
                                                 const std::vector<Series>& elements) {
  return semivaluation_impl(a, elements, 0.0);
}

std::vector<SemivaluationValue> semivaluation_on(const FloatArc& a,
                                                 const std::vector<Series>& elements,
                                                 double tol) {
  return semivaluation_impl(a, elements, tol);
}

}  // namespace troploc
