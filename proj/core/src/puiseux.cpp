#include <algorithm>
#include <numeric>
#include <sstream>

#include "roots.hpp"
#include "troploc/arc.hpp"
#include "troploc/error.hpp"
#include "univariate.hpp"

namespace troploc {

namespace {

using detail::from_rational;

// Terms of g(s, z) keyed by (exponent of s, exponent of z).
template <class K>
using Bivariate = std::map<std::pair<long, long>, K>;

struct Edge {
  long a_lo, b_hi, a_hi, b_lo;
  long p, q;  // primitive inner normal
  long len;   // lattice length
  long m;     // p * a + q * b on the edge
};

template <class K>
std::vector<Edge> compact_edges(const Bivariate<K>& g) {
  std::map<long, long> lowest;  // a -> smallest b
  for (const auto& [k, c] : g) {
    auto it = lowest.find(k.first);
    if (it == lowest.end() || k.second < it->second) lowest[k.first] = k.second;
  }
  std::vector<std::pair<long, long>> pts(lowest.begin(), lowest.end());
  long b_min = pts.front().second;
  for (const auto& pt : pts) b_min = std::min(b_min, pt.second);

  std::vector<Edge> out;
  std::pair<long, long> cur = pts.front();
  while (cur.second > b_min) {
    std::optional<std::pair<long, long>> best;
    for (const auto& pt : pts) {
      if (pt.first <= cur.first || pt.second >= cur.second) continue;
      if (!best) {
        best = pt;
        continue;
      }
      // Steepest descent wins; on ties the farther point.
      long lhs = (pt.second - cur.second) * (best->first - cur.first);
      long rhs = (best->second - cur.second) * (pt.first - cur.first);
      if (lhs < rhs || (lhs == rhs && pt.first > best->first)) best = pt;
    }
    Edge e{cur.first, cur.second, best->first, best->second, 0, 0, 0, 0};
    long da = e.a_hi - e.a_lo, db = e.b_hi - e.b_lo;
    e.len = std::gcd(da, db);
    e.p = db / e.len;
    e.q = da / e.len;
    e.m = e.p * e.a_lo + e.q * e.b_hi;
    out.push_back(e);
    cur = *best;
  }
  return out;
}

/// psi(e) = sum_k gamma_k e^(len - k), ascending coefficients, where gamma_k
/// is the coefficient at (a_lo + k q, b_hi - k p).
template <class K>
std::vector<K> edge_polynomial(const Bivariate<K>& g, const Edge& e) {
  std::vector<K> psi(static_cast<std::size_t>(e.len + 1), K(0));
  for (long k = 0; k <= e.len; ++k) {
    auto it = g.find({e.a_lo + k * e.q, e.b_hi - k * e.p});
    if (it != g.end()) psi[static_cast<std::size_t>(e.len - k)] = it->second;
  }
  return psi;
}

double magnitude(const Rational& c) { return std::abs(c.get_d()); }
double magnitude(const Complex& c) { return std::abs(c); }

std::string coef_string(const Rational& c) { return c.get_str(); }
std::string coef_string(const Complex& c) {
  std::ostringstream os;
  os.precision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

template <class K>
std::string poly_string(const std::vector<std::pair<long, K>>& terms, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it->second == K(0)) continue;
    K c = it->second;
    if constexpr (std::is_same_v<K, Rational>) {
      if (c < 0) {
        os << (first ? "-" : " - ");
        c = -c;
      } else if (!first) {
        os << " + ";
      }
    } else {
      if (c.imag() == 0.0 && c.real() < 0) {
        os << (first ? "-" : " - ");
        c = -c;
      } else if (!first) {
        os << " + ";
      }
    }
    first = false;
    const bool unit = c == K(1) && it->first > 0;
    if (!unit) os << coef_string(c);
    if (it->first > 0) os << (unit ? "" : "*") << var;
    if (it->first > 1) os << '^' << it->first;
  }
  return first ? "0" : os.str();
}

/// The edge polynomial with x_p = 1: sum gamma_k y^(b_k).
template <class K>
std::string phi_string(const Bivariate<K>& g, const Edge& e) {
  std::vector<std::pair<long, K>> terms;
  for (long k = e.len; k >= 0; --k) {
    auto it = g.find({e.a_lo + k * e.q, e.b_hi - k * e.p});
    if (it != g.end()) terms.emplace_back(e.b_hi - k * e.p, it->second);
  }
  return poly_string(terms, "y");
}

template <class K>
std::string psi_string(const std::vector<K>& psi) {
  std::vector<std::pair<long, K>> terms;
  for (std::size_t j = 0; j < psi.size(); ++j) terms.emplace_back(static_cast<long>(j), psi[j]);
  return poly_string(terms, "e");
}

template <class K>
K power(K x, long n) {
  K out(1);
  while (n > 0) {
    if (n & 1) out *= x;
    x *= x;
    n >>= 1;
  }
  return out;
}

template <class K>
K binomial(long n, long k);
template <>
Rational binomial<Rational>(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}
template <>
Complex binomial<Complex>(long n, long k) {
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return Complex(r, 0.0);
}

// One root of the edge equation in the form used by the substitution
// s = c u^p, z = u^q (d + z').
template <class K>
struct StepRoot {
  K c, d;
  std::size_t multiplicity;
};

struct ExactRoots {
  std::vector<StepRoot<Rational>> roots;
  std::optional<std::string> unsolved;
};

/// Rational (c, d) with d^p / c^q = e: c = e^x, d = e^y, p y - q x = 1.
ExactRoots exact_step_roots(const std::vector<Rational>& psi, const Edge& e) {
  ExactRoots out;
  detail::RationalRoots rr = detail::rational_roots(psi);
  long x = 0;
  while ((1 + e.q * x) % e.p != 0) ++x;
  const long y = (1 + e.q * x) / e.p;
  for (const auto& [root, mult] : rr.roots) {
    out.roots.push_back({power(root, x), power(root, y), mult});
  }
  if (rr.remaining.size() > 1) out.unsolved = psi_string(rr.remaining);
  return out;
}

/// x_p = 1 and one p-th root of every root e; the other p-th roots give the
/// same branch up to t -> zeta t.
std::vector<StepRoot<Complex>> float_step_roots(const std::vector<Complex>& psi, const Edge& e) {
  std::vector<StepRoot<Complex>> out;
  for (const auto& [root, mult] : detail::complex_roots(psi)) {
    out.push_back({Complex(1.0, 0.0), std::pow(root, 1.0 / static_cast<double>(e.p)), mult});
  }
  return out;
}

template <class K>
struct State {
  Bivariate<K> g;
  long M = 0;  // f = s^M g
  long P = 1;  // x = chi s^P
  K chi = K(1);
  long Q = 0;  // y = y_known + kappa s^Q z
  K kappa = K(1);
  std::map<long, K> y;
  std::vector<LatticeVector> normals;
  bool truncated = false;
};

template <class K>
State<K> advance(const State<K>& s, const Edge& e, const StepRoot<K>& r, long depth, double tol) {
  State<K> t;
  t.M = s.M * e.p + e.m;
  t.P = s.P * e.p;
  t.chi = s.chi * power(r.c, s.P);
  t.kappa = s.kappa * power(r.c, s.Q);
  t.Q = s.Q * e.p + e.q;
  for (const auto& [k, c] : s.y) t.y[k * e.p] = c * power(r.c, k);
  t.y[t.Q] += t.kappa * r.d;
  t.normals = s.normals;
  t.normals.push_back(LatticeVector{e.p, e.q});
  t.truncated = s.truncated;

  const long bound = depth - t.M;
  for (const auto& [k, coef] : s.g) {
    const long a = k.first, b = k.second;
    const long u0 = e.p * a + e.q * b - e.m;
    if (u0 >= bound) {
      t.truncated = true;
      continue;
    }
    const K base = coef * power(r.c, a);
    for (long j = 0; j <= b; ++j) {
      t.g[{u0, j}] += base * binomial<K>(b, j) * power(r.d, b - j);
    }
  }
  if constexpr (std::is_same_v<K, Complex>) {
    // Derivatives of the edge polynomial below the multiplicity vanish at d.
    for (std::size_t j = 0; j < r.multiplicity; ++j) t.g.erase({0, static_cast<long>(j)});
    double scale = 0.0;
    for (const auto& [k, c] : t.g) scale = std::max(scale, std::abs(c));
    for (auto it = t.g.begin(); it != t.g.end();) {
      it = std::abs(it->second) <= tol * scale ? t.g.erase(it) : std::next(it);
    }
  } else {
    (void)tol;
    for (auto it = t.g.begin(); it != t.g.end();) {
      it = it->second == 0 ? t.g.erase(it) : std::next(it);
    }
  }
  return t;
}

template <class K>
Bivariate<K> to_bivariate(const Series& f) {
  Bivariate<K> g;
  for (const auto& [m, c] : f.terms()) g[{m[0].get_si(), m[1].get_si()}] = from_rational<K>(c);
  return g;
}

template <class K>
void finish(const Series& f, const State<K>& s, bool exact, const PuiseuxOptions& opt,
            PuiseuxResult<K>& out) {
  PuiseuxBranch<K> br;
  br.arc.ambient = f.ambient();
  br.arc.coords = {{{s.P, s.chi}}, s.y};
  br.arc.precision = {kExact, exact ? kExact : s.Q + 1};
  br.edge_normals = s.normals;

  // f on the polynomial arc, computed without truncation.
  std::map<long, K> x{{s.P, s.chi}};
  std::map<long, K> total;
  for (const auto& [m, c] : f.terms()) {
    std::map<long, K> term{{0, from_rational<K>(c)}};
    for (long i = 0; i < m[0].get_si(); ++i) term = detail::mul_sparse(term, x);
    for (long i = 0; i < m[1].get_si(); ++i) term = detail::mul_sparse(term, s.y);
    for (const auto& [k, v] : term) total[k] += v;
  }
  for (const auto& [k, v] : total) {
    if (k < opt.depth) br.residual_magnitude = std::max(br.residual_magnitude, magnitude(v));
    if (!br.residual_order && !detail::is_zero(v, opt.tol)) br.residual_order = k;
  }
  out.branches.push_back(std::move(br));
}

template <class K>
void explore(const Series& f, const State<K>& s, const PuiseuxOptions& opt, PuiseuxResult<K>& out) {
  std::optional<long> a0;
  for (const auto& [k, c] : s.g) {
    if (k.second == 0 && (!a0 || k.first < *a0)) a0 = k.first;
  }
  if (!a0) {
    finish(f, s, !s.truncated, opt, out);
    return;
  }
  if (!s.normals.empty() && s.M + *a0 >= opt.depth) {
    finish(f, s, false, opt, out);
    return;
  }
  if (s.normals.size() >= opt.max_steps) {
    out.failures.push_back({s.normals, Errc::depth_exceeded,
                            "no residual order " + std::to_string(opt.depth) + " after " +
                                std::to_string(opt.max_steps) + " Newton steps"});
    return;
  }
  for (const Edge& e : compact_edges(s.g)) {
    const auto psi = edge_polynomial(s.g, e);
    if constexpr (std::is_same_v<K, Rational>) {
      ExactRoots roots = exact_step_roots(psi, e);
      if (roots.unsolved) {
        auto normals = s.normals;
        normals.push_back(LatticeVector{e.p, e.q});
        out.failures.push_back({std::move(normals), Errc::exact_root_failure,
                                "edge polynomial " + psi_string(psi) +
                                    " has non-rational roots; unsolved factor " + *roots.unsolved});
      }
      for (const auto& r : roots.roots) explore(f, advance(s, e, r, opt.depth, opt.tol), opt, out);
    } else {
      for (const auto& r : float_step_roots(psi, e)) {
        explore(f, advance(s, e, r, opt.depth, opt.tol), opt, out);
      }
    }
  }
}

template <class K>
PuiseuxResult<K> expand(const Series& f, const PuiseuxOptions& opt) {
  require(f.rank() == 2, Errc::rank_mismatch, "Newton-Puiseux expansion needs a plane curve");
  require(f.ambient() == Cone::orthant(2), Errc::invalid_input,
          "Newton-Puiseux expansion runs over the positive quadrant");
  require(!f.is_zero(), Errc::zero_series, "Newton-Puiseux expansion of the zero series");
  require(is_interior_divisor(f), Errc::not_interior,
          "series " + f.to_string() + " is divisible by a coordinate");
  require(opt.depth >= 1, Errc::invalid_input, "depth must be positive");
  State<K> s;
  s.g = to_bivariate<K>(f);
  PuiseuxResult<K> out;
  explore(f, s, opt, out);
  return out;
}

template <class K>
std::pair<Bivariate<K>, Edge> locate_edge(const Series& f, const CompactFace& edge) {
  require(f.rank() == 2 && f.ambient() == Cone::orthant(2), Errc::invalid_input,
          "Newton steps run over the positive quadrant");
  require(edge.dim == 1 && edge.vertices.size() == 2, Errc::not_compact_edge,
          "the given face is not a compact edge");
  Bivariate<K> g = to_bivariate<K>(f);
  for (const Edge& e : compact_edges(g)) {
    LatticeVector lo{e.a_lo, e.b_hi}, hi{e.a_hi, e.b_lo};
    const auto& v = edge.vertices;
    if ((v[0] == lo && v[1] == hi) || (v[0] == hi && v[1] == lo)) return {std::move(g), e};
  }
  fail(Errc::not_compact_edge, "the given edge is not a compact edge of the Newton polygon");
}

}  // namespace

NewtonStep<Rational> newton_step_exact(const Series& f, const CompactFace& edge) {
  auto [g, e] = locate_edge<Rational>(f, edge);
  NewtonStep<Rational> out;
  out.weight = LatticeVector{e.p, e.q};
  out.edge_polynomial = phi_string(g, e);
  ExactRoots roots = exact_step_roots(edge_polynomial(g, e), e);
  for (const auto& r : roots.roots) out.roots.push_back({r.c, r.d, r.multiplicity});
  out.unsolved = roots.unsolved;
  return out;
}

NewtonStep<Complex> newton_step_float(const Series& f, const CompactFace& edge) {
  auto [g, e] = locate_edge<Complex>(f, edge);
  NewtonStep<Complex> out;
  out.weight = LatticeVector{e.p, e.q};
  out.edge_polynomial = phi_string(g, e);
  const double pi = std::acos(-1.0);
  for (const auto& r : float_step_roots(edge_polynomial(g, e), e)) {
    for (long j = 0; j < e.p; ++j) {
      Complex zeta = std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(e.p));
      out.roots.push_back({Complex(1.0, 0.0), r.d * zeta, r.multiplicity});
    }
  }
  return out;
}

PuiseuxResult<Rational> puiseux_expand_exact(const Series& f, const PuiseuxOptions& options) {
  return expand<Rational>(f, options);
}

PuiseuxResult<Complex> puiseux_expand_float(const Series& f, const PuiseuxOptions& options) {
  return expand<Complex>(f, options);
}

}  // namespace troploc
