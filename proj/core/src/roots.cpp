#include "roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

namespace troploc::detail {

namespace {

template <class K>
K horner(const std::vector<K>& c, const K& x) {
  K v(0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

template <class K>
std::vector<K> derivative(const std::vector<K>& c) {
  std::vector<K> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * K(static_cast<double>(i)));
  return d;
}

Complex newton_polish(const std::vector<Complex>& c, Complex x, int iterations) {
  const auto dc = derivative(c);
  for (int it = 0; it < iterations; ++it) {
    Complex fx = horner(c, x);
    Complex dfx = horner(dc, x);
    if (std::abs(dfx) == 0.0) break;
    Complex next = x - fx / dfx;
    if (std::abs(horner(c, next)) >= std::abs(fx)) break;
    x = next;
  }
  return x;
}

std::vector<Complex> eigen_roots(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  if (n == 1) return {-c[0] / c[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -c[i] / c[n];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

bool root_less(const Complex& a, const Complex& b) {
  if (std::abs(a.real() - b.real()) > 1e-9 * std::max(1.0, std::abs(a.real()))) {
    return a.real() < b.real();
  }
  return a.imag() < b.imag();
}

std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  // Synthetic division by (x - r); c ascending, exact remainder assumed zero.
  const std::size_t n = c.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = c[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

void continued_fraction_candidates(double x, std::set<Rational>& out) {
  if (!std::isfinite(x)) return;
  Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double rest = x;
  for (int i = 0; i < 40; ++i) {
    double a = std::floor(rest);
    if (std::abs(a) > 1e15) break;
    Integer ai(a);
    Integer h = ai * h0 + h1, k = ai * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    if (k0 > 1000000000) break;
    Rational q(h0, k0);
    q.canonicalize();
    out.insert(q);
    double frac = rest - a;
    if (std::abs(frac) < 1e-13) break;
    rest = 1.0 / frac;
  }
}

std::vector<Integer> small_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0 || n > Integer("1000000000000")) return out;
  unsigned long long v = n.get_ui();
  for (unsigned long long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(static_cast<unsigned long>(d));
      if (d * d != v) out.emplace_back(static_cast<unsigned long>(v / d));
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Complex, std::size_t>> complex_roots(const std::vector<Complex>& coeffs,
                                                           double cluster_tol) {
  std::vector<Complex> c = coeffs;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) return {};
  std::vector<Complex> raw = eigen_roots(c);
  for (auto& r : raw) r = newton_polish(c, r, 8);
  std::sort(raw.begin(), raw.end(), root_less);

  std::vector<std::vector<Complex>> clusters;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    std::vector<Complex> cl{raw[i]};
    used[i] = true;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!used[j] && std::abs(raw[j] - raw[i]) <= cluster_tol * std::max(1.0, std::abs(raw[i]))) {
        cl.push_back(raw[j]);
        used[j] = true;
      }
    }
    clusters.push_back(std::move(cl));
  }

  std::vector<std::pair<Complex, std::size_t>> out;
  for (const auto& cl : clusters) {
    Complex mean(0.0, 0.0);
    for (const auto& r : cl) mean += r;
    mean /= static_cast<double>(cl.size());
    std::vector<Complex> d = c;
    for (std::size_t k = 1; k < cl.size(); ++k) d = derivative(d);
    out.emplace_back(newton_polish(d, mean, 20), cl.size());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return root_less(a.first, b.first); });
  return out;
}

RationalRoots rational_roots(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  RationalRoots out;
  std::vector<Rational> p = coeffs;

  auto try_root = [&](const Rational& r) {
    std::size_t mult = 0;
    while (p.size() > 1 && horner(p, r) == 0) {
      p = deflate(p, r);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  };

  if (p.size() > 1) {
    // Numerical candidates first: cheap even for huge coefficients.
    Rational scale = 0;
    for (const auto& x : p) scale = std::max(scale, Rational(abs(x)));
    std::vector<Complex> approx;
    for (const auto& x : p) approx.emplace_back(Rational(x / scale).get_d(), 0.0);
    std::set<Rational> candidates;
    for (const auto& [r, m] : complex_roots(approx)) {
      if (std::abs(r.imag()) <= 1e-6 * std::max(1.0, std::abs(r.real()))) {
        continued_fraction_candidates(r.real(), candidates);
      }
    }
    for (const auto& r : candidates) {
      if (p.size() <= 1) break;
      if (r != 0) try_root(r);
    }
  }

  if (p.size() > 1) {
    // Rational root test on the integral primitive form.
    Integer den = 1;
    for (const auto& x : p) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> a;
    for (const auto& x : p) a.push_back(Integer(x * den));
    auto num_divs = small_divisors(a.front());
    auto den_divs = small_divisors(a.back());
    if (!num_divs.empty() && !den_divs.empty() && num_divs.size() * den_divs.size() <= 200000) {
      std::set<Rational> candidates;
      for (const auto& n : num_divs) {
        for (const auto& d : den_divs) {
          Rational r(n, d);
          r.canonicalize();
          candidates.insert(r);
          candidates.insert(-r);
        }
      }
      for (const auto& r : candidates) {
        if (p.size() <= 1) break;
        try_root(r);
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end());
  out.remaining = std::move(p);
  return out;
}

}  // namespace troploc::detail
