#include "avd/poly2.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace avd {
namespace {

using Coefficients = BivariatePoly::Coefficients;

// Coefficient order used for sign canonicalization: highest degree first.
constexpr std::array<int, BivariatePoly::kSize> kGradedOrder = {6, 7, 8, 9, 3, 4, 5, 1, 2, 0};

// Dense product of arbitrary-degree intermediates, truncated to degree 3
// with a flag for any nonzero coefficient that did not fit.
Coefficients raw_multiply(const Coefficients& f, const Coefficients& g, bool* overflow) {
  Coefficients out{};
  for (int p = 0; p < BivariatePoly::kSize; ++p) {
    if (f[p] == 0.0) continue;
    const auto [fi, fj] = BivariatePoly::monomial(p);
    for (int q = 0; q < BivariatePoly::kSize; ++q) {
      if (g[q] == 0.0) continue;
      const auto [gi, gj] = BivariatePoly::monomial(q);
      if (fi + gi + fj + gj > BivariatePoly::kMaxDegree) {
        if (overflow != nullptr) *overflow = true;
        continue;
      }
      out[BivariatePoly::index(fi + gi, fj + gj)] += f[p] * g[q];
    }
  }
  return out;
}

Coefficients linear(AffineForm form) {
  Coefficients c{};
  c[BivariatePoly::index(0, 0)] = form.c0;
  c[BivariatePoly::index(1, 0)] = form.cx;
  c[BivariatePoly::index(0, 1)] = form.cy;
  return c;
}

std::string monomial_name(int k) {
  const auto [i, j] = BivariatePoly::monomial(k);
  std::string s;
  if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  if (j > 0) s += j == 1 ? "y" : "y^" + std::to_string(j);
  return s;
}

}  // namespace

BivariatePoly::BivariatePoly(const Coefficients& c) : c_(c) {
  bool any = false;
  for (double v : c_) {
    if (!std::isfinite(v)) throw InvalidArgument("polynomial coefficients must be finite");
    any = any || v != 0.0;
  }
  if (!any) throw ZeroPolynomial("the zero polynomial is not a curve");
}

BivariatePoly::BivariatePoly(std::initializer_list<Term> terms)
    : BivariatePoly([&] {
        Coefficients c{};
        for (const Term& t : terms) {
          if (t.x_power < 0 || t.y_power < 0 || t.x_power + t.y_power > kMaxDegree) {
            throw InvalidArgument("monomial exceeds total degree 3");
          }
          c[index(t.x_power, t.y_power)] += t.coeff;
        }
        return c;
      }()) {}

double BivariatePoly::coeff(int x_power, int y_power) const {
  if (x_power < 0 || y_power < 0 || x_power + y_power > kMaxDegree) return 0.0;
  return c_[index(x_power, y_power)];
}

double BivariatePoly::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double evaluate(const BivariatePoly& f, Point p) {
  const auto& c = f.coefficients();
  const double y = p.y;
  // Horner in x, each x-power's coefficient a polynomial in y.
  const double a3 = c[6];
  const double a2 = c[3] + y * c[7];
  const double a1 = c[1] + y * (c[4] + y * c[8]);
  const double a0 = c[0] + y * (c[2] + y * (c[5] + y * c[9]));
  return a0 + p.x * (a1 + p.x * (a2 + p.x * a3));
}

Gradient gradient(const BivariatePoly& f, Point p) {
  const auto& c = f.coefficients();
  const double x = p.x;
  const double y = p.y;
  return {c[1] + 2.0 * c[3] * x + c[4] * y + 3.0 * c[6] * x * x + 2.0 * c[7] * x * y +
              c[8] * y * y,
          c[2] + c[4] * x + 2.0 * c[5] * y + c[7] * x * x + 2.0 * c[8] * x * y +
              3.0 * c[9] * y * y};
}

Hessian hessian(const BivariatePoly& f, Point p) {
  const auto& c = f.coefficients();
  return {2.0 * c[3] + 6.0 * c[6] * p.x + 2.0 * c[7] * p.y,
          c[4] + 2.0 * c[7] * p.x + 2.0 * c[8] * p.y,
          2.0 * c[5] + 2.0 * c[8] * p.x + 6.0 * c[9] * p.y};
}

int effective_degree(const BivariatePoly& f, double tol) {
  if (!(tol >= 0.0)) throw InvalidArgument("degree tolerance must be non-negative");
  const double threshold = tol * f.max_abs_coeff();
  int degree = 0;
  const auto& c = f.coefficients();
  for (int k = 0; k < BivariatePoly::kSize; ++k) {
    if (std::abs(c[k]) > threshold) {
      const auto [i, j] = BivariatePoly::monomial(k);
      degree = std::max(degree, i + j);
    }
  }
  return degree;
}

BivariatePoly normalize(const BivariatePoly& f, double sign_tol) {
  Coefficients c = f.coefficients();
  const double scale = f.max_abs_coeff();
  for (double& v : c) v /= scale;
  for (int k : kGradedOrder) {
    if (std::abs(c[k]) > sign_tol) {
      if (c[k] < 0.0) {
        for (double& v : c) v = -v;
      }
      break;
    }
  }
  return BivariatePoly(c);
}

BivariatePoly multiply(const BivariatePoly& f, const BivariatePoly& g) {
  bool overflow = false;
  const Coefficients c = raw_multiply(f.coefficients(), g.coefficients(), &overflow);
  if (overflow) throw InvalidArgument("product exceeds total degree 3");
  return BivariatePoly(c);
}

BivariatePoly compose_affine(const BivariatePoly& f, AffineForm x_of, AffineForm y_of) {
  const Coefficients x1 = linear(x_of);
  const Coefficients y1 = linear(y_of);
  Coefficients one{};
  one[0] = 1.0;
  std::array<Coefficients, 4> xp{one, x1, {}, {}};
  std::array<Coefficients, 4> yp{one, y1, {}, {}};
  for (int n = 2; n <= 3; ++n) {
    xp[n] = raw_multiply(xp[n - 1], x1, nullptr);
    yp[n] = raw_multiply(yp[n - 1], y1, nullptr);
  }
  Coefficients out{};
  const auto& c = f.coefficients();
  for (int k = 0; k < BivariatePoly::kSize; ++k) {
    if (c[k] == 0.0) continue;
    const auto [i, j] = BivariatePoly::monomial(k);
    const Coefficients term = raw_multiply(xp[i], yp[j], nullptr);
    for (int q = 0; q < BivariatePoly::kSize; ++q) out[q] += c[k] * term[q];
  }
  return BivariatePoly(out);
}

BivariatePoly pull_back(const BivariatePoly& f, const SimilarityTransform& t) {
  // Canonical coordinates as affine functions of world coordinates.
  const SimilarityTransform inv = t.inverse();
  const double s = inv.scale();
  const double cr = inv.cos_rotation();
  const double sr = inv.sin_rotation();
  const Point tr = inv.translation();
  return compose_affine(f, {tr.x, s * cr, -s * sr}, {tr.y, s * sr, s * cr});
}

double coefficient_distance(const BivariatePoly& f, const BivariatePoly& g) {
  double diff = 0.0;
  for (int k = 0; k < BivariatePoly::kSize; ++k) {
    diff = std::max(diff, std::abs(f.coefficients()[k] - g.coefficients()[k]));
  }
  return diff / f.max_abs_coeff();
}

std::string to_string(const BivariatePoly& f) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (int k : kGradedOrder) {
    const double v = f.coefficients()[k];
    if (v == 0.0) continue;
    const std::string name = monomial_name(k);
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const double mag = std::abs(v);
    if (name.empty() || mag != 1.0) {
      os << mag;
      if (!name.empty()) os << "*";
    }
    os << name;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& f) { return os << to_string(f); }

}  // namespace avd
