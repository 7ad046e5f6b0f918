#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>

#include "avd/geometry.hpp"

namespace avd {

/// Dense polynomial in x, y of total degree <= 3.
///
/// Storage is graded by degree: 1 | x y | x^2 xy y^2 | x^3 x^2y xy^2 y^3.
/// The zero polynomial is not representable; construction rejects it.
class BivariatePoly {
 public:
  static constexpr int kMaxDegree = 3;
  static constexpr int kSize = 10;
  using Coefficients = std::array<double, kSize>;

  struct Term {
    int x_power;
    int y_power;
    double coeff;
  };

  explicit BivariatePoly(const Coefficients& c);
  /// Repeated monomials accumulate.
  BivariatePoly(std::initializer_list<Term> terms);

  static constexpr int index(int x_power, int y_power) {
    const int d = x_power + y_power;
    return d * (d + 1) / 2 + y_power;
  }
  static constexpr std::pair<int, int> monomial(int k) {
    int d = 0;
    while ((d + 1) * (d + 2) / 2 <= k) ++d;
    const int j = k - d * (d + 1) / 2;
    return {d - j, j};
  }

  double coeff(int x_power, int y_power) const;
  const Coefficients& coefficients() const { return c_; }
  double max_abs_coeff() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  Coefficients c_{};
};

struct Gradient {
  double dx = 0.0;
  double dy = 0.0;
};

struct Hessian {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

/// x or y expressed as c0 + cx * X + cy * Y in some other frame.
struct AffineForm {
  double c0 = 0.0;
  double cx = 0.0;
  double cy = 0.0;
};

double evaluate(const BivariatePoly& f, Point p);
Gradient gradient(const BivariatePoly& f, Point p);
Hessian hessian(const BivariatePoly& f, Point p);

/// Largest d such that some degree-d coefficient exceeds tol * max|coeff|.
int effective_degree(const BivariatePoly& f, double tol = 1e-10);

/// Scale to max|coeff| = 1, then flip the sign so that the first coefficient
/// above sign_tol in the order x^3, x^2y, xy^2, y^3, x^2, xy, y^2, x, y, 1
/// is positive.
BivariatePoly normalize(const BivariatePoly& f, double sign_tol = 1e-10);

/// Product of two polynomials; throws InvalidArgument if the result would
/// exceed total degree 3.
BivariatePoly multiply(const BivariatePoly& f, const BivariatePoly& g);

/// f(x(X, Y), y(X, Y)) for affine substitutions x, y.
BivariatePoly compose_affine(const BivariatePoly& f, AffineForm x_of, AffineForm y_of);

/// World-frame polynomial whose zero set is the image of f's zero set under t.
BivariatePoly pull_back(const BivariatePoly& f, const SimilarityTransform& t);

/// max_k |f_k - g_k| / max_k |f_k|.
double coefficient_distance(const BivariatePoly& f, const BivariatePoly& g);

std::string to_string(const BivariatePoly& f);
std::ostream& operator<<(std::ostream& os, const BivariatePoly& f);

}  // namespace avd
