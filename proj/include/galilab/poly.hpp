#pragma once

#include <array>
#include <vector>

#include "galilab/jet.hpp"

namespace galilab {

/// Sparse polynomial in the four spacetime coordinates (x0, x1, x2, x3).
class Poly4 {
 public:
  struct Term {
    cplx coeff;
    std::array<int, 4> exp;
  };

  Poly4() = default;
  explicit Poly4(cplx constant) {
    if (constant != cplx(0.0)) terms_.push_back({constant, {0, 0, 0, 0}});
  }

  static Poly4 coordinate(int mu) {
    Poly4 p;
    Term t{cplx(1.0), {0, 0, 0, 0}};
    t.exp[mu] = 1;
    p.terms_.push_back(t);
    return p;
  }
  /// c0 + sum_mu lin[mu] x_mu
  static Poly4 affine(cplx c0, const std::array<cplx, 4>& lin);

  void add_term(cplx coeff, std::array<int, 4> exp);

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;
  bool is_real() const;

  cplx eval(const std::array<double, 4>& x) const;
  Jet eval_jet(const std::array<double, 4>& x) const;

  Poly4 derivative(int mu) const;
  /// p(L x + t); closed for any degree, degree is preserved or lowered.
  Poly4 compose_affine(const std::array<std::array<double, 4>, 4>& L,
                       const std::array<double, 4>& t) const;

  Poly4 operator+(const Poly4& o) const;
  Poly4 operator-(const Poly4& o) const;
  Poly4 operator*(const Poly4& o) const;
  Poly4 operator*(cplx s) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

}  // namespace galilab
