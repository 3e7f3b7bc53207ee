#include "galilab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace galilab {

namespace {
double int_pow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}
// x^n with n falling-factorial derivative coefficient: d^k/dx^k x^n value
double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}
}  // namespace

Poly4 Poly4::affine(cplx c0, const std::array<cplx, 4>& lin) {
  Poly4 p(c0);
  for (int mu = 0; mu < 4; ++mu) {
    if (lin[mu] != cplx(0.0)) {
      Term t{lin[mu], {0, 0, 0, 0}};
      t.exp[mu] = 1;
      p.terms_.push_back(t);
    }
  }
  p.normalize();
  return p;
}

void Poly4::add_term(cplx coeff, std::array<int, 4> exp) {
  terms_.push_back({coeff, exp});
  normalize();
}

int Poly4::degree() const {
  int d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.exp[0] + t.exp[1] + t.exp[2] + t.exp[3]);
  return d;
}

bool Poly4::is_real() const {
  for (const auto& t : terms_)
    if (std::abs(t.coeff.imag()) > 0.0) return false;
  return true;
}

cplx Poly4::eval(const std::array<double, 4>& x) const {
  cplx s = 0.0;
  for (const auto& t : terms_) {
    double mono = 1.0;
    for (int mu = 0; mu < 4; ++mu) mono *= int_pow(x[mu], t.exp[mu]);
    s += t.coeff * mono;
  }
  return s;
}

Jet Poly4::eval_jet(const std::array<double, 4>& x) const {
  Jet j;
  for (const auto& t : terms_) {
    // monomial derivative d^{k}/dx^{k} of prod x_mu^{e_mu}, per axis
    auto part = [&](const std::array<int, 4>& k) -> cplx {
      double r = 1.0;
      for (int mu = 0; mu < 4; ++mu) {
        if (k[mu] > t.exp[mu]) return 0.0;
        r *= falling(t.exp[mu], k[mu]) * int_pow(x[mu], t.exp[mu] - k[mu]);
      }
      return t.coeff * r;
    };
    j.v += part({0, 0, 0, 0});
    for (int m = 0; m < 4; ++m) {
      std::array<int, 4> k{};
      k[m] = 1;
      j.d[m] += part(k);
    }
    for (int m = 0; m < 4; ++m)
      for (int n = m; n < 4; ++n) {
        std::array<int, 4> k{};
        ++k[m];
        ++k[n];
        j.d2(m, n) += part(k);
      }
    for (int m = 0; m < 4; ++m)
      for (int n = m; n < 4; ++n)
        for (int p = n; p < 4; ++p) {
          std::array<int, 4> k{};
          ++k[m];
          ++k[n];
          ++k[p];
          j.d3(m, n, p) += part(k);
        }
  }
  return j;
}

Poly4 Poly4::derivative(int mu) const {
  Poly4 r;
  for (const auto& t : terms_) {
    if (t.exp[mu] == 0) continue;
    Term d = t;
    d.coeff *= static_cast<double>(t.exp[mu]);
    --d.exp[mu];
    r.terms_.push_back(d);
  }
  r.normalize();
  return r;
}

Poly4 Poly4::compose_affine(const std::array<std::array<double, 4>, 4>& L,
                            const std::array<double, 4>& t) const {
  // substitution polynomials y_mu = sum_nu L[mu][nu] x_nu + t[mu]
  std::array<Poly4, 4> subst;
  for (int mu = 0; mu < 4; ++mu) {
    std::array<cplx, 4> lin{};
    for (int nu = 0; nu < 4; ++nu) lin[nu] = L[mu][nu];
    subst[mu] = Poly4::affine(t[mu], lin);
  }
  Poly4 result;
  for (const auto& term : terms_) {
    Poly4 mono(term.coeff);
    for (int mu = 0; mu < 4; ++mu)
      for (int e = 0; e < term.exp[mu]; ++e) mono = mono * subst[mu];
    result = result + mono;
  }
  return result;
}

Poly4 Poly4::operator+(const Poly4& o) const {
  Poly4 r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Poly4 Poly4::operator-(const Poly4& o) const { return *this + o * cplx(-1.0); }

Poly4 Poly4::operator*(const Poly4& o) const {
  Poly4 r;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Term t;
      t.coeff = a.coeff * b.coeff;
      for (int mu = 0; mu < 4; ++mu) t.exp[mu] = a.exp[mu] + b.exp[mu];
      r.terms_.push_back(t);
    }
  r.normalize();
  return r;
}

Poly4 Poly4::operator*(cplx s) const {
  Poly4 r = *this;
  for (auto& t : r.terms_) t.coeff *= s;
  r.normalize();
  return r;
}

void Poly4::normalize() {
  std::map<std::array<int, 4>, cplx> acc;
  for (const auto& t : terms_) acc[t.exp] += t.coeff;
  terms_.clear();
  for (const auto& [exp, coeff] : acc) {
    if (coeff != cplx(0.0)) terms_.push_back({coeff, exp});
  }
}

}  // namespace galilab
