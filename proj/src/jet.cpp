#include "galilab/jet.hpp"

#include <algorithm>
#include <cmath>

namespace galilab {

namespace {

template <typename F>
void for_each_pair(F&& f) {
  for (int m = 0; m < 4; ++m)
    for (int n = m; n < 4; ++n) f(m, n);
}

template <typename F>
void for_each_triple(F&& f) {
  for (int m = 0; m < 4; ++m)
    for (int n = m; n < 4; ++n)
      for (int p = n; p < 4; ++p) f(m, n, p);
}

// h = g(f) for a scalar function g with derivatives g1, g2, g3 at f.v,
// composed with the jet of f (Faa di Bruno to third order).
Jet compose_scalar(const Jet& f, cplx g0, cplx g1, cplx g2, cplx g3) {
  Jet h;
  h.order = f.order;
  h.v = g0;
  for (int m = 0; m < 4; ++m) h.d[m] = g1 * f.d[m];
  for_each_pair([&](int m, int n) {
    h.d2(m, n) = g1 * f.d2(m, n) + g2 * f.d[m] * f.d[n];
  });
  for_each_triple([&](int m, int n, int p) {
    h.d3(m, n, p) = g1 * f.d3(m, n, p) +
                    g2 * (f.d2(m, n) * f.d[p] + f.d2(m, p) * f.d[n] +
                          f.d2(n, p) * f.d[m]) +
                    g3 * f.d[m] * f.d[n] * f.d[p];
  });
  return h;
}

}  // namespace

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.order = std::min(a.order, b.order);
  r.v = a.v + b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int i = 0; i < 10; ++i) r.dd[i] = a.dd[i] + b.dd[i];
  for (int i = 0; i < 20; ++i) r.ddd[i] = a.ddd[i] + b.ddd[i];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator-(const Jet& a) { return cplx(-1.0) * a; }

Jet operator*(cplx s, const Jet& a) {
  Jet r = a;
  r.v *= s;
  for (auto& x : r.d) x *= s;
  for (auto& x : r.dd) x *= s;
  for (auto& x : r.ddd) x *= s;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.order = std::min(a.order, b.order);
  r.v = a.v * b.v;
  for (int m = 0; m < 4; ++m) r.d[m] = a.d[m] * b.v + a.v * b.d[m];
  for_each_pair([&](int m, int n) {
    r.d2(m, n) = a.d2(m, n) * b.v + a.d[m] * b.d[n] + a.d[n] * b.d[m] +
                 a.v * b.d2(m, n);
  });
  for_each_triple([&](int m, int n, int p) {
    r.d3(m, n, p) = a.d3(m, n, p) * b.v + a.v * b.d3(m, n, p) +
                    a.d2(m, n) * b.d[p] + a.d2(m, p) * b.d[n] +
                    a.d2(n, p) * b.d[m] + a.d[p] * b.d2(m, n) +
                    a.d[n] * b.d2(m, p) + a.d[m] * b.d2(n, p);
  });
  return r;
}

Jet conj(const Jet& a) {
  Jet r;
  r.order = a.order;
  r.v = std::conj(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = std::conj(a.d[i]);
  for (int i = 0; i < 10; ++i) r.dd[i] = std::conj(a.dd[i]);
  for (int i = 0; i < 20; ++i) r.ddd[i] = std::conj(a.ddd[i]);
  return r;
}

Jet real_part(const Jet& a) { return 0.5 * (a + conj(a)); }

Jet imag_part(const Jet& a) { return cplx(0.0, -0.5) * (a - conj(a)); }

Jet exp(const Jet& a) {
  const cplx e = std::exp(a.v);
  if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
    throw std::range_error("jet exp overflow");
  }
  return compose_scalar(a, e, e, e, e);
}

Jet log(const Jet& a) {
  const cplx v = a.v;
  if (v == cplx(0.0)) throw std::domain_error("jet log of zero");
  const cplx i1 = cplx(1.0) / v;
  return compose_scalar(a, std::log(v), i1, -i1 * i1, 2.0 * i1 * i1 * i1);
}

Jet recip(const Jet& a) {
  const cplx v = a.v;
  if (v == cplx(0.0)) throw std::domain_error("jet reciprocal of zero");
  const cplx i1 = cplx(1.0) / v;
  const cplx i2 = i1 * i1;
  return compose_scalar(a, i1, -i2, 2.0 * i2 * i1, -6.0 * i2 * i2);
}

Jet shift_derivative(const Jet& a, int mu) {
  if (a.order < 1) throw std::logic_error("insufficient jet order for derivative");
  Jet r;
  r.order = a.order - 1;
  r.v = a.d[mu];
  for (int m = 0; m < 4; ++m) r.d[m] = a.d2(mu, m);
  for_each_pair([&](int m, int n) { r.d2(m, n) = a.d3(mu, m, n); });
  // third derivatives of d_mu f would need the fourth order of f; zeroed,
  // and `order` records the loss
  return r;
}

Jet pullback_affine(const Jet& inner,
                    const std::array<std::array<double, 4>, 4>& L) {
  Jet r;
  r.order = inner.order;
  r.v = inner.v;
  for (int m = 0; m < 4; ++m) {
    cplx s = 0.0;
    for (int n = 0; n < 4; ++n) s += L[n][m] * inner.d[n];
    r.d[m] = s;
  }
  for_each_pair([&](int m, int n) {
    cplx s = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) s += L[p][m] * L[q][n] * inner.d2(p, q);
    r.d2(m, n) = s;
  });
  for_each_triple([&](int m, int n, int p) {
    cplx s = 0.0;
    for (int u = 0; u < 4; ++u)
      for (int w = 0; w < 4; ++w)
        for (int z = 0; z < 4; ++z)
          s += L[u][m] * L[w][n] * L[z][p] * inner.d3(u, w, z);
    r.d3(m, n, p) = s;
  });
  return r;
}

}  // namespace galilab
