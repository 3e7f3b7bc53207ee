#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace galilab {

using cplx = std::complex<double>;

namespace detail {

// index of the unordered pair (m,n), m <= n, among the 10 distinct pairs
constexpr int pair_index(int m, int n) { return m * 4 - m * (m + 1) / 2 + n; }

constexpr std::array<int, 64> make_triple_index() {
  std::array<int, 64> t{};
  int k = 0;
  for (int m = 0; m < 4; ++m)
    for (int n = m; n < 4; ++n)
      for (int p = n; p < 4; ++p) t[m * 16 + n * 4 + p] = k++;
  return t;
}
inline constexpr std::array<int, 64> kTripleIndex = make_triple_index();

constexpr int triple_index(int m, int n, int p) {
  if (m > n) { int t = m; m = n; n = t; }
  if (n > p) { int t = n; n = p; p = t; }
  if (m > n) { int t = m; m = n; n = t; }
  return kTripleIndex[m * 16 + n * 4 + p];
}

}  // namespace detail

/// Truncated Taylor expansion at a point: value plus derivatives w.r.t. the
/// four spacetime coordinates, carried exactly to third order so that one
/// derivative can be peeled off while keeping an exact order-2 jet.
/// `order` is the highest derivative order that is trusted.
struct Jet {
  cplx v{};
  std::array<cplx, 4> d{};
  std::array<cplx, 10> dd{};
  std::array<cplx, 20> ddd{};
  int order = 3;

  cplx d1(int m) const { return d[m]; }
  cplx& d2(int m, int n) { return dd[m <= n ? detail::pair_index(m, n) : detail::pair_index(n, m)]; }
  cplx d2(int m, int n) const { return dd[m <= n ? detail::pair_index(m, n) : detail::pair_index(n, m)]; }
  cplx& d3(int m, int n, int p) { return ddd[detail::triple_index(m, n, p)]; }
  cplx d3(int m, int n, int p) const { return ddd[detail::triple_index(m, n, p)]; }

  static Jet constant(cplx c) {
    Jet j;
    j.v = c;
    return j;
  }
  /// jet of the coordinate function x_mu at a point where it equals `value`
  static Jet coordinate(int mu, double value) {
    Jet j;
    j.v = value;
    j.d[mu] = 1.0;
    return j;
  }
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(cplx s, const Jet& a);
inline Jet operator*(const Jet& a, cplx s) { return s * a; }
inline Jet operator+(const Jet& a, cplx s) { Jet r = a; r.v += s; return r; }
inline Jet operator-(const Jet& a, cplx s) { Jet r = a; r.v -= s; return r; }

/// Componentwise conjugate; valid because the variables are real coordinates.
Jet conj(const Jet& a);
Jet real_part(const Jet& a);
Jet imag_part(const Jet& a);

Jet exp(const Jet& a);
/// Principal branch; requires a.v away from the branch cut for smoothness.
Jet log(const Jet& a);
Jet recip(const Jet& a);
inline Jet pow(const Jet& a, double e) { return exp(e * log(a)); }
inline Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

/// jet of d_mu f from the jet of f; drops one trusted order.
Jet shift_derivative(const Jet& a, int mu);

/// chain rule for f(L x + t) given the jet of f at L x + t; exact for
/// affine maps, preserves order.
Jet pullback_affine(const Jet& inner, const std::array<std::array<double, 4>, 4>& L);

}  // namespace galilab
