#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "galilab/jet.hpp"
#include "galilab/poly.hpp"
#include "galilab/rng.hpp"

using namespace galilab;

namespace {

// dense random jet, a stand-in for an arbitrary smooth function's Taylor data
Jet random_jet(Rng& rng) {
  Jet j;
  auto draw = [&] { return cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)); };
  j.v = draw();
  for (auto& x : j.d) x = draw();
  for (auto& x : j.dd) x = draw();
  for (auto& x : j.ddd) x = draw();
  return j;
}

double jet_dist(const Jet& a, const Jet& b, int up_to_order = 3) {
  double m = std::abs(a.v - b.v);
  if (up_to_order >= 1)
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.d[i] - b.d[i]));
  if (up_to_order >= 2)
    for (int i = 0; i < 10; ++i) m = std::max(m, std::abs(a.dd[i] - b.dd[i]));
  if (up_to_order >= 3)
    for (int i = 0; i < 20; ++i)
      m = std::max(m, std::abs(a.ddd[i] - b.ddd[i]));
  return m;
}

}  // namespace

TEST_CASE("symmetric index accessors") {
  Jet j;
  j.d2(1, 3) = cplx(2, 0);
  CHECK(j.d2(3, 1) == cplx(2, 0));
  j.d3(2, 0, 1) = cplx(5, 1);
  CHECK(j.d3(0, 1, 2) == cplx(5, 1));
  CHECK(j.d3(1, 2, 0) == cplx(5, 1));
  // all 20 triple slots are distinct
  int hits[20] = {};
  for (int m = 0; m < 4; ++m)
    for (int n = m; n < 4; ++n)
      for (int p = n; p < 4; ++p) ++hits[detail::triple_index(m, n, p)];
  for (int k = 0; k < 20; ++k) CHECK(hits[k] == 1);
}

TEST_CASE("product rule on coordinates") {
  // f = x1 * x1 at x1 = 3: value 9, d1 = 6, d11 = 2
  const Jet x1 = Jet::coordinate(1, 3.0);
  const Jet f = x1 * x1;
  CHECK(f.v == cplx(9.0));
  CHECK(f.d[1] == cplx(6.0));
  CHECK(f.d2(1, 1) == cplx(2.0));
  CHECK(f.d3(1, 1, 1) == cplx(0.0));
  // f = x0 * x2 at (x0, x2) = (2, 5): mixed second derivative is 1
  const Jet g = Jet::coordinate(0, 2.0) * Jet::coordinate(2, 5.0);
  CHECK(g.v == cplx(10.0));
  CHECK(g.d[0] == cplx(5.0));
  CHECK(g.d[2] == cplx(2.0));
  CHECK(g.d2(0, 2) == cplx(1.0));
  CHECK(g.d2(0, 0) == cplx(0.0));
}

TEST_CASE("ring identities on random jets") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Jet a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
    CHECK(jet_dist(a * b, b * a) < 1e-13);
    CHECK(jet_dist(a * (b + c), a * b + a * c) < 1e-13);
    CHECK(jet_dist((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(jet_dist(a + (-a), Jet{}) == 0.0);
  }
}

TEST_CASE("conjugation distributes over products") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const Jet a = random_jet(rng), b = random_jet(rng);
    CHECK(jet_dist(conj(a * b), conj(a) * conj(b)) < 1e-13);
    CHECK(jet_dist(real_part(a) + cplx(0, 1) * imag_part(a), a) < 1e-15);
  }
}

TEST_CASE("exp, log and recip compose correctly") {
  Rng rng(57);
  for (int i = 0; i < 100; ++i) {
    Jet a = random_jet(rng);
    a.v = cplx(rng.uniform(0.5, 2.0), rng.uniform(-0.3, 0.3));  // off the cut
    CHECK(jet_dist(log(exp(a)), a) < 1e-10);
    CHECK(jet_dist(exp(log(a)), a) < 1e-10);
    CHECK(jet_dist(a * recip(a), Jet::constant(1.0)) < 1e-10);
    CHECK(jet_dist(pow(a, 2.0), a * a) < 1e-10);
  }
  // exp derivative structure: exp(i x1) at x1 = 0.7
  const Jet e = exp(cplx(0, 1) * Jet::coordinate(1, 0.7));
  const cplx w = std::exp(cplx(0, 0.7));
  CHECK(std::abs(e.v - w) < 1e-15);
  CHECK(std::abs(e.d[1] - cplx(0, 1) * w) < 1e-15);
  CHECK(std::abs(e.d2(1, 1) + w) < 1e-15);
  CHECK(std::abs(e.d3(1, 1, 1) + cplx(0, 1) * w) < 1e-14);
}

TEST_CASE("shift_derivative peels one order") {
  Rng rng(71);
  const Jet a = random_jet(rng);
  const Jet da = shift_derivative(a, 2);
  CHECK(da.order == 2);
  CHECK(da.v == a.d[2]);
  for (int m = 0; m < 4; ++m) CHECK(da.d[m] == a.d2(2, m));
  for (int m = 0; m < 4; ++m)
    for (int n = m; n < 4; ++n) CHECK(da.d2(m, n) == a.d3(2, m, n));
  // mixed partials commute
  const Jet dab = shift_derivative(shift_derivative(a, 0), 3);
  const Jet dba = shift_derivative(shift_derivative(a, 3), 0);
  CHECK(jet_dist(dab, dba, 1) == 0.0);
  CHECK(dab.order == 1);
}

TEST_CASE("affine pullback chain rule matches polynomial composition") {
  Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    Poly4 p;
    for (int t = 0; t < 5; ++t) {
      std::array<int, 4> e{};
      int deg = static_cast<int>(rng.uniform(0, 3.999));
      for (int k = 0; k < deg; ++k) ++e[static_cast<int>(rng.uniform(0, 3.999))];
      p.add_term(cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)), e);
    }
    std::array<std::array<double, 4>, 4> L{};
    std::array<double, 4> t{};
    for (auto& row : L)
      for (auto& v : row) v = rng.uniform(-1, 1);
    for (auto& v : t) v = rng.uniform(-1, 1);

    std::array<double, 4> x{rng.uniform(-1, 1), rng.uniform(-1, 1),
                            rng.uniform(-1, 1), rng.uniform(-1, 1)};
    std::array<double, 4> y{};
    for (int mu = 0; mu < 4; ++mu) {
      y[mu] = t[mu];
      for (int nu = 0; nu < 4; ++nu) y[mu] += L[mu][nu] * x[nu];
    }
    const Jet via_chain = pullback_affine(p.eval_jet(y), L);
    const Jet via_poly = p.compose_affine(L, t).eval_jet(x);
    CHECK(jet_dist(via_chain, via_poly) < 1e-11);
  }
}

TEST_CASE("polynomial jets are exact") {
  // p = x1^2 at x1 = 3
  Poly4 p;
  p.add_term(1.0, {0, 2, 0, 0});
  const Jet j = p.eval_jet({0, 3, 0, 0});
  CHECK(j.v == cplx(9.0));
  CHECK(j.d[1] == cplx(6.0));
  CHECK(j.d2(1, 1) == cplx(2.0));

  // derivative operator agrees with jet shift
  Rng rng(97);
  Poly4 q;
  q.add_term(cplx(1.5, -0.5), {1, 0, 2, 0});
  q.add_term(cplx(0, 2), {0, 1, 1, 1});
  for (int i = 0; i < 20; ++i) {
    std::array<double, 4> x{rng.uniform(-2, 2), rng.uniform(-2, 2),
                            rng.uniform(-2, 2), rng.uniform(-2, 2)};
    for (int mu = 0; mu < 4; ++mu) {
      const Jet a = shift_derivative(q.eval_jet(x), mu);
      const Jet b = q.derivative(mu).eval_jet(x);
      CHECK(jet_dist(a, b, 2) < 1e-12);
    }
  }
}
