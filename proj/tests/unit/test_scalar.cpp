#include <doctest.h>

#include <limits>

#include "dioid/errors.hpp"
#include "dioid/scalar.hpp"
#include "support/generators.hpp"

using namespace dioid;
using dioid::testing::Rng;

namespace {

const MaxPlus eps = MaxPlus::eps();
const MaxPlus top = MaxPlus::top();
MaxPlus v(std::int64_t x) { return MaxPlus(x); }

std::vector<MaxPlus> grid(std::int64_t k) {
  std::vector<MaxPlus> g = {eps};
  for (std::int64_t x = -k; x <= k; ++x) g.push_back(v(x));
  g.push_back(top);
  return g;
}

}  // namespace

TEST_CASE("order and lattice operations") {
  CHECK(eps < v(-1000));
  CHECK(v(1000) < top);
  CHECK(oplus(v(3), v(5)) == v(5));
  CHECK(oplus(eps, v(7)) == v(7));
  CHECK(oplus(top, eps) == top);
  CHECK(wedge(v(3), v(5)) == v(3));
  CHECK(wedge(top, v(7)) == v(7));
  CHECK(wedge(eps, top) == eps);
  for (MaxPlus a : grid(3)) CHECK(oplus(a, a) == a);
}

TEST_CASE("products and absorbing elements") {
  CHECK(otimes(v(1), v(8)) == v(9));
  CHECK(otimes(eps, top) == eps);
  CHECK(otimes(top, eps) == eps);
  CHECK(otimes(MaxPlus::unit(), v(5)) == v(5));
  CHECK(otimes(top, v(-4)) == top);
  CHECK(odot(v(1), v(8)) == v(9));
  CHECK(odot(top, eps) == top);
  CHECK(odot(eps, top) == top);
  CHECK(odot(MaxPlus::unit(), v(5)) == v(5));
  CHECK(odot(eps, v(3)) == eps);
}

TEST_CASE("residuals and their boundary cases") {
  CHECK(lres(v(1), v(8)) == v(7));
  CHECK(lres(eps, eps) == top);
  CHECK(lres(top, top) == top);
  CHECK(lres(top, v(5)) == eps);
  CHECK(lres(v(3), eps) == eps);
  CHECK(lres(v(3), top) == top);
  CHECK(dualres(v(1), v(8)) == v(7));
  CHECK(dualres(top, v(5)) == eps);
  CHECK(dualres(eps, eps) == eps);
  CHECK(dualres(eps, v(2)) == top);
  CHECK(dualres(v(4), eps) == eps);
  CHECK(dualres(v(4), top) == top);
}

TEST_CASE("residuals agree with grid search") {
  // lres(a, b) is the largest grid x with a ⊗ x ⪯ b, dualres the smallest
  // with a ⊙ x ⪰ b; the grid reaches past every finite difference below.
  auto small = grid(4);
  auto wide = grid(20);
  for (MaxPlus a : small)
    for (MaxPlus b : small) {
      MaxPlus best = eps;
      for (MaxPlus x : wide)
        if (otimes(a, x) <= b) best = x;
      CHECK(lres(a, b) == best);
      MaxPlus least = top;
      for (auto it = wide.rbegin(); it != wide.rend(); ++it)
        if (b <= odot(a, *it)) least = *it;
      CHECK(dualres(a, b) == least);
    }
}

TEST_CASE("Galois inequalities on a grid") {
  for (MaxPlus a : grid(6))
    for (MaxPlus b : grid(6)) {
      CHECK(otimes(a, lres(a, b)) <= b);
      CHECK(b <= lres(a, otimes(a, b)));
      CHECK(b <= odot(a, dualres(a, b)));
      CHECK(dualres(a, odot(a, b)) <= b);
    }
}

TEST_CASE("distributivity of products over min") {
  for (MaxPlus a : grid(3))
    for (MaxPlus b : grid(3))
      for (MaxPlus c : grid(3)) {
        if (c.is_finite()) {
          CHECK(otimes(c, wedge(a, b)) == wedge(otimes(c, a), otimes(c, b)));
          CHECK(odot(c, oplus(a, b)) == oplus(odot(c, a), odot(c, b)));
        }
        CHECK(otimes(c, wedge(a, b)) <= wedge(otimes(c, a), otimes(c, b)));
        CHECK(odot(c, wedge(a, b)) == wedge(odot(c, a), odot(c, b)));
      }
}

TEST_CASE("dual residual associates with products") {
  auto g = grid(3);
  for (MaxPlus b : g)
    for (MaxPlus a : g)
      for (MaxPlus x : g) CHECK(dualres(b, otimes(a, x)) == otimes(dualres(b, a), x));
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    MaxPlus a = dioid::testing::random_scalar(rng, 1000);
    MaxPlus b = dioid::testing::random_scalar(rng, 1000);
    MaxPlus x = dioid::testing::random_scalar(rng, 1000);
    CHECK(dualres(b, otimes(a, x)) == otimes(dualres(b, a), x));
  }
}

TEST_CASE("scalar closures") {
  CHECK(star(eps) == MaxPlus::unit());
  CHECK(star(v(-3)) == MaxPlus::unit());
  CHECK(star(v(0)) == MaxPlus::unit());
  CHECK(star(v(1)) == top);
  CHECK(star(top) == top);
  CHECK(wedge_star(v(3)) == MaxPlus::unit());
  CHECK(wedge_star(v(0)) == MaxPlus::unit());
  CHECK(wedge_star(v(-1)) == eps);
  CHECK(wedge_star(top) == MaxPlus::unit());
  CHECK(wedge_star(eps) == eps);
}

TEST_CASE("finite arithmetic never wraps") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(otimes(v(big), v(1)), OverflowError);
  CHECK_THROWS_AS(lres(v(-1), v(big)), OverflowError);
  CHECK(otimes(v(big), eps) == eps);
  CHECK(negate(eps) == top);
  CHECK(negate(v(5)) == v(-5));
}

TEST_CASE("textual form") {
  CHECK(to_string(eps) == "eps");
  CHECK(to_string(top) == "top");
  CHECK(to_string(v(-12)) == "-12");
  CHECK(to_string(MaxPlus::unit()) == "0");
}
