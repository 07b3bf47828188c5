#include <doctest.h>

#include "dioid/errors.hpp"
#include "dioid/series.hpp"
#include "dioid/text.hpp"
#include "support/generators.hpp"
#include "support/series_oracle.hpp"

using namespace dioid;
using namespace dioid::testing;

namespace {

Series mono(std::int64_t t, std::int64_t n) { return Series::monomial(MaxPlus(t), n); }
Series S(const char* text) { return parse_series(text); }

// Canonical-form invariants: strictly increasing exponents and coefficients
// across p then q, and finite coefficients except a final ⊤.
void check_canonical(const Series& s) {
  if (s.kind() != Series::Kind::Regular) return;
  std::vector<Monomial> all = s.transient();
  all.insert(all.end(), s.pattern().begin(), s.pattern().end());
  REQUIRE(!all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].exp < all[i].exp);
    CHECK(all[i - 1].coef < all[i].coef);
  }
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].coef.is_finite());
  if (s.period()) {
    CHECK(s.period()->tau > 0);
    CHECK(s.period()->nu > 0);
    CHECK(!s.pattern().empty());
    CHECK(s.pattern().back().exp < s.pattern().front().exp + s.period()->nu);
  }
}

}  // namespace

TEST_CASE("monomial rules") {
  CHECK(otimes(mono(2, 1), mono(3, 2)) == mono(5, 3));
  CHECK(wedge(mono(2, 1), mono(3, 2)) == mono(2, 2));
  CHECK(lres(mono(3, 2), mono(5, 3)) == mono(2, 1));
  CHECK(oplus(mono(2, 2), mono(3, 2)) == mono(3, 2));
  CHECK(odot(mono(2, 1), mono(3, 2)) == mono(5, 3));
  CHECK(dualres(mono(2, 1), mono(5, 3)) == mono(3, 2));
  // Order: t1γ^n1 ⪰ t2γ^n2 iff n1 ≤ n2 and t1 ≥ t2.
  CHECK(leq(mono(2, 3), mono(3, 1)));
  CHECK_FALSE(leq(mono(3, 1), mono(2, 3)));
  CHECK_FALSE(leq(mono(1, 1), mono(2, 2)));
}

TEST_CASE("canonical form") {
  CHECK(Series::polynomial({{MaxPlus(2), 2}, {MaxPlus(3), 2}}) == mono(3, 2));
  CHECK(Series::polynomial({{MaxPlus::eps(), 4}}) == Series::eps());
  Series s = Series::polynomial({{MaxPlus(5), 1}, {MaxPlus(3), 2}});
  CHECK(s == mono(5, 1));
  for (std::int64_t k = 0; k <= 10; ++k) CHECK(s.at(k) == eval(std::vector<Monomial>{{MaxPlus(5), 1}, {MaxPlus(3), 2}}, k));

  // Different presentations of one counter function share one form.
  Series a = Series::periodic({}, {{MaxPlus(0), 0}}, {18, 1});
  Series b = Series::periodic({{MaxPlus(0), 0}}, {{MaxPlus(18), 1}, {MaxPlus(36), 2}}, {36, 2});
  CHECK(a == b);
  CHECK(b.period() == Period{18, 1});
  CHECK(Series::periodic({{MaxPlus(1), 0}}, {{MaxPlus(0), 0}}, {5, 1}) ==
        Series::periodic({{MaxPlus(1), 0}}, {{MaxPlus(5), 1}}, {5, 1}));
  CHECK_THROWS_AS(Series::periodic({}, {{MaxPlus(0), 0}}, {0, 1}), DomainError);
  CHECK_THROWS_AS(Series::periodic({}, {{MaxPlus(0), 0}}, {3, -1}), DomainError);

  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    Series x = random_series(rng);
    check_canonical(x);
    for (std::int64_t k = -6; k < check_window(x); ++k) CHECK(x.at(k) == eval(x, k));
  }
}

TEST_CASE("distinguished series") {
  Series e = Series::unit();
  CHECK(e == mono(0, 0));
  CHECK(star(e) == e);
  CHECK(oplus(Series::eps(), mono(1, 1)) == mono(1, 1));
  CHECK(otimes(Series::eps(), Series::top()) == Series::eps());
  CHECK(otimes(Series::top(), mono(1, 1)) == Series::top());
  CHECK(wedge(Series::top(), mono(1, 1)) == mono(1, 1));
  CHECK(lres(Series::eps(), Series::eps()) == Series::top());
  CHECK(lres(Series::top(), mono(1, 1)) == Series::eps());
  CHECK(odot(Series::top(), Series::eps()) == Series::top());
  CHECK(dualres(Series::top(), mono(4, 2)) == Series::eps());
  CHECK(dualres(mono(3, 1), Series::eps()) == Series::eps());
}

TEST_CASE("dual product and dual residual with a monomial") {
  Series s = oplus(mono(3, 0), mono(5, 2));
  CHECK(odot(mono(2, 1), s) == oplus(mono(5, 1), mono(7, 3)));
  CHECK(dualres(mono(2, 1), oplus(mono(5, 1), mono(7, 3))) == s);
  CHECK(odot(Series::unit(), s) == s);
  CHECK(dualres(Series::unit(), s) == s);
  CHECK(odot(Series::top(), s) == Series::top());
  CHECK_THROWS_AS(odot(s, s), DomainError);
  CHECK_THROWS_AS(dualres(s, s), DomainError);
  CHECK_THROWS_AS(wedge_star(s), DomainError);

  // Minimality of m⨸s over k = 0..10.
  Series m = mono(2, 1);
  Series target = oplus(mono(5, 1), mono(7, 3));
  Series x = dualres(m, target);
  CHECK(leq(target, odot(m, x)));
  for (std::int64_t k = 0; k <= 10; ++k) {
    MaxPlus need = target.at(k + 1);
    CHECK(x.at(k) == (need.is_finite() ? MaxPlus(need.value() - 2) : need));
  }
}

TEST_CASE("star") {
  Series s = star(mono(1, 1));
  REQUIRE(s.period());
  CHECK(s.period() == Period{1, 1});
  CHECK(sigma_inf(s) == Slope{Slope::Kind::Finite, 1, 1});
  CHECK(s == Series::periodic({}, {{MaxPlus(0), 0}}, {1, 1}));
  CHECK(star(mono(18, 1)) == S("0.g0.(18.g1)*"));
  CHECK(star(mono(-2, 3)) == Series::unit());
  CHECK(star(mono(2, 0)) == Series::monomial(MaxPlus::top(), 0));
  CHECK(star(mono(2, -1)) == Series::top());
  CHECK_THROWS_AS(star(mono(-2, -1)), DomainError);
  CHECK(star(Series::eps()) == Series::unit());
  CHECK(star(Series::top()) == Series::top());

  Rng rng(22);
  SeriesShape sh;
  sh.exp_lo = 1;
  for (int t = 0; t < 100; ++t) {
    Series x = random_series(rng, sh);
    Series st = star(x);
    check_canonical(st);
    auto ref = star_values(x, 40);
    for (std::int64_t k = 0; k <= 40; ++k) CHECK(st.at(k) == ref[k]);
    for (std::int64_t k = -5; k < 0; ++k) CHECK(st.at(k) == MaxPlus::eps());
  }
}

TEST_CASE("wedge closure of a monomial") {
  CHECK(wedge_star(mono(3, 0)) == Series::unit());
  CHECK(wedge_star(mono(3, -2)) == Series::unit());
  CHECK(wedge_star(mono(3, 1)) == Series::eps());
  CHECK(wedge_star(mono(-1, 0)) == Series::eps());
  CHECK(wedge_star(Series::top()) == Series::unit());
  CHECK(wedge_star(Series::eps()) == Series::eps());
}

TEST_CASE("slopes") {
  CHECK(sigma_inf(S("4.g1 + 7.g4.(18.g1)*")) == Slope{Slope::Kind::Finite, 1, 18});
  CHECK(sigma_inf(S("(1.g0 + 5.g1).(12.g4)*")) == Slope{Slope::Kind::Finite, 1, 3});
  CHECK(sigma_inf(mono(3, 3)).kind == Slope::Kind::PlusInf);
  CHECK(sigma_inf(Series::eps()).kind == Slope::Kind::PlusInf);
  CHECK(sigma_inf(Series::top()).kind == Slope::Kind::MinusInf);
  CHECK(sigma_inf(S("2.g0 + top.g3")) == Slope{Slope::Kind::Finite, 0, 1});
  CHECK(to_string(sigma_inf(S("7.g4.(18.g1)*"))) == "1/18");
  CHECK(Slope{Slope::Kind::Finite, 1, 3} < Slope{Slope::Kind::Finite, 1, 2});
}

TEST_CASE("operations agree with pointwise definitions") {
  Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    Series a = random_series(rng);
    Series b = random_series(rng);
    std::int64_t hi = std::max(check_window(a), check_window(b)) + 10;
    Series sum = oplus(a, b), meet = wedge(a, b), prod = otimes(a, b), res = lres(a, b);
    for (const Series* r : {&sum, &meet, &prod, &res}) check_canonical(*r);
    for (std::int64_t k = -5; k <= hi; ++k) {
      CHECK(sum.at(k) == oplus(eval(a, k), eval(b, k)));
      CHECK(meet.at(k) == wedge(eval(a, k), eval(b, k)));
      CHECK(prod.at(k) == product_at(a, b, k));
      CHECK(res.at(k) == residual_at(a, b, k));
    }
    Series m = random_monomial_series(rng);
    const Monomial& mm = m.transient().front();
    Series od = odot(m, b), dr = dualres(m, b);
    for (std::int64_t k = -5; k <= hi; ++k) {
      CHECK(od.at(k) == mono_odot_at(mm.coef, mm.exp, b, k));
      CHECK(dr.at(k) == mono_dualres_at(mm.coef, mm.exp, b, k));
    }
  }
}

TEST_CASE("residual is the greatest sub-solution") {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    Series a = random_series(rng);
    Series b = random_series(rng);
    Series x = lres(a, b);
    CHECK(leq(otimes(a, x), b));
    CHECK(leq(b, lres(a, otimes(a, b))));
    CHECK(leq(x, lres(a, oplus(b, otimes(a, x)))));
  }
}

TEST_CASE("semiring laws") {
  Rng rng(25);
  for (int t = 0; t < 60; ++t) {
    Series a = random_series(rng), b = random_series(rng), c = random_series(rng);
    CHECK(oplus(a, b) == oplus(b, a));
    CHECK(otimes(a, b) == otimes(b, a));
    CHECK(otimes(a, otimes(b, c)) == otimes(otimes(a, b), c));
    CHECK(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)));
    CHECK(wedge(a, oplus(a, b)) == a);
    CHECK(lres(oplus(a, b), c) == wedge(lres(a, c), lres(b, c)));
  }
}
