#include "dioid/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dioid/errors.hpp"

namespace dioid {

namespace {

__extension__ typedef __int128 wide;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) { return checked_mul(a / std::gcd(a, b), b); }

MaxPlus shifted(MaxPlus v, std::int64_t by) { return otimes(v, MaxPlus(by)); }

// How a Regular series behaves from exponent K on.
struct Tail {
  bool periodic = false;
  std::int64_t K = 0;
  std::int64_t nu = 0;
  std::int64_t tau = 0;
  MaxPlus c;  // constant value when !periodic
  bool top() const { return !periodic && c.is_top(); }
};

Tail tail_of(const Series& s) {
  Tail t;
  if (s.period()) {
    t.periodic = true;
    t.K = s.pattern().front().exp;
    t.nu = s.period()->nu;
    t.tau = s.period()->tau;
  } else {
    t.K = s.transient().back().exp;
    t.c = s.transient().back().coef;
  }
  return t;
}

// True when f grows strictly faster than g (g constant or periodic).
bool faster(const Tail& f, const Tail& g) {
  if (!f.periodic) return false;
  if (!g.periodic) return true;
  return static_cast<wide>(f.tau) * g.nu > static_cast<wide>(g.tau) * f.nu;
}

bool same_rate(const Tail& f, const Tail& g) {
  return static_cast<wide>(f.tau) * g.nu == static_cast<wide>(g.tau) * f.nu;
}

// Smallest-ish X ≥ M with f(k) ≥ g(k) for every k ≥ X, where f is periodic
// and strictly faster than g, and both are finite and in their tails from M.
std::int64_t overtake(const Series& f, const Tail& tf, const Series& g, const Tail& tg, std::int64_t M) {
  std::int64_t L = tf.nu;
  std::int64_t delta = tf.tau;
  if (tg.periodic) {
    L = lcm_checked(tf.nu, tg.nu);
    delta = checked_sub(checked_mul(tf.tau, L / tf.nu), checked_mul(tg.tau, L / tg.nu));
  }
  std::int64_t X = M;
  for (std::int64_t k = M; k < M + L; ++k) {
    std::int64_t d = checked_sub(g.at(k).value(), f.at(k).value());
    if (d > 0) X = std::max(X, checked_add(k, checked_mul(ceil_div(d, delta), L)));
  }
  return X;
}

Series sample(std::int64_t lo, std::int64_t hi, std::int64_t nu, std::int64_t tau,
              const auto& value) {
  std::vector<MaxPlus> vals;
  vals.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t k = lo; k < hi; ++k) vals.push_back(value(k));
  return Series::from_samples(lo, vals, nu, tau);
}

// Multiplication by the monomial t γ^n with t finite.
Series shift(const Series& s, std::int64_t t, std::int64_t n) {
  if (s.is_eps() || s.is_top()) return s;
  auto move = [&](std::vector<Monomial> ms) {
    for (auto& m : ms) {
      m.coef = shifted(m.coef, t);
      m.exp = checked_add(m.exp, n);
    }
    return ms;
  };
  if (s.period()) return Series::periodic(move(s.transient()), move(s.pattern()), *s.period());
  return Series::polynomial(move(s.transient()));
}

// r* for r = τγ^ν.
Series period_star(Period r) { return Series::periodic({}, {Monomial{MaxPlus::unit(), 0}}, r); }

// r1* ⊗ r2*. With r1 at least as fast as r2, any use of r2 ν1 times or more
// can be traded for r1 without loss, which bounds the inner maximum.
Series two_star(Period r1, Period r2) {
  if (static_cast<wide>(r1.tau) * r2.nu < static_cast<wide>(r2.tau) * r1.nu) std::swap(r1, r2);
  std::int64_t K = checked_mul(r1.nu - 1, r2.nu);
  return sample(0, checked_add(K, r1.nu), r1.nu, r1.tau, [&](std::int64_t k) {
    std::int64_t best = 0;
    for (std::int64_t j = 0; j < r1.nu && j * r2.nu <= k; ++j) {
      std::int64_t v = checked_add(checked_mul(j, r2.tau), checked_mul(r1.tau, floor_div(k - j * r2.nu, r1.nu)));
      best = j == 0 ? v : std::max(best, v);
    }
    return MaxPlus(best);
  });
}

// Residual m\b for a single monomial m.
Series mono_lres(const Monomial& m, const Series& b) {
  if (m.coef.is_top()) {
    if (b.is_top()) return Series::top();
    if (b.is_eps()) return Series::eps();
    Tail tb = tail_of(b);
    if (!tb.top()) return Series::eps();
    return Series::monomial(MaxPlus::top(), checked_sub(tb.K, m.exp));
  }
  return shift(b, checked_sub(0, m.coef.value()), checked_sub(0, m.exp));
}

// r*\y, i.e. k ↦ min over i ≥ 0 of y(k + iν) − iτ.
Series star_lres(Period r, const Series& y) {
  if (y.is_eps() || y.is_top()) return y;
  Tail ty = tail_of(y);
  std::int64_t lo = y.valuation();
  if (ty.top()) {
    std::int64_t T = ty.K;
    return sample(lo, T + 1, 0, 0, [&](std::int64_t k) {
      if (k >= T) return MaxPlus::top();
      MaxPlus best = MaxPlus::top();
      for (std::int64_t i = 0; k + i * r.nu < T; ++i)
        best = wedge(best, shifted(y.at(k + i * r.nu), checked_mul(-i, r.tau)));
      return best;
    });
  }
  if (!ty.periodic) return Series::eps();
  if (static_cast<wide>(ty.tau) * r.nu < static_cast<wide>(r.tau) * ty.nu) return Series::eps();
  std::int64_t steps = lcm_checked(r.nu, ty.nu) / r.nu;
  return sample(lo, checked_add(ty.K, ty.nu), ty.nu, ty.tau, [&](std::int64_t k) {
    std::int64_t i0 = std::max<std::int64_t>(0, ceil_div(ty.K - k, r.nu));
    MaxPlus best = MaxPlus::top();
    for (std::int64_t i = 0; i < i0 + steps; ++i)
      best = wedge(best, shifted(y.at(checked_add(k, checked_mul(i, r.nu))), checked_mul(-i, r.tau)));
    return best;
  });
}

// (t γ^n)*; nullopt when the result is finite for arbitrarily negative k.
std::optional<Series> mono_star(const Monomial& m) {
  if (m.coef.is_top()) {
    if (m.exp == 0) return Series::monomial(MaxPlus::top(), 0);
    if (m.exp > 0) return oplus(Series::unit(), Series::monomial(MaxPlus::top(), m.exp));
    return Series::top();
  }
  std::int64_t t = m.coef.value();
  if (m.exp > 0) return t > 0 ? period_star(Period{t, m.exp}) : Series::unit();
  if (m.exp == 0) return t > 0 ? Series::monomial(MaxPlus::top(), 0) : Series::unit();
  if (t > 0) return Series::top();
  return std::nullopt;
}

void require_monomial_like(const Series& m, const char* op) {
  if (!m.is_monomial_like())
    throw DomainError(std::string(op) + ": left operand must be a monomial, eps or top");
}

}  // namespace

Series Series::top() {
  Series s;
  s.kind_ = Kind::Top;
  return s;
}

Series Series::unit() { return monomial(MaxPlus::unit(), 0); }

Series Series::monomial(MaxPlus coef, std::int64_t exp) {
  if (coef.is_eps()) return eps();
  Series s;
  s.kind_ = Kind::Regular;
  s.p_.push_back(Monomial{coef, exp});
  return s;
}

Series Series::polynomial(const std::vector<Monomial>& raw) {
  std::vector<Monomial> ms;
  for (const auto& m : raw)
    if (!m.coef.is_eps()) ms.push_back(m);
  if (ms.empty()) return eps();
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.exp < b.exp; });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    if (!out.empty() && m.coef <= out.back().coef) continue;
    if (!out.empty() && out.back().exp == m.exp) out.pop_back();
    out.push_back(m);
  }
  Series s;
  s.kind_ = Kind::Regular;
  s.p_ = std::move(out);
  return s;
}

Series Series::periodic(const std::vector<Monomial>& p, const std::vector<Monomial>& q, Period r) {
  if (r.tau <= 0 || r.nu <= 0) throw DomainError("period must be tau.gnu with tau > 0 and nu > 0");
  std::vector<Monomial> qs;
  for (const auto& m : q)
    if (!m.coef.is_eps()) qs.push_back(m);
  Series head = polynomial(p);
  if (qs.empty()) return head;
  std::int64_t lo = qs.front().exp;
  std::int64_t hi = qs.front().exp;
  for (const auto& m : qs) {
    lo = std::min(lo, m.exp);
    hi = std::max(hi, m.exp);
  }
  Series tail = sample(lo, checked_add(hi, r.nu), r.nu, r.tau, [&](std::int64_t k) {
    MaxPlus best;
    for (const auto& m : qs)
      if (k >= m.exp) best = oplus(best, shifted(m.coef, checked_mul(floor_div(k - m.exp, r.nu), r.tau)));
    return best;
  });
  return oplus(head, tail);
}

Series Series::from_samples(std::int64_t lo, const std::vector<MaxPlus>& values, std::int64_t nu,
                            std::int64_t tau) {
  auto n = static_cast<std::int64_t>(values.size());
  std::int64_t f = 0;
  while (f < n && values[f].is_eps()) ++f;
  if (f == n) return eps();
  if (nu < 0 || tau < 0) throw std::logic_error("from_samples: negative period");
  for (std::int64_t i = f; i < n; ++i) {
    if (values[i].is_top()) {
      n = i + 1;
      nu = 0;
      break;
    }
  }
  if (tau == 0) nu = 0;
  const std::int64_t first = lo + f;

  auto v = [&](std::int64_t k) -> MaxPlus {
    if (k < first) return MaxPlus::eps();
    std::int64_t i = k - lo;
    if (i < n) return values[i];
    if (nu == 0) return values[n - 1];
    std::int64_t base = n - nu;
    std::int64_t j = (i - base) / nu;
    return shifted(values[base + (i - base) % nu], checked_mul(j, tau));
  };
  auto corner = [&](std::int64_t k) { return v(k) > v(k - 1); };
  auto corners = [&](std::int64_t from, std::int64_t to) {
    std::vector<Monomial> ms;
    for (std::int64_t k = from; k < to; ++k)
      if (corner(k)) ms.push_back(Monomial{v(k), k});
    return ms;
  };

  Series s;
  s.kind_ = Kind::Regular;
  if (nu == 0) {
    s.p_ = corners(first, lo + n);
    return s;
  }
  if (n - nu < f) throw std::logic_error("from_samples: periodic window reaches below the valuation");

  const std::int64_t Kp = lo + n - nu;
  std::int64_t d = nu;
  std::int64_t delta = tau;
  for (std::int64_t c = 1; c < nu; ++c) {
    if (nu % c != 0 || checked_mul(tau, c) % nu != 0) continue;
    std::int64_t dc = tau * c / nu;
    bool ok = true;
    for (std::int64_t k = Kp; k < Kp + nu && ok; ++k) ok = v(k + c) == shifted(v(k), dc);
    if (ok) {
      d = c;
      delta = dc;
      break;
    }
  }
  std::int64_t K = Kp;
  while (K - 1 >= first && v(K - 1 + d) == shifted(v(K - 1), delta)) --K;
  std::int64_t Kq = K;
  if (!(corner(K) && corner(K + d))) {
    Kq = K + 1;
    while (!corner(Kq)) ++Kq;
  }
  s.p_ = corners(first, Kq);
  s.q_ = corners(Kq, Kq + d);
  s.r_ = Period{delta, d};
  return s;
}

bool Series::is_monomial_like() const noexcept {
  if (kind_ != Kind::Regular) return true;
  return !r_ && p_.size() == 1 && p_.front().coef.is_finite();
}

std::int64_t Series::valuation() const noexcept {
  if (!p_.empty()) return p_.front().exp;
  if (!q_.empty()) return q_.front().exp;
  return 0;
}

MaxPlus Series::at(std::int64_t k) const {
  if (kind_ == Kind::Eps) return MaxPlus::eps();
  if (kind_ == Kind::Top) return MaxPlus::top();
  if (r_ && k >= q_.front().exp) {
    std::int64_t K = q_.front().exp;
    std::int64_t j = (k - K) / r_->nu;
    std::int64_t rem = k - j * r_->nu;
    MaxPlus best;
    for (const auto& m : q_)
      if (m.exp <= rem) best = m.coef;
    return shifted(best, checked_mul(j, r_->tau));
  }
  MaxPlus best;
  for (const auto& m : p_) {
    if (m.exp > k) break;
    best = m.coef;
  }
  return best;
}

Series oplus(const Series& a, const Series& b) {
  if (a.is_top() || b.is_top()) return Series::top();
  if (a.is_eps()) return b;
  if (b.is_eps()) return a;
  Tail ta = tail_of(a);
  Tail tb = tail_of(b);
  std::int64_t lo = std::min(a.valuation(), b.valuation());
  std::int64_t M = std::max(ta.K, tb.K);
  std::int64_t hi = M + 1;
  std::int64_t nu = 0;
  std::int64_t tau = 0;
  if (ta.top() || tb.top()) {
    std::int64_t T = ta.top() && tb.top() ? std::min(ta.K, tb.K) : (ta.top() ? ta.K : tb.K);
    hi = T + 1;
  } else if (ta.periodic && tb.periodic && same_rate(ta, tb)) {
    nu = lcm_checked(ta.nu, tb.nu);
    tau = checked_mul(ta.tau, nu / ta.nu);
    hi = checked_add(M, nu);
  } else if (ta.periodic || tb.periodic) {
    bool a_wins = faster(ta, tb);
    const Series& f = a_wins ? a : b;
    const Tail& tf = a_wins ? ta : tb;
    std::int64_t X = overtake(f, tf, a_wins ? b : a, a_wins ? tb : ta, M);
    nu = tf.nu;
    tau = tf.tau;
    hi = checked_add(X, nu);
  }
  return sample(lo, hi, nu, tau, [&](std::int64_t k) { return oplus(a.at(k), b.at(k)); });
}

Series wedge(const Series& a, const Series& b) {
  if (a.is_eps() || b.is_eps()) return Series::eps();
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  Tail ta = tail_of(a);
  Tail tb = tail_of(b);
  std::int64_t lo = std::max(a.valuation(), b.valuation());
  std::int64_t M = std::max(ta.K, tb.K);
  std::int64_t hi = M + 1;
  std::int64_t nu = 0;
  std::int64_t tau = 0;
  if (ta.top() || tb.top()) {
    // ⊤ is neutral for ∧ once reached; the other operand's tail survives.
    const Tail& other = ta.top() ? tb : ta;
    if (other.periodic) {
      nu = other.nu;
      tau = other.tau;
      hi = checked_add(M, nu);
    }
  } else if (ta.periodic && tb.periodic && same_rate(ta, tb)) {
    nu = lcm_checked(ta.nu, tb.nu);
    tau = checked_mul(ta.tau, nu / ta.nu);
    hi = checked_add(M, nu);
  } else if (ta.periodic || tb.periodic) {
    bool a_faster = faster(ta, tb);
    const Tail& slow = a_faster ? tb : ta;
    std::int64_t X = a_faster ? overtake(a, ta, b, tb, M) : overtake(b, tb, a, ta, M);
    if (slow.periodic) {
      nu = slow.nu;
      tau = slow.tau;
      hi = checked_add(X, nu);
    } else {
      hi = X + 1;
    }
  }
  return sample(lo, hi, nu, tau, [&](std::int64_t k) { return wedge(a.at(k), b.at(k)); });
}

Series otimes(const Series& a, const Series& b) {
  if (a.is_eps() || b.is_eps()) return Series::eps();
  if (a.is_top() || b.is_top()) return Series::top();

  struct Piece {
    Monomial m;
    bool starred;
  };
  auto pieces = [](const Series& s) {
    std::vector<Piece> out;
    for (const auto& m : s.transient()) out.push_back({m, false});
    for (const auto& m : s.pattern()) out.push_back({m, true});
    return out;
  };
  std::optional<Series> both;
  Series result;
  for (const auto& pa : pieces(a)) {
    for (const auto& pb : pieces(b)) {
      MaxPlus coef = otimes(pa.m.coef, pb.m.coef);
      std::int64_t exp = checked_add(pa.m.exp, pb.m.exp);
      Series term;
      if (coef.is_top() || (!pa.starred && !pb.starred)) {
        term = Series::monomial(coef, exp);
      } else if (pa.starred && pb.starred) {
        if (!both) both = two_star(*a.period(), *b.period());
        term = shift(*both, coef.value(), exp);
      } else {
        term = shift(period_star(pa.starred ? *a.period() : *b.period()), coef.value(), exp);
      }
      result = oplus(result, term);
    }
  }
  return result;
}

Series lres(const Series& a, const Series& b) {
  if (a.is_eps() || b.is_top()) return Series::top();
  if (a.is_top() || b.is_eps()) return Series::eps();
  Series result = Series::top();
  for (const auto& m : a.transient()) {
    result = wedge(result, mono_lres(m, b));
    if (result.is_eps()) return result;
  }
  for (const auto& m : a.pattern()) {
    result = wedge(result, star_lres(*a.period(), mono_lres(m, b)));
    if (result.is_eps()) return result;
  }
  return result;
}

Series odot(const Series& m, const Series& s) {
  require_monomial_like(m, "dual product");
  if (m.is_top() || s.is_top()) return Series::top();
  if (m.is_eps() || s.is_eps()) return Series::eps();
  const Monomial& mm = m.transient().front();
  return shift(s, mm.coef.value(), mm.exp);
}

Series dualres(const Series& m, const Series& s) {
  require_monomial_like(m, "dual residual");
  if (m.is_top()) return Series::eps();
  if (m.is_eps()) return s.is_eps() ? Series::eps() : Series::top();
  if (s.is_eps() || s.is_top()) return s;
  const Monomial& mm = m.transient().front();
  return shift(s, checked_sub(0, mm.coef.value()), checked_sub(0, mm.exp));
}

Series star(const Series& s) {
  if (s.is_eps()) return Series::unit();
  if (s.is_top()) return Series::top();
  std::vector<Series> factors;
  bool unbounded = false;
  for (const auto& m : s.transient()) {
    auto ms = mono_star(m);
    if (!ms) {
      unbounded = true;
      continue;
    }
    if (ms->is_top()) return Series::top();
    factors.push_back(*ms);
  }
  for (const auto& m : s.pattern()) {
    // (m r*)* = e ⊕ m m* r*
    auto ms = mono_star(m);
    if (!ms) {
      unbounded = true;
      continue;
    }
    if (ms->is_top()) return Series::top();
    Series body = otimes(otimes(Series::monomial(m.coef, m.exp), *ms), period_star(*s.period()));
    factors.push_back(oplus(Series::unit(), body));
  }
  if (unbounded) throw DomainError("star of a series with a negative-exponent, non-positive term is unbounded");
  Series result = Series::unit();
  for (const auto& f : factors) result = otimes(result, f);
  return result;
}

Series wedge_star(const Series& s) {
  require_monomial_like(s, "wedge closure");
  if (s.is_eps()) return Series::eps();
  if (s.is_top()) return Series::unit();
  const Monomial& m = s.transient().front();
  return m.coef.value() >= 0 && m.exp <= 0 ? Series::unit() : Series::eps();
}

bool leq(const Series& a, const Series& b) { return oplus(a, b) == b; }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  __extension__ typedef __int128 wide;
  if (a.kind != b.kind) return a.kind <=> b.kind;
  if (a.kind != Slope::Kind::Finite) return std::strong_ordering::equal;
  return static_cast<wide>(a.num) * b.den <=> static_cast<wide>(b.num) * a.den;
}

Slope sigma_inf(const Series& s) {
  if (s.is_eps()) return Slope{Slope::Kind::PlusInf, 0, 1};
  if (s.is_top()) return Slope{Slope::Kind::MinusInf, 0, 1};
  if (s.period()) {
    std::int64_t g = std::gcd(s.period()->nu, s.period()->tau);
    return Slope{Slope::Kind::Finite, s.period()->nu / g, s.period()->tau / g};
  }
  if (s.transient().back().coef.is_top()) return Slope{Slope::Kind::Finite, 0, 1};
  return Slope{Slope::Kind::PlusInf, 0, 1};
}

std::string to_string(const Slope& s) {
  switch (s.kind) {
    case Slope::Kind::MinusInf:
      return "-inf";
    case Slope::Kind::PlusInf:
      return "+inf";
    case Slope::Kind::Finite:
      break;
  }
  if (s.den == 1) return std::to_string(s.num);
  return std::to_string(s.num) + "/" + std::to_string(s.den);
}

}  // namespace dioid
