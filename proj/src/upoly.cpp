#include "weilbench/upoly.hpp"

#include <algorithm>

#include "weilbench/errors.hpp"
#include "weilbench/rng.hpp"

namespace weilbench::up {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

UPoly x_minus(const Field& F, const UPoly& h) { return sub(F, h, x_power(F, 1)); }

void edf(const Field& F, const UPoly& g, unsigned d, Rng& rng, std::vector<UPoly>& out) {
  const int n = deg(g);
  if (n <= static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const std::uint64_t Q = F.size();
  for (;;) {
    UPoly r(n);
    for (auto& c : r) c = Elem{static_cast<std::uint32_t>(uniform_below(rng, Q))};
    trim(r);
    if (deg(r) < 1) continue;
    UPoly w;
    if (F.characteristic() == 2) {
      // Absolute trace of r in F[X]/(g): sum of r^(2^i) for i < d * log2(Q).
      const unsigned steps = d * F.absolute_degree();
      UPoly s = r;
      w = r;
      for (unsigned i = 1; i < steps; ++i) {
        s = mulmod(F, s, s, g);
        w = add(F, w, s);
      }
    } else {
      UPoly s = r, acc = r;
      for (unsigned i = 1; i < d; ++i) {
        s = powmod(F, s, Q, g);
        acc = mulmod(F, acc, s, g);
      }
      w = sub(F, powmod(F, acc, (Q - 1) / 2, g), UPoly{F.one()});
    }
    UPoly h = gcd(F, g, w);
    if (deg(h) > 0 && deg(h) < n) {
      edf(F, h, d, rng, out);
      edf(F, quo(F, g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

void trim(UPoly& a) {
  while (!a.empty() && a.back().code == 0) a.pop_back();
}

UPoly from_codes(std::initializer_list<std::uint32_t> codes) {
  UPoly a;
  for (auto c : codes) a.push_back(Elem{c});
  trim(a);
  return a;
}

UPoly x_power(const Field& F, unsigned k) {
  UPoly a(k + 1, F.zero());
  a[k] = F.one();
  return a;
}

UPoly add(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j].code) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

UPoly scale(const Field& F, const UPoly& a, Elem c) {
  if (c.code == 0) return {};
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

void divrem(const Field& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) fail(Errc::DivisionByZero, "univariate division by zero polynomial");
  r = a;
  trim(r);
  const int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, F.zero());
  const Elem lead_inv = F.inv(b.back());
  for (int k = deg(r); k >= db; --k) {
    Elem c = r[k];
    if (c.code == 0) continue;
    c = F.mul(c, lead_inv);
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, b[i]));
  }
  trim(r);
  trim(q);
}

UPoly rem(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divrem(F, a, b, q, r);
  return r;
}

UPoly quo(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divrem(F, a, b, q, r);
  return q;
}

UPoly monic(const Field& F, const UPoly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

UPoly gcd(const Field& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly derivative(const Field& F, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i % F.characteristic())));
  trim(r);
  return r;
}

Elem eval(const Field& F, const UPoly& a, Elem x) {
  Elem r = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

UPoly mulmod(const Field& F, const UPoly& a, const UPoly& b, const UPoly& m) {
  return rem(F, mul(F, a, b), m);
}

UPoly powmod(const Field& F, const UPoly& a, std::uint64_t e, const UPoly& m) {
  UPoly r = rem(F, UPoly{F.one()}, m);
  UPoly b = rem(F, a, m);
  while (e) {
    if (e & 1) r = mulmod(F, r, b, m);
    e >>= 1;
    if (e) b = mulmod(F, b, b, m);
  }
  return r;
}

UPoly frobenius_power_x(const Field& F, unsigned k, const UPoly& m) {
  UPoly h = rem(F, x_power(F, 1), m);
  for (unsigned i = 0; i < k; ++i) h = powmod(F, h, F.size(), m);
  return h;
}

bool is_irreducible(const Field& F, const UPoly& g0) {
  UPoly g = g0;
  trim(g);
  const int n = deg(g);
  if (n < 1) return false;
  if (n == 1) return true;
  g = monic(F, g);
  UPoly xq = frobenius_power_x(F, static_cast<unsigned>(n), g);
  if (!x_minus(F, xq).empty()) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(n))) {
    UPoly h = frobenius_power_x(F, static_cast<unsigned>(n) / r, g);
    if (deg(gcd(F, g, x_minus(F, h))) > 0) return false;
  }
  return true;
}

bool is_squarefree(const Field& F, const UPoly& a) {
  if (deg(a) < 1) return true;
  return deg(gcd(F, a, derivative(F, a))) == 0;
}

std::vector<UPoly> factor_squarefree(const Field& F, const UPoly& a0) {
  UPoly a = monic(F, a0);
  std::vector<UPoly> out;
  if (deg(a) < 1) return out;
  Rng rng(mix_seed(F.size(), static_cast<std::uint64_t>(deg(a))));
  UPoly h = rem(F, x_power(F, 1), a);
  for (unsigned d = 1; deg(a) >= static_cast<int>(2 * d); ++d) {
    h = powmod(F, h, F.size(), a);
    UPoly g = gcd(F, a, x_minus(F, h));
    if (deg(g) > 0) {
      edf(F, g, d, rng, out);
      a = quo(F, a, g);
      h = rem(F, h, a);
    }
  }
  if (deg(a) > 0) out.push_back(a);
  std::sort(out.begin(), out.end(), [](const UPoly& x, const UPoly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::vector<Elem> roots(const Field& F, const UPoly& a0) {
  UPoly a = monic(F, a0);
  if (a.empty()) fail(Errc::InvalidArgument, "roots of the zero polynomial");
  std::vector<Elem> out;
  if (deg(a) < 1) return out;
  UPoly g = gcd(F, a, x_minus(F, powmod(F, x_power(F, 1), F.size(), a)));
  if (deg(g) < 1) return out;
  Rng rng(mix_seed(F.size(), 7 + static_cast<std::uint64_t>(deg(g))));
  std::vector<UPoly> lin;
  edf(F, g, 1, rng, lin);
  for (const auto& l : lin) out.push_back(F.neg(F.div(l[0], l[1])));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_distinct_roots(const Field& F, const UPoly& a0) {
  UPoly a = a0;
  trim(a);
  if (a.empty()) return F.size();
  if (deg(a) < 1) return 0;
  a = monic(F, a);
  UPoly g = gcd(F, a, x_minus(F, powmod(F, x_power(F, 1), F.size(), a)));
  return static_cast<std::uint64_t>(deg(g));
}

}  // namespace weilbench::up
