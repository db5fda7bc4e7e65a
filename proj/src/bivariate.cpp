#include "weilbench/bivariate.hpp"

#include "weilbench/errors.hpp"

namespace weilbench {

namespace {

void require_bivariate(const MPoly& f) {
  if (f.nvars() != 2) fail(Errc::ArityMismatch, "expected a bivariate polynomial");
}

void trim_bi(BiPoly& b) {
  while (!b.c.empty() && b.c.back().empty()) b.c.pop_back();
}

UPoly content(const Field& F, const BiPoly& b) {
  UPoly g;
  for (const auto& c : b.c) {
    g = up::gcd(F, g, c);
    if (up::deg(g) == 0) break;
  }
  return g;
}

BiPoly divide_content(const Field& F, const BiPoly& b, const UPoly& c) {
  BiPoly r = b;
  for (auto& x : r.c)
    if (!x.empty()) x = up::quo(F, x, c);
  return r;
}

// Pseudo-remainder of a by b in F[Y][X].
BiPoly prem(const Field& F, BiPoly a, const BiPoly& b) {
  const int db = b.deg_x();
  const UPoly& lb = b.c.back();
  while (a.deg_x() >= db) {
    const int da = a.deg_x();
    const UPoly la = a.c.back();
    for (auto& x : a.c) x = up::mul(F, x, lb);
    for (int i = 0; i <= db; ++i) a.c[da - db + i] = up::sub(F, a.c[da - db + i], up::mul(F, la, b.c[i]));
    trim_bi(a);
  }
  return a;
}

}  // namespace

BiPoly to_bipoly(const MPoly& f) {
  require_bivariate(f);
  BiPoly b;
  if (f.is_zero()) return b;
  b.c.resize(static_cast<std::size_t>(f.degree_in(0)) + 1);
  for (const auto& [e, c] : f.terms()) {
    UPoly& u = b.c[e[0]];
    if (u.size() <= e[1]) u.resize(e[1] + 1, Elem{0});
    u[e[1]] = c;
  }
  return b;
}

MPoly from_bipoly(const FieldPtr& ctx, const BiPoly& b) {
  MPoly f(ctx, 2);
  for (std::size_t i = 0; i < b.c.size(); ++i)
    for (std::size_t j = 0; j < b.c[i].size(); ++j) f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, b.c[i][j]);
  return f;
}

UPoly at_y_zero(const MPoly& f) {
  require_bivariate(f);
  UPoly u;
  for (const auto& [e, c] : f.terms()) {
    if (e[1] != 0) continue;
    if (u.size() <= e[0]) u.resize(e[0] + 1, Elem{0});
    u[e[0]] = c;
  }
  up::trim(u);
  return u;
}

MPoly bivariate_gcd(const MPoly& a, const MPoly& b) {
  require_bivariate(a);
  require_bivariate(b);
  require_same(a.ctx(), b.ctx());
  const FieldPtr& ctx = a.ctx();
  const Field& F = *ctx;
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  BiPoly A = to_bipoly(a), B = to_bipoly(b);
  UPoly ca = content(F, A), cb = content(F, B);
  UPoly c = up::gcd(F, ca, cb);
  A = divide_content(F, A, ca);
  B = divide_content(F, B, cb);
  if (A.deg_x() < B.deg_x()) std::swap(A, B);
  while (B.deg_x() > 0) {
    BiPoly R = prem(F, A, B);
    A = std::move(B);
    if (R.c.empty()) {
      B.c.clear();
      break;
    }
    B = divide_content(F, R, content(F, R));
  }
  BiPoly G;
  if (B.c.empty()) G = A;  // B divided A exactly: A is the primitive gcd
  else G.c = {UPoly{F.one()}};  // a primitive polynomial of X-degree 0 is a unit
  for (auto& x : G.c) x = up::mul(F, x, c);
  return from_bipoly(ctx, G).normalized();
}

bool is_squarefree_bivariate(const MPoly& f) {
  require_bivariate(f);
  if (f.is_constant()) return true;
  MPoly g = bivariate_gcd(bivariate_gcd(f, f.derivative(0)), f.derivative(1));
  return g.total_degree() == 0;
}

MPoly pth_root(const MPoly& f) {
  const Field& F = *f.ctx();
  const std::uint32_t p = F.characteristic();
  MPoly r(f.ctx(), f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponents g = e;
    for (auto& x : g) {
      if (x % p) fail(Errc::InvalidArgument, "polynomial is not a p-th power");
      x /= p;
    }
    r.add_term(g, F.pth_root(c));
  }
  return r;
}

MPoly radical(const MPoly& f) {
  require_bivariate(f);
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "radical of the zero polynomial");
  if (f.is_constant()) return MPoly::constant(f.ctx(), 2, f.ctx()->one());
  MPoly fx = f.derivative(0), fy = f.derivative(1);
  if (fx.is_zero() && fy.is_zero()) return radical(pth_root(f));
  MPoly g = bivariate_gcd(bivariate_gcd(f, fx), fy);
  if (g.total_degree() == 0) return f.normalized();
  MPoly r1 = exact_divide(f, g);
  MPoly rg = radical(g);
  MPoly common = bivariate_gcd(r1, rg);
  return exact_divide(r1 * rg, common).normalized();
}

MPoly descend(const MPoly& f, const FieldPtr& K) {
  if (!f.ctx()->contains_field(*K)) fail(Errc::NotASubfield, "descent target is not a subfield");
  MPoly r(K, f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (c.code >= K->size()) fail(Errc::NotASubfield, "coefficient outside the target subfield");
    r.add_term(e, c);
  }
  return r;
}

MPoly map_coefficients_pow(const MPoly& f, std::uint64_t e) {
  MPoly r(f.ctx(), f.nvars());
  for (const auto& [x, c] : f.terms()) r.add_term(x, f.ctx()->pow(c, e));
  return r;
}

}  // namespace weilbench
