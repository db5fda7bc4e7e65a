#include "weilbench/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "weilbench/errors.hpp"

namespace weilbench {

namespace {

std::uint32_t exp_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto sa = exp_sum(a), sb = exp_sum(b);
  if (sa != sb) return sa > sb;
  return a > b;
}

MPoly MPoly::constant(FieldPtr ctx, std::size_t nvars, Elem c) {
  MPoly p(std::move(ctx), nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(FieldPtr ctx, std::size_t nvars, std::size_t i) {
  if (i >= nvars) fail(Errc::ArityMismatch, "variable index out of range");
  MPoly p(ctx, nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, ctx->one());
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_sum(terms_.begin()->first) == 0);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return kDegreeZeroPoly;
  return static_cast<int>(exp_sum(terms_.begin()->first));
}

int MPoly::degree_in(std::size_t var) const {
  if (var >= nvars_) fail(Errc::ArityMismatch, "variable index out of range");
  if (terms_.empty()) return kDegreeZeroPoly;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

Elem MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Elem{0} : it->second;
}

void MPoly::add_term(const Exponents& e, Elem c) {
  if (e.size() != nvars_) fail(Errc::ArityMismatch, "exponent vector length differs from arity");
  if (c.code == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = ctx_->add(it->second, c);
    if (it->second.code == 0) terms_.erase(it);
  }
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) fail(Errc::ZeroPolynomial, "leading term of zero polynomial");
  return terms_.begin()->first;
}

Elem MPoly::leading_coefficient() const {
  if (terms_.empty()) return Elem{0};
  return terms_.begin()->second;
}

void MPoly::check_compatible(const MPoly& o) const {
  require_same(ctx_, o.ctx_);
  if (nvars_ != o.nvars_) fail(Errc::ArityMismatch, "polynomials have different arity");
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_compatible(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_compatible(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, ctx_->neg(c));
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(ctx_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, ctx_->neg(c));
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_compatible(o);
  MPoly r(ctx_, nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ctx_->mul(ca, cb));
    }
  }
  return r;
}

MPoly MPoly::scale(Elem c) const {
  MPoly r(ctx_, nvars_);
  if (c.code == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, ctx_->mul(a, c));
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r = constant(ctx_, nvars_, ctx_->one());
  MPoly b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Elem MPoly::eval(std::span<const Elem> point) const {
  if (point.size() != nvars_) fail(Errc::ArityMismatch, "point has wrong number of coordinates");
  const int d = total_degree();
  if (d == kDegreeZeroPoly) return Elem{0};
  std::vector<std::vector<Elem>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].resize(d + 1);
    powers[i][0] = ctx_->one();
    for (int k = 1; k <= d; ++k) powers[i][k] = ctx_->mul(powers[i][k - 1], point[i]);
  }
  Elem acc{0};
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < nvars_ && t.code; ++i)
      if (e[i]) t = ctx_->mul(t, powers[i][e[i]]);
    acc = ctx_->add(acc, t);
  }
  return acc;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= nvars_) fail(Errc::ArityMismatch, "variable index out of range");
  MPoly r(ctx_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, ctx_->mul(c, ctx_->from_int(e[var] % ctx_->characteristic())));
  }
  return r;
}

MPoly MPoly::coefficient_in(std::size_t var, unsigned k) const {
  if (var >= nvars_) fail(Errc::ArityMismatch, "variable index out of range");
  MPoly r(ctx_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scale(ctx_->inv(leading_coefficient()));
}

MPoly MPoly::embed_into(const FieldPtr& to) const {
  MPoly r(to, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, embed(c, ctx_, to));
  return r;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  if (nvars == 1) return {"X"};
  if (nvars == 2) return {"X", "Y"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto names = default_var_names(nvars_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << "+";
    first = false;
    const bool monomial_is_one = exp_sum(e) == 0;
    bool need_star = false;
    if (c != ctx_->one() || monomial_is_one) {
      os << ctx_->format(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MPoly exact_divide(const MPoly& f, const MPoly& g) {
  require_same(f.ctx(), g.ctx());
  if (f.nvars() != g.nvars()) fail(Errc::ArityMismatch, "polynomials have different arity");
  if (g.is_zero()) fail(Errc::DivisionByZero, "division by the zero polynomial");
  const Field& F = *f.ctx();
  const std::size_t n = f.nvars();
  MPoly q(f.ctx(), n), r = f;
  const Exponents& lg = g.leading_exponents();
  const Elem lc_inv = F.inv(g.leading_coefficient());
  Exponents e(n);
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lg[i]) fail(Errc::NotDivisible, g.to_string() + " does not divide " + f.to_string());
      e[i] = lr[i] - lg[i];
    }
    MPoly t(f.ctx(), n);
    t.add_term(e, F.mul(r.leading_coefficient(), lc_inv));
    q = q + t;
    r = r - t * g;
  }
  return q;
}

MPoly affine_substitute(const MPoly& f, const std::vector<std::vector<Elem>>& A,
                        const std::vector<Elem>& b, std::size_t m) {
  const std::size_t n = f.nvars();
  if (A.size() != n || b.size() != n) fail(Errc::DimensionMismatch, "substitution needs one affine form per variable");
  for (const auto& row : A)
    if (row.size() != m) fail(Errc::DimensionMismatch, "affine form has wrong number of coefficients");
  const FieldPtr& ctx = f.ctx();
  const int d = std::max(f.total_degree(), 0);
  std::vector<std::vector<MPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly lin = MPoly::constant(ctx, m, b[i]);
    for (std::size_t j = 0; j < m; ++j) lin = lin + MPoly::variable(ctx, m, j).scale(A[i][j]);
    powers[i].push_back(MPoly::constant(ctx, m, ctx->one()));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * lin);
  }
  MPoly out(ctx, m);
  for (const auto& [e, c] : f.terms()) {
    MPoly t = MPoly::constant(ctx, m, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) t = t * powers[i][e[i]];
    out = out + t;
  }
  return out;
}

MPoly restrict_to_plane(const MPoly& f, const PlaneParam& L) {
  const std::size_t n = f.nvars();
  if (n < 2 || L.nu.size() != n || L.omega.size() != n - 1 || L.eta.size() != n - 1)
    fail(Errc::DimensionMismatch, "plane parameters do not match the number of variables");
  bool eta_zero = true;
  for (Elem e : L.eta) eta_zero = eta_zero && e.code == 0;
  if (eta_zero) fail(Errc::DegenerateEta, "eta = 0 does not parametrize a plane");
  const Field& F = *f.ctx();
  std::vector<std::vector<Elem>> A(n, std::vector<Elem>(2, F.zero()));
  A[0][0] = F.one();
  for (std::size_t i = 1; i < n; ++i) {
    A[i][0] = L.omega[i - 1];
    A[i][1] = L.eta[i - 1];
  }
  return affine_substitute(f, A, L.nu, 2);
}

namespace {

MPoly bareiss_det(std::vector<std::vector<MPoly>> M, const FieldPtr& ctx, std::size_t nvars) {
  const std::size_t N = M.size();
  MPoly one = MPoly::constant(ctx, nvars, ctx->one());
  if (N == 0) return one;
  bool negate = false;
  MPoly prev = one;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < N && M[i][k].is_zero()) ++i;
      if (i == N) return MPoly(ctx, nvars);
      std::swap(M[i], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j)
        M[i][j] = exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = MPoly(ctx, nvars);
    }
    prev = M[k][k];
  }
  return negate ? -M[N - 1][N - 1] : M[N - 1][N - 1];
}

}  // namespace

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
  require_same(f.ctx(), g.ctx());
  if (f.nvars() != g.nvars()) fail(Errc::ArityMismatch, "polynomials have different arity");
  if (var >= f.nvars()) fail(Errc::ArityMismatch, "variable index out of range");
  const FieldPtr& ctx = f.ctx();
  const std::size_t nv = f.nvars();
  if (f.is_zero() || g.is_zero()) return MPoly(ctx, nv);
  const int m = f.degree_in(var), l = g.degree_in(var);
  if (m == 0 && l == 0) fail(Errc::BothConstantInVar, "both polynomials are constant in the variable");
  const std::size_t N = static_cast<std::size_t>(m + l);
  std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(N, MPoly(ctx, nv)));
  for (int r = 0; r < l; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = f.coefficient_in(var, static_cast<unsigned>(m - i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= l; ++i) M[l + r][r + i] = g.coefficient_in(var, static_cast<unsigned>(l - i));
  return bareiss_det(std::move(M), ctx, nv);
}

MPoly discriminant(const MPoly& f, std::size_t var) { return resultant(f, f.derivative(var), var); }

}  // namespace weilbench
