#include "weilbench/series.hpp"

#include <algorithm>

#include "weilbench/errors.hpp"

namespace weilbench {

TruncSeries::TruncSeries(FieldPtr ctx, unsigned order)
    : ctx_(std::move(ctx)), order_(order), c_(order + 1, Elem{0}) {}

TruncSeries::TruncSeries(FieldPtr ctx, std::vector<Elem> coeffs, unsigned order)
    : ctx_(std::move(ctx)), order_(order), c_(std::move(coeffs)) {
  c_.resize(order + 1, Elem{0});
}

TruncSeries TruncSeries::truncated(unsigned order) const { return TruncSeries(ctx_, c_, order); }

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same(ctx_, o.ctx_);
  TruncSeries r(ctx_, std::min(order_, o.order_));
  for (unsigned i = 0; i <= r.order_; ++i) r.c_[i] = ctx_->add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  require_same(ctx_, o.ctx_);
  TruncSeries r(ctx_, std::min(order_, o.order_));
  for (unsigned i = 0; i <= r.order_; ++i) r.c_[i] = ctx_->sub(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same(ctx_, o.ctx_);
  const Field& F = *ctx_;
  TruncSeries r(ctx_, std::min(order_, o.order_));
  for (unsigned i = 0; i <= r.order_; ++i) {
    if (c_[i].code == 0) continue;
    for (unsigned j = 0; i + j <= r.order_; ++j)
      if (o.c_[j].code) r.c_[i + j] = F.add(r.c_[i + j], F.mul(c_[i], o.c_[j]));
  }
  return r;
}

TruncSeries TruncSeries::scale(Elem c) const {
  TruncSeries r(ctx_, order_);
  for (unsigned i = 0; i <= order_; ++i) r.c_[i] = ctx_->mul(c_[i], c);
  return r;
}

TruncSeries TruncSeries::reciprocal() const {
  if (c_[0].code == 0) fail(Errc::NonUnitConstantTerm, "series with zero constant term has no inverse");
  const Field& F = *ctx_;
  TruncSeries g(ctx_, {F.inv(c_[0])}, 0);
  unsigned prec = 0;
  while (prec < order_) {
    prec = std::min(order_, 2 * prec + 1);
    TruncSeries a = truncated(prec), gp = g.truncated(prec);
    TruncSeries two(ctx_, {F.from_int(2)}, prec);
    g = gp * (two - a * gp);
  }
  return g.truncated(order_);
}

TruncSeries compose(const BiPoly& f, const TruncSeries& s) {
  const FieldPtr& ctx = s.ctx();
  const unsigned ord = s.order();
  auto coeff_series = [&](const UPoly& u) {
    std::vector<Elem> c(u.begin(), u.begin() + std::min<std::size_t>(u.size(), ord + 1));
    return TruncSeries(ctx, std::move(c), ord);
  };
  if (f.c.empty()) return TruncSeries(ctx, ord);
  TruncSeries r = coeff_series(f.c.back());
  for (int i = f.deg_x() - 1; i >= 0; --i) r = r * s + coeff_series(f.c[i]);
  return r;
}

TruncSeries newton_lift(const MPoly& f, const FieldPtr& Ki, Elem zeta, unsigned order) {
  if (f.nvars() != 2) fail(Errc::ArityMismatch, "lifting needs a bivariate polynomial");
  if (!Ki->contains_field(*f.ctx())) fail(Errc::NotASubfield, "root field does not contain the base field");
  const Field& F = *Ki;
  BiPoly fb = to_bipoly(f), fxb = to_bipoly(f.derivative(0));
  TruncSeries alpha(Ki, {zeta}, 0);
  TruncSeries dz = compose(fxb, alpha);
  if (compose(fb, alpha)[0].code != 0) fail(Errc::BadInitialPoint, "f(zeta, 0) != 0");
  if (dz[0].code == 0) fail(Errc::BadInitialPoint, "df/dX(zeta, 0) = 0");
  TruncSeries beta(Ki, {F.inv(dz[0])}, 0);
  // Each step doubles the precision: after step j both series are exact mod Y^(2^(j+1)).
  unsigned prec = 1;
  while (prec < order + 1) {
    prec *= 2;
    const unsigned o = prec - 1;
    TruncSeries a = alpha.truncated(o), b = beta.truncated(o);
    alpha = a - b * compose(fb, a);
    beta = b.scale(F.from_int(2)) - compose(fxb, alpha) * b * b;
  }
  return alpha.truncated(order);
}

}  // namespace weilbench
