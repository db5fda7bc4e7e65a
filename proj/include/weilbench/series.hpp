#pragma once

#include <vector>

#include "weilbench/bivariate.hpp"
#include "weilbench/gf.hpp"

namespace weilbench {

// Power series in Y truncated modulo Y^(order+1).
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(FieldPtr ctx, unsigned order);
  TruncSeries(FieldPtr ctx, std::vector<Elem> coeffs, unsigned order);

  const FieldPtr& ctx() const { return ctx_; }
  unsigned order() const { return order_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
  TruncSeries truncated(unsigned order) const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scale(Elem c) const;
  // Newton iteration g <- g(2 - a g); needs a unit constant term.
  TruncSeries reciprocal() const;
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.ctx_ == b.ctx_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  FieldPtr ctx_;
  unsigned order_ = 0;
  std::vector<Elem> c_;  // always order_ + 1 entries
};

// f(s(Y), Y) truncated to the order of s; f's coefficients must live in a
// subfield of s's field.
TruncSeries compose(const BiPoly& f, const TruncSeries& s);

// Root alpha of f(X, Y) = 0 in Ki[[Y]] with alpha(0) = zeta, correct modulo
// Y^(order+1). Needs f(zeta, 0) = 0 and df/dX(zeta, 0) != 0.
TruncSeries newton_lift(const MPoly& f, const FieldPtr& Ki, Elem zeta, unsigned order);

}  // namespace weilbench
