#pragma once

#include <vector>

#include "weilbench/mpoly.hpp"
#include "weilbench/upoly.hpp"

namespace weilbench {

// Dense view of a bivariate polynomial: c[i] is the coefficient of X^i in F[Y].
struct BiPoly {
  std::vector<UPoly> c;
  int deg_x() const { return static_cast<int>(c.size()) - 1; }
};

BiPoly to_bipoly(const MPoly& f);
MPoly from_bipoly(const FieldPtr& ctx, const BiPoly& b);
// f(X, 0) as a univariate polynomial in X.
UPoly at_y_zero(const MPoly& f);

// Monic-normalized gcd in F[X, Y]; gcd(0, 0) = 0.
MPoly bivariate_gcd(const MPoly& a, const MPoly& b);
// Nonconstant f is squarefree iff gcd(f, df/dX, df/dY) is constant.
bool is_squarefree_bivariate(const MPoly& f);
// Product of the distinct irreducible factors, normalized.
MPoly radical(const MPoly& f);
// g with g^p = f; every exponent of f must be divisible by p.
MPoly pth_root(const MPoly& f);
// Same codes reinterpreted over a subfield K of f's field.
MPoly descend(const MPoly& f, const FieldPtr& K);
// Coefficients mapped by x -> x^e.
MPoly map_coefficients_pow(const MPoly& f, std::uint64_t e);

}  // namespace weilbench
