#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weilbench/gf.hpp"

namespace weilbench {

using Exponents = std::vector<std::uint32_t>;

// Graded lex with X1 > X2 > ...; the map's first entry is the leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegreeZeroPoly = std::numeric_limits<int>::min();

class MPoly {
 public:
  using TermMap = std::map<Exponents, Elem, GrlexGreater>;

  MPoly() = default;
  MPoly(FieldPtr ctx, std::size_t nvars) : ctx_(std::move(ctx)), nvars_(nvars) {}
  static MPoly constant(FieldPtr ctx, std::size_t nvars, Elem c);
  // Variable with 0-based index i.
  static MPoly variable(FieldPtr ctx, std::size_t nvars, std::size_t i);

  const FieldPtr& ctx() const { return ctx_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  Elem coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, Elem c);
  const Exponents& leading_exponents() const;
  Elem leading_coefficient() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scale(Elem c) const;
  MPoly pow(unsigned k) const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.ctx_ == b.ctx_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Elem eval(std::span<const Elem> point) const;
  MPoly derivative(std::size_t var) const;
  // Coefficient of var^k, as a polynomial with the same variables.
  MPoly coefficient_in(std::size_t var, unsigned k) const;
  // Scaled so the leading graded-lex coefficient is 1.
  MPoly normalized() const;
  // Same polynomial over a field that contains this one.
  MPoly embed_into(const FieldPtr& to) const;

  std::string to_string() const;

 private:
  void check_compatible(const MPoly& o) const;

  FieldPtr ctx_;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

std::vector<std::string> default_var_names(std::size_t nvars);

// Exact quotient f / g; throws NotDivisible when g does not divide f.
MPoly exact_divide(const MPoly& f, const MPoly& g);

// Substitutes X_i := sum_j A[i][j] T_j + b[i] (A has f.nvars() rows and m
// columns); the result is a polynomial in T_1..T_m.
MPoly affine_substitute(const MPoly& f, const std::vector<std::vector<Elem>>& A,
                        const std::vector<Elem>& b, std::size_t m);

// Plane parameters (nu, omega, eta) in F^n x F^(n-1) x F^(n-1); the plane is
// X1 = X + nu1 and Xi = omega_i X + eta_i Y + nu_i for i >= 2.
struct PlaneParam {
  std::vector<Elem> nu, omega, eta;
};

MPoly restrict_to_plane(const MPoly& f, const PlaneParam& L);

// Sylvester resultant in var with the rows of f first.
MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);
MPoly discriminant(const MPoly& f, std::size_t var);

// Grammar: integers, X1..Xn (X and Y when n <= 2), z1.. for tower generators,
// + - * ^ and parentheses.
MPoly parse_poly(std::string_view text, const FieldPtr& ctx, std::size_t nvars);

}  // namespace weilbench
