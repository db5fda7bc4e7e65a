#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weilbench {

// An element is its code: the mixed-radix integer sum c_i * Q^i of its
// coordinates c_i over the immediate base field (of size Q). Codes run over
// 0..q-1, 0 is zero and 1 is one, and a base element keeps its code when
// embedded in an extension.
struct Elem {
  std::uint32_t code = 0;
  constexpr auto operator<=>(const Elem&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable field context. Contexts are interned, so two handles denote the
// same field exactly when the pointers are equal.
class Field {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint64_t size() const { return q_; }
  unsigned degree() const { return t_; }
  unsigned absolute_degree() const { return abs_deg_; }
  bool is_prime() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  std::uint64_t base_size() const { return base_ ? base_->size() : q_; }
  // Monic defining polynomial over the base, low to high; empty for prime fields.
  const std::vector<Elem>& modulus() const { return modulus_; }
  // "p^k" for a field built directly over F_p, towers as "p^k->t".
  std::string spec() const;
  // Height in the tower; 0 for prime fields.
  unsigned level() const { return level_; }
  bool contains_field(const Field& sub) const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem element(std::uint64_t index) const;
  Elem from_int(std::int64_t v) const;
  bool in_base(Elem a) const { return a.code < base_size(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  // Inverse of x -> x^p.
  Elem pth_root(Elem a) const;

  // Coordinates over the immediate base.
  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const Elem> c) const;

  std::string format(Elem a) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  friend FieldPtr make_prime_field(std::uint64_t p);
  friend FieldPtr make_extension(const FieldPtr& base, std::vector<Elem> modulus);

  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint64_t q_ = 0;
  unsigned t_ = 1;
  unsigned abs_deg_ = 1;
  unsigned level_ = 0;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  // log/antilog tables; exp_ has length 2(q-1) so a sum of logs needs no reduction.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> add_table_;
};

FieldPtr make_prime_field(std::uint64_t p);
// Degree-t extension with a seeded search for an irreducible modulus. t = 1
// returns the base itself.
FieldPtr make_extension(const FieldPtr& base, unsigned t, std::uint64_t seed = 0);
FieldPtr make_extension(const FieldPtr& base, std::vector<Elem> modulus);
// Accepts "p" or "p^k".
FieldPtr parse_field_spec(std::string_view text);

Elem embed(Elem a, const FieldPtr& from, const FieldPtr& to);
void require_same(const FieldPtr& a, const FieldPtr& b);

class GFElem {
 public:
  GFElem() = default;
  GFElem(FieldPtr ctx, Elem e) : ctx_(std::move(ctx)), e_(e) {}
  GFElem(FieldPtr ctx, std::int64_t v) : ctx_(ctx), e_(ctx->from_int(v)) {}

  const FieldPtr& ctx() const { return ctx_; }
  Elem raw() const { return e_; }
  bool is_zero() const { return e_.code == 0; }
  std::vector<GFElem> coeffs() const;
  GFElem inv() const { return {ctx_, ctx_->inv(e_)}; }
  GFElem pow(std::uint64_t e) const { return {ctx_, ctx_->pow(e_, e)}; }
  GFElem frobenius() const { return {ctx_, ctx_->frobenius(e_)}; }
  GFElem embed_into(const FieldPtr& to) const { return {to, embed(e_, ctx_, to)}; }

  friend GFElem operator+(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a, const GFElem& b);
  friend GFElem operator*(const GFElem& a, const GFElem& b);
  friend GFElem operator/(const GFElem& a, const GFElem& b);
  GFElem operator-() const { return {ctx_, ctx_->neg(e_)}; }
  friend bool operator==(const GFElem& a, const GFElem& b);
  friend std::ostream& operator<<(std::ostream& os, const GFElem& a);

 private:
  FieldPtr ctx_;
  Elem e_;
};

std::vector<GFElem> enumerate_elements(const FieldPtr& ctx);

}  // namespace weilbench
