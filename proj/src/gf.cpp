#include "weilbench/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "weilbench/errors.hpp"
#include "weilbench/rng.hpp"
#include "weilbench/upoly.hpp"

namespace weilbench {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr std::uint64_t kAddTableLimit = 256;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (p == 2) return a ^ b;
  std::uint64_t r = 0, m = 1;
  while (a | b) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * m;
    m *= p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t digit_neg(std::uint32_t a, std::uint32_t p) {
  if (p == 2) return a;
  std::uint64_t r = 0, m = 1;
  while (a) {
    std::uint32_t d = a % p;
    if (d) r += (p - d) * m;
    m *= p;
    a /= p;
  }
  return static_cast<std::uint32_t>(r);
}

struct Registry {
  std::mutex mu;
  std::map<std::uint64_t, FieldPtr> primes;
  std::map<std::tuple<const Field*, unsigned, std::uint64_t>, FieldPtr> seeded;
  std::map<std::pair<const Field*, std::vector<std::uint32_t>>, FieldPtr> explicit_mod;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::string Field::spec() const {
  if (!base_) return std::to_string(p_);
  if (base_->is_prime()) return std::to_string(p_) + "^" + std::to_string(t_);
  return base_->spec() + "->" + std::to_string(t_);
}

bool Field::contains_field(const Field& sub) const {
  for (const Field* f = this; f; f = f->base_.get())
    if (f == &sub) return true;
  return false;
}

Elem Field::element(std::uint64_t index) const {
  if (index >= q_) fail(Errc::InvalidArgument, "element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Elem Field::add(Elem a, Elem b) const {
  if (!base_) {
    std::uint32_t s = a.code + b.code;
    if (s >= p_ || s < a.code) s -= p_;
    return {s};
  }
  if (!add_table_.empty()) return {add_table_[a.code * q_ + b.code]};
  return {digit_add(a.code, b.code, p_)};
}

Elem Field::neg(Elem a) const {
  if (!base_) return {a.code ? p_ - a.code : 0};
  return {digit_neg(a.code, p_)};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a.code == 0 || b.code == 0) return {0};
  if (!base_)
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p_)};
  if (!exp_.empty()) return {exp_[log_[a.code] + log_[b.code]]};
  return mul_slow(a, b);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  const Field& B = *base_;
  std::vector<Elem> x = coeffs(a), y = coeffs(b);
  std::vector<Elem> prod(2 * t_ - 1, Elem{0});
  for (unsigned i = 0; i < t_; ++i) {
    if (x[i].code == 0) continue;
    for (unsigned j = 0; j < t_; ++j)
      if (y[j].code) prod[i + j] = B.add(prod[i + j], B.mul(x[i], y[j]));
  }
  for (unsigned k = 2 * t_ - 2; k >= t_; --k) {
    Elem c = prod[k];
    if (c.code == 0) continue;
    for (unsigned i = 0; i < t_; ++i)
      prod[k - t_ + i] = B.sub(prod[k - t_ + i], B.mul(c, modulus_[i]));
  }
  prod.resize(t_);
  return from_coeffs(prod);
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) fail(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  if (!base_) {
    std::int64_t r0 = p_, r1 = a.code, s0 = 0, s1 = 1;
    while (r1) {
      std::int64_t qt = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
    }
    return from_int(s0);
  }
  if (!exp_.empty()) return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  if (e == 0) return r;
  if (a.code == 0) return zero();
  if (!exp_.empty()) {
    std::uint64_t l = (static_cast<unsigned __int128>(log_[a.code]) * e) % (q_ - 1);
    return {exp_[l]};
  }
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Elem Field::pth_root(Elem a) const { return pow(a, q_ / p_); }

std::vector<Elem> Field::coeffs(Elem a) const {
  if (!base_) return {a};
  const std::uint64_t Q = base_->size();
  std::vector<Elem> c(t_);
  std::uint64_t v = a.code;
  for (unsigned i = 0; i < t_; ++i) {
    c[i] = {static_cast<std::uint32_t>(v % Q)};
    v /= Q;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const Elem> c) const {
  if (!base_) {
    if (c.size() != 1) fail(Errc::DimensionMismatch, "prime field takes one coordinate");
    return c[0];
  }
  if (c.size() != t_) fail(Errc::DimensionMismatch, "coordinate count differs from degree");
  const std::uint64_t Q = base_->size();
  std::uint64_t v = 0;
  for (unsigned i = t_; i-- > 0;) {
    if (c[i].code >= Q) fail(Errc::InvalidArgument, "coordinate outside base field");
    v = v * Q + c[i].code;
  }
  return {static_cast<std::uint32_t>(v)};
}

std::string Field::format(Elem a) const {
  if (!base_ || in_base(a)) return base_ ? base_->format(a) : std::to_string(a.code);
  std::vector<Elem> c = coeffs(a);
  std::string gen = "z" + std::to_string(level_);
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (unsigned i = 0; i < t_; ++i) {
    if (c[i].code == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = base_->format(c[i]);
    if (i == 0) {
      os << cs;
    } else {
      if (c[i].code != 1) os << cs << "*";
      os << gen;
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  return os.str();
}

void Field::build_tables() {
  if (!base_) return;
  if (q_ <= kAddTableLimit) {
    add_table_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = digit_add(a, b, p_);
  }
  if (q_ > kTableLimit) return;
  const auto primes = prime_factors(q_ - 1);
  std::uint32_t g = 1;
  for (std::uint32_t c = (q_ == 2 ? 1 : 2); c < q_; ++c) {
    bool ok = true;
    for (auto r : primes) {
      if (pow(Elem{c}, (q_ - 1) / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = c;
      break;
    }
  }
  std::vector<std::uint32_t> e(2 * (q_ - 1)), l(q_, 0);
  Elem x = one();
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    e[i] = x.code;
    l[x.code] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, Elem{g});
  }
  for (std::uint64_t i = q_ - 1; i < 2 * (q_ - 1); ++i) e[i] = e[i - (q_ - 1)];
  log_ = std::move(l);
  exp_ = std::move(e);
}

FieldPtr make_prime_field(std::uint64_t p) {
  if (!is_prime_u64(p) || p > UINT32_MAX)
    fail(Errc::NotPrime, std::to_string(p) + " is not a supported prime");
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.primes.find(p);
  if (it != reg.primes.end()) return it->second;
  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = static_cast<std::uint32_t>(p);
  F->q_ = p;
  reg.primes[p] = F;
  return F;
}

FieldPtr make_extension(const FieldPtr& base, std::vector<Elem> modulus) {
  if (!base) fail(Errc::InvalidArgument, "null base field");
  up::trim(modulus);
  if (modulus.size() < 2 || modulus.back() != base->one())
    fail(Errc::InvalidArgument, "modulus must be monic of degree >= 1");
  const unsigned t = static_cast<unsigned>(modulus.size() - 1);
  if (t == 1) return base;
  long double qd = 1;
  for (unsigned i = 0; i < t; ++i) qd *= static_cast<long double>(base->size());
  if (qd > static_cast<long double>(UINT32_MAX))
    fail(Errc::InvalidArgument, "extension too large for 32-bit codes");
  std::vector<std::uint32_t> key;
  for (Elem c : modulus) key.push_back(c.code);
  auto& reg = registry();
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.explicit_mod.find({base.get(), key});
    if (it != reg.explicit_mod.end()) return it->second;
  }
  if (!up::is_irreducible(*base, modulus))
    fail(Errc::InvalidArgument, "modulus is reducible over F_" + std::to_string(base->size()));
  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = base->characteristic();
  F->q_ = 1;
  for (unsigned i = 0; i < t; ++i) F->q_ *= base->size();
  F->t_ = t;
  F->abs_deg_ = base->absolute_degree() * t;
  F->level_ = base->level() + 1;
  F->base_ = base;
  F->modulus_ = std::move(modulus);
  F->build_tables();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto [it, inserted] = reg.explicit_mod.emplace(std::make_pair(base.get(), key), F);
  return it->second;
}

FieldPtr make_extension(const FieldPtr& base, unsigned t, std::uint64_t seed) {
  if (!base) fail(Errc::InvalidArgument, "null base field");
  if (t == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
  if (t == 1) return base;
  auto& reg = registry();
  auto key = std::make_tuple(base.get(), t, seed);
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.seeded.find(key);
    if (it != reg.seeded.end()) return it->second;
  }
  Rng rng(mix_seed(seed, base->size() * 131 + t));
  const std::uint64_t Q = base->size();
  UPoly g(t + 1);
  g[t] = base->one();
  for (;;) {
    for (unsigned i = 0; i < t; ++i) g[i] = Elem{static_cast<std::uint32_t>(uniform_below(rng, Q))};
    if (g[0].code == 0) continue;
    if (up::is_irreducible(*base, g)) break;
  }
  FieldPtr F = make_extension(base, g);
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.seeded.emplace(key, F);
  return F;
}

FieldPtr parse_field_spec(std::string_view text) {
  auto parse_uint = [&](std::string_view s) -> std::uint64_t {
    if (s.empty() || s.size() > 18) fail(Errc::ParseError, "bad field spec '" + std::string(text) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail(Errc::ParseError, "bad field spec '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  auto caret = text.find('^');
  std::uint64_t p = parse_uint(text.substr(0, caret));
  std::uint64_t k = caret == std::string_view::npos ? 1 : parse_uint(text.substr(caret + 1));
  if (k == 0 || k > 32) fail(Errc::ParseError, "bad extension degree in '" + std::string(text) + "'");
  return make_extension(make_prime_field(p), static_cast<unsigned>(k));
}

Elem embed(Elem a, const FieldPtr& from, const FieldPtr& to) {
  if (from == to) return a;
  if (!to->contains_field(*from))
    fail(Errc::NotASubfield, "F_" + from->spec() + " is not a subfield of F_" + to->spec());
  return a;
}

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (a != b) fail(Errc::CtxMismatch, "operands live in different fields");
}

std::vector<GFElem> GFElem::coeffs() const {
  std::vector<GFElem> out;
  FieldPtr b = ctx_->is_prime() ? ctx_ : ctx_->base();
  for (Elem c : ctx_->coeffs(e_)) out.emplace_back(b, c);
  return out;
}

GFElem operator+(const GFElem& a, const GFElem& b) {
  require_same(a.ctx_, b.ctx_);
  return {a.ctx_, a.ctx_->add(a.e_, b.e_)};
}
GFElem operator-(const GFElem& a, const GFElem& b) {
  require_same(a.ctx_, b.ctx_);
  return {a.ctx_, a.ctx_->sub(a.e_, b.e_)};
}
GFElem operator*(const GFElem& a, const GFElem& b) {
  require_same(a.ctx_, b.ctx_);
  return {a.ctx_, a.ctx_->mul(a.e_, b.e_)};
}
GFElem operator/(const GFElem& a, const GFElem& b) {
  require_same(a.ctx_, b.ctx_);
  return {a.ctx_, a.ctx_->div(a.e_, b.e_)};
}
bool operator==(const GFElem& a, const GFElem& b) { return a.ctx_ == b.ctx_ && a.e_ == b.e_; }
std::ostream& operator<<(std::ostream& os, const GFElem& a) { return os << a.ctx_->format(a.e_); }

std::vector<GFElem> enumerate_elements(const FieldPtr& ctx) {
  std::vector<GFElem> out;
  out.reserve(ctx->size());
  for (std::uint64_t i = 0; i < ctx->size(); ++i) out.emplace_back(ctx, ctx->element(i));
  return out;
}

}  // namespace weilbench
