#include <cctype>

#include "weilbench/errors.hpp"
#include "weilbench/mpoly.hpp"

namespace weilbench {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const FieldPtr& ctx, std::size_t n) : s_(s), ctx_(ctx), n_(n) {}

  MPoly parse() {
    MPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc(ctx_, n_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    MPoly t = term();
    acc = neg ? acc - t : acc + t;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  MPoly factor() {
    MPoly b = atom();
    if (accept('^')) {
      skip_ws();
      std::uint64_t k = number_u64();
      if (k > 4096) error("exponent too large");
      b = b.pow(static_cast<unsigned>(k));
    }
    return b;
  }

  std::uint64_t number_u64() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000'000ULL) error("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    if (pos_ == start) error("expected an integer");
    return v;
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Reduce digit by digit so integers of any length are accepted.
      const std::uint64_t p = ctx_->characteristic();
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % p;
      return MPoly::constant(ctx_, n_, ctx_->from_int(static_cast<std::int64_t>(v)));
    }
    if (c == 'X' || c == 'Y' || c == 'x' || c == 'y') {
      ++pos_;
      const bool is_y = (c == 'Y' || c == 'y');
      if (!is_y && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::uint64_t k = number_u64();
        if (k < 1 || k > n_) error("variable X" + std::to_string(k) + " exceeds arity " + std::to_string(n_));
        return MPoly::variable(ctx_, n_, k - 1);
      }
      if (n_ > 2) error("use X1..Xn when there are more than two variables");
      std::size_t idx = is_y ? 1 : 0;
      if (idx >= n_) error("variable Y exceeds arity " + std::to_string(n_));
      return MPoly::variable(ctx_, n_, idx);
    }
    if (c == 'z') {
      ++pos_;
      std::uint64_t level = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) level = number_u64();
      std::vector<const Field*> chain;
      for (const Field* f = ctx_.get(); f; f = f->base().get()) chain.push_back(f);
      if (level < 1 || level >= chain.size()) error("no tower generator z" + std::to_string(level));
      const Field* at = chain[chain.size() - 1 - level];
      return MPoly::constant(ctx_, n_, Elem{static_cast<std::uint32_t>(at->base_size())});
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const FieldPtr& ctx_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const FieldPtr& ctx, std::size_t nvars) {
  if (nvars == 0) fail(Errc::ArityMismatch, "polynomials need at least one variable");
  return Parser(text, ctx, nvars).parse();
}

}  // namespace weilbench
