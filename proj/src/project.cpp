#include "weilbench/project.hpp"

#include <functional>
#include <limits>
#include <set>

#include "weilbench/errors.hpp"
#include "weilbench/linalg.hpp"
#include "weilbench/rng.hpp"

namespace weilbench {

namespace {

std::vector<Exponents> monomials(std::size_t m, int delta) {
  std::vector<Exponents> out;
  Exponents e(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == m) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = static_cast<std::uint32_t>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, delta);
  return out;
}

std::vector<Elem> monomial_values(const Field& L, const Point& y, const std::vector<Exponents>& mons) {
  std::vector<Elem> out;
  out.reserve(mons.size());
  for (const auto& e : mons) {
    Elem v = L.one();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) v = L.mul(v, L.pow(y[k], e[k]));
    out.push_back(v);
  }
  return out;
}

// Coordinates over the base field F of values living in L (L = F or a direct
// extension of F).
std::vector<std::vector<Elem>> expand(const Field& L, bool same, const std::vector<Elem>& row) {
  if (same) return {row};
  std::vector<std::vector<Elem>> out(L.degree(), std::vector<Elem>(row.size()));
  for (std::size_t c = 0; c < row.size(); ++c) {
    const std::vector<Elem> co = L.coeffs(row[c]);
    for (std::size_t k = 0; k < co.size(); ++k) out[k][c] = co[k];
  }
  return out;
}

bool power_fits(std::uint64_t q, std::uint64_t e, std::uint64_t budget) {
  long double v = 1;
  for (std::uint64_t i = 0; i < e; ++i) v *= static_cast<long double>(q);
  return v <= static_cast<long double>(budget);
}

// Points of V over F_(q^t), t = 1, 2, ..., computed on demand.
class PointCache {
 public:
  PointCache(const PolySystem& V, std::uint64_t budget) : V_(V), budget_(budget) {}

  // nullptr once q^(t n) leaves the budget
  const std::pair<FieldPtr, std::vector<Point>>* level(unsigned t) {
    while (levels_.size() < t) {
      const unsigned u = static_cast<unsigned>(levels_.size()) + 1;
      if (!power_fits(V_.ctx->size(), static_cast<std::uint64_t>(u) * V_.nvars, budget_)) return nullptr;
      FieldPtr L = make_extension(V_.ctx, u);
      Rng unused(0);
      levels_.emplace_back(L, variety_points(V_, L, budget_, std::numeric_limits<std::size_t>::max(), unused, budget_));
    }
    return &levels_[t - 1];
  }

 private:
  const PolySystem& V_;
  std::uint64_t budget_;
  std::vector<std::pair<FieldPtr, std::vector<Point>>> levels_;
};

void compact(const Field& F, Matrix& m) {
  const std::size_t rk = rref(F, m).size();
  m.data.resize(rk * m.cols);
  m.rows = rk;
}

MPoly monic_in_last(const MPoly& h) {
  const std::size_t last = h.nvars() - 1;
  const int d = h.degree_in(last);
  const MPoly lead = h.coefficient_in(last, static_cast<unsigned>(std::max(d, 0)));
  if (d > 0 && lead.is_constant()) return h.scale(h.ctx()->inv(lead.terms().begin()->second));
  return h.normalized();
}

MPoly fit_image_cached(PointCache& cache, const PolySystem& V, const std::vector<std::vector<Elem>>& lambda,
                       const std::vector<Elem>& gamma, int delta) {
  if (delta < 1) fail(Errc::InvalidArgument, "image degree must be positive");
  const FieldPtr& F = V.ctx;
  const std::size_t m = gamma.size();
  Projection P;
  P.lambda = lambda;
  P.gamma = gamma;
  const std::vector<Exponents> mons = monomials(m, delta);
  const std::size_t M = mons.size();
  Matrix acc(0, M);
  int streak = 0;
  std::size_t dim = M;
  auto checkpoint = [&] {
    compact(*F, acc);
    dim = M - acc.rows;
    if (dim == 0) fail(Errc::NoSolution, "no hypersurface of degree <= " + std::to_string(delta) + " contains the image");
    streak = dim == 1 ? streak + 1 : 0;
    return streak >= 2;
  };
  for (unsigned t = 1;; ++t) {
    const auto* lv = cache.level(t);
    if (!lv) break;
    const Field& L = *lv->first;
    std::size_t pending = 0;
    bool done = false;
    for (const Point& x : lv->second) {
      for (auto& row : expand(L, t == 1, monomial_values(L, P.apply(L, x), mons))) acc.append_row(row);
      if (++pending == M) {
        pending = 0;
        if ((done = checkpoint())) break;
      }
    }
    if (!done && pending > 0) done = checkpoint();
    if (done) {
      const std::vector<Elem> c = nullspace(*F, acc).front();
      MPoly h(F, m);
      for (std::size_t k = 0; k < M; ++k) h.add_term(mons[k], c[k]);
      return monic_in_last(h);
    }
  }
  fail(Errc::NotStabilized, "image fit has a " + std::to_string(dim) + "-dimensional solution space within the budget");
}

std::vector<MPoly> fit_sections_cached(PointCache& cache, const PolySystem& V, const Projection& P) {
  const FieldPtr& F = V.ctx;
  const std::size_t m = P.r + 1, n = V.nvars;
  const std::vector<Exponents> mons = monomials(m, P.h.total_degree());
  const std::size_t M = mons.size();
  Matrix aug(0, M + n);  // [monomials at pi(x) | x_i h0(pi(x))]
  for (unsigned t = 1;; ++t) {
    const auto* lv = cache.level(t);
    if (!lv) break;
    const Field& L = *lv->first;
    const MPoly h0 = P.h0.embed_into(lv->first);
    for (const Point& x : lv->second) {
      const Point y = P.apply(L, x);
      std::vector<Elem> row = monomial_values(L, y, mons);
      const Elem d = h0.eval(y);
      for (std::size_t i = 0; i < n; ++i) row.push_back(L.mul(x[i], d));
      for (auto& r : expand(L, t == 1, row)) aug.append_row(r);
    }
    compact(*F, aug);
    Matrix A(0, M);
    for (std::size_t i = 0; i < aug.rows; ++i)
      A.append_row(std::vector<Elem>(aug.data.begin() + static_cast<std::ptrdiff_t>(i * aug.cols),
                                     aug.data.begin() + static_cast<std::ptrdiff_t>(i * aug.cols + M)));
    // only multiples of h may remain free
    if (rank(*F, A) + 1 != M) continue;
    std::vector<MPoly> v;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Elem> b(aug.rows);
      for (std::size_t k = 0; k < aug.rows; ++k) b[k] = aug.at(k, M + i);
      const auto sol = solve(*F, A, b);
      if (!sol) fail(Errc::FitFailed, "no section v_" + std::to_string(i + 1) + " of degree <= deg h");
      MPoly vi(F, m);
      for (std::size_t k = 0; k < M; ++k) vi.add_term(mons[k], (*sol)[k]);
      v.push_back(vi);
    }
    return v;
  }
  fail(Errc::FitFailed, "sections are not determined within the budget");
}

}  // namespace

Point Projection::apply(const Field& L, const Point& x) const {
  Point y(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    Elem s = gamma[k];
    for (std::size_t j = 0; j < x.size(); ++j) s = L.add(s, L.mul(lambda[k][j], x[j]));
    y[k] = s;
  }
  return y;
}

MPoly fit_image(const PolySystem& V, const std::vector<std::vector<Elem>>& lambda, const std::vector<Elem>& gamma,
                int delta, const ProjectOptions& opt) {
  PointCache cache(V, opt.budget);
  return fit_image_cached(cache, V, lambda, gamma, delta);
}

std::vector<MPoly> fit_sections(const PolySystem& V, const Projection& P, const ProjectOptions& opt) {
  PointCache cache(V, opt.budget);
  return fit_sections_cached(cache, V, P);
}

Projection draw_projection(const PolySystem& V, std::size_t r, int delta, std::uint64_t seed, const ProjectOptions& opt) {
  const FieldPtr& F = V.ctx;
  const std::size_t n = V.nvars;
  if (r + 1 > n) fail(Errc::InvalidArgument, "projection target A^(r+1) must not exceed A^n");
  PointCache cache(V, opt.budget);
  Projection P;
  P.r = r;
  if (r + 1 == n) {
    if (V.polys.size() != 1) fail(Errc::InvalidArgument, "a hypersurface needs exactly one defining polynomial");
    P.lambda.assign(n, std::vector<Elem>(n, F->zero()));
    for (std::size_t i = 0; i < n; ++i) P.lambda[i][i] = F->one();
    P.gamma.assign(n, F->zero());
    P.h = monic_in_last(V.polys[0]);
    P.h0 = P.h.derivative(r);
    P.attempts = 1;
    P.v = fit_sections_cached(cache, V, P);
    return P;
  }
  const std::uint64_t q = F->size();
  if (mpz_class(std::to_string(q)) <= 2 * mpz_class(static_cast<unsigned long>(r + 1)) * delta * delta)
    fail(Errc::RegularityViolated, "q = " + std::to_string(q) + " does not exceed 2 (r+1) delta^2");
  Rng rng(mix_seed(seed, 0x70726f6aULL));
  const auto* base = cache.level(1);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    P.attempts = attempt + 1;
    P.lambda.assign(r + 1, std::vector<Elem>(n));
    P.gamma.assign(r + 1, F->zero());
    for (auto& row : P.lambda)
      for (auto& e : row) e = F->element(uniform_below(rng, q));
    for (auto& e : P.gamma) e = F->element(uniform_below(rng, q));
    try {
      P.h = fit_image_cached(cache, V, P.lambda, P.gamma, delta);
    } catch (const Error& e) {
      if (e.code() != Errc::NoSolution && e.code() != Errc::NotStabilized) throw;
      ++P.failures[errc_name(e.code())];
      continue;
    }
    const MPoly lead = P.h.coefficient_in(r, static_cast<unsigned>(delta));
    if (P.h.degree_in(r) != delta || lead != MPoly::constant(F, r + 1, F->one())) {
      ++P.failures["not monic of degree delta"];
      continue;
    }
    P.h0 = P.h.derivative(r);
    bool witness = base == nullptr || base->second.empty();
    for (std::size_t i = 0; !witness && i < base->second.size(); ++i)
      witness = P.h0.eval(P.apply(*F, base->second[i])).code != 0;
    if (P.h0.is_zero() || !witness) {
      ++P.failures["inseparable"];
      continue;
    }
    try {
      P.v = fit_sections_cached(cache, V, P);
    } catch (const Error& e) {
      if (e.code() != Errc::FitFailed) throw;
      ++P.failures[errc_name(e.code())];
      continue;
    }
    return P;
  }
  fail(Errc::RetriesExhausted,
       "no acceptable projection in " + std::to_string(opt.retries) + " draws (seed " + std::to_string(seed) + ")");
}

bool BirationalReport::pass() const {
  return on_W && injective && surjective && V_off == W_off && mpq_class(V_points - V_off) <= ceiling &&
         mpq_class(W_points - W_off) <= ceiling;
}

BirationalReport birational_check(const PolySystem& V, const Projection& P, int delta, const ProjectOptions& opt) {
  const FieldPtr& F = V.ctx;
  const std::uint64_t q = F->size();
  Rng unused(0);
  const auto vp = variety_points(V, F, opt.budget, std::numeric_limits<std::size_t>::max(), unused, opt.budget);
  const auto wp = variety_points(PolySystem({P.h}), F, opt.budget, std::numeric_limits<std::size_t>::max(), unused, opt.budget);
  BirationalReport rep;
  rep.V_points = vp.size();
  rep.W_points = wp.size();
  rep.on_W = rep.injective = rep.surjective = true;
  std::set<Point> image;
  for (const Point& x : vp) {
    const Point y = P.apply(*F, x);
    rep.on_W = rep.on_W && P.h.eval(y).code == 0;
    if (P.h0.eval(y).code == 0) continue;
    ++rep.V_off;
    rep.injective = image.insert(y).second && rep.injective;
  }
  for (const Point& w : wp) {
    if (P.h0.eval(w).code == 0) continue;
    ++rep.W_off;
    rep.surjective = rep.surjective && image.count(w) == 1;
  }
  rep.ceiling = mpq_class(delta * (delta - 1));
  const long e = static_cast<long>(P.r) - 1;
  for (long i = 0; i < e; ++i) rep.ceiling *= static_cast<unsigned long>(q);
  if (e < 0) rep.ceiling /= static_cast<unsigned long>(q);
  if (!rep.on_W || !rep.injective || !rep.surjective || rep.V_off != rep.W_off)
    fail(Errc::BirationalityFailed, "#(V \\ V1) = " + std::to_string(rep.V_off) + ", #(W \\ W1) = " +
                                        std::to_string(rep.W_off) + (rep.on_W ? "" : ", image leaves W") +
                                        (rep.injective ? "" : ", not injective") + (rep.surjective ? "" : ", not surjective"));
  if (mpq_class(rep.V_points - rep.V_off) > rep.ceiling || mpq_class(rep.W_points - rep.W_off) > rep.ceiling)
    fail(Errc::BoundViolation, "discriminant locus exceeds delta (delta - 1) q^(r-1) = " + rep.ceiling.get_str());
  return rep;
}

Point inverse_section(const Projection& P, const Point& y) {
  if (P.v.empty()) fail(Errc::FitFailed, "projection carries no sections");
  if (y.size() != P.r + 1) fail(Errc::DimensionMismatch, "image point has the wrong dimension");
  const Field& F = *P.h.ctx();
  const Elem d = P.h0.eval(y);
  if (d.code == 0) fail(Errc::OnDiscriminant, "h0 vanishes at the point");
  Point x;
  for (const MPoly& vi : P.v) x.push_back(F.div(vi.eval(y), d));
  return x;
}

}  // namespace weilbench
