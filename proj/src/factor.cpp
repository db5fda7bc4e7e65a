#include "weilbench/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "weilbench/bivariate.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/linalg.hpp"
#include "weilbench/rng.hpp"
#include "weilbench/upoly.hpp"

namespace weilbench {

namespace {

void require_bivariate(const MPoly& f) {
  if (f.nvars() != 2) fail(Errc::ArityMismatch, "expected a bivariate polynomial");
}

struct RootClass {
  unsigned t = 1;  // degree of the irreducible factor of f(X, 0)
  FieldPtr Ki;
  Elem zeta;
};

struct Prepared {
  MPoly f;  // monic in X
  FieldPtr K;
  int delta = 0;
  std::vector<RootClass> classes;
};

Prepared prepare(const MPoly& f_in) {
  Prepared P;
  P.delta = f_in.total_degree();
  P.K = f_in.ctx();
  const Elem lc = f_in.coefficient({static_cast<std::uint32_t>(P.delta), 0});
  P.f = f_in.scale(P.K->inv(lc));
  for (const UPoly& g : up::factor_squarefree(*P.K, at_y_zero(P.f))) {
    RootClass c;
    c.t = static_cast<unsigned>(up::deg(g));
    c.Ki = make_extension(P.K, c.t, 0);
    c.zeta = up::roots(*c.Ki, g).front();
    P.classes.push_back(c);
  }
  return P;
}

// Unknowns u_{mu,eta} for 0 <= mu <= m-1, 0 <= eta <= m-mu, in that order.
std::vector<std::pair<unsigned, unsigned>> unknown_layout(unsigned m) {
  std::vector<std::pair<unsigned, unsigned>> u;
  for (unsigned mu = 0; mu < m; ++mu)
    for (unsigned eta = 0; eta <= m - mu; ++eta) u.emplace_back(mu, eta);
  return u;
}

// Solves sum_{mu,eta} a^(mu)_{k-eta} u_{mu,eta} = -a^(m)_k for k = 0..2 m delta,
// where a^(mu) are the coefficients of alpha^mu. In BaseK mode every equation
// over Ki is split into its coordinates over K.
std::optional<MPoly> solve_degree(const std::vector<TruncSeries>& pw, unsigned m, unsigned delta,
                                  const FieldPtr& K, const FieldPtr& Ki, SolutionField mode) {
  const FieldPtr& L = mode == SolutionField::BaseK ? K : Ki;
  const Field& FK = *Ki;
  const bool expand = mode == SolutionField::BaseK && Ki != K;
  const auto layout = unknown_layout(m);
  const unsigned ell = 2 * m * delta;
  const std::size_t nrows = (ell + 1) * (expand ? Ki->degree() : 1);
  Matrix M(nrows, layout.size());
  std::vector<Elem> rhs(nrows, Elem{0});
  for (unsigned k = 0; k <= ell; ++k) {
    std::vector<Elem> row(layout.size());
    for (std::size_t j = 0; j < layout.size(); ++j) {
      const auto [mu, eta] = layout[j];
      row[j] = k >= eta ? pw[mu][k - eta] : Elem{0};
    }
    const Elem b = FK.neg(pw[m][k]);
    if (!expand) {
      for (std::size_t j = 0; j < layout.size(); ++j) M.at(k, j) = row[j];
      rhs[k] = b;
      continue;
    }
    const unsigned t = Ki->degree();
    for (std::size_t j = 0; j < layout.size(); ++j) {
      const auto c = FK.coeffs(row[j]);
      for (unsigned r = 0; r < t; ++r) M.at(k * t + r, j) = c[r];
    }
    const auto cb = FK.coeffs(b);
    for (unsigned r = 0; r < t; ++r) rhs[k * t + r] = cb[r];
  }
  auto sol = solve(*L, M, rhs);
  if (!sol) return std::nullopt;
  MPoly P(L, 2);
  P.add_term({m, 0}, L->one());
  for (std::size_t j = 0; j < layout.size(); ++j) P.add_term({layout[j].first, layout[j].second}, (*sol)[j]);
  return P;
}

struct ClassResult {
  std::optional<MPoly> factor;
  std::size_t tried = 0, solved = 0;
};

ClassResult search_class(const Prepared& P, const RootClass& c, int D, SolutionField mode) {
  ClassResult res;
  const unsigned ell_max = 2 * static_cast<unsigned>(D) * static_cast<unsigned>(P.delta);
  TruncSeries alpha = newton_lift(P.f, c.Ki, c.zeta, ell_max);
  std::vector<TruncSeries> pw;
  pw.emplace_back(c.Ki, std::vector<Elem>{c.Ki->one()}, ell_max);
  for (int mu = 1; mu <= D; ++mu) pw.push_back(pw.back() * alpha);
  for (int m = 1; m <= D; ++m) {
    ++res.tried;
    auto f = solve_degree(pw, static_cast<unsigned>(m), static_cast<unsigned>(P.delta), P.K, c.Ki, mode);
    if (f) {
      ++res.solved;
      res.factor = std::move(f);
      break;
    }
  }
  return res;
}

bool has_root(const MPoly& factor, const RootClass& c) {
  if (!c.Ki->contains_field(*factor.ctx())) return false;
  const Elem pt[2] = {c.zeta, Elem{0}};
  return factor.embed_into(c.Ki).eval(pt).code == 0;
}

MPoly verified_quotient(const MPoly& f, const MPoly& p) {
  try {
    return exact_divide(f, p);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    fail(Errc::InternalVerifyFailed, "candidate factor " + p.to_string() + " does not divide " + f.to_string());
  }
}

bool factor_less(const MPoly& a, const MPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.ctx()->size() != b.ctx()->size()) return a.ctx()->size() < b.ctx()->size();
  return a.to_string() < b.to_string();
}

void sort_unique(std::vector<MPoly>& v) {
  std::sort(v.begin(), v.end(), factor_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

MPoly apply_change(const MPoly& f, const AffineChange& T) {
  std::vector<std::vector<Elem>> A = {{T.m[0], T.m[1]}, {T.m[2], T.m[3]}};
  return affine_substitute(f, A, {T.s[0], T.s[1]}, 2);
}

}  // namespace

bool AffineChange::is_identity() const {
  return m[0].code == 1 && m[1].code == 0 && m[2].code == 0 && m[3].code == 1 && s[0].code == 0 &&
         s[1].code == 0;
}

bool check_precondition(const MPoly& f) {
  require_bivariate(f);
  if (f.is_zero()) fail(Errc::NotMonicInX, "zero polynomial");
  const int dx = f.degree_in(0);
  const MPoly lc = f.coefficient_in(0, static_cast<unsigned>(dx));
  if (!lc.is_constant()) fail(Errc::NotMonicInX, "leading coefficient in X of " + f.to_string() + " depends on Y");
  const int delta = f.total_degree();
  if (delta < 1) return false;
  const UPoly f0 = at_y_zero(f);
  return up::deg(f0) == delta && up::is_squarefree(*f.ctx(), f0);
}

Normalized normalize_for_lifting(const MPoly& f, std::uint64_t seed) {
  require_bivariate(f);
  if (f.total_degree() < 1) fail(Errc::NormalizationFailed, "constant polynomial");
  if (!is_squarefree_bivariate(f))
    fail(Errc::NormalizationFailed, f.to_string() + " is not squarefree; take its radical first");
  const std::uint32_t delta = static_cast<std::uint32_t>(f.total_degree());
  Rng rng(mix_seed(seed, 0x6e6f726dULL));
  FieldPtr E = f.ctx();
  MPoly fE = f;
  for (unsigned enl = 0; enl <= kMaxEnlargements; ++enl) {
    if (enl > 0) {
      E = make_extension(E, 2, 0);
      fE = f.embed_into(E);
    }
    const std::uint64_t Q = E->size();
    auto draw = [&]() { return Elem{static_cast<std::uint32_t>(uniform_below(rng, Q))}; };
    const unsigned first = enl == 0 ? 0 : 1;
    for (unsigned attempt = first; attempt <= kNormalizeAttempts; ++attempt) {
      AffineChange T;
      T.field = E;
      if (attempt == 0) {
        T.m = {E->one(), E->zero(), E->zero(), E->one()};
        T.s = {E->zero(), E->zero()};
      } else {
        do {
          T.m = {draw(), draw(), draw(), draw()};
        } while (E->sub(E->mul(T.m[0], T.m[3]), E->mul(T.m[1], T.m[2])).code == 0);
        T.s = {draw(), draw()};
      }
      MPoly g = apply_change(fE, T);
      const Elem lc = g.coefficient({delta, 0});
      if (lc.code == 0) continue;
      g = g.scale(E->inv(lc));
      if (check_precondition(g)) return {g, T, enl};
    }
  }
  fail(Errc::NormalizationFailed, "no admissible affine change found for " + f.to_string());
}

MPoly undo_change(const MPoly& p, const AffineChange& T) {
  const FieldPtr& L = p.ctx();
  if (!L->contains_field(*T.field)) fail(Errc::NotASubfield, "factor field does not contain the change field");
  const Field& F = *L;
  const Elem det_inv = F.inv(F.sub(F.mul(T.m[0], T.m[3]), F.mul(T.m[1], T.m[2])));
  std::vector<std::vector<Elem>> A = {{F.mul(T.m[3], det_inv), F.neg(F.mul(T.m[1], det_inv))},
                                      {F.neg(F.mul(T.m[2], det_inv)), F.mul(T.m[0], det_inv)}};
  std::vector<Elem> b = {F.neg(F.add(F.mul(A[0][0], T.s[0]), F.mul(A[0][1], T.s[1]))),
                         F.neg(F.add(F.mul(A[1][0], T.s[0]), F.mul(A[1][1], T.s[1])))};
  return affine_substitute(p, A, b, 2).normalized();
}

FactorReport factor_search(const MPoly& f_in, int D, SolutionField mode) {
  require_bivariate(f_in);
  const int delta = f_in.total_degree();
  if (delta < 2 || D < 1 || D > delta - 1)
    fail(Errc::DOutOfRange, "need 1 <= D <= deg f - 1, got D = " + std::to_string(D));
  if (!check_precondition(f_in))
    fail(Errc::PreconditionViolated, "f(X, 0) is not squarefree of degree deg f for " + f_in.to_string());
  const Prepared P = prepare(f_in);
  FactorReport rep;
  rep.max_degree = D;
  MPoly cofactor = P.f;
  std::vector<MPoly> found;
  for (const RootClass& c : P.classes) {
    if (std::any_of(found.begin(), found.end(), [&](const MPoly& g) { return has_root(g, c); })) continue;
    ClassResult r = search_class(P, c, D, mode);
    rep.systems_tried += r.tried;
    rep.systems_solved += r.solved;
    if (!r.factor) continue;
    const MPoly& fac = *r.factor;
    if (mode == SolutionField::BaseK) {
      cofactor = verified_quotient(cofactor, fac);
      found.push_back(fac);
      continue;
    }
    const MPoly fL = P.f.embed_into(c.Ki);
    MPoly conj = fac;
    for (unsigned j = 0; j < c.t; ++j) {
      verified_quotient(fL, conj);
      bool over_base = c.Ki != P.K;
      for (const auto& [e, x] : conj.terms()) over_base = over_base && x.code < P.K->size();
      MPoly rep_poly = over_base ? descend(conj, P.K) : conj;
      if (std::find(found.begin(), found.end(), rep_poly) == found.end()) found.push_back(rep_poly);
      conj = map_coefficients_pow(conj, P.K->size());
      if (conj == fac) break;
    }
  }
  sort_unique(found);
  rep.factors = std::move(found);
  rep.status = rep.factors.empty() ? FactorStatus::NoFactorUpToD : FactorStatus::FoundFactors;
  return rep;
}

FactorReport find_factors(const MPoly& f, int D, SolutionField mode, std::uint64_t seed) {
  require_bivariate(f);
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  if (D < 1) fail(Errc::DOutOfRange, "D must be at least 1");
  FactorReport rep;
  rep.max_degree = D;
  if (f.total_degree() < 1) return rep;
  const FieldPtr& K = f.ctx();
  const MPoly r = radical(f);
  const int dr = r.total_degree();
  std::vector<MPoly> out;
  if (dr == 1) {
    out.push_back(r);
  } else {
    const Normalized N = normalize_for_lifting(r, seed);
    std::vector<MPoly> raw;
    if (D >= 1) {
      FactorReport inner = factor_search(N.g, std::min(D, dr - 1), mode);
      rep.systems_tried = inner.systems_tried;
      rep.systems_solved = inner.systems_solved;
      raw = std::move(inner.factors);
    }
    if (raw.empty() && D >= dr) raw.push_back(N.g);
    std::vector<MPoly> mapped;
    for (const MPoly& p : raw) mapped.push_back(undo_change(p, N.change));
    if (mode == SolutionField::BaseK && N.enlargements > 0) {
      std::vector<bool> used(mapped.size(), false);
      for (std::size_t i = 0; i < mapped.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        MPoly prod = mapped[i];
        MPoly conj = map_coefficients_pow(mapped[i], K->size());
        while (!(conj == mapped[i])) {
          auto it = std::find(mapped.begin(), mapped.end(), conj);
          // conjugates share the degree of mapped[i], so the search must have found them
          if (it == mapped.end())
            fail(Errc::InternalVerifyFailed, "conjugate factor missing from the search result");
          used[static_cast<std::size_t>(it - mapped.begin())] = true;
          prod = prod * conj;
          conj = map_coefficients_pow(conj, K->size());
        }
        prod = prod.normalized();
        try {
          out.push_back(descend(prod, K));
        } catch (const Error&) {
          fail(Errc::InternalVerifyFailed, "orbit product is not defined over the base field");
        }
      }
    } else if (mode == SolutionField::BaseK) {
      for (const MPoly& p : mapped) out.push_back(descend(p, K));
    } else {
      out = std::move(mapped);
    }
  }
  std::vector<MPoly> kept;
  for (auto& p : out)
    if (p.total_degree() <= D) kept.push_back(std::move(p));
  sort_unique(kept);
  rep.factors = std::move(kept);
  rep.status = rep.factors.empty() ? FactorStatus::NoFactorUpToD : FactorStatus::FoundFactors;
  return rep;
}

std::vector<MPoly> factorize_over_base(const MPoly& f, std::uint64_t seed) {
  require_bivariate(f);
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  if (f.total_degree() < 1) return {};
  return find_factors(f, f.total_degree(), SolutionField::BaseK, seed).factors;
}

bool is_absolutely_irreducible(const MPoly& f, std::uint64_t seed) {
  require_bivariate(f);
  if (f.total_degree() < 1) return false;
  if (f.total_degree() == 1) return true;
  const MPoly r = radical(f);
  if (r.total_degree() < f.total_degree()) return false;
  const Normalized N = normalize_for_lifting(r, seed);
  const Prepared P = prepare(N.g);
  // classes are sorted by degree, so the first root lives in the smallest field
  ClassResult res = search_class(P, P.classes.front(), P.delta - 1, SolutionField::RootFieldKi);
  return !res.factor.has_value();
}

std::vector<int> absolute_factor_degrees(const MPoly& f, std::uint64_t seed) {
  require_bivariate(f);
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "zero polynomial has no factor degrees");
  if (f.total_degree() < 1) return {};
  const MPoly r = radical(f);
  if (r.total_degree() == 1) return {1};
  const Normalized N = normalize_for_lifting(r, seed);
  const Prepared P = prepare(N.g);
  // An absolutely irreducible factor of degree d carries exactly d of the
  // deg f distinct roots of f(X, 0), and conjugate roots give conjugate factors.
  std::map<int, unsigned> roots_by_degree;
  for (const RootClass& c : P.classes) {
    ClassResult res = search_class(P, c, P.delta - 1, SolutionField::RootFieldKi);
    const int d = res.factor ? res.factor->total_degree() : P.delta;
    roots_by_degree[d] += c.t;
  }
  std::vector<int> out;
  for (const auto& [d, nroots] : roots_by_degree) {
    if (nroots % static_cast<unsigned>(d) != 0)
      fail(Errc::InternalVerifyFailed, "root count not divisible by factor degree");
    for (unsigned i = 0; i < nroots / static_cast<unsigned>(d); ++i) out.push_back(d);
  }
  return out;
}

int count_abs_irr_fq_factors(const MPoly& f, std::uint64_t seed) {
  require_bivariate(f);
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "zero polynomial");
  int nu = 0;
  for (const MPoly& p : factorize_over_base(f, seed))
    if (is_absolutely_irreducible(p, seed)) ++nu;
  return nu;
}

}  // namespace weilbench
