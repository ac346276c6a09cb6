#include "zerosum/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zerosum/error.hpp"
#include "zerosum/moore.hpp"
#include "zerosum/qpoly.hpp"
#include "zerosum/rng.hpp"
#include "zerosum/subfield.hpp"
#include "zerosum/unipoly.hpp"

namespace zerosum {

namespace {

void check_in_field(const Field& field, std::span<const Elem> vs) {
  for (Elem v : vs)
    if (!field.contains(v)) throw Error(Errc::SpecMismatch, "element outside F_{2^n}");
}

bool independent(std::span<const Elem> vs) {
  EchelonBasis e;
  for (Elem v : vs)
    if (!e.insert(v)) return false;
  return true;
}

std::vector<Elem> kernel_of(const Field& field, std::span<const Elem> us) {
  return reduce(linearized_delta1_map(field, us)).kernel.row_data();
}

// Uniform nonzero element outside span(basis).
Elem draw_outside(const Field& field, const EchelonBasis& basis, SplitMix64& rng) {
  for (;;) {
    const Elem x = rng.next() & field.mask();
    if (x != 0 && !basis.contains(x)) return x;
  }
}

std::vector<Elem> subfield_basis(const Field& field, unsigned l) {
  return subfield_subspace(field, l).basis;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::PreconditionViolated, what);
}

Subspace span_with(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<Elem> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return subspace_from_vectors(field.spec(), all);
}

}  // namespace

std::vector<Elem> extend_non_zero_sum(const Field& field, std::span<const Elem> us, unsigned count) {
  const unsigned n = field.degree();
  if (us.size() + count > n - 1)
    throw Error(Errc::TooManyGenerators, "at most n - 1 generators can be non-zero-sum");
  check_in_field(field, us);
  if (!independent(us)) throw Error(Errc::DependentInput, "generators are dependent");
  std::vector<Elem> out(us.begin(), us.end());
  if (out.empty() && count > 0) {
    out.push_back(1);
    --count;
  }
  for (; count > 0; --count) {
    const std::vector<Elem> ker = kernel_of(field, out);
    const EchelonBasis k(ker);
    out.push_back(*k.min_outside(n));  // dim ker <= |out| + 1 < n
  }
  return out;
}

std::optional<Elem> kernel_completion_step(const Field& field, std::span<const Elem> us) {
  const std::vector<Elem> ker = kernel_of(field, us);
  if (ker.size() <= us.size()) return std::nullopt;
  return min_in_difference(ker, us);
}

std::optional<Completion> complete_to_zero_sum(const Field& field, std::span<const Elem> us,
                                               const SearchBudget& budget) {
  if (us.empty()) return std::nullopt;
  check_in_field(field, us);
  if (!independent(us)) throw Error(Errc::DependentInput, "generators are dependent");
  std::vector<Elem> tuple(us.begin(), us.end());
  const EchelonBasis head(std::span<const Elem>(tuple).first(tuple.size() - 1));
  for (std::uint64_t i = 0; i < budget.max_trials; ++i) {
    if (i > 0) {
      SplitMix64 rng = trial_rng(budget.seed, i);
      tuple.back() = draw_outside(field, head, rng);
    }
    if (const auto x = kernel_completion_step(field, tuple)) {
      Completion c{tuple, *x, i + 1};
      c.basis.push_back(*x);
      return c;
    }
  }
  return std::nullopt;
}

Subspace subfield_span(const Field& field, const Subspace& f, unsigned l) {
  if (!(field.spec() == f.ambient)) throw Error(Errc::SpecMismatch, "subspace of another field");
  const std::vector<Elem> cs = subfield_basis(field, l);
  std::vector<Elem> all;
  for (Elem u : f.basis)
    for (Elem c : cs) all.push_back(field.mul(c, u));
  return subspace_from_vectors(field.spec(), all);
}

unsigned span_dim_over_subfield(const Field& field, const Subspace& f, unsigned l) {
  return static_cast<unsigned>(subfield_span(field, f, l).dim() / l);
}

std::optional<Subspace> lift_one(const Field& field, const Subspace& f, unsigned l, const SearchBudget& budget) {
  const unsigned n = field.degree();
  require(l >= 2 && n % l == 0, "lift needs a subfield degree l >= 2 dividing n");
  require(f.dim() > 0 && is_zero_sum(field, f), "lift needs a zero-sum subspace");
  const Subspace span = subfield_span(field, f, l);
  require(span.dim() / l + 1 <= n / l, "no room for another F_{2^l}-direction");

  // Terms u^(Q-1) / (W + u^Q), Q = 2^l - 1, grouped by u^Q so P is squarefree.
  const std::uint64_t q = (std::uint64_t{1} << l) - 1;
  std::map<Elem, Elem> terms;
  for_each_element(f, [&](Elem u) {
    if (u != 0) terms[field.pow(u, q)] ^= field.pow(u, q - 1);
  });
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  if (terms.size() > kDefaultRootDegreeCap) return std::nullopt;

  const EchelonBasis outside(span.basis);
  const std::vector<Elem> cs = subfield_basis(field, l);
  auto accept = [&](Elem v) -> std::optional<Subspace> {
    if (v == 0 || outside.contains(v)) return std::nullopt;
    std::vector<Elem> vc;
    for (Elem c : cs) vc.push_back(field.mul(v, c));
    Subspace g = span_with(field, f.basis, vc);
    if (g.dim() == f.dim() + l && is_zero_sum(field, g)) return g;
    return std::nullopt;
  };

  if (terms.empty()) return accept(*outside.min_outside(n));

  Poly p = Poly::constant(field, 1);
  for (const auto& [a, c] : terms) p = p * Poly(field, {a, 1});
  Poly g(field);
  for (const auto& [a, c] : terms) g = g + Poly::constant(field, c) * poly_divmod(p, Poly(field, {a, 1})).first;
  if (g.is_zero()) return accept(*outside.min_outside(n));

  std::vector<Elem> candidates;
  for (Elem w : find_roots(g, budget.seed)) {
    if (w == 0) continue;
    std::vector<Elem> xq(q + 1, 0);
    xq[0] = w;
    xq[q] = 1;
    for (Elem v : find_roots(Poly(field, std::move(xq)), budget.seed)) candidates.push_back(v);
  }
  std::sort(candidates.begin(), candidates.end());
  for (Elem v : candidates)
    if (auto r = accept(v)) return r;
  return std::nullopt;
}

std::optional<Subspace> lift_chain(const Field& field, const Subspace& f, unsigned l, unsigned t,
                                   const SearchBudget& budget) {
  const unsigned n = field.degree();
  require(l >= 2 && n % l == 0, "lift needs a subfield degree l >= 2 dividing n");
  require(span_dim_over_subfield(field, f, l) + t <= n / l, "chain is longer than n/l - s");
  Subspace cur = f;
  for (unsigned i = 0; i < t; ++i) {
    auto next = lift_one(field, cur, l, budget);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

Subspace lift_preimage(const Field& field, const Subspace& f, unsigned l, unsigned t) {
  const unsigned n = field.degree();
  require(l >= 2 && n % l == 0, "lift needs a subfield degree l >= 2 dividing n");
  require(f.dim() > 0 && is_zero_sum(field, f), "lift needs a zero-sum subspace");
  const unsigned m = n / l;
  if (t == 0) return f;

  // F_{2^l}-independent generators of F_{2^l} f, then the smallest elements
  // outside their span until there are m - t of them.
  const std::vector<Elem> cs = subfield_basis(field, l);
  std::vector<Elem> gens;
  EchelonBasis spanned;
  auto add = [&](Elem g) {
    gens.push_back(g);
    for (Elem c : cs) spanned.insert(field.mul(c, g));
  };
  for (Elem u : f.basis)
    if (!spanned.contains(u)) add(u);
  require(gens.size() + t <= m, "s + t exceeds n/l");
  while (gens.size() < m - t) add(*spanned.min_outside(n));

  const std::vector<Elem> a = subspace_qpoly(field, l, gens);
  const std::vector<Elem> b = qpoly_cofactor(field, l, a);
  const BitMatrix mb = matrix_of_linear_map(n, [&](Elem x) { return qpoly_eval(field, l, b, x); });
  std::vector<Elem> vs = reduce(mb).kernel.row_data();
  for (Elem y : f.basis) {
    std::vector<bool> rhs(n);
    for (unsigned i = 0; i < n; ++i) rhs[i] = y >> i & 1;
    const auto x = solve_linear(mb, rhs);
    require(x.has_value(), "basis element outside the image");
    vs.push_back(*x);
  }
  Subspace out = subspace_from_vectors(field.spec(), vs);
  require(out.dim() == f.dim() + t * l && is_zero_sum(field, out), "preimage is not zero-sum");
  return out;
}

std::optional<SeedResult> pipeline_seed(const Field& field, unsigned l, unsigned l_prime,
                                        const SearchBudget& budget) {
  const unsigned n = field.degree();
  require(l >= 1 && n % l == 0, "l must divide n");
  require(l_prime >= 1 && l_prime <= l && l_prime + 3 <= n, "need 1 <= l' <= l and l' + 2 <= n - 1");
  std::vector<Elem> us;
  if (l_prime == 1) {
    us.push_back(1);
  } else {
    const std::vector<Elem> sub = subfield_basis(field, l);
    us.assign(sub.begin(), sub.begin() + (l_prime - 1));
    us = extend_non_zero_sum(field, us, 1);
  }
  const EchelonBasis head(us);
  us.push_back(*head.min_outside(n));
  const auto c = complete_to_zero_sum(field, us, budget);
  if (!c) return std::nullopt;
  return SeedResult{subspace_from_vectors(field.spec(), c->basis), c->basis, c->trials};
}

namespace {

std::vector<unsigned> divisors_from(unsigned n, unsigned lo) {
  std::vector<unsigned> out;
  for (unsigned d = lo; d < n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

ZeroSumCertificate make_certificate(const Field& field, const Subspace& s, Method method, std::uint64_t seed) {
  ZeroSumCertificate c;
  c.n = field.degree();
  c.modulus = field.spec().modulus();
  c.k = static_cast<unsigned>(s.dim());
  c.basis = s.basis;
  c.method = method;
  c.seed = seed;
  return c;
}

// F_{2^d}-span of 1 and the m - 1 smallest elements outside the running span.
Subspace subfield_space(const Field& field, unsigned d, unsigned m) {
  const std::vector<Elem> cs = subfield_basis(field, d);
  EchelonBasis spanned;
  for (unsigned i = 0; i < m; ++i) {
    const Elem g = i == 0 ? Elem{1} : *spanned.min_outside(field.degree());
    for (Elem c : cs) spanned.insert(field.mul(c, g));
  }
  return subspace_from_vectors(field.spec(), spanned.vectors());
}

struct Attempt {
  std::optional<ZeroSumCertificate> cert;
  std::uint64_t trials = 0;
};

Attempt try_pipeline(const Field& field, unsigned k, unsigned l, const SearchBudget& budget) {
  const unsigned n = field.degree();
  const unsigned r = 3 + (k - 3) % l;
  const unsigned t = (k - r) / l;
  const unsigned m = n / l;
  Attempt out;
  const auto seed = pipeline_seed(field, l, r - 2, budget);
  if (!seed) {
    out.trials = budget.max_trials;
    return out;
  }
  out.trials = seed->trials;
  const unsigned s = span_dim_over_subfield(field, seed->space, l);
  if (s + t > m) return out;
  const Subspace lifted = lift_preimage(field, seed->space, l, t);
  ZeroSumCertificate c = make_certificate(field, lifted, Method::Pipeline, budget.seed);
  c.l = l;
  c.t = t;
  c.s = s;
  c.r = r;
  out.cert = std::move(c);
  return out;
}

inline constexpr unsigned kMaxConfinedSeed = 16;
inline constexpr unsigned kMaxConfinedBits = 20;

// Seed whose prefix and x_2 lie in W = F_{2^l}-span of sigma directions, so
// the seed's own F_{2^l}-span has dimension <= sigma + 1.
Attempt try_confined(const Field& field, unsigned k, unsigned l, const SearchBudget& budget) {
  const unsigned n = field.degree();
  const unsigned m = n / l;
  Attempt out;
  for (unsigned r = 3 + (k - 3) % l; r <= k && r <= kMaxConfinedSeed; r += l)
  for (unsigned extra = 0; extra < 2; ++extra) {
    const unsigned t = (k - r) / l;
    const unsigned lp = r - 2;
    // A seed inside one copy of a subfield may not exist at all, hence the
    // second try with an extra direction.
    const unsigned sigma = (lp + 2 + l - 1) / l + extra;
    if (sigma + 1 + t > m || sigma * l > kMaxConfinedBits || r + 1 > n) continue;

    std::vector<Elem> w = subspace_elements(subfield_space(field, l, sigma));
    std::sort(w.begin(), w.end());
    std::vector<Elem> us{1};
    while (us.size() < lp) {
      const std::vector<Elem> coeffs = delta1_linearized(field, us);
      const auto it = std::find_if(w.begin(), w.end(),
                                   [&](Elem x) { return eval_linearized(field, coeffs, x) != 0; });
      if (it == w.end()) break;
      us.push_back(*it);
    }
    if (us.size() < lp) continue;

    const EchelonBasis head(us);
    const std::vector<Elem> wb = subfield_space(field, l, sigma).basis;
    std::vector<Elem> tuple = us;
    tuple.push_back(0);
    // a hit is expected within about 2^(r-1) trials
    const std::uint64_t cap = std::min<std::uint64_t>(budget.max_trials, std::uint64_t{1} << (r + 6));
    for (std::uint64_t i = 0; i < cap; ++i) {
      SplitMix64 rng = trial_rng(budget.seed, i);
      Elem x2 = 0;
      while (head.contains(x2)) {
        x2 = 0;
        const std::uint64_t bits = rng.next();
        for (std::size_t j = 0; j < wb.size(); ++j)
          if (bits >> j & 1) x2 ^= wb[j];
      }
      tuple.back() = x2;
      ++out.trials;
      const auto x1 = kernel_completion_step(field, tuple);
      if (!x1) continue;
      std::vector<Elem> basis = tuple;
      basis.push_back(*x1);
      const Subspace seed = subspace_from_vectors(field.spec(), basis);
      const unsigned s = span_dim_over_subfield(field, seed, l);
      if (s + t > m) break;
      ZeroSumCertificate c = make_certificate(field, lift_preimage(field, seed, l, t), Method::Lift, budget.seed);
      c.l = l;
      c.t = t;
      c.s = s;
      c.r = r;
      out.cert = std::move(c);
      return out;
    }
  }
  return out;
}

Attempt try_kernel_completion(const Field& field, unsigned k, const SearchBudget& budget) {
  Attempt out;
  for (std::uint64_t i = 0; i < budget.max_trials; ++i) {
    SplitMix64 rng = trial_rng(budget.seed, i);
    EchelonBasis e;
    std::vector<Elem> us;
    while (us.size() < k - 1) {
      const Elem x = draw_outside(field, e, rng);
      e.insert(x);
      us.push_back(x);
    }
    if (const auto x = kernel_completion_step(field, us)) {
      us.push_back(*x);
      out.cert = make_certificate(field, subspace_from_vectors(field.spec(), us), Method::KernelCompletion,
                                  budget.seed);
      out.trials = i + 1;
      return out;
    }
  }
  out.trials = budget.max_trials;
  return out;
}

std::optional<ZeroSumCertificate> try_exhaustive(const Field& field, unsigned k, std::uint64_t seed) {
  SubspaceEnumerator it(field.spec(), k);
  while (it.advance()) {
    const Subspace s = it.current();
    if (is_zero_sum(field, s)) return make_certificate(field, s, Method::Exhaustive, seed);
  }
  return std::nullopt;
}

}  // namespace

BuildResult build_zero_sum(unsigned n, unsigned k, const SearchBudget& budget, const BuildOptions& options) {
  const Field field = standard_field(n);
  if (k < 1 || k > n - 1) throw Error(Errc::PreconditionViolated, "k must lie in [1, n - 1]");
  BuildResult res;
  if (k == 1 || k == n - 1) {
    res.status = BuildStatus::NotExist;
    res.note = "dimension 1 and n - 1 never carry a zero-sum subspace";
    return res;
  }
  if (n % 2 == 1 && (k == 2 || k == n - 2)) {
    res.status = BuildStatus::NotExist;
    res.note = "dimension 2 and n - 2 are excluded for odd n";
    return res;
  }

  auto finish = [&](ZeroSumCertificate c) {
    if (!verify_certificate(c, budget.direct_check_max_k).ok()) {
      res.note += std::string(method_name(c.method)) + " result failed verification; ";
      return false;
    }
    res.status = BuildStatus::Certificate;
    res.certificate = std::move(c);
    return true;
  };

  if (options.subfield_space) {
    const unsigned g = std::gcd(n, k);
    for (unsigned d = g; d >= 2; --d) {
      if (g % d != 0) continue;
      ZeroSumCertificate c = make_certificate(field, subfield_space(field, d, k / d), Method::SubfieldSpace,
                                              budget.seed);
      c.l = d;
      c.s = k / d;
      if (finish(std::move(c))) return res;
      break;
    }
  }

  if (options.pipeline && k >= 3) {
    std::vector<unsigned> ls = divisors_from(n, 2);
    // least prime divisor first, which is ls.front() when n is composite
    for (unsigned l : ls) {
      const Attempt a = try_pipeline(field, k, l, budget);
      res.trials += a.trials;
      if (a.cert && finish(*a.cert)) return res;
    }
    for (unsigned l : ls) {
      const Attempt a = try_confined(field, k, l, budget);
      res.trials += a.trials;
      if (a.cert && finish(*a.cert)) return res;
    }
  }

  if (options.kernel_completion) {
    const Attempt a = try_kernel_completion(field, k, budget);
    res.trials += a.trials;
    if (a.cert && finish(*a.cert)) return res;
  }

  if (options.exhaustive && n <= 10) {
    if (auto c = try_exhaustive(field, k, budget.seed)) {
      if (finish(std::move(*c))) return res;
    }
  }

  res.status = BuildStatus::NoSolution;
  res.note += "search budget exhausted";
  return res;
}

bool VerificationReport::ok() const noexcept {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) {
           return c.status != CheckStatus::Fail;
         }) && std::none_of(checks.begin(), checks.end(), [](const VerificationCheck& c) {
           return c.status == CheckStatus::Skipped && c.name != "direct-sum";
         });
}

namespace {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << status_name(c.status);
    if (!c.failure.empty()) os << " (" << c.failure << ")";
    if (!c.detail.empty()) os << " - " << c.detail;
    os << '\n';
  }
  os << (ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    if (!c.failure.empty()) e["failure"] = c.failure;
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

VerificationReport verify_certificate(const ZeroSumCertificate& cert, unsigned direct_max_k) {
  VerificationReport rep;
  for (const char* name : {"modulus", "independence", "zero-sum", "direct-sum"}) {
    VerificationCheck c;
    c.name = name;
    rep.checks.push_back(std::move(c));
  }
  auto fail = [&](std::size_t i, const char* failure, std::string detail) {
    rep.checks[i].status = CheckStatus::Fail;
    rep.checks[i].failure = failure;
    rep.checks[i].detail = std::move(detail);
    return rep;
  };

  if (cert.n < 2 || cert.n > 64) return fail(0, "ModulusMismatch", "degree outside [2, 64]");
  const FieldSpec spec = find_irreducible(cert.n);
  if (spec.modulus() != cert.modulus)
    return fail(0, "ModulusMismatch", "expected " + modulus_hex(spec) + ", got " + to_hex(cert.modulus));
  rep.checks[0].status = CheckStatus::Pass;

  const Field field(spec);
  if (cert.k == 0 || cert.basis.size() != cert.k)
    return fail(1, "IndependenceFailure", "basis has " + std::to_string(cert.basis.size()) + " elements, k = " +
                                              std::to_string(cert.k));
  for (Elem b : cert.basis)
    if (!field.contains(b)) return fail(1, "IndependenceFailure", "element " + to_hex(b) + " out of range");
  if (cert.k > cert.n) return fail(1, "IndependenceFailure", "more than n basis elements");
  const MooreEval ev = moore_eval(field, cert.basis);
  if (!ev.independent()) return fail(1, "IndependenceFailure", "Moore determinant vanishes");
  rep.checks[1].status = CheckStatus::Pass;

  if (ev.delta1 != 0) return fail(2, "ZeroSumFailure", "delta_1 = " + to_hex(ev.delta1));
  rep.checks[2].status = CheckStatus::Pass;

  if (cert.k <= direct_max_k && cert.k < 40) {
    const Subspace s{spec, cert.basis};
    const Elem sum = direct_inverse_sum(field, s, std::uint64_t{1} << cert.k);
    if (sum != 0) return fail(3, "DirectSumMismatch", "inverse sum = " + to_hex(sum));
    rep.checks[3].status = CheckStatus::Pass;
  } else {
    rep.checks[3].detail = "k above direct-check limit";
  }
  return rep;
}

}  // namespace zerosum
