#include "zerosum/census.hpp"

#include <cmath>
#include <sstream>

#include "zerosum/error.hpp"
#include "zerosum/moore.hpp"
#include "zerosum/rng.hpp"

namespace zerosum {

std::string_view census_mode_name(CensusMode m) noexcept {
  return m == CensusMode::Exhaustive ? "exhaustive" : "constructive";
}

std::optional<CensusMode> parse_census_mode(std::string_view s) noexcept {
  if (s == "exhaustive") return CensusMode::Exhaustive;
  if (s == "constructive") return CensusMode::Constructive;
  return std::nullopt;
}

bool CensusReport::checks_hold() const noexcept {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

nlohmann::ordered_json CensusReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["mode"] = census_mode_name(mode);
  j["members"] = members;
  nlohmann::ordered_json ev = nlohmann::ordered_json::object();
  for (const auto& [k, e] : evidence) {
    if (const auto* c = std::get_if<ZeroSumCertificate>(&e))
      ev[std::to_string(k)] = certificate_to_json_value(*c);
    else
      ev[std::to_string(k)] = std::get<std::string>(e);
  }
  j["evidence"] = std::move(ev);
  if (counts) {
    nlohmann::ordered_json cj = nlohmann::ordered_json::object();
    for (const auto& [k, c] : *counts) cj[std::to_string(k)] = c;
    j["counts"] = std::move(cj);
  }
  nlohmann::ordered_json ch = nlohmann::ordered_json::object();
  for (const auto& c : checks) ch[c.name] = c.holds;
  j["checks"] = std::move(ch);
  return j;
}

std::string CensusReport::to_csv() const {
  std::ostringstream os;
  os << "n,k,member,method\n";
  for (unsigned k = 1; k < n; ++k) {
    std::string method;
    if (auto it = evidence.find(k); it != evidence.end()) {
      if (const auto* c = std::get_if<ZeroSumCertificate>(&it->second))
        method = method_name(c->method);
      else
        method = std::get<std::string>(it->second);
    }
    os << n << ',' << k << ',' << (members.count(k) ? "true" : "false") << ',' << method << '\n';
  }
  return os.str();
}

namespace {

void record_checks(CensusReport& rep) {
  const unsigned n = rep.n;
  const auto& m = rep.members;
  if (rep.mode == CensusMode::Exhaustive) {
    bool sym = true;
    for (unsigned k = 1; k < n; ++k) sym = sym && (m.count(k) == m.count(n - k));
    rep.checks.push_back({"duality", sym});
  }
  // In constructive mode a missing 2 only means nothing was found.
  const bool parity = rep.mode == CensusMode::Exhaustive ? (m.count(2) == 1) == (n % 2 == 0)
                                                          : !(m.count(2) == 1 && n % 2 == 1);
  rep.checks.push_back({"parity", parity});
  rep.checks.push_back({"extremes-excluded", !m.count(1) && !m.count(n - 1)});
}

}  // namespace

CensusReport census_run(unsigned n, CensusMode mode, const SearchBudget& budget, bool counts,
                        unsigned exhaustive_cap) {
  const Field field = standard_field(n);
  if (mode == CensusMode::Exhaustive && n > exhaustive_cap)
    throw Error(Errc::CapExceeded, "exhaustive census is capped at n = " + std::to_string(exhaustive_cap));
  CensusReport rep;
  rep.n = n;
  rep.mode = mode;
  if (counts && mode == CensusMode::Exhaustive) rep.counts.emplace();

  for (unsigned k = 1; k < n; ++k) {
    if (mode == CensusMode::Exhaustive) {
      std::uint64_t found = 0;
      SubspaceEnumerator it(field.spec(), k);
      while (it.advance()) {
        if (!is_zero_sum(field, it.current())) continue;
        if (found++ == 0) {
          ZeroSumCertificate c;
          c.n = n;
          c.modulus = field.spec().modulus();
          c.k = k;
          c.basis.assign(it.basis().begin(), it.basis().end());
          c.method = Method::Exhaustive;
          c.seed = budget.seed;
          rep.evidence[k] = std::move(c);
          rep.members.insert(k);
        }
        if (!counts) break;
      }
      if (found == 0) rep.evidence[k] = std::string("exhausted-none");
      if (rep.counts) (*rep.counts)[k] = found;
    } else {
      BuildResult r = build_zero_sum(n, k, budget);
      if (r.status == BuildStatus::Certificate) {
        rep.members.insert(k);
        rep.evidence[k] = std::move(*r.certificate);
      } else {
        rep.evidence[k] = std::string(r.status == BuildStatus::NotExist ? "not-exist" : "no-solution");
      }
    }
  }
  record_checks(rep);
  return rep;
}

Elem affine_inverse_sum(const Field& field, Elem offset, std::span<const Elem> directions) {
  std::vector<Elem> pts;
  pts.reserve(std::size_t{1} << directions.size());
  visit_span(directions, [&](Elem x) { pts.push_back(offset ^ x); });
  return sum_of_inverses(field, pts);
}

nlohmann::ordered_json AffineCheckResult::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["trials"] = trials;
  j["violations"] = violations;
  j["passed"] = passed();
  if (first_violation) {
    nlohmann::ordered_json v;
    v["offset"] = to_hex(first_violation->offset);
    v["directions"] = nlohmann::ordered_json::array();
    for (Elem d : first_violation->directions) v["directions"].push_back(to_hex(d));
    j["first_violation"] = std::move(v);
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

AffineCheckResult affine_sample_check(unsigned n, std::uint64_t trials, std::uint64_t seed) {
  const Field field = standard_field(n);
  AffineCheckResult res;
  res.n = n;
  res.trials = trials;
  const unsigned max_dim = std::min(n - 1, 12u);
  for (std::uint64_t i = 0; i < trials; ++i) {
    SplitMix64 rng = trial_rng(seed, i);
    const auto d = static_cast<unsigned>(rng.below(max_dim + 1));
    EchelonBasis span;
    std::vector<Elem> dirs;
    while (dirs.size() < d) {
      const Elem x = rng.next() & field.mask();
      if (x != 0 && span.insert(x)) dirs.push_back(x);
    }
    Elem offset;
    do offset = rng.next() & field.mask();
    while (span.contains(offset));
    if (affine_inverse_sum(field, offset, dirs) == 0) {
      if (res.violations++ == 0) res.first_violation = AffineViolation{offset, dirs};
    }
  }
  return res;
}

nlohmann::ordered_json CurveCount::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["l"] = l;
  j["u_basis"] = nlohmann::ordered_json::array();
  for (Elem u : u_basis) j["u_basis"].push_back(to_hex(u));
  j["points_on_curve_off_delta"] = points_on_curve_off_delta;
  j["hw_lower_bound"] = hw_lower_bound;
  j["exceeds_bound"] = exceeds_bound();
  return j;
}

double hw_lower_bound(unsigned n, unsigned l) {
  return std::ldexp(1.0, static_cast<int>(n)) -
         9.0 * std::ldexp(1.0, static_cast<int>(2 * l)) * std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
}

std::vector<Elem> curve_u_basis(const Field& field, unsigned l, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Elem first = 0;
  while (first == 0) first = rng.next() & field.mask();
  const Elem one[] = {first};
  return extend_non_zero_sum(field, one, l - 1);
}

std::uint64_t curve_point_count_kernel(const Field& field, std::span<const Elem> u) {
  const unsigned n = field.degree();
  const EchelonBasis head(u);
  std::vector<Elem> tuple(u.begin(), u.end());
  tuple.push_back(0);
  std::uint64_t total = 0;
  const std::uint64_t span_size = std::uint64_t{1} << (u.size() + 1);
  for (std::uint64_t x2 = 1; x2 >> n == 0; ++x2) {
    if (head.contains(x2)) continue;
    tuple.back() = x2;
    const std::size_t dim = reduce(linearized_delta1_map(field, tuple)).kernel.rows();
    total += (std::uint64_t{1} << dim) - span_size;
  }
  return total;
}

CurveCount curve_point_count(unsigned n, unsigned l, std::uint64_t seed) {
  if (2 * n > kMaxCurveScanBits)
    throw Error(Errc::ScanBudgetExceeded, "2^" + std::to_string(2 * n) + " points exceed the scan budget");
  const Field field = standard_field(n);
  if (l < 1 || l + 2 > n) throw Error(Errc::PreconditionViolated, "need 1 <= l <= n - 2");
  CurveCount cc;
  cc.n = n;
  cc.l = l;
  cc.u_basis = curve_u_basis(field, l, seed);
  cc.hw_lower_bound = hw_lower_bound(n, l);

  const EchelonBasis head(cc.u_basis);
  std::vector<Elem> tuple = cc.u_basis;
  tuple.push_back(0);
  std::vector<Elem> unit(n);
  for (unsigned j = 0; j < n; ++j) unit[j] = Elem{1} << j;
  std::uint64_t count = 0;
  for (std::uint64_t x2 = 0; x2 >> n == 0; ++x2) {
    // x2 in span(u) makes every delta vanish
    if (head.contains(x2)) continue;
    tuple.back() = x2;
    EchelonBasis span = head;
    span.insert(x2);
    const std::vector<Elem> coeffs = delta1_linearized(field, tuple);
    std::vector<Elem> col(n);
    for (unsigned j = 0; j < n; ++j) col[j] = eval_linearized(field, coeffs, unit[j]);
    // Gray-code walk over x1: delta_1 is additive in x1
    Elem x1 = 0;
    Elem val = 0;
    for (std::uint64_t i = 1; i >> n == 0; ++i) {
      const auto b = static_cast<unsigned>(std::countr_zero(i));
      x1 ^= unit[b];
      val ^= col[b];
      if (val == 0 && !span.contains(x1)) ++count;
    }
  }
  cc.points_on_curve_off_delta = count;
  return cc;
}

}  // namespace zerosum
