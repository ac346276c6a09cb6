#ifndef ZEROSUM_CENSUS_HPP
#define ZEROSUM_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zerosum/certificate.hpp"
#include "zerosum/construct.hpp"

namespace zerosum {

enum class CensusMode { Exhaustive, Constructive };

std::string_view census_mode_name(CensusMode m) noexcept;
std::optional<CensusMode> parse_census_mode(std::string_view s) noexcept;

struct CensusCheck {
  std::string name;
  bool holds = true;
};

struct CensusReport {
  unsigned n = 0;
  CensusMode mode = CensusMode::Exhaustive;
  std::set<unsigned> members;
  // Certificate, or one of "exhausted-none", "not-exist", "no-solution".
  std::map<unsigned, std::variant<ZeroSumCertificate, std::string>> evidence;
  std::optional<std::map<unsigned, std::uint64_t>> counts;
  std::vector<CensusCheck> checks;

  bool checks_hold() const noexcept;
  nlohmann::ordered_json to_json() const;
  /// Columns n,k,member,method.
  std::string to_csv() const;
};

inline constexpr unsigned kExhaustiveCap = 10;

/// Exhaustive mode walks every k-subspace (stopping at the first zero-sum
/// one unless counts is set); constructive mode calls build_zero_sum.
/// Throws CapExceeded when exhaustive n > cap, DegreeOutOfRange.
CensusReport census_run(unsigned n, CensusMode mode, const SearchBudget& budget, bool counts = false,
                        unsigned exhaustive_cap = kExhaustiveCap);

struct AffineViolation {
  Elem offset = 0;
  std::vector<Elem> directions;
};

struct AffineCheckResult {
  unsigned n = 0;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::optional<AffineViolation> first_violation;

  bool passed() const noexcept { return violations == 0; }
  nlohmann::ordered_json to_json() const;
};

/// Random affine subspaces offset + S with 0 outside, dim S <= min(n - 1, 12);
/// counts those whose inverse sum vanishes.
AffineCheckResult affine_sample_check(unsigned n, std::uint64_t trials, std::uint64_t seed);

/// Inverse sum over offset + span(directions).
Elem affine_inverse_sum(const Field& field, Elem offset, std::span<const Elem> directions);

struct CurveCount {
  unsigned n = 0;
  unsigned l = 0;
  std::vector<Elem> u_basis;
  std::uint64_t points_on_curve_off_delta = 0;
  double hw_lower_bound = 0;

  bool exceeds_bound() const noexcept { return static_cast<double>(points_on_curve_off_delta) > hw_lower_bound; }
  nlohmann::ordered_json to_json() const;
};

inline constexpr unsigned kMaxCurveScanBits = 26;

/// Counts pairs (x1, x2) over all of F_{2^n}^2 with delta_1(x1, x2, u) = 0
/// and delta(x1, x2, u) != 0. For each x2 the map x1 -> delta_1 is
/// evaluated through its linearized form. u_1 is drawn from the seed, the
/// rest come from extend_non_zero_sum. Throws ScanBudgetExceeded if
/// 2n > 26, PreconditionViolated unless 1 <= l <= n - 2.
CurveCount curve_point_count(unsigned n, unsigned l, std::uint64_t seed);

/// Same count from kernel dimensions: sum over x2 outside span(u) of
/// 2^dim ker - 2^(l+1). Needs only 2^n kernel computations.
std::uint64_t curve_point_count_kernel(const Field& field, std::span<const Elem> u);

/// Non-zero-sum u-tuple used by curve_point_count.
std::vector<Elem> curve_u_basis(const Field& field, unsigned l, std::uint64_t seed);

double hw_lower_bound(unsigned n, unsigned l);

}  // namespace zerosum

#endif
