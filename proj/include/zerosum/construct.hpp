#ifndef ZEROSUM_CONSTRUCT_HPP
#define ZEROSUM_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerosum/bitlinalg.hpp"
#include "zerosum/certificate.hpp"
#include "zerosum/gf2n.hpp"

namespace zerosum {

/// Budget for seeded searches. Trial i of a search draws from
/// SplitMix64(seed ^ i); each strategy gets up to max_trials trials.
struct SearchBudget {
  std::uint64_t max_trials = 100000;
  std::uint64_t seed = 0;
  unsigned direct_check_max_k = 20;
};

/// Appends `count` elements one at a time, each the smallest element
/// outside the kernel of x -> delta_1(current, x), so every prefix from
/// the first appended element on spans a non-zero-sum subspace.
/// Throws TooManyGenerators if |us| + count > n - 1, DependentInput if the
/// us are F_2-dependent.
std::vector<Elem> extend_non_zero_sum(const Field& field, std::span<const Elem> us, unsigned count);

struct Completion {
  std::vector<Elem> basis;  // the (possibly resampled) prefix followed by x
  Elem x = 0;
  std::uint64_t trials = 0;
};

/// Finds x with delta(us, x) != 0 and delta_1(us, x) = 0: the smallest
/// kernel vector of x -> delta_1(us, x) outside span(us). Trial 0 uses us
/// as given; later trials resample the last element of us. nullopt once
/// max_trials trials fail. Throws DependentInput.
std::optional<Completion> complete_to_zero_sum(const Field& field, std::span<const Elem> us,
                                               const SearchBudget& budget);

/// Single attempt of the completion above with us fixed; nullopt if the
/// kernel is exactly span(us).
std::optional<Elem> kernel_completion_step(const Field& field, std::span<const Elem> us);

/// F_{2^l}-span of f as an F_2-subspace. Throws NotADivisor.
Subspace subfield_span(const Field& field, const Subspace& f, unsigned l);

/// dim over F_{2^l} of the F_{2^l}-span of f. Throws NotADivisor.
unsigned span_dim_over_subfield(const Field& field, const Subspace& f, unsigned l);

/// One lift step f -> f + v F_{2^l}: v is the smallest root-derived
/// candidate with v^(2^l - 1) a root of
///   G(W) = sum_{0 != u in f} u^(2^l - 2) P(W) / (W + u^(2^l - 1)),
/// v outside F_{2^l} f, and the Moore criterion confirming the result.
/// Throws PreconditionViolated (l < 2, l does not divide n, f not
/// zero-sum, or no room for another F_{2^l}-direction).
std::optional<Subspace> lift_one(const Field& field, const Subspace& f, unsigned l, const SearchBudget& budget);

/// t applications of lift_one. Throws PreconditionViolated if
/// span_dim_over_subfield(f, l) + t > n / l.
std::optional<Subspace> lift_chain(const Field& field, const Subspace& f, unsigned l, unsigned t,
                                   const SearchBudget& budget);

/// Preimage lift: picks U containing F_{2^l} f with dim_{F_{2^l}} U = n/l - t,
/// takes the monic 2^l-polynomial B with P_U o B = X^(2^n) - X (so Im B = U
/// and ker B is a t-dimensional F_{2^l}-space) and returns B^{-1}(f). The
/// inverse sum over B^{-1}(f) is c * (sum over f) with c != 0, so the
/// result is zero-sum of dimension dim f + t l with F_{2^l}-span
/// dimension s + t. Throws PreconditionViolated.
Subspace lift_preimage(const Field& field, const Subspace& f, unsigned l, unsigned t);

/// The seed step of the pipeline: l' - 1 elements of F_{2^l} (just (1)
/// when l' = 1), extended to a non-zero-sum l'-tuple, then completed by a
/// seeded x_2 and a kernel vector x_1 to an (l' + 2)-dimensional zero-sum
/// subspace. Trial i draws x_2 from SplitMix64(seed ^ i).
struct SeedResult {
  Subspace space;
  std::vector<Elem> tuple;  // u_1..u_l', x_2, x_1
  std::uint64_t trials = 0;
};
std::optional<SeedResult> pipeline_seed(const Field& field, unsigned l, unsigned l_prime,
                                        const SearchBudget& budget);

enum class BuildStatus { Certificate, NotExist, NoSolution };

struct BuildOptions {
  bool subfield_space = true;
  bool pipeline = true;
  bool kernel_completion = true;
  bool exhaustive = true;
};

struct BuildResult {
  BuildStatus status = BuildStatus::NoSolution;
  std::optional<ZeroSumCertificate> certificate;
  std::string note;
  std::uint64_t trials = 0;
};

/// Strategy ladder, first success wins:
///   (0) NotExist for k in {1, n-1}, and k in {2, n-2} when n is odd;
///   (1) an F_{2^d}-subspace when d >= 2 divides both n and k;
///   (2) pipeline: seed of dimension r in [3, l+2] lifted t steps,
///       k = t l + r, l the least prime divisor of n (then the other
///       proper divisors);
///   (3) kernel completion of random (k-1)-tuples;
///   (4) exhaustive search for n <= 10.
/// Returned certificates have passed verify_certificate.
/// Throws DegreeOutOfRange, PreconditionViolated (k outside [1, n-1]).
BuildResult build_zero_sum(unsigned n, unsigned k, const SearchBudget& budget, const BuildOptions& options = {});

enum class CheckStatus { Pass, Fail, Skipped };

struct VerificationCheck {
  std::string name;     // modulus | independence | zero-sum | direct-sum
  CheckStatus status = CheckStatus::Skipped;
  std::string failure;  // ModulusMismatch, IndependenceFailure, ZeroSumFailure, DirectSumMismatch
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool ok() const noexcept;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

/// Checks an untrusted certificate; never throws on bad content.
VerificationReport verify_certificate(const ZeroSumCertificate& cert, unsigned direct_max_k = 20);

}  // namespace zerosum

#endif
