#ifndef ZEROSUM_CERTIFICATE_HPP
#define ZEROSUM_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zerosum/gf2n.hpp"

namespace zerosum {

enum class Method { SubfieldSpace, Pipeline, KernelCompletion, Lift, Exhaustive };

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view s) noexcept;

/// Checkable witness that F_{2^n} has a k-dimensional zero-sum subspace.
/// l is the subfield degree used (0 if none); t, s, r record a lift
/// (steps, F_{2^l}-span dimension of the seed, seed dimension).
struct ZeroSumCertificate {
  unsigned n = 0;
  Wide modulus = 0;
  unsigned k = 0;
  std::vector<Elem> basis;  // RREF order
  Method method = Method::Exhaustive;
  std::uint64_t seed = 0;
  unsigned l = 0;
  unsigned t = 0;
  unsigned s = 0;
  unsigned r = 0;

  friend bool operator==(const ZeroSumCertificate&, const ZeroSumCertificate&) = default;
};

nlohmann::ordered_json certificate_to_json_value(const ZeroSumCertificate& cert);
ZeroSumCertificate certificate_from_json_value(const nlohmann::ordered_json& j);

/// Pretty-printed JSON with keys in schema order and a trailing newline.
std::string certificate_to_json(const ZeroSumCertificate& cert);
/// Throws Error(ParseError) on malformed input or non-canonical hex.
ZeroSumCertificate certificate_from_json(std::string_view text);

}  // namespace zerosum

#endif
