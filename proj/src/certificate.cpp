#include "zerosum/certificate.hpp"

#include <array>
#include <limits>

#include "zerosum/error.hpp"

namespace zerosum {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::SubfieldSpace, "subfield-space"},
    {Method::Pipeline, "pipeline"},
    {Method::KernelCompletion, "kernel-completion"},
    {Method::Lift, "lift"},
    {Method::Exhaustive, "exhaustive"},
}};

Wide hex_field(const nlohmann::ordered_json& v, const char* what) {
  if (!v.is_string()) throw Error(Errc::ParseError, std::string(what) + " must be a hex string");
  const auto parsed = parse_hex(v.get<std::string>());
  if (!parsed) throw Error(Errc::ParseError, std::string(what) + " is not canonical lowercase hex");
  return *parsed;
}

template <class T>
T uint_field(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::ParseError, std::string("missing key ") + key);
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw Error(Errc::ParseError, std::string(key) + " must be a non-negative integer");
  const auto raw = v.get<std::uint64_t>();
  if (raw > std::numeric_limits<T>::max()) throw Error(Errc::ParseError, std::string(key) + " out of range");
  return static_cast<T>(raw);
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view s) noexcept {
  for (const auto& [method, name] : kMethodNames)
    if (name == s) return method;
  return std::nullopt;
}

nlohmann::ordered_json certificate_to_json_value(const ZeroSumCertificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.n;
  j["modulus"] = to_hex(cert.modulus);
  j["k"] = cert.k;
  auto basis = nlohmann::ordered_json::array();
  for (Elem b : cert.basis) basis.push_back(to_hex(b));
  j["basis"] = std::move(basis);
  j["method"] = std::string(method_name(cert.method));
  j["seed"] = cert.seed;
  j["l"] = cert.l;
  j["t"] = cert.t;
  j["s"] = cert.s;
  j["r"] = cert.r;
  return j;
}

ZeroSumCertificate certificate_from_json_value(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "certificate must be a JSON object");
  ZeroSumCertificate cert;
  cert.n = uint_field<unsigned>(j, "n");
  if (!j.contains("modulus")) throw Error(Errc::ParseError, "missing key modulus");
  cert.modulus = hex_field(j.at("modulus"), "modulus");
  cert.k = uint_field<unsigned>(j, "k");
  if (!j.contains("basis") || !j.at("basis").is_array()) throw Error(Errc::ParseError, "basis must be an array");
  for (const auto& b : j.at("basis")) {
    const Wide v = hex_field(b, "basis element");
    if (v >> 64 != 0) throw Error(Errc::ParseError, "basis element wider than 64 bits");
    cert.basis.push_back(static_cast<Elem>(v));
  }
  if (!j.contains("method") || !j.at("method").is_string()) throw Error(Errc::ParseError, "method must be a string");
  const auto method = parse_method(j.at("method").get<std::string>());
  if (!method) throw Error(Errc::ParseError, "unknown method " + j.at("method").get<std::string>());
  cert.method = *method;
  cert.seed = uint_field<std::uint64_t>(j, "seed");
  cert.l = uint_field<unsigned>(j, "l");
  cert.t = uint_field<unsigned>(j, "t");
  cert.s = uint_field<unsigned>(j, "s");
  cert.r = uint_field<unsigned>(j, "r");
  return cert;
}

std::string certificate_to_json(const ZeroSumCertificate& cert) {
  return certificate_to_json_value(cert).dump(2) + "\n";
}

ZeroSumCertificate certificate_from_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return certificate_from_json_value(j);
}

}  // namespace zerosum
