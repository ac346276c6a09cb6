#include "doctest.h"
#include "zerosum/certificate.hpp"
#include "zerosum/construct.hpp"
#include "zerosum/error.hpp"

using namespace zerosum;

namespace {

ZeroSumCertificate sample() {
  ZeroSumCertificate c;
  c.n = 4;
  c.modulus = 0x13;
  c.k = 2;
  c.basis = {0x1, 0x6};
  c.method = Method::SubfieldSpace;
  c.seed = 0xffffffffffffffffULL;
  c.l = 2;
  c.s = 1;
  return c;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("schema order and encoding") {
  const std::string text = certificate_to_json(sample());
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "modulus", "k", "basis", "method", "seed", "l", "t", "s", "r"});
  CHECK(j["modulus"] == "13");
  CHECK(j["basis"][1] == "6");
  CHECK(j["method"] == "subfield-space");
  CHECK(j["seed"].get<std::uint64_t>() == 0xffffffffffffffffULL);
  CHECK(text.back() == '\n');
}

TEST_CASE("round trip") {
  const ZeroSumCertificate c = sample();
  CHECK(certificate_from_json(certificate_to_json(c)) == c);
  for (Method m : {Method::SubfieldSpace, Method::Pipeline, Method::KernelCompletion, Method::Lift,
                   Method::Exhaustive}) {
    CHECK(parse_method(method_name(m)) == m);
    ZeroSumCertificate d = c;
    d.method = m;
    CHECK(certificate_from_json(certificate_to_json(d)) == d);
  }
  CHECK_FALSE(parse_method("magic").has_value());

  const BuildResult r = build_zero_sum(49, 23, SearchBudget{});
  REQUIRE(r.certificate.has_value());
  const std::string text = certificate_to_json(*r.certificate);
  const ZeroSumCertificate back = certificate_from_json(text);
  CHECK(back == *r.certificate);
  CHECK(certificate_to_json(back) == text);
  CHECK(verify_certificate(back).ok());
}

TEST_CASE("malformed certificates are rejected") {
  auto with = [](const char* key, nlohmann::ordered_json v) {
    auto j = certificate_to_json_value(sample());
    j[key] = std::move(v);
    return j.dump();
  };
  auto without = [](const char* key) {
    auto j = certificate_to_json_value(sample());
    j.erase(key);
    return j.dump();
  };
  CHECK(code_of([&] { certificate_from_json("{"); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json("[]"); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(without("basis")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(without("seed")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("modulus", "0x13")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("modulus", "013")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("modulus", "1B")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("modulus", 19)); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("n", -4)); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("n", "4")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("method", "guess")); }) == Errc::ParseError);
  CHECK(code_of([&] { certificate_from_json(with("basis", "1")); }) == Errc::ParseError);
  CHECK(code_of([&] {
          certificate_from_json(with("basis", nlohmann::ordered_json::array({"1", "10000000000000000"})));
        }) == Errc::ParseError);
}

TEST_CASE("a parsed but wrong certificate fails verification rather than parsing") {
  const std::string text = R"({"n": 4, "modulus": "13", "k": 2, "basis": ["6", "6"], "method": "exhaustive",
                               "seed": 0, "l": 0, "t": 0, "s": 0, "r": 0})";
  const ZeroSumCertificate c = certificate_from_json(text);
  CHECK_FALSE(verify_certificate(c).ok());
}
