// Copyright 2026 The SafEncrypt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "safencrypt/encoding.hpp"
#include "support/test_util.hpp"

namespace safencrypt {
namespace {

using test_util::bytes_of;

TEST_CASE("base64 known answers") {
  CHECK(encode_bytes(bytes_of("Hello World"), WireFormat::kBase64) ==
        "SGVsbG8gV29ybGQ=");
  CHECK(decode_bytes("SGVsbG8gV29ybGQ=", WireFormat::kBase64) ==
        bytes_of("Hello World"));
  // All padding amounts.
  CHECK(encode_bytes(bytes_of(""), WireFormat::kBase64) == "");
  CHECK(encode_bytes(bytes_of("f"), WireFormat::kBase64) == "Zg==");
  CHECK(encode_bytes(bytes_of("fo"), WireFormat::kBase64) == "Zm8=");
  CHECK(encode_bytes(bytes_of("foo"), WireFormat::kBase64) == "Zm9v");
  CHECK(encode_bytes(bytes_of("foob"), WireFormat::kBase64) == "Zm9vYg==");
  CHECK(encode_bytes(bytes_of("fooba"), WireFormat::kBase64) == "Zm9vYmE=");
  CHECK(encode_bytes(bytes_of("foobar"), WireFormat::kBase64) == "Zm9vYmFy");
}

TEST_CASE("hex known answers") {
  CHECK(encode_bytes(bytes_of("Hello World"), WireFormat::kHex) ==
        "48656c6c6f20576f726c64");
  CHECK(decode_bytes("48656c6c6f20576f726c64", WireFormat::kHex) ==
        bytes_of("Hello World"));
  CHECK(decode_bytes("48656C6C6F20576F726C64", WireFormat::kHex) ==
        bytes_of("Hello World"));
  CHECK(encode_bytes(std::vector<std::uint8_t>{0x00, 0xff, 0x10},
                     WireFormat::kHex) == "00ff10");
}

TEST_CASE("raw passes bytes through unchanged, including NUL") {
  const std::vector<std::uint8_t> data = {0x00, 0x01, 0xff, 0x00, 0x7f};
  const std::string encoded = encode_bytes(data, WireFormat::kRaw);
  REQUIRE(encoded.size() == data.size());
  CHECK(decode_bytes(encoded, WireFormat::kRaw) == data);
}

TEST_CASE("decode is the exact inverse of encode for every format") {
  std::mt19937 rng(0x5afe);
  for (WireFormat format :
       {WireFormat::kBase64, WireFormat::kHex, WireFormat::kRaw}) {
    for (std::size_t length : {0u, 1u, 2u, 3u, 15u, 16u, 17u, 255u, 4096u}) {
      std::vector<std::uint8_t> data(length);
      for (auto& byte : data) {
        byte = static_cast<std::uint8_t>(rng());
      }
      CHECK(decode_bytes(encode_bytes(data, format), format) == data);
    }
  }
}

TEST_CASE("malformed base64 reports the offending offset") {
  try {
    (void)decode_bytes("zz!", WireFormat::kBase64);
    FAIL("expected SAF_031");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecode);
    CHECK(error.message().find("[2]") != std::string::npos);
    CHECK(error.message().find("base64") != std::string::npos);
  }
}

TEST_CASE("base64 length and padding rules are enforced") {
  // Valid alphabet but not a multiple of four: reported at end of input.
  try {
    (void)decode_bytes("zzz", WireFormat::kBase64);
    FAIL("expected SAF_031");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecode);
    CHECK(error.message().find("[3]") != std::string::npos);
  }
  // '=' anywhere but the final one or two positions.
  CHECK_THROWS_AS(decode_bytes("ab=c", WireFormat::kBase64), SafError);
  CHECK_THROWS_AS(decode_bytes("a===", WireFormat::kBase64), SafError);
  CHECK_THROWS_AS(decode_bytes("====", WireFormat::kBase64), SafError);
  CHECK_THROWS_AS(decode_bytes("Zg==Zg==", WireFormat::kBase64), SafError);
  // Canonical forms still pass.
  CHECK_NOTHROW(decode_bytes("Zg==", WireFormat::kBase64));
  CHECK_NOTHROW(decode_bytes("Zm8=", WireFormat::kBase64));
}

TEST_CASE("malformed hex reports the offending offset") {
  try {
    (void)decode_bytes("0g", WireFormat::kHex);
    FAIL("expected SAF_031");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecode);
    CHECK(error.message().find("[1]") != std::string::npos);
    CHECK(error.message().find("hex") != std::string::npos);
  }
  try {
    (void)decode_bytes("abc", WireFormat::kHex);
    FAIL("expected SAF_031");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecode);
    CHECK(error.message().find("[3]") != std::string::npos);
  }
}

TEST_CASE("format names parse and print") {
  CHECK(to_string(WireFormat::kBase64) == "base64");
  CHECK(to_string(WireFormat::kHex) == "hex");
  CHECK(to_string(WireFormat::kRaw) == "raw");
  CHECK(parse_wire_format("base64") == WireFormat::kBase64);
  CHECK(parse_wire_format("hex") == WireFormat::kHex);
  CHECK(parse_wire_format("raw") == WireFormat::kRaw);
  CHECK_FALSE(parse_wire_format("yaml").has_value());
}

}  // namespace
}  // namespace safencrypt
