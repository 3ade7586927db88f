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

#include <string>
#include <vector>

#include "cipher_backend.hpp"
#include "safencrypt/cipher_engine.hpp"
#include "support/known_answer_vectors.hpp"
#include "support/test_util.hpp"

namespace safencrypt {
namespace {

using test_util::bytes_of;
using test_util::from_hex;
using test_util::to_hex;

const Registry& shipped() {
  static const Registry registry = Registry::load_shipped();
  return registry;
}

TEST_CASE("every known-answer vector encrypts and decrypts exactly") {
  for (const auto& kat : test_vectors::kCipherKats) {
    CAPTURE(kat.algorithm, kat.key_hex, kat.plaintext_hex);
    const AlgorithmId algorithm = AlgorithmId::parse(kat.algorithm);
    const ModeConstraints& constraints = shipped().constraints_for(algorithm);
    const auto key = from_hex(kat.key_hex);
    const auto iv = from_hex(kat.iv_hex);
    const auto plaintext = from_hex(kat.plaintext_hex);

    const std::vector<std::uint8_t> ciphertext = detail::encrypt_with_iv(
        algorithm, key, iv, plaintext, constraints, shipped().error_catalog());
    CHECK(to_hex(ciphertext) == kat.ciphertext_hex);

    const std::vector<std::uint8_t> recovered = detail::decrypt_with_iv(
        algorithm, key, iv, from_hex(kat.ciphertext_hex), constraints,
        shipped().error_catalog());
    CHECK(to_hex(recovered) == kat.plaintext_hex);
  }
}

TEST_CASE("one-shot encryption round-trips for every whitelisted algorithm") {
  const std::vector<std::uint8_t> plaintext = bytes_of("Hello World");
  for (SymmetricAlgorithm algorithm : supported_algorithms()) {
    const AlgorithmId id = algorithm_id(algorithm);
    CAPTURE(id.canonical());
    const SymmetricKey key = generate_key(id, shipped());
    const SymmetricCipherResult result =
        encrypt(id, key, plaintext, shipped());
    CHECK(result.algorithm == id);
    CHECK_FALSE(result.pbe.has_value());
    CHECK(decrypt(id, key, result.iv, result.ciphertext, shipped()) ==
          plaintext);
  }
}

TEST_CASE("IVs are internally generated, fresh, and of configured length") {
  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_128_NoPadding");
  const AlgorithmId cbc = AlgorithmId::parse("AES_CBC_128_PKCS5Padding");
  CHECK(generate_iv(gcm, shipped()).size() == 12);
  CHECK(generate_iv(cbc, shipped()).size() == 16);

  const SymmetricKey key = generate_key(gcm, shipped());
  const auto a = encrypt(gcm, key, bytes_of("same input"), shipped());
  const auto b = encrypt(gcm, key, bytes_of("same input"), shipped());
  CHECK(a.iv != b.iv);
  CHECK(a.ciphertext != b.ciphertext);
}

TEST_CASE("ciphertext layout: CBC pads, GCM appends the 96-bit tag") {
  const std::vector<std::uint8_t> plaintext(32, 0x20);

  const AlgorithmId cbc = AlgorithmId::parse("AES_CBC_256_PKCS7Padding");
  const SymmetricKey cbc_key = generate_key(cbc, shipped());
  // Block-aligned input still gains a full padding block.
  CHECK(encrypt(cbc, cbc_key, plaintext, shipped()).ciphertext.size() == 48);

  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_256_NoPadding");
  const SymmetricKey gcm_key = generate_key(gcm, shipped());
  CHECK(encrypt(gcm, gcm_key, plaintext, shipped()).ciphertext.size() ==
        32 + 12);
  CHECK(encrypt(gcm, gcm_key, {}, shipped()).ciphertext.size() == 12);
}

TEST_CASE("empty plaintext round-trips in both modes") {
  for (const char* name :
       {"AES_CBC_128_PKCS5Padding", "AES_GCM_128_NoPadding"}) {
    const AlgorithmId id = AlgorithmId::parse(name);
    const SymmetricKey key = generate_key(id, shipped());
    const auto result = encrypt(id, key, {}, shipped());
    CHECK(decrypt(id, key, result.iv, result.ciphertext, shipped()).empty());
  }
}

TEST_CASE("fail-fast validation happens before any cipher work") {
  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_256_NoPadding");
  const SymmetricKey key = generate_key(gcm, shipped());
  const auto result = encrypt(gcm, key, bytes_of("payload"), shipped());

  // Wrong key length.
  const SymmetricKey short_key =
      SymmetricKey::from_bytes(std::vector<std::uint8_t>(23, 0x01));
  try {
    (void)encrypt(gcm, short_key, bytes_of("x"), shipped());
    FAIL("expected SAF_003");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kKeyLength);
    CHECK(error.phase() == ErrorPhase::kKeyBinding);
  }

  // Wrong IV length.
  try {
    (void)decrypt(gcm, key, std::vector<std::uint8_t>(16, 0),
                  result.ciphertext, shipped());
    FAIL("expected SAF_004");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kIvLength);
    CHECK(error.phase() == ErrorPhase::kIvBinding);
  }

  // Ciphertext shorter than the GCM tag.
  try {
    (void)decrypt(gcm, key, result.iv, std::vector<std::uint8_t>(11, 0),
                  shipped());
    FAIL("expected SAF_005");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kCiphertextLength);
  }

  // CBC ciphertext that is not a positive multiple of the block size.
  const AlgorithmId cbc = AlgorithmId::parse("AES_CBC_128_PKCS5Padding");
  const SymmetricKey cbc_key = generate_key(cbc, shipped());
  for (std::size_t bad_length : {0u, 15u, 17u}) {
    try {
      (void)decrypt(cbc, cbc_key, std::vector<std::uint8_t>(16, 0),
                    std::vector<std::uint8_t>(bad_length, 0), shipped());
      FAIL("expected SAF_005 for length " << bad_length);
    } catch (const SafError& error) {
      CHECK(error.code() == codes::kCiphertextLength);
    }
  }
}

TEST_CASE("CBC decryption with the wrong key reports a mismatch, not bytes") {
  // Frozen inputs: this wrong key is known to produce an invalid trailer
  // for this exact ciphertext. (A random wrong key would be right ~255
  // times out of 256 but could land on valid-looking padding.)
  const AlgorithmId cbc = AlgorithmId::parse("AES_CBC_128_PKCS5Padding");
  const ModeConstraints& constraints = shipped().constraints_for(cbc);
  const auto key = from_hex("000102030405060708090a0b0c0d0e0f");
  const auto wrong = from_hex("0f0e0d0c0b0a09080706050403020100");
  const auto iv = from_hex("00000000000000000000000000000000");
  const auto plaintext = bytes_of("attack at dawn");

  const auto ciphertext = detail::encrypt_with_iv(
      cbc, key, iv, plaintext, constraints, shipped().error_catalog());
  try {
    (void)detail::decrypt_with_iv(cbc, wrong, iv, ciphertext, constraints,
                                  shipped().error_catalog());
    FAIL("expected SAF_010");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecryptMismatch);
    REQUIRE(error.backend().has_value());
    CHECK(error.backend()->message == "Given final block not properly padded");
  }
}

TEST_CASE("CBC tamper in the penultimate block corrupts the trailer") {
  // Flipping a bit in ciphertext block k XORs straight into plaintext block
  // k+1, so a flip in the last byte of the penultimate block is guaranteed
  // to land in the padding trailer.
  const AlgorithmId cbc = AlgorithmId::parse("AES_CBC_128_PKCS5Padding");
  const SymmetricKey key = generate_key(cbc, shipped());
  const auto result =
      encrypt(cbc, key, std::vector<std::uint8_t>(32, 0x61), shipped());
  REQUIRE(result.ciphertext.size() == 48);

  auto tampered = result.ciphertext;
  tampered[tampered.size() - 17] ^= 0x01;  // last byte of block 2 of 3
  try {
    (void)decrypt(cbc, key, result.iv, tampered, shipped());
    FAIL("expected SAF_010");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecryptMismatch);
  }
}

TEST_CASE("GCM releases nothing on tamper: ciphertext, tag, or IV") {
  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_128_NoPadding");
  const SymmetricKey key = generate_key(gcm, shipped());
  const auto result = encrypt(gcm, key, bytes_of("authenticated"), shipped());

  auto expect_mismatch = [&](std::vector<std::uint8_t> iv,
                             std::vector<std::uint8_t> ciphertext) {
    try {
      (void)decrypt(gcm, key, iv, ciphertext, shipped());
      FAIL("expected SAF_010");
    } catch (const SafError& error) {
      CHECK(error.code() == codes::kDecryptMismatch);
    }
  };

  // Flip one bit in the ciphertext body, in the tag, and in the IV.
  auto body_tampered = result.ciphertext;
  body_tampered[0] ^= 0x01;
  expect_mismatch(result.iv, body_tampered);

  auto tag_tampered = result.ciphertext;
  tag_tampered.back() ^= 0x80;
  expect_mismatch(result.iv, tag_tampered);

  auto iv_tampered = result.iv;
  iv_tampered[5] ^= 0x10;
  expect_mismatch(iv_tampered, result.ciphertext);

  // Wrong key as well.
  const SymmetricKey wrong = generate_key(gcm, shipped());
  try {
    (void)decrypt(gcm, wrong, result.iv, result.ciphertext, shipped());
    FAIL("expected SAF_010");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kDecryptMismatch);
  }
}

TEST_CASE("PKCS#7 padding always appends and always strips") {
  for (std::size_t length = 0; length <= 48; ++length) {
    const std::vector<std::uint8_t> data(length, 0xee);
    const auto padded = pad_pkcs7(data);
    CHECK(padded.size() % 16 == 0);
    CHECK(padded.size() == (length / 16 + 1) * 16);
    const std::uint8_t pad = padded.back();
    CHECK(pad == padded.size() - length);
    CHECK(unpad_pkcs7(padded) == data);
  }
}

TEST_CASE("malformed padding trailers are rejected uniformly") {
  auto expect_invalid = [](std::vector<std::uint8_t> block) {
    try {
      (void)unpad_pkcs7(block);
      FAIL("expected InvalidPaddingError");
    } catch (const InvalidPaddingError& error) {
      CHECK(std::string(error.what()) ==
            "Given final block not properly padded");
    }
  };
  expect_invalid({});                                   // no block at all
  expect_invalid(std::vector<std::uint8_t>(16, 0x00));  // pad byte 0
  expect_invalid(std::vector<std::uint8_t>(16, 0x11));  // pad byte 17 > block
  std::vector<std::uint8_t> inconsistent(16, 0x04);
  inconsistent[13] = 0x05;  // one of the last four bytes disagrees
  expect_invalid(inconsistent);
  std::vector<std::uint8_t> offsize(15, 0x01);
  expect_invalid(offsize);  // not a multiple of the block size
}

TEST_CASE("backend works identically through fresh contexts (thread check)") {
  // Two interleaved contexts over the same algorithm must not share state.
  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_128_NoPadding");
  const ModeConstraints& constraints = shipped().constraints_for(gcm);
  const auto key = from_hex("000102030405060708090a0b0c0d0e0f");
  const auto iv_a = from_hex("000000000000000000000001");
  const auto iv_b = from_hex("000000000000000000000002");
  const auto plaintext = bytes_of("interleaved streams");

  const auto one_shot_a = detail::encrypt_with_iv(
      gcm, key, iv_a, plaintext, constraints, shipped().error_catalog());
  const auto one_shot_b = detail::encrypt_with_iv(
      gcm, key, iv_b, plaintext, constraints, shipped().error_catalog());

  detail::CipherContext ctx_a(detail::CipherContext::Direction::kEncrypt, gcm,
                              key, iv_a, constraints,
                              shipped().error_catalog());
  detail::CipherContext ctx_b(detail::CipherContext::Direction::kEncrypt, gcm,
                              key, iv_b, constraints,
                              shipped().error_catalog());
  std::vector<std::uint8_t> out_a;
  std::vector<std::uint8_t> out_b;
  ctx_a.update(std::span<const std::uint8_t>(plaintext).first(7), out_a);
  ctx_b.update(plaintext, out_b);
  ctx_a.update(std::span<const std::uint8_t>(plaintext).subspan(7), out_a);
  ctx_a.finish_encrypt(out_a);
  ctx_b.finish_encrypt(out_b);
  CHECK(out_a == one_shot_a);
  CHECK(out_b == one_shot_b);
}

}  // namespace
}  // namespace safencrypt
