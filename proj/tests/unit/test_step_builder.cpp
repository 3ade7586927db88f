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
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "safencrypt/step_builder.hpp"
#include "support/test_util.hpp"

namespace safencrypt {
namespace {

using test_util::bytes_of;
using test_util::WarningCapture;

const Registry& shipped() {
  static const Registry registry = Registry::load_shipped();
  return registry;
}

Registry without_gcm256() {
  ConfigDocuments documents = ConfigDocuments::shipped();
  nlohmann::json symmetric = nlohmann::json::parse(documents.symmetric);
  nlohmann::json narrowed = nlohmann::json::array();
  for (const auto& name : symmetric["symmetric-algorithms"]) {
    if (name != "AES_GCM_256_NoPadding") narrowed.push_back(name);
  }
  symmetric["symmetric-algorithms"] = narrowed;
  documents.symmetric = symmetric.dump();
  // CSharp's profile defaults to the dropped algorithm; retarget it so the
  // narrowed registry stays loadable.
  nlohmann::json interop = nlohmann::json::parse(documents.interop);
  interop["interoperable-languages"]["CSharp"]["symmetric"]["default-algo"] =
      "AES_GCM_128_NoPadding";
  documents.interop = interop.dump();
  CompiledEnums enums = CompiledEnums::standard();
  std::erase(enums.symmetric_algorithms, "AES_GCM_256_NoPadding");
  return Registry::load(documents, enums);
}

TEST_CASE("the default chain encrypts Hello World and round-trips") {
  WarningCapture capture;
  auto result = symmetric_encryption()
                    .generate_key()
                    .plaintext("Hello World")
                    .encrypt();
  CHECK(result.algorithm.canonical() == "AES_GCM_128_NoPadding");
  CHECK(result.iv.size() == 12);
  CHECK(result.ciphertext.size() == 11 + 12);
  CHECK_FALSE(result.pbe.has_value());
  CHECK(capture.count_of(codes::kCbcWarning) == 0);

  auto plain = symmetric_decryption(result.algorithm)
                   .key(result.key)
                   .iv(result.iv)
                   .cipher_text(result.ciphertext)
                   .decrypt();
  CHECK(plain == bytes_of("Hello World"));
}

TEST_CASE("explicit-algorithm chains round-trip for the whole whitelist") {
  WarningCapture capture;
  for (SymmetricAlgorithm algorithm : supported_algorithms()) {
    const AlgorithmId id = algorithm_id(algorithm);
    CAPTURE(id.canonical());
    for (std::size_t size : {0u, 1u, 15u, 16u, 17u, 100u}) {
      const std::vector<std::uint8_t> payload(size, 0x61);
      auto result = symmetric_encryption(shipped(), id)
                        .generate_key()
                        .plaintext(payload)
                        .encrypt();
      auto plain = symmetric_decryption(shipped(), id)
                       .key(result.key)
                       .iv(result.iv)
                       .cipher_text(result.ciphertext)
                       .decrypt();
      CHECK(plain == payload);
    }
  }
}

TEST_CASE("password chains carry the salt and re-derive on decrypt") {
  auto result = symmetric_encryption()
                    .password("correct horse battery staple")
                    .plaintext("pbe payload")
                    .encrypt();
  REQUIRE(result.pbe.has_value());
  CHECK(result.pbe->salt.size() == 64);
  CHECK(result.pbe->iterations == 1024);
  CHECK(result.pbe->prf == KeyDerivationPrf::kHmacSha512);

  auto plain = symmetric_decryption(result.algorithm)
                   .password("correct horse battery staple", result.pbe->salt)
                   .iv(result.iv)
                   .cipher_text(result.ciphertext)
                   .decrypt();
  CHECK(plain == bytes_of("pbe payload"));
}

TEST_CASE("CBC pipelines warn exactly once, at construction") {
  WarningCapture capture;
  const AlgorithmId cbc = AlgorithmId::parse("AES_CBC_256_PKCS7Padding");
  auto builder = symmetric_encryption(shipped(), cbc);
  CHECK(capture.count_of(codes::kCbcWarning) == 1);

  auto result =
      std::move(builder).generate_key().plaintext("warn once").encrypt();
  CHECK(capture.count_of(codes::kCbcWarning) == 1);

  auto plain = symmetric_decryption(shipped(), cbc)
                   .key(result.key)
                   .iv(result.iv)
                   .cipher_text(result.ciphertext)
                   .decrypt();
  CHECK(plain == bytes_of("warn once"));
  // The decryption pipeline is its own pipeline: one more warning.
  CHECK(capture.count_of(codes::kCbcWarning) == 2);

  const std::string rendered = render(capture.warnings()[0]);
  CHECK(rendered ==
        "[SAF_011 : Usage of Algorithm [AES/CBC] is insecure in "
        "client-server architecture]");
}

TEST_CASE("GCM pipelines do not warn") {
  WarningCapture capture;
  auto result = symmetric_encryption(shipped(),
                                     AlgorithmId::parse("AES_GCM_256_NoPadding"))
                    .generate_key()
                    .plaintext("quiet")
                    .encrypt();
  CHECK(result.iv.size() == 12);
  CHECK(capture.warnings().empty());
}

TEST_CASE("a short key fails at the key step, not at encrypt") {
  auto builder = symmetric_encryption(
      shipped(), AlgorithmId::parse("AES_GCM_256_NoPadding"));
  const SymmetricKey short_key =
      SymmetricKey::from_bytes(std::vector<std::uint8_t>(23, 0x01));
  try {
    (void)std::move(builder).key(short_key);
    FAIL("expected SAF_003 at the key step");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kKeyLength);
    CHECK(error.phase() == ErrorPhase::kKeyBinding);
    CHECK(render(error) ==
          "[SAF_003 : Provided Key With Length [23] bytes is not compatible "
          "with selected algorithm [AES_GCM_256_NoPadding], it should be "
          "exact [32] bytes long]");
  }
}

TEST_CASE("algorithm mismatch between encrypt and decrypt is caught early") {
  // Encrypted under GCM-128; the decryptor selects GCM-256 and binds the
  // 16-byte key: refused at the key step with the exact expected length.
  auto result = symmetric_encryption(
                    shipped(), AlgorithmId::parse("AES_GCM_128_NoPadding"))
                    .generate_key()
                    .plaintext("mismatch")
                    .encrypt();
  auto decryptor = symmetric_decryption(
      shipped(), AlgorithmId::parse("AES_GCM_256_NoPadding"));
  try {
    (void)std::move(decryptor).key(result.key);
    FAIL("expected SAF_003 at the key step");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kKeyLength);
    CHECK(error.message().find("[16]") != std::string::npos);
    CHECK(error.message().find("[32]") != std::string::npos);
  }
}

TEST_CASE("wrong IV and ciphertext lengths fail at their own steps") {
  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_128_NoPadding");
  auto result = symmetric_encryption(shipped(), gcm)
                    .generate_key()
                    .plaintext("fail fast")
                    .encrypt();

  auto keyed = symmetric_decryption(shipped(), gcm).key(result.key);
  try {
    (void)std::move(keyed).iv(std::vector<std::uint8_t>(16, 0));
    FAIL("expected SAF_004 at the iv step");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kIvLength);
    CHECK(error.phase() == ErrorPhase::kIvBinding);
  }

  auto iv_bound =
      symmetric_decryption(shipped(), gcm).key(result.key).iv(result.iv);
  try {
    (void)std::move(iv_bound).cipher_text(std::vector<std::uint8_t>(4, 0));
    FAIL("expected SAF_005 at the cipher_text step");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kCiphertextLength);
  }
}

TEST_CASE("pipelines refuse algorithms outside the whitelist at entry") {
  const Registry narrowed = without_gcm256();
  const AlgorithmId dropped = AlgorithmId::parse("AES_GCM_256_NoPadding");
  try {
    (void)symmetric_encryption(narrowed, dropped);
    FAIL("expected SAF_002 at pipeline entry");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kNotWhitelisted);
  }
  CHECK_THROWS_AS(symmetric_decryption(narrowed, dropped), SafError);
  // The rest of the whitelist still works there.
  CHECK_NOTHROW(symmetric_encryption(
      narrowed, AlgorithmId::parse("AES_GCM_128_NoPadding")));
}

TEST_CASE("empty passwords are refused at the password step") {
  auto builder = symmetric_encryption();
  try {
    (void)std::move(builder).password("");
    FAIL("expected SAF_006");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kEmptyPassword);
  }
}

TEST_CASE("interop pipelines adopt the profile algorithm and constraints") {
  WarningCapture capture;
  auto builder = symmetric_interop(shipped(), "Python");
  CHECK(builder.algorithm().canonical() == "AES_CBC_256_PKCS7Padding");
  CHECK(capture.count_of(codes::kCbcWarning) == 1);

  auto result =
      std::move(builder).generate_key().plaintext("for Python").encrypt();
  CHECK(result.iv.size() == 16);

  auto plain = symmetric_interop_decryption(shipped(), "Python")
                   .key(result.key)
                   .iv(result.iv)
                   .cipher_text(result.ciphertext)
                   .decrypt();
  CHECK(plain == bytes_of("for Python"));

  auto csharp = symmetric_interop(shipped(), "CSharp");
  CHECK(csharp.algorithm().canonical() == "AES_GCM_256_NoPadding");

  try {
    (void)symmetric_interop(shipped(), "Cobol");
    FAIL("expected SAF_008");
  } catch (const SafError& error) {
    CHECK(error.code() == codes::kUnknownProfile);
  }
}

TEST_CASE("interop and plain pipelines interoperate with the engine") {
  // What the staged pipeline produces, the one-shot engine accepts, and
  // vice versa — there is exactly one ciphertext dialect per algorithm.
  const AlgorithmId gcm = AlgorithmId::parse("AES_GCM_256_NoPadding");
  auto from_builder = symmetric_encryption(shipped(), gcm)
                          .generate_key()
                          .plaintext("one dialect")
                          .encrypt();
  CHECK(decrypt(gcm, from_builder.key, from_builder.iv,
                from_builder.ciphertext, shipped()) ==
        bytes_of("one dialect"));

  const SymmetricKey key = generate_key(gcm, shipped());
  const auto from_engine = encrypt(gcm, key, bytes_of("one dialect"),
                                   shipped());
  auto plain = symmetric_decryption(shipped(), gcm)
                   .key(key)
                   .iv(from_engine.iv)
                   .cipher_text(from_engine.ciphertext)
                   .decrypt();
  CHECK(plain == bytes_of("one dialect"));
}

// Typestate properties checked at compile time: stages cannot be copied,
// and consuming steps cannot be invoked on an lvalue stage.
static_assert(!std::is_copy_constructible_v<EncryptionBuilder>);
static_assert(!std::is_copy_constructible_v<KeyedEncryptionBuilder>);
static_assert(!std::is_copy_constructible_v<ReadyEncryptionBuilder>);
static_assert(!std::is_copy_constructible_v<DecryptionBuilder>);
static_assert(!std::is_copy_constructible_v<ReadyDecryptionBuilder>);
static_assert(std::is_move_constructible_v<EncryptionBuilder>);

template <typename T>
concept CanEncryptOnLvalue = requires(T& stage) { stage.encrypt(); };
template <typename T>
concept CanDecryptOnLvalue = requires(T& stage) { stage.decrypt(); };
static_assert(!CanEncryptOnLvalue<ReadyEncryptionBuilder>);
static_assert(!CanDecryptOnLvalue<ReadyDecryptionBuilder>);

}  // namespace
}  // namespace safencrypt
