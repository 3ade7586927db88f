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
//
// Staged encryption/decryption pipelines. Each stage is a distinct type
// exposing only the legal next steps, every step consumes the stage
// (&&-qualified, move-only), and every input is validated the moment it is
// bound — never later. Skipping a stage is a compile error, not a runtime
// one:
//
//   auto result = symmetric_encryption()
//                     .generate_key()
//                     .plaintext("Hello World")
//                     .encrypt();
//
//   auto plain = symmetric_decryption(result.algorithm)
//                    .key(result.key)
//                    .iv(result.iv)
//                    .cipher_text(result.ciphertext)
//                    .decrypt();

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "safencrypt/algorithm.hpp"
#include "safencrypt/cipher_engine.hpp"
#include "safencrypt/key_material.hpp"
#include "safencrypt/registry.hpp"

namespace safencrypt {

class EncryptionBuilder;
class KeyedEncryptionBuilder;
class ReadyEncryptionBuilder;
class DecryptionBuilder;
class KeyedDecryptionBuilder;
class IvBoundDecryptionBuilder;
class ReadyDecryptionBuilder;

// --- Entry points ----------------------------------------------------------
// Each entry point validates its algorithm against the whitelist before any
// key material exists, and emits warning SAF_011 (once per pipeline) when
// the chosen mode is CBC. The registry must outlive the pipeline.

EncryptionBuilder symmetric_encryption();
EncryptionBuilder symmetric_encryption(const AlgorithmId& algorithm);
EncryptionBuilder symmetric_encryption(const Registry& registry);
EncryptionBuilder symmetric_encryption(const Registry& registry,
                                       const AlgorithmId& algorithm);

// Pipeline pre-configured from an interoperability profile's default
// algorithm and constraints. Deliberately a separate entry point: callers
// state the foreign peer, not cipher minutiae.
EncryptionBuilder symmetric_interop(std::string_view language);
EncryptionBuilder symmetric_interop(const Registry& registry,
                                    std::string_view language);

DecryptionBuilder symmetric_decryption();
DecryptionBuilder symmetric_decryption(const AlgorithmId& algorithm);
DecryptionBuilder symmetric_decryption(const Registry& registry);
DecryptionBuilder symmetric_decryption(const Registry& registry,
                                       const AlgorithmId& algorithm);

DecryptionBuilder symmetric_interop_decryption(std::string_view language);
DecryptionBuilder symmetric_interop_decryption(const Registry& registry,
                                               std::string_view language);

// --- Encryption stages ------------------------------------------------------

// Stage: algorithm chosen. The only legal next step is binding a key.
class EncryptionBuilder {
 public:
  EncryptionBuilder(const EncryptionBuilder&) = delete;
  EncryptionBuilder& operator=(const EncryptionBuilder&) = delete;
  EncryptionBuilder(EncryptionBuilder&&) noexcept = default;
  EncryptionBuilder& operator=(EncryptionBuilder&&) noexcept = default;

  // Fresh random key of the algorithm's exact length.
  KeyedEncryptionBuilder generate_key() &&;

  // Caller-supplied key; length-checked here (SAF_003), not at encrypt().
  KeyedEncryptionBuilder key(SymmetricKey key) &&;

  // PBKDF2 derivation with a fresh salt at the configured length; the salt
  // travels in the result (SymmetricCipherResult::pbe).
  KeyedEncryptionBuilder password(std::string_view password) &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend EncryptionBuilder symmetric_encryption(const Registry&,
                                                const AlgorithmId&);
  friend EncryptionBuilder symmetric_interop(const Registry&,
                                             std::string_view);

  EncryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                    ModeConstraints constraints);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
};

// Stage: key bound. The only legal next step is binding the plaintext.
class KeyedEncryptionBuilder {
 public:
  KeyedEncryptionBuilder(const KeyedEncryptionBuilder&) = delete;
  KeyedEncryptionBuilder& operator=(const KeyedEncryptionBuilder&) = delete;
  KeyedEncryptionBuilder(KeyedEncryptionBuilder&&) noexcept = default;
  KeyedEncryptionBuilder& operator=(KeyedEncryptionBuilder&&) noexcept =
      default;

  ReadyEncryptionBuilder plaintext(std::span<const std::uint8_t> data) &&;
  ReadyEncryptionBuilder plaintext(std::string_view text) &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend class EncryptionBuilder;

  KeyedEncryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                         ModeConstraints constraints, SymmetricKey key,
                         std::optional<PbeParameters> pbe);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
  SymmetricKey key_;
  std::optional<PbeParameters> pbe_;
};

// Stage: plaintext bound. Finishing performs the encryption under a fresh
// internally generated IV and consumes the pipeline.
class ReadyEncryptionBuilder {
 public:
  ReadyEncryptionBuilder(const ReadyEncryptionBuilder&) = delete;
  ReadyEncryptionBuilder& operator=(const ReadyEncryptionBuilder&) = delete;
  ReadyEncryptionBuilder(ReadyEncryptionBuilder&&) noexcept = default;
  ReadyEncryptionBuilder& operator=(ReadyEncryptionBuilder&&) noexcept =
      default;

  SymmetricCipherResult encrypt() &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend class KeyedEncryptionBuilder;

  ReadyEncryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                         ModeConstraints constraints, SymmetricKey key,
                         std::optional<PbeParameters> pbe,
                         std::vector<std::uint8_t> plaintext);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
  SymmetricKey key_;
  std::optional<PbeParameters> pbe_;
  std::vector<std::uint8_t> plaintext_;
};

// --- Decryption stages ------------------------------------------------------

// Stage: algorithm chosen.
class DecryptionBuilder {
 public:
  DecryptionBuilder(const DecryptionBuilder&) = delete;
  DecryptionBuilder& operator=(const DecryptionBuilder&) = delete;
  DecryptionBuilder(DecryptionBuilder&&) noexcept = default;
  DecryptionBuilder& operator=(DecryptionBuilder&&) noexcept = default;

  // Raw key binding, the primary flow; length-checked here (SAF_003).
  KeyedDecryptionBuilder key(SymmetricKey key) &&;

  // Convenience for password-based flows: re-derives the key from the
  // password and the salt recorded at encryption time.
  KeyedDecryptionBuilder password(
      std::string_view password, std::span<const std::uint8_t> salt,
      std::optional<KeyDerivationPrf> prf = std::nullopt) &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend DecryptionBuilder symmetric_decryption(const Registry&,
                                                const AlgorithmId&);
  friend DecryptionBuilder symmetric_interop_decryption(const Registry&,
                                                        std::string_view);

  DecryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                    ModeConstraints constraints);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
};

// Stage: key bound; the IV comes next.
class KeyedDecryptionBuilder {
 public:
  KeyedDecryptionBuilder(const KeyedDecryptionBuilder&) = delete;
  KeyedDecryptionBuilder& operator=(const KeyedDecryptionBuilder&) = delete;
  KeyedDecryptionBuilder(KeyedDecryptionBuilder&&) noexcept = default;
  KeyedDecryptionBuilder& operator=(KeyedDecryptionBuilder&&) noexcept =
      default;

  // Length-checked against the pipeline's constraints (SAF_004).
  IvBoundDecryptionBuilder iv(std::span<const std::uint8_t> iv) &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend class DecryptionBuilder;

  KeyedDecryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                         ModeConstraints constraints, SymmetricKey key);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
  SymmetricKey key_;
};

// Stage: IV bound; the ciphertext comes next.
class IvBoundDecryptionBuilder {
 public:
  IvBoundDecryptionBuilder(const IvBoundDecryptionBuilder&) = delete;
  IvBoundDecryptionBuilder& operator=(const IvBoundDecryptionBuilder&) =
      delete;
  IvBoundDecryptionBuilder(IvBoundDecryptionBuilder&&) noexcept = default;
  IvBoundDecryptionBuilder& operator=(IvBoundDecryptionBuilder&&) noexcept =
      default;

  // Length-checked for the mode (SAF_005): CBC needs a positive multiple of
  // 16, GCM at least the tag.
  ReadyDecryptionBuilder cipher_text(std::span<const std::uint8_t> data) &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend class KeyedDecryptionBuilder;

  IvBoundDecryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                           ModeConstraints constraints, SymmetricKey key,
                           std::vector<std::uint8_t> iv);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
  SymmetricKey key_;
  std::vector<std::uint8_t> iv_;
};

// Stage: everything bound. Finishing performs the decryption and consumes
// the pipeline.
class ReadyDecryptionBuilder {
 public:
  ReadyDecryptionBuilder(const ReadyDecryptionBuilder&) = delete;
  ReadyDecryptionBuilder& operator=(const ReadyDecryptionBuilder&) = delete;
  ReadyDecryptionBuilder(ReadyDecryptionBuilder&&) noexcept = default;
  ReadyDecryptionBuilder& operator=(ReadyDecryptionBuilder&&) noexcept =
      default;

  std::vector<std::uint8_t> decrypt() &&;

  const AlgorithmId& algorithm() const { return algorithm_; }

 private:
  friend class IvBoundDecryptionBuilder;

  ReadyDecryptionBuilder(const Registry& registry, AlgorithmId algorithm,
                         ModeConstraints constraints, SymmetricKey key,
                         std::vector<std::uint8_t> iv,
                         std::vector<std::uint8_t> ciphertext);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
  SymmetricKey key_;
  std::vector<std::uint8_t> iv_;
  std::vector<std::uint8_t> ciphertext_;
};

}  // namespace safencrypt
