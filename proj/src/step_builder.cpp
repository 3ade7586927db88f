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

#include "safencrypt/step_builder.hpp"

#include <utility>

#include "cipher_backend.hpp"

namespace safencrypt {

namespace {

// One warning per pipeline, on the warning channel, at construction: the
// earliest moment the insecure-mode choice is visible.
void warn_if_cbc(const AlgorithmId& algorithm, const Registry& registry) {
  if (algorithm.mode() == CipherMode::kCbc) {
    emit_warning(make_error(registry.error_catalog(), codes::kCbcWarning,
                            ErrorPhase::kConfig));
  }
}

}  // namespace

// --- Entry points ----------------------------------------------------------

EncryptionBuilder symmetric_encryption() {
  return symmetric_encryption(default_registry());
}

EncryptionBuilder symmetric_encryption(const AlgorithmId& algorithm) {
  return symmetric_encryption(default_registry(), algorithm);
}

EncryptionBuilder symmetric_encryption(const Registry& registry) {
  return symmetric_encryption(registry, registry.default_algorithm());
}

EncryptionBuilder symmetric_encryption(const Registry& registry,
                                       const AlgorithmId& algorithm) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  warn_if_cbc(algorithm, registry);
  return EncryptionBuilder(registry, algorithm, constraints);
}

EncryptionBuilder symmetric_interop(std::string_view language) {
  return symmetric_interop(default_registry(), language);
}

EncryptionBuilder symmetric_interop(const Registry& registry,
                                    std::string_view language) {
  const InteropProfile& profile = registry.interop_profile(language);
  warn_if_cbc(profile.default_algorithm, registry);
  return EncryptionBuilder(registry, profile.default_algorithm,
                           profile.constraints);
}

DecryptionBuilder symmetric_decryption() {
  return symmetric_decryption(default_registry());
}

DecryptionBuilder symmetric_decryption(const AlgorithmId& algorithm) {
  return symmetric_decryption(default_registry(), algorithm);
}

DecryptionBuilder symmetric_decryption(const Registry& registry) {
  return symmetric_decryption(registry, registry.default_algorithm());
}

DecryptionBuilder symmetric_decryption(const Registry& registry,
                                       const AlgorithmId& algorithm) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  warn_if_cbc(algorithm, registry);
  return DecryptionBuilder(registry, algorithm, constraints);
}

DecryptionBuilder symmetric_interop_decryption(std::string_view language) {
  return symmetric_interop_decryption(default_registry(), language);
}

DecryptionBuilder symmetric_interop_decryption(const Registry& registry,
                                               std::string_view language) {
  const InteropProfile& profile = registry.interop_profile(language);
  warn_if_cbc(profile.default_algorithm, registry);
  return DecryptionBuilder(registry, profile.default_algorithm,
                           profile.constraints);
}

// --- Encryption stages ------------------------------------------------------

EncryptionBuilder::EncryptionBuilder(const Registry& registry,
                                     AlgorithmId algorithm,
                                     ModeConstraints constraints)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints) {}

KeyedEncryptionBuilder EncryptionBuilder::generate_key() && {
  SymmetricKey fresh = safencrypt::generate_key(algorithm_, *registry_);
  return KeyedEncryptionBuilder(*registry_, std::move(algorithm_),
                                constraints_, std::move(fresh), std::nullopt);
}

KeyedEncryptionBuilder EncryptionBuilder::key(SymmetricKey key) && {
  validate_key_length(key, algorithm_, registry_->error_catalog());
  return KeyedEncryptionBuilder(*registry_, std::move(algorithm_),
                                constraints_, std::move(key), std::nullopt);
}

KeyedEncryptionBuilder EncryptionBuilder::password(
    std::string_view password) && {
  PbeDerivation derivation = derive_key(password, algorithm_, *registry_);
  PbeParameters pbe{std::move(derivation.salt), derivation.prf,
                    derivation.iterations};
  return KeyedEncryptionBuilder(*registry_, std::move(algorithm_),
                                constraints_, std::move(derivation.key),
                                std::move(pbe));
}

KeyedEncryptionBuilder::KeyedEncryptionBuilder(
    const Registry& registry, AlgorithmId algorithm,
    ModeConstraints constraints, SymmetricKey key,
    std::optional<PbeParameters> pbe)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints),
      key_(std::move(key)),
      pbe_(std::move(pbe)) {}

ReadyEncryptionBuilder KeyedEncryptionBuilder::plaintext(
    std::span<const std::uint8_t> data) && {
  return ReadyEncryptionBuilder(
      *registry_, std::move(algorithm_), constraints_, std::move(key_),
      std::move(pbe_), std::vector<std::uint8_t>(data.begin(), data.end()));
}

ReadyEncryptionBuilder KeyedEncryptionBuilder::plaintext(
    std::string_view text) && {
  return std::move(*this).plaintext(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

ReadyEncryptionBuilder::ReadyEncryptionBuilder(
    const Registry& registry, AlgorithmId algorithm,
    ModeConstraints constraints, SymmetricKey key,
    std::optional<PbeParameters> pbe, std::vector<std::uint8_t> plaintext)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints),
      key_(std::move(key)),
      pbe_(std::move(pbe)),
      plaintext_(std::move(plaintext)) {}

SymmetricCipherResult ReadyEncryptionBuilder::encrypt() && {
  // The pipeline's own constraints drive the cipher so interop overrides
  // stay in force; for plain pipelines these are the registry constraints,
  // which keeps builder output identical to direct engine calls.
  std::vector<std::uint8_t> iv = detail::random_bytes(
      constraints_.iv_length(), registry_->error_catalog());
  std::vector<std::uint8_t> ciphertext = detail::encrypt_with_iv(
      algorithm_, key_.bytes(), iv, plaintext_, constraints_,
      registry_->error_catalog());
  return SymmetricCipherResult{std::move(algorithm_), std::move(key_),
                               std::move(iv), std::move(ciphertext),
                               std::move(pbe_)};
}

// --- Decryption stages ------------------------------------------------------

DecryptionBuilder::DecryptionBuilder(const Registry& registry,
                                     AlgorithmId algorithm,
                                     ModeConstraints constraints)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints) {}

KeyedDecryptionBuilder DecryptionBuilder::key(SymmetricKey key) && {
  validate_key_length(key, algorithm_, registry_->error_catalog());
  return KeyedDecryptionBuilder(*registry_, std::move(algorithm_),
                                constraints_, std::move(key));
}

KeyedDecryptionBuilder DecryptionBuilder::password(
    std::string_view password, std::span<const std::uint8_t> salt,
    std::optional<KeyDerivationPrf> prf) && {
  PbeDerivation derivation =
      derive_key(password, algorithm_, *registry_, salt, prf);
  return KeyedDecryptionBuilder(*registry_, std::move(algorithm_),
                                constraints_, std::move(derivation.key));
}

KeyedDecryptionBuilder::KeyedDecryptionBuilder(const Registry& registry,
                                               AlgorithmId algorithm,
                                               ModeConstraints constraints,
                                               SymmetricKey key)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints),
      key_(std::move(key)) {}

IvBoundDecryptionBuilder KeyedDecryptionBuilder::iv(
    std::span<const std::uint8_t> iv) && {
  detail::validate_iv_length(iv.size(), algorithm_, constraints_,
                             registry_->error_catalog());
  return IvBoundDecryptionBuilder(
      *registry_, std::move(algorithm_), constraints_, std::move(key_),
      std::vector<std::uint8_t>(iv.begin(), iv.end()));
}

IvBoundDecryptionBuilder::IvBoundDecryptionBuilder(
    const Registry& registry, AlgorithmId algorithm,
    ModeConstraints constraints, SymmetricKey key, std::vector<std::uint8_t> iv)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints),
      key_(std::move(key)),
      iv_(std::move(iv)) {}

ReadyDecryptionBuilder IvBoundDecryptionBuilder::cipher_text(
    std::span<const std::uint8_t> data) && {
  detail::validate_ciphertext_length(data.size(), algorithm_, constraints_,
                                     registry_->error_catalog());
  return ReadyDecryptionBuilder(
      *registry_, std::move(algorithm_), constraints_, std::move(key_),
      std::move(iv_), std::vector<std::uint8_t>(data.begin(), data.end()));
}

ReadyDecryptionBuilder::ReadyDecryptionBuilder(
    const Registry& registry, AlgorithmId algorithm,
    ModeConstraints constraints, SymmetricKey key, std::vector<std::uint8_t> iv,
    std::vector<std::uint8_t> ciphertext)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints),
      key_(std::move(key)),
      iv_(std::move(iv)),
      ciphertext_(std::move(ciphertext)) {}

std::vector<std::uint8_t> ReadyDecryptionBuilder::decrypt() && {
  return detail::decrypt_with_iv(algorithm_, key_.bytes(), iv_, ciphertext_,
                                 constraints_, registry_->error_catalog());
}

}  // namespace safencrypt
