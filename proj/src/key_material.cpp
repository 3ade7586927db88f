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

#include "safencrypt/key_material.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <ostream>
#include <string>
#include <utility>

#include "cipher_backend.hpp"

namespace safencrypt {

SymmetricKey::SymmetricKey(std::vector<std::uint8_t> bytes,
                           std::optional<AlgorithmId> bound_algorithm)
    : bytes_(std::move(bytes)), bound_algorithm_(std::move(bound_algorithm)) {}

SymmetricKey SymmetricKey::from_bytes(
    std::vector<std::uint8_t> bytes,
    std::optional<AlgorithmId> bound_algorithm) {
  return SymmetricKey(std::move(bytes), std::move(bound_algorithm));
}

void SymmetricKey::wipe() {
  if (!bytes_.empty()) {
    OPENSSL_cleanse(bytes_.data(), bytes_.size());
  }
  bytes_.clear();
}

SymmetricKey::SymmetricKey(const SymmetricKey& other) = default;

SymmetricKey& SymmetricKey::operator=(const SymmetricKey& other) {
  if (this != &other) {
    wipe();
    bytes_ = other.bytes_;
    bound_algorithm_ = other.bound_algorithm_;
  }
  return *this;
}

SymmetricKey::SymmetricKey(SymmetricKey&& other) noexcept
    : bytes_(std::move(other.bytes_)),
      bound_algorithm_(std::move(other.bound_algorithm_)) {
  other.bytes_.clear();
}

SymmetricKey& SymmetricKey::operator=(SymmetricKey&& other) noexcept {
  if (this != &other) {
    wipe();
    bytes_ = std::move(other.bytes_);
    bound_algorithm_ = std::move(other.bound_algorithm_);
    other.bytes_.clear();
  }
  return *this;
}

SymmetricKey::~SymmetricKey() { wipe(); }

std::ostream& operator<<(std::ostream& os, const SymmetricKey& key) {
  return os << "SymmetricKey(" << key.size() << " bytes, redacted)";
}

SymmetricKey generate_key(const AlgorithmId& algorithm,
                          const Registry& registry) {
  registry.validate_whitelisted(algorithm);
  return SymmetricKey::from_bytes(
      detail::random_bytes(algorithm.key_bytes(), registry.error_catalog()),
      algorithm);
}

PbeDerivation derive_key(std::string_view password,
                         const AlgorithmId& algorithm,
                         const Registry& registry,
                         std::optional<std::span<const std::uint8_t>> salt,
                         std::optional<KeyDerivationPrf> prf) {
  registry.validate_whitelisted(algorithm);
  const ErrorCatalog& catalog = registry.error_catalog();
  const KdfConfig& kdf = registry.kdf();

  if (password.empty()) {
    throw make_error(catalog, codes::kEmptyPassword, ErrorPhase::kKeyBinding);
  }

  std::vector<std::uint8_t> salt_bytes;
  if (salt) {
    if (salt->size() != static_cast<std::size_t>(kdf.salt_bytes)) {
      throw make_error(catalog, codes::kSaltLength, ErrorPhase::kKeyBinding,
                       {{"n", std::to_string(salt->size())},
                        {"m", std::to_string(kdf.salt_bytes)}});
    }
    salt_bytes.assign(salt->begin(), salt->end());
  } else {
    salt_bytes = detail::random_bytes(
        static_cast<std::size_t>(kdf.salt_bytes), catalog);
  }

  KeyDerivationPrf chosen_prf = prf.value_or(kdf.default_algorithm);
  const EVP_MD* digest = chosen_prf == KeyDerivationPrf::kHmacSha256
                             ? EVP_sha256()
                             : EVP_sha512();

  std::vector<std::uint8_t> derived(algorithm.key_bytes());
  if (PKCS5_PBKDF2_HMAC(password.data(), static_cast<int>(password.size()),
                        salt_bytes.data(),
                        static_cast<int>(salt_bytes.size()),
                        static_cast<int>(kdf.iterations), digest,
                        static_cast<int>(derived.size()),
                        derived.data()) != 1) {
    throw map_backend_error("OpensslKdfError", "PBKDF2 derivation failed",
                            ErrorPhase::kKeyBinding, catalog);
  }

  return PbeDerivation{SymmetricKey::from_bytes(std::move(derived), algorithm),
                       std::move(salt_bytes), chosen_prf, kdf.iterations};
}

void validate_key_length(const SymmetricKey& key, const AlgorithmId& algorithm,
                         const ErrorCatalog& catalog) {
  if (key.size() != algorithm.key_bytes()) {
    throw make_error(catalog, codes::kKeyLength, ErrorPhase::kKeyBinding,
                     {{"n", std::to_string(key.size())},
                      {"alg", algorithm.canonical()},
                      {"m", std::to_string(algorithm.key_bytes())}});
  }
}

}  // namespace safencrypt
