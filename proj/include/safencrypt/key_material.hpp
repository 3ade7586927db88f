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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "safencrypt/algorithm.hpp"
#include "safencrypt/registry.hpp"

namespace safencrypt {

// Secret key bytes. The storage is wiped on destruction, and stream output
// is redacted: no code path in the library ever formats key bytes into a
// log or error message.
class SymmetricKey {
 public:
  static SymmetricKey from_bytes(
      std::vector<std::uint8_t> bytes,
      std::optional<AlgorithmId> bound_algorithm = std::nullopt);

  SymmetricKey(const SymmetricKey& other);
  SymmetricKey& operator=(const SymmetricKey& other);
  SymmetricKey(SymmetricKey&& other) noexcept;
  SymmetricKey& operator=(SymmetricKey&& other) noexcept;
  ~SymmetricKey();

  std::span<const std::uint8_t> bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }
  const std::optional<AlgorithmId>& bound_algorithm() const {
    return bound_algorithm_;
  }

 private:
  SymmetricKey(std::vector<std::uint8_t> bytes,
               std::optional<AlgorithmId> bound_algorithm);

  void wipe();

  std::vector<std::uint8_t> bytes_;
  std::optional<AlgorithmId> bound_algorithm_;
};

// Always prints "SymmetricKey(<n> bytes, redacted)".
std::ostream& operator<<(std::ostream& os, const SymmetricKey& key);

// Everything produced by a password-based derivation. Re-deriving with the
// same (password, salt, prf, iterations, output length) reproduces the key
// exactly; the salt must therefore travel with the ciphertext.
struct PbeDerivation {
  SymmetricKey key;
  std::vector<std::uint8_t> salt;
  KeyDerivationPrf prf;
  std::uint32_t iterations;
};

// Fresh random key of exactly key_bits/8 bytes for a whitelisted algorithm.
// Throws SAF_002 (not whitelisted) or SAF_009 (entropy unavailable).
SymmetricKey generate_key(const AlgorithmId& algorithm,
                          const Registry& registry);

// PBKDF2 key derivation using the configured iteration count. The salt,
// when omitted, is freshly drawn at the configured length; when supplied it
// must be exactly that length. The derived key length is bound to the
// target algorithm. Throws SAF_002, SAF_006 (empty password), SAF_007 (salt
// length) or SAF_009.
PbeDerivation derive_key(
    std::string_view password, const AlgorithmId& algorithm,
    const Registry& registry,
    std::optional<std::span<const std::uint8_t>> salt = std::nullopt,
    std::optional<KeyDerivationPrf> prf = std::nullopt);

// Fail-fast key/algorithm compatibility check; throws SAF_003 with the
// exact configured message on a length mismatch.
void validate_key_length(const SymmetricKey& key, const AlgorithmId& algorithm,
                         const ErrorCatalog& catalog = ErrorCatalog::builtin());

}  // namespace safencrypt
