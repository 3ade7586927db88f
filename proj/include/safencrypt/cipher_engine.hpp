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
#include <optional>
#include <span>
#include <vector>

#include "safencrypt/algorithm.hpp"
#include "safencrypt/key_material.hpp"
#include "safencrypt/registry.hpp"

namespace safencrypt {

// Derivation parameters persisted alongside a password-based encryption so
// the peer can re-derive the key.
struct PbeParameters {
  std::vector<std::uint8_t> salt;
  KeyDerivationPrf prf;
  std::uint32_t iterations;

  friend bool operator==(const PbeParameters&, const PbeParameters&) = default;
};

// Everything a decryption needs, produced by a single encryption. The IV is
// carried separately and is never prepended to the ciphertext; for GCM the
// authentication tag is appended to the ciphertext.
struct SymmetricCipherResult {
  AlgorithmId algorithm;
  SymmetricKey key;
  std::vector<std::uint8_t> iv;
  std::vector<std::uint8_t> ciphertext;
  // Present only when the key came from a password.
  std::optional<PbeParameters> pbe;
};

// Fresh random IV of the configured length for a whitelisted algorithm.
std::vector<std::uint8_t> generate_iv(const AlgorithmId& algorithm,
                                      const Registry& registry);

// One-shot encryption under a fresh internally generated IV. CBC output is
// PKCS#7-padded; GCM output is ciphertext with the configured-length tag
// appended. Throws SAF_002 (not whitelisted), SAF_003 (key length) or a
// mapped backend error.
SymmetricCipherResult encrypt(const AlgorithmId& algorithm,
                              const SymmetricKey& key,
                              std::span<const std::uint8_t> plaintext,
                              const Registry& registry);

// One-shot decryption. Fail-fast validation covers whitelist membership,
// key length (SAF_003), IV length (SAF_004) and ciphertext length (SAF_005)
// before any cipher call; a padding or tag mismatch inside the backend
// surfaces as SAF_010. GCM releases no plaintext unless the tag verifies.
std::vector<std::uint8_t> decrypt(const AlgorithmId& algorithm,
                                  const SymmetricKey& key,
                                  std::span<const std::uint8_t> iv,
                                  std::span<const std::uint8_t> ciphertext,
                                  const Registry& registry);

// PKCS#7 padding over 16-byte blocks: always appends 1..block_size bytes,
// each equal to the pad length, so unpad(pad(x)) == x for every x.
std::vector<std::uint8_t> pad_pkcs7(std::span<const std::uint8_t> data,
                                    std::size_t block_size = 16);

// Inverse of pad_pkcs7. Throws InvalidPaddingError on any malformed
// trailer; the message is uniform across defect kinds.
std::vector<std::uint8_t> unpad_pkcs7(std::span<const std::uint8_t> data,
                                      std::size_t block_size = 16);

}  // namespace safencrypt
