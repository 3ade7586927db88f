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

#include "safencrypt/cipher_engine.hpp"

#include <string>

#include "cipher_backend.hpp"

namespace safencrypt {

std::vector<std::uint8_t> generate_iv(const AlgorithmId& algorithm,
                                      const Registry& registry) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  return detail::random_bytes(constraints.iv_length(),
                              registry.error_catalog());
}

SymmetricCipherResult encrypt(const AlgorithmId& algorithm,
                              const SymmetricKey& key,
                              std::span<const std::uint8_t> plaintext,
                              const Registry& registry) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  validate_key_length(key, algorithm, registry.error_catalog());
  std::vector<std::uint8_t> iv = detail::random_bytes(
      constraints.iv_length(), registry.error_catalog());
  std::vector<std::uint8_t> ciphertext =
      detail::encrypt_with_iv(algorithm, key.bytes(), iv, plaintext,
                              constraints, registry.error_catalog());
  return SymmetricCipherResult{algorithm, key, std::move(iv),
                               std::move(ciphertext), std::nullopt};
}

std::vector<std::uint8_t> decrypt(const AlgorithmId& algorithm,
                                  const SymmetricKey& key,
                                  std::span<const std::uint8_t> iv,
                                  std::span<const std::uint8_t> ciphertext,
                                  const Registry& registry) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  validate_key_length(key, algorithm, registry.error_catalog());
  detail::validate_iv_length(iv.size(), algorithm, constraints,
                             registry.error_catalog());
  detail::validate_ciphertext_length(ciphertext.size(), algorithm, constraints,
                                     registry.error_catalog());
  return detail::decrypt_with_iv(algorithm, key.bytes(), iv, ciphertext,
                                 constraints, registry.error_catalog());
}

std::vector<std::uint8_t> pad_pkcs7(std::span<const std::uint8_t> data,
                                    std::size_t block_size) {
  std::size_t pad = block_size - (data.size() % block_size);
  std::vector<std::uint8_t> out(data.begin(), data.end());
  out.insert(out.end(), pad, static_cast<std::uint8_t>(pad));
  return out;
}

std::vector<std::uint8_t> unpad_pkcs7(std::span<const std::uint8_t> data,
                                      std::size_t block_size) {
  if (data.empty() || data.size() % block_size != 0) {
    throw InvalidPaddingError();
  }
  std::uint8_t pad = data.back();
  if (pad == 0 || pad > block_size) {
    throw InvalidPaddingError();
  }
  // Accumulate mismatches instead of exiting early so the check cost does
  // not depend on where a corrupt byte sits.
  std::uint8_t mismatch = 0;
  for (std::size_t i = data.size() - pad; i < data.size(); ++i) {
    mismatch = static_cast<std::uint8_t>(mismatch | (data[i] ^ pad));
  }
  if (mismatch != 0) {
    throw InvalidPaddingError();
  }
  return std::vector<std::uint8_t>(data.begin(), data.end() - pad);
}

}  // namespace safencrypt
