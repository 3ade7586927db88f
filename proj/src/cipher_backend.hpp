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
// Internal cipher primitives. This header lives outside include/ on
// purpose: nothing here is public API. In particular the deterministic-IV
// entry points exist only so known-answer tests can pin ciphertexts; the
// public surface never accepts a caller-supplied IV for encryption.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "safencrypt/algorithm.hpp"
#include "safencrypt/error_mapping.hpp"
#include "safencrypt/registry.hpp"

struct evp_cipher_ctx_st;

namespace safencrypt::detail {

// CSPRNG read; throws SAF_009 when the entropy source fails.
std::vector<std::uint8_t> random_bytes(std::size_t count,
                                       const ErrorCatalog& catalog);

// Fail-fast binding checks shared by the one-shot engine, the staged
// builders and the streaming jobs, so every pipeline rejects the same
// inputs with the same diagnostics.
void validate_iv_length(std::size_t actual, const AlgorithmId& algorithm,
                        const ModeConstraints& constraints,
                        const ErrorCatalog& catalog);
void validate_ciphertext_length(std::size_t actual,
                                const AlgorithmId& algorithm,
                                const ModeConstraints& constraints,
                                const ErrorCatalog& catalog);

// Thin incremental wrapper over one cipher direction. Padding is always
// disabled at this layer: CBC callers feed block-aligned data and handle
// PKCS#7 themselves, which keeps padding behavior identical across the
// one-shot and streaming paths.
class CipherContext {
 public:
  enum class Direction { kEncrypt, kDecrypt };

  CipherContext(Direction direction, const AlgorithmId& algorithm,
                std::span<const std::uint8_t> key,
                std::span<const std::uint8_t> iv,
                const ModeConstraints& constraints,
                const ErrorCatalog& catalog);
  ~CipherContext();

  CipherContext(const CipherContext&) = delete;
  CipherContext& operator=(const CipherContext&) = delete;
  CipherContext(CipherContext&& other) noexcept;
  CipherContext& operator=(CipherContext&& other) noexcept;

  // Transforms input and appends the produced bytes to output.
  void update(std::span<const std::uint8_t> input,
              std::vector<std::uint8_t>& output);

  // Encrypt direction: finalizes and, for GCM, appends the tag to output.
  void finish_encrypt(std::vector<std::uint8_t>& output);

  // Decrypt direction: for GCM, verifies `tag` (throws SAF_010 on
  // mismatch); for CBC, `tag` must be empty. Appends any final bytes.
  void finish_decrypt(std::span<const std::uint8_t> tag,
                      std::vector<std::uint8_t>& output);

  std::size_t tag_bytes() const { return tag_bytes_; }
  bool is_aead() const { return tag_bytes_ > 0; }

 private:
  [[noreturn]] void throw_backend(const char* what) const;

  evp_cipher_ctx_st* ctx_ = nullptr;
  Direction direction_;
  ErrorPhase phase_;
  std::size_t tag_bytes_ = 0;
  const ErrorCatalog* catalog_;
};

// Full one-shot transform with a caller-supplied IV: pads and encrypts for
// CBC, encrypts and appends the tag for GCM. Test/KAT entry point and the
// shared core of the public encrypt().
std::vector<std::uint8_t> encrypt_with_iv(const AlgorithmId& algorithm,
                                          std::span<const std::uint8_t> key,
                                          std::span<const std::uint8_t> iv,
                                          std::span<const std::uint8_t> plaintext,
                                          const ModeConstraints& constraints,
                                          const ErrorCatalog& catalog);

// Full one-shot inverse: verifies the tag for GCM, strips padding for CBC.
// Backend failures surface as mapped SafErrors (SAF_010 for padding/tag
// mismatches).
std::vector<std::uint8_t> decrypt_with_iv(const AlgorithmId& algorithm,
                                          std::span<const std::uint8_t> key,
                                          std::span<const std::uint8_t> iv,
                                          std::span<const std::uint8_t> ciphertext,
                                          const ModeConstraints& constraints,
                                          const ErrorCatalog& catalog);

}  // namespace safencrypt::detail
