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

#include "cipher_backend.hpp"

#include <openssl/err.h>
#include <openssl/evp.h>
#include <openssl/rand.h>

#include <string>
#include <utility>

#include "safencrypt/cipher_engine.hpp"

namespace safencrypt::detail {

namespace {

std::string last_openssl_reason() {
  unsigned long code = ERR_peek_last_error();
  if (code == 0) {
    return "no further detail from the backend";
  }
  const char* reason = ERR_reason_error_string(code);
  return reason != nullptr ? reason : "unrecognized backend error";
}

const EVP_CIPHER* cipher_for(const AlgorithmId& algorithm) {
  if (algorithm.mode() == CipherMode::kCbc) {
    switch (algorithm.key_bits()) {
      case 128:
        return EVP_aes_128_cbc();
      case 192:
        return EVP_aes_192_cbc();
      case 256:
        return EVP_aes_256_cbc();
    }
  } else {
    switch (algorithm.key_bits()) {
      case 128:
        return EVP_aes_128_gcm();
      case 192:
        return EVP_aes_192_gcm();
      case 256:
        return EVP_aes_256_gcm();
    }
  }
  return nullptr;
}

}  // namespace

std::vector<std::uint8_t> random_bytes(std::size_t count,
                                       const ErrorCatalog& catalog) {
  std::vector<std::uint8_t> out(count);
  if (count > 0 && RAND_bytes(out.data(), static_cast<int>(count)) != 1) {
    throw make_error(catalog, codes::kEntropyUnavailable, ErrorPhase::kConfig,
                     {{"reason", last_openssl_reason()}});
  }
  return out;
}

void validate_iv_length(std::size_t actual, const AlgorithmId& algorithm,
                        const ModeConstraints& constraints,
                        const ErrorCatalog& catalog) {
  if (actual != constraints.iv_length()) {
    throw make_error(catalog, codes::kIvLength, ErrorPhase::kIvBinding,
                     {{"n", std::to_string(actual)},
                      {"alg", algorithm.canonical()},
                      {"m", std::to_string(constraints.iv_bytes)}});
  }
}

void validate_ciphertext_length(std::size_t actual,
                                const AlgorithmId& algorithm,
                                const ModeConstraints& constraints,
                                const ErrorCatalog& catalog) {
  if (algorithm.mode() == CipherMode::kCbc) {
    if (actual == 0 || actual % 16 != 0) {
      throw make_error(
          catalog, codes::kCiphertextLength, ErrorPhase::kDecrypt,
          {{"n", std::to_string(actual)},
           {"alg", algorithm.canonical()},
           {"reason", "length must be a positive multiple of 16"}});
    }
    return;
  }
  if (actual < constraints.tag_bytes()) {
    throw make_error(
        catalog, codes::kCiphertextLength, ErrorPhase::kDecrypt,
        {{"n", std::to_string(actual)},
         {"alg", algorithm.canonical()},
         {"reason", "length must cover the " +
                        std::to_string(constraints.tag_bytes()) +
                        "-byte authentication tag"}});
  }
}

CipherContext::CipherContext(Direction direction, const AlgorithmId& algorithm,
                             std::span<const std::uint8_t> key,
                             std::span<const std::uint8_t> iv,
                             const ModeConstraints& constraints,
                             const ErrorCatalog& catalog)
    : direction_(direction),
      phase_(direction == Direction::kEncrypt ? ErrorPhase::kEncrypt
                                              : ErrorPhase::kDecrypt),
      tag_bytes_(algorithm.is_aead() ? constraints.tag_bytes() : 0),
      catalog_(&catalog) {
  const EVP_CIPHER* cipher = cipher_for(algorithm);
  if (cipher == nullptr) {
    throw_backend("cipher lookup failed");
  }
  ctx_ = EVP_CIPHER_CTX_new();
  if (ctx_ == nullptr) {
    throw_backend("cipher context allocation failed");
  }
  const int enc = direction == Direction::kEncrypt ? 1 : 0;
  if (EVP_CipherInit_ex(ctx_, cipher, nullptr, nullptr, nullptr, enc) != 1) {
    throw_backend("cipher initialization failed");
  }
  if (algorithm.is_aead() &&
      EVP_CIPHER_CTX_ctrl(ctx_, EVP_CTRL_AEAD_SET_IVLEN,
                          static_cast<int>(iv.size()), nullptr) != 1) {
    throw_backend("setting the IV length failed");
  }
  if (EVP_CipherInit_ex(ctx_, nullptr, nullptr, key.data(), iv.data(), enc) !=
      1) {
    throw_backend("key/IV binding failed");
  }
  // PKCS#7 is handled by this library so the one-shot and streaming paths
  // share a single padding implementation.
  EVP_CIPHER_CTX_set_padding(ctx_, 0);
}

CipherContext::~CipherContext() {
  if (ctx_ != nullptr) {
    EVP_CIPHER_CTX_free(ctx_);
  }
}

CipherContext::CipherContext(CipherContext&& other) noexcept
    : ctx_(std::exchange(other.ctx_, nullptr)),
      direction_(other.direction_),
      phase_(other.phase_),
      tag_bytes_(other.tag_bytes_),
      catalog_(other.catalog_) {}

CipherContext& CipherContext::operator=(CipherContext&& other) noexcept {
  if (this != &other) {
    if (ctx_ != nullptr) {
      EVP_CIPHER_CTX_free(ctx_);
    }
    ctx_ = std::exchange(other.ctx_, nullptr);
    direction_ = other.direction_;
    phase_ = other.phase_;
    tag_bytes_ = other.tag_bytes_;
    catalog_ = other.catalog_;
  }
  return *this;
}

void CipherContext::throw_backend(const char* what) const {
  throw map_backend_error("OpensslEvpError",
                          std::string(what) + ": " + last_openssl_reason(),
                          phase_, *catalog_);
}

void CipherContext::update(std::span<const std::uint8_t> input,
                           std::vector<std::uint8_t>& output) {
  if (input.empty()) {
    return;
  }
  std::size_t base = output.size();
  // With padding disabled the output of an update never exceeds the input
  // size rounded up to the next block.
  output.resize(base + input.size() + 16);
  int produced = 0;
  if (EVP_CipherUpdate(ctx_, output.data() + base, &produced, input.data(),
                       static_cast<int>(input.size())) != 1) {
    throw_backend("cipher update failed");
  }
  output.resize(base + static_cast<std::size_t>(produced));
}

void CipherContext::finish_encrypt(std::vector<std::uint8_t>& output) {
  std::size_t base = output.size();
  output.resize(base + 16);
  int produced = 0;
  if (EVP_EncryptFinal_ex(ctx_, output.data() + base, &produced) != 1) {
    throw_backend("cipher finalization failed");
  }
  output.resize(base + static_cast<std::size_t>(produced));
  if (tag_bytes_ > 0) {
    std::size_t tag_base = output.size();
    output.resize(tag_base + tag_bytes_);
    if (EVP_CIPHER_CTX_ctrl(ctx_, EVP_CTRL_AEAD_GET_TAG,
                            static_cast<int>(tag_bytes_),
                            output.data() + tag_base) != 1) {
      throw_backend("reading the authentication tag failed");
    }
  }
}

void CipherContext::finish_decrypt(std::span<const std::uint8_t> tag,
                                   std::vector<std::uint8_t>& output) {
  if (tag_bytes_ > 0) {
    if (tag.size() != tag_bytes_ ||
        EVP_CIPHER_CTX_ctrl(ctx_, EVP_CTRL_AEAD_SET_TAG,
                            static_cast<int>(tag_bytes_),
                            const_cast<std::uint8_t*>(tag.data())) != 1) {
      throw_backend("binding the authentication tag failed");
    }
  }
  std::size_t base = output.size();
  output.resize(base + 16);
  int produced = 0;
  if (EVP_DecryptFinal_ex(ctx_, output.data() + base, &produced) != 1) {
    output.resize(base);
    if (tag_bytes_ > 0) {
      // The backend performs the tag comparison in constant time; all we
      // see is pass/fail.
      throw map_backend_error("AeadBadTagError",
                              "GCM tag verification failed", phase_,
                              *catalog_);
    }
    throw_backend("cipher finalization failed");
  }
  output.resize(base + static_cast<std::size_t>(produced));
}

std::vector<std::uint8_t> encrypt_with_iv(const AlgorithmId& algorithm,
                                          std::span<const std::uint8_t> key,
                                          std::span<const std::uint8_t> iv,
                                          std::span<const std::uint8_t> plaintext,
                                          const ModeConstraints& constraints,
                                          const ErrorCatalog& catalog) {
  CipherContext context(CipherContext::Direction::kEncrypt, algorithm, key,
                        iv, constraints, catalog);
  std::vector<std::uint8_t> ciphertext;
  if (algorithm.mode() == CipherMode::kCbc) {
    std::vector<std::uint8_t> padded = pad_pkcs7(plaintext);
    ciphertext.reserve(padded.size());
    context.update(padded, ciphertext);
  } else {
    ciphertext.reserve(plaintext.size() + context.tag_bytes());
    context.update(plaintext, ciphertext);
  }
  context.finish_encrypt(ciphertext);
  return ciphertext;
}

std::vector<std::uint8_t> decrypt_with_iv(const AlgorithmId& algorithm,
                                          std::span<const std::uint8_t> key,
                                          std::span<const std::uint8_t> iv,
                                          std::span<const std::uint8_t> ciphertext,
                                          const ModeConstraints& constraints,
                                          const ErrorCatalog& catalog) {
  CipherContext context(CipherContext::Direction::kDecrypt, algorithm, key,
                        iv, constraints, catalog);
  std::vector<std::uint8_t> plaintext;
  if (algorithm.mode() == CipherMode::kCbc) {
    plaintext.reserve(ciphertext.size());
    context.update(ciphertext, plaintext);
    context.finish_decrypt({}, plaintext);
    try {
      return unpad_pkcs7(plaintext);
    } catch (const InvalidPaddingError& padding_error) {
      throw map_backend_error("InvalidPaddingError", padding_error.what(),
                              ErrorPhase::kDecrypt, catalog);
    }
  }
  std::size_t tag_bytes = context.tag_bytes();
  std::span<const std::uint8_t> body =
      ciphertext.subspan(0, ciphertext.size() - tag_bytes);
  std::span<const std::uint8_t> tag =
      ciphertext.subspan(ciphertext.size() - tag_bytes);
  plaintext.reserve(body.size());
  context.update(body, plaintext);
  context.finish_decrypt(tag, plaintext);
  return plaintext;
}

}  // namespace safencrypt::detail
