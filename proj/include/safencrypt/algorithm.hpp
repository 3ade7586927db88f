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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "safencrypt/errors.hpp"

namespace safencrypt {

// The primitive families the type system can even express. ECB is absent on
// purpose: a mode the types cannot represent cannot be configured, selected
// or smuggled in through a config file.
enum class CipherFamily { kAes };
enum class CipherMode { kCbc, kGcm };
enum class PaddingScheme { kPkcs5, kPkcs7, kNone };

std::string_view to_string(CipherFamily family);
std::string_view to_string(CipherMode mode);
std::string_view to_string(PaddingScheme padding);

// Structured identity of a transformation. The canonical spelling is
// FAMILY_MODE_BITS_PADDING, e.g. "AES_GCM_128_NoPadding"; parse and
// canonical() round-trip exactly.
class AlgorithmId {
 public:
  // Throws SafError SAF_001 if the combination is not expressible
  // (unsupported key size, padding on GCM, NoPadding on CBC).
  AlgorithmId(CipherFamily family, CipherMode mode, int key_bits,
              PaddingScheme padding);

  // Parses a canonical name. Unknown families, modes (including "ECB"),
  // key sizes and paddings all raise SafError SAF_001.
  static AlgorithmId parse(std::string_view text);

  std::string canonical() const;

  CipherFamily family() const { return family_; }
  CipherMode mode() const { return mode_; }
  int key_bits() const { return key_bits_; }
  PaddingScheme padding() const { return padding_; }

  std::size_t key_bytes() const {
    return static_cast<std::size_t>(key_bits_) / 8;
  }
  bool is_aead() const { return mode_ == CipherMode::kGcm; }

  // FAMILY_MODE prefix ("AES_CBC", "AES_GCM"); the key under which mode
  // constraints are configured.
  std::string family_mode() const;

  friend bool operator==(const AlgorithmId&, const AlgorithmId&) = default;

 private:
  CipherFamily family_;
  CipherMode mode_;
  int key_bits_;
  PaddingScheme padding_;
};

std::ostream& operator<<(std::ostream& os, const AlgorithmId& id);

// Compiled enumeration of every transformation this build supports. The
// registry loader cross-checks the config whitelist against this list in
// both directions, so a drifting config fails at load instead of at first
// use.
enum class SymmetricAlgorithm {
  kAesCbc128Pkcs5,
  kAesCbc192Pkcs5,
  kAesCbc256Pkcs5,
  kAesCbc128Pkcs7,
  kAesCbc192Pkcs7,
  kAesCbc256Pkcs7,
  kAesGcm128,
  kAesGcm192,
  kAesGcm256,
};

std::span<const SymmetricAlgorithm> supported_algorithms();
std::string_view canonical_name(SymmetricAlgorithm algorithm);
AlgorithmId algorithm_id(SymmetricAlgorithm algorithm);

// The algorithm used when the caller does not pick one: an AEAD mode, so
// the safest choice is also the laziest one.
inline constexpr SymmetricAlgorithm kDefaultAlgorithm =
    SymmetricAlgorithm::kAesGcm128;

// Compiled enumeration of supported password-based key derivation PRFs.
enum class KeyDerivationPrf { kHmacSha256, kHmacSha512 };

std::span<const KeyDerivationPrf> supported_prfs();
std::string_view canonical_name(KeyDerivationPrf prf);

// Parses "PBKDF2WithHmacSHA256"/"PBKDF2WithHmacSHA512"; throws SafError
// SAF_001 for anything else.
KeyDerivationPrf parse_prf(std::string_view text);

inline constexpr KeyDerivationPrf kDefaultPrf = KeyDerivationPrf::kHmacSha512;

}  // namespace safencrypt
