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

#include "safencrypt/algorithm.hpp"

#include <array>
#include <ostream>
#include <vector>

#include "safencrypt/error_mapping.hpp"

namespace safencrypt {

namespace {

[[noreturn]] void throw_malformed(std::string_view text, std::string reason) {
  throw make_error(ErrorCatalog::builtin(), codes::kMalformedAlgorithm,
                   ErrorPhase::kConfig,
                   {{"alg", std::string(text)}, {"reason", std::move(reason)}});
}

}  // namespace

std::string_view to_string(CipherFamily family) {
  switch (family) {
    case CipherFamily::kAes:
      return "AES";
  }
  return "unknown";
}

std::string_view to_string(CipherMode mode) {
  switch (mode) {
    case CipherMode::kCbc:
      return "CBC";
    case CipherMode::kGcm:
      return "GCM";
  }
  return "unknown";
}

std::string_view to_string(PaddingScheme padding) {
  switch (padding) {
    case PaddingScheme::kPkcs5:
      return "PKCS5Padding";
    case PaddingScheme::kPkcs7:
      return "PKCS7Padding";
    case PaddingScheme::kNone:
      return "NoPadding";
  }
  return "unknown";
}

AlgorithmId::AlgorithmId(CipherFamily family, CipherMode mode, int key_bits,
                         PaddingScheme padding)
    : family_(family), mode_(mode), key_bits_(key_bits), padding_(padding) {
  std::string described = std::string(to_string(family)) + "_" +
                          std::string(to_string(mode)) + "_" +
                          std::to_string(key_bits) + "_" +
                          std::string(to_string(padding));
  if (key_bits != 128 && key_bits != 192 && key_bits != 256) {
    throw_malformed(described, "key size [" + std::to_string(key_bits) +
                                   "] is not supported");
  }
  if (mode == CipherMode::kGcm && padding != PaddingScheme::kNone) {
    throw_malformed(described, "padding [" + std::string(to_string(padding)) +
                                   "] cannot be combined with mode [GCM]");
  }
  if (mode == CipherMode::kCbc && padding == PaddingScheme::kNone) {
    throw_malformed(described, "mode [CBC] requires a padding scheme");
  }
}

AlgorithmId AlgorithmId::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find('_', start);
    if (sep == std::string_view::npos) {
      tokens.push_back(text.substr(start));
      break;
    }
    tokens.push_back(text.substr(start, sep - start));
    start = sep + 1;
  }
  if (tokens.size() != 4) {
    throw_malformed(text, "expected the form FAMILY_MODE_BITS_PADDING");
  }

  if (tokens[0] != "AES") {
    throw_malformed(text,
                    "family [" + std::string(tokens[0]) + "] is not supported");
  }
  CipherFamily family = CipherFamily::kAes;

  CipherMode mode;
  if (tokens[1] == "CBC") {
    mode = CipherMode::kCbc;
  } else if (tokens[1] == "GCM") {
    mode = CipherMode::kGcm;
  } else {
    // ECB deliberately lands here: the mode enum has no value for it, so no
    // later layer can be asked to run it.
    throw_malformed(text,
                    "mode [" + std::string(tokens[1]) + "] is not supported");
  }

  int key_bits;
  if (tokens[2] == "128") {
    key_bits = 128;
  } else if (tokens[2] == "192") {
    key_bits = 192;
  } else if (tokens[2] == "256") {
    key_bits = 256;
  } else {
    throw_malformed(text, "key size [" + std::string(tokens[2]) +
                              "] is not supported");
  }

  PaddingScheme padding;
  if (tokens[3] == "PKCS5Padding") {
    padding = PaddingScheme::kPkcs5;
  } else if (tokens[3] == "PKCS7Padding") {
    padding = PaddingScheme::kPkcs7;
  } else if (tokens[3] == "NoPadding") {
    padding = PaddingScheme::kNone;
  } else {
    throw_malformed(text, "padding [" + std::string(tokens[3]) +
                              "] is not recognized");
  }

  return AlgorithmId(family, mode, key_bits, padding);
}

std::string AlgorithmId::canonical() const {
  return std::string(to_string(family_)) + "_" +
         std::string(to_string(mode_)) + "_" + std::to_string(key_bits_) +
         "_" + std::string(to_string(padding_));
}

std::string AlgorithmId::family_mode() const {
  return std::string(to_string(family_)) + "_" + std::string(to_string(mode_));
}

std::ostream& operator<<(std::ostream& os, const AlgorithmId& id) {
  return os << id.canonical();
}

std::span<const SymmetricAlgorithm> supported_algorithms() {
  static constexpr std::array<SymmetricAlgorithm, 9> kAll = {
      SymmetricAlgorithm::kAesCbc128Pkcs5, SymmetricAlgorithm::kAesCbc192Pkcs5,
      SymmetricAlgorithm::kAesCbc256Pkcs5, SymmetricAlgorithm::kAesCbc128Pkcs7,
      SymmetricAlgorithm::kAesCbc192Pkcs7, SymmetricAlgorithm::kAesCbc256Pkcs7,
      SymmetricAlgorithm::kAesGcm128,      SymmetricAlgorithm::kAesGcm192,
      SymmetricAlgorithm::kAesGcm256,
  };
  return kAll;
}

std::string_view canonical_name(SymmetricAlgorithm algorithm) {
  switch (algorithm) {
    case SymmetricAlgorithm::kAesCbc128Pkcs5:
      return "AES_CBC_128_PKCS5Padding";
    case SymmetricAlgorithm::kAesCbc192Pkcs5:
      return "AES_CBC_192_PKCS5Padding";
    case SymmetricAlgorithm::kAesCbc256Pkcs5:
      return "AES_CBC_256_PKCS5Padding";
    case SymmetricAlgorithm::kAesCbc128Pkcs7:
      return "AES_CBC_128_PKCS7Padding";
    case SymmetricAlgorithm::kAesCbc192Pkcs7:
      return "AES_CBC_192_PKCS7Padding";
    case SymmetricAlgorithm::kAesCbc256Pkcs7:
      return "AES_CBC_256_PKCS7Padding";
    case SymmetricAlgorithm::kAesGcm128:
      return "AES_GCM_128_NoPadding";
    case SymmetricAlgorithm::kAesGcm192:
      return "AES_GCM_192_NoPadding";
    case SymmetricAlgorithm::kAesGcm256:
      return "AES_GCM_256_NoPadding";
  }
  return "unknown";
}

AlgorithmId algorithm_id(SymmetricAlgorithm algorithm) {
  return AlgorithmId::parse(canonical_name(algorithm));
}

std::span<const KeyDerivationPrf> supported_prfs() {
  static constexpr std::array<KeyDerivationPrf, 2> kAll = {
      KeyDerivationPrf::kHmacSha256,
      KeyDerivationPrf::kHmacSha512,
  };
  return kAll;
}

std::string_view canonical_name(KeyDerivationPrf prf) {
  switch (prf) {
    case KeyDerivationPrf::kHmacSha256:
      return "PBKDF2WithHmacSHA256";
    case KeyDerivationPrf::kHmacSha512:
      return "PBKDF2WithHmacSHA512";
  }
  return "unknown";
}

KeyDerivationPrf parse_prf(std::string_view text) {
  if (text == "PBKDF2WithHmacSHA256") {
    return KeyDerivationPrf::kHmacSha256;
  }
  if (text == "PBKDF2WithHmacSHA512") {
    return KeyDerivationPrf::kHmacSha512;
  }
  throw make_error(
      ErrorCatalog::builtin(), codes::kMalformedAlgorithm, ErrorPhase::kConfig,
      {{"alg", std::string(text)},
       {"reason", "key derivation function is not recognized"}});
}

}  // namespace safencrypt
