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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "safencrypt/algorithm.hpp"
#include "safencrypt/error_mapping.hpp"
#include "safencrypt/errors.hpp"

namespace safencrypt {

// Per-mode cipher parameters. CBC carries only an IV length; GCM carries an
// IV length and a tag length.
struct ModeConstraints {
  int iv_bytes = 0;
  std::optional<int> tag_bits;

  std::size_t iv_length() const { return static_cast<std::size_t>(iv_bytes); }
  std::size_t tag_bytes() const {
    return tag_bits ? static_cast<std::size_t>(*tag_bits) / 8 : 0;
  }

  friend bool operator==(const ModeConstraints&,
                         const ModeConstraints&) = default;
};

// Password-based key derivation parameters.
struct KdfConfig {
  std::vector<KeyDerivationPrf> algorithms;
  KeyDerivationPrf default_algorithm = kDefaultPrf;
  int salt_bytes = 0;
  std::uint32_t iterations = 0;
};

// Cross-language compatibility profile: the algorithm and constraints to
// use when the peer is a specific foreign library.
struct InteropProfile {
  std::string language;
  std::string library_provider;
  AlgorithmId default_algorithm;
  ModeConstraints constraints;
};

// The four JSON documents the registry is built from. Each field holds the
// document text, not a path.
struct ConfigDocuments {
  std::string symmetric;
  std::string kdf;
  std::string interop;
  std::string errors;

  // The documents compiled into the library.
  static ConfigDocuments shipped();

  // Reads symmetric.json / kdf.json / interop.json / errors.json from a
  // directory, falling back to the shipped text for any file that is absent.
  // Throws SafError SAF_030 if a present file cannot be read.
  static ConfigDocuments from_dir(const std::filesystem::path& dir);
};

// The compiled-in side of the drift check. Tests inject mutated copies to
// prove detection works in both directions; production code uses
// standard(), which mirrors the compiled enumerations exactly.
struct CompiledEnums {
  std::vector<std::string> symmetric_algorithms;
  std::string default_algorithm;
  std::vector<std::string> kdf_algorithms;
  std::string default_kdf;

  static CompiledEnums standard();
};

// Loads, validates and serves the whitelist/constraint/KDF/interop/error
// catalog configuration. Immutable after load; safe to share across threads
// without synchronization.
class Registry {
 public:
  // Validates the documents against the compiled enumerations and every
  // structural invariant. Throws SafError with code SAF_020 (parse), SAF_021
  // (drift), SAF_022 (constraints missing) or SAF_023 (default not
  // whitelisted).
  static Registry load(const ConfigDocuments& documents,
                       const CompiledEnums& enums = CompiledEnums::standard());

  static Registry load_shipped();
  static Registry load_from_dir(const std::filesystem::path& dir);

  // Whitelist in config-document order.
  const std::vector<AlgorithmId>& whitelist() const { return whitelist_; }
  const AlgorithmId& default_algorithm() const { return default_algorithm_; }

  bool is_whitelisted(const AlgorithmId& algorithm) const;

  // Throws SafError SAF_002 when the algorithm is outside the whitelist.
  void validate_whitelisted(const AlgorithmId& algorithm) const;

  // Constraints for a whitelisted algorithm's mode; validates membership
  // first (SAF_002).
  const ModeConstraints& constraints_for(const AlgorithmId& algorithm) const;

  const KdfConfig& kdf() const { return kdf_; }

  const std::map<std::string, InteropProfile, std::less<>>& interop_profiles()
      const {
    return interop_;
  }

  // Throws SafError SAF_008 for a language with no profile.
  const InteropProfile& interop_profile(std::string_view language) const;

  const ErrorCatalog& error_catalog() const { return catalog_; }

 private:
  Registry(std::vector<AlgorithmId> whitelist, AlgorithmId default_algorithm,
           std::map<std::string, ModeConstraints, std::less<>> constraints,
           KdfConfig kdf,
           std::map<std::string, InteropProfile, std::less<>> interop,
           ErrorCatalog catalog);

  std::vector<AlgorithmId> whitelist_;
  AlgorithmId default_algorithm_;
  std::map<std::string, ModeConstraints, std::less<>> constraints_;
  KdfConfig kdf_;
  std::map<std::string, InteropProfile, std::less<>> interop_;
  ErrorCatalog catalog_;
};

// Process-wide registry built from SAFENCRYPT_CONFIG_DIR when that variable
// is set, otherwise from the shipped documents. Loaded once, on first use.
const Registry& default_registry();

}  // namespace safencrypt
