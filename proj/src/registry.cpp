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

#include "safencrypt/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace safencrypt {

namespace {

using nlohmann::json;

[[noreturn]] void throw_parse(const std::string& document, std::string reason) {
  throw make_error(ErrorCatalog::builtin(), codes::kConfigParse,
                   ErrorPhase::kConfig,
                   {{"document", document}, {"reason", std::move(reason)}});
}

[[noreturn]] void throw_drift(const std::string& document, std::string reason) {
  throw make_error(ErrorCatalog::builtin(), codes::kConfigDrift,
                   ErrorPhase::kConfig,
                   {{"document", document}, {"reason", std::move(reason)}});
}

json parse_document(const std::string& text, const std::string& document) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw_parse(document, "document is not valid JSON");
  }
  if (!doc.is_object()) {
    throw_parse(document, "document is not a JSON object");
  }
  return doc;
}

// Silent misconfiguration is the failure mode this library exists to
// prevent, so a key the schema does not know is an error, never a no-op.
void reject_unknown_keys(const json& object, const std::string& document,
                         const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, unused] : object.items()) {
    bool known = false;
    for (std::string_view candidate : allowed) {
      if (key == candidate) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw_parse(document, "unknown key [" + key + "] in " + where);
    }
  }
}

const json& require_key(const json& object, const std::string& document,
                        const std::string& where, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw_parse(document,
                "missing key [" + std::string(key) + "] in " + where);
  }
  return *it;
}

std::string require_string(const json& value, const std::string& document,
                           const std::string& what) {
  if (!value.is_string()) {
    throw_parse(document, what + " must be a string");
  }
  return value.get<std::string>();
}

int require_positive_int(const json& value, const std::string& document,
                         const std::string& what) {
  if (!value.is_number_integer() || value.get<long long>() <= 0) {
    throw_parse(document, what + " must be a positive integer");
  }
  return static_cast<int>(value.get<long long>());
}

std::vector<std::string> require_string_array(const json& value,
                                              const std::string& document,
                                              const std::string& what) {
  if (!value.is_array()) {
    throw_parse(document, what + " must be an array");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const json& entry : value) {
    out.push_back(require_string(entry, document, what + " entry"));
  }
  return out;
}

// Set comparison between the config side and the compiled side. Reported
// reasons name the first offender from each direction so the fix is obvious.
void check_drift(const std::vector<std::string>& config_side,
                 const std::vector<std::string>& compiled_side,
                 const std::string& document, const std::string& what) {
  for (const std::string& name : config_side) {
    if (std::count(config_side.begin(), config_side.end(), name) > 1) {
      throw_parse(document, "duplicate " + what + " entry [" + name + "]");
    }
    if (std::find(compiled_side.begin(), compiled_side.end(), name) ==
        compiled_side.end()) {
      throw_drift(document, what + " entry [" + name +
                                "] has no compiled enum counterpart");
    }
  }
  for (const std::string& name : compiled_side) {
    if (std::find(config_side.begin(), config_side.end(), name) ==
        config_side.end()) {
      throw_drift(document, "compiled value [" + name + "] is missing from " +
                                what);
    }
  }
}

ModeConstraints parse_constraints(const json& object,
                                  const std::string& document,
                                  const std::string& where, CipherMode mode) {
  if (!object.is_object()) {
    throw_parse(document, where + " must be an object");
  }
  reject_unknown_keys(object, document, where, {"iv-bytes", "tag-bits"});
  ModeConstraints constraints;
  constraints.iv_bytes = require_positive_int(
      require_key(object, document, where, "iv-bytes"), document,
      where + ".iv-bytes");
  if (auto it = object.find("tag-bits"); it != object.end()) {
    constraints.tag_bits =
        require_positive_int(*it, document, where + ".tag-bits");
  }
  if (mode == CipherMode::kGcm) {
    if (!constraints.tag_bits) {
      throw_parse(document, where + " must define tag-bits for GCM");
    }
    if (*constraints.tag_bits % 8 != 0) {
      throw_parse(document, where + ".tag-bits must be a multiple of 8");
    }
  } else if (constraints.tag_bits) {
    throw_parse(document, where + " must not define tag-bits for CBC");
  }
  return constraints;
}

}  // namespace

ConfigDocuments ConfigDocuments::shipped() {
  ConfigDocuments documents;
  documents.symmetric = R"({
  "symmetric-algorithms": [
    "AES_CBC_128_PKCS5Padding",
    "AES_CBC_192_PKCS5Padding",
    "AES_CBC_256_PKCS5Padding",
    "AES_CBC_128_PKCS7Padding",
    "AES_CBC_192_PKCS7Padding",
    "AES_CBC_256_PKCS7Padding",
    "AES_GCM_128_NoPadding",
    "AES_GCM_192_NoPadding",
    "AES_GCM_256_NoPadding"
  ],
  "constraints": {
    "AES_CBC": {
      "iv-bytes": 16
    },
    "AES_GCM": {
      "iv-bytes": 12,
      "tag-bits": 96
    }
  }
})";
  documents.kdf = R"({
  "algorithms": [
    "PBKDF2WithHmacSHA256",
    "PBKDF2WithHmacSHA512"
  ],
  "salt-bytes": 64,
  "iterations": 1024
})";
  documents.interop = R"({
  "interoperable-languages": {
    "Python": {
      "library-Provider": "Crypto",
      "symmetric": {
        "default-algo": "AES_CBC_256_PKCS7Padding",
        "iv-bytes": 16
      }
    },
    "CSharp": {
      "library-Provider": "New Library",
      "symmetric": {
        "default-algo": "AES_GCM_256_NoPadding",
        "iv-bytes": 12,
        "tag-bits": 96
      }
    }
  }
})";
  // Emitted from the compiled catalog so the shipped document can never
  // drift from the code.
  json errors = json::object();
  for (const auto& [code, tmpl] : ErrorCatalog::builtin().templates()) {
    errors[code] = tmpl;
  }
  documents.errors = errors.dump(2);
  return documents;
}

ConfigDocuments ConfigDocuments::from_dir(const std::filesystem::path& dir) {
  ConfigDocuments documents = shipped();
  auto load_if_present = [&](const char* name, std::string& slot) {
    std::filesystem::path path = dir / name;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
      return;
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
      throw IoError(
          ErrorCatalog::builtin().render_template(
              codes::kIoFailure,
              {{"position", "0"},
               {"reason", "cannot read config file " + path.string()}}),
          ErrorPhase::kConfig, 0);
    }
    slot = buffer.str();
  };
  load_if_present("symmetric.json", documents.symmetric);
  load_if_present("kdf.json", documents.kdf);
  load_if_present("interop.json", documents.interop);
  load_if_present("errors.json", documents.errors);
  return documents;
}

CompiledEnums CompiledEnums::standard() {
  CompiledEnums enums;
  for (SymmetricAlgorithm algorithm : supported_algorithms()) {
    enums.symmetric_algorithms.emplace_back(canonical_name(algorithm));
  }
  enums.default_algorithm = canonical_name(kDefaultAlgorithm);
  for (KeyDerivationPrf prf : supported_prfs()) {
    enums.kdf_algorithms.emplace_back(canonical_name(prf));
  }
  enums.default_kdf = canonical_name(kDefaultPrf);
  return enums;
}

Registry::Registry(
    std::vector<AlgorithmId> whitelist, AlgorithmId default_algorithm,
    std::map<std::string, ModeConstraints, std::less<>> constraints,
    KdfConfig kdf, std::map<std::string, InteropProfile, std::less<>> interop,
    ErrorCatalog catalog)
    : whitelist_(std::move(whitelist)),
      default_algorithm_(default_algorithm),
      constraints_(std::move(constraints)),
      kdf_(std::move(kdf)),
      interop_(std::move(interop)),
      catalog_(std::move(catalog)) {}

Registry Registry::load(const ConfigDocuments& documents,
                        const CompiledEnums& enums) {
  // --- symmetric document -------------------------------------------------
  const std::string doc_sym = "symmetric";
  json symmetric = parse_document(documents.symmetric, doc_sym);
  reject_unknown_keys(symmetric, doc_sym, "document root",
                      {"symmetric-algorithms", "constraints",
                       "default-algorithm"});

  std::vector<std::string> names = require_string_array(
      require_key(symmetric, doc_sym, "document root", "symmetric-algorithms"),
      doc_sym, "symmetric-algorithms");
  check_drift(names, enums.symmetric_algorithms, doc_sym,
              "symmetric-algorithms");

  std::vector<AlgorithmId> whitelist;
  whitelist.reserve(names.size());
  for (const std::string& name : names) {
    whitelist.push_back(AlgorithmId::parse(name));
  }

  const json& constraints_doc =
      require_key(symmetric, doc_sym, "document root", "constraints");
  if (!constraints_doc.is_object()) {
    throw_parse(doc_sym, "constraints must be an object");
  }
  std::map<std::string, ModeConstraints, std::less<>> constraints;
  for (const auto& [mode_key, value] : constraints_doc.items()) {
    bool in_use = false;
    CipherMode mode = CipherMode::kCbc;
    for (const AlgorithmId& algorithm : whitelist) {
      if (algorithm.family_mode() == mode_key) {
        in_use = true;
        mode = algorithm.mode();
        break;
      }
    }
    if (!in_use) {
      throw_parse(doc_sym,
                  "constraints entry [" + mode_key +
                      "] does not match any whitelisted algorithm");
    }
    constraints.emplace(mode_key, parse_constraints(value, doc_sym,
                                                    "constraints." + mode_key,
                                                    mode));
  }
  for (const AlgorithmId& algorithm : whitelist) {
    if (constraints.find(algorithm.family_mode()) == constraints.end()) {
      throw make_error(ErrorCatalog::builtin(), codes::kConstraintMissing,
                       ErrorPhase::kConfig,
                       {{"mode", algorithm.family_mode()}});
    }
  }

  std::string default_name = enums.default_algorithm;
  if (auto it = symmetric.find("default-algorithm"); it != symmetric.end()) {
    default_name = require_string(*it, doc_sym, "default-algorithm");
  }
  AlgorithmId default_algorithm = AlgorithmId::parse(default_name);
  if (std::find(whitelist.begin(), whitelist.end(), default_algorithm) ==
      whitelist.end()) {
    throw make_error(ErrorCatalog::builtin(), codes::kDefaultNotWhitelisted,
                     ErrorPhase::kConfig, {{"alg", default_name}});
  }

  // --- kdf document -------------------------------------------------------
  const std::string doc_kdf = "kdf";
  json kdf_doc = parse_document(documents.kdf, doc_kdf);
  reject_unknown_keys(kdf_doc, doc_kdf, "document root",
                      {"algorithms", "salt-bytes", "iterations",
                       "default-algorithm"});

  std::vector<std::string> prf_names = require_string_array(
      require_key(kdf_doc, doc_kdf, "document root", "algorithms"), doc_kdf,
      "algorithms");
  check_drift(prf_names, enums.kdf_algorithms, doc_kdf, "algorithms");

  KdfConfig kdf;
  for (const std::string& name : prf_names) {
    kdf.algorithms.push_back(parse_prf(name));
  }
  kdf.salt_bytes = require_positive_int(
      require_key(kdf_doc, doc_kdf, "document root", "salt-bytes"), doc_kdf,
      "salt-bytes");
  if (kdf.salt_bytes < 16) {
    throw_parse(doc_kdf, "salt-bytes must be at least 16");
  }
  kdf.iterations = static_cast<std::uint32_t>(require_positive_int(
      require_key(kdf_doc, doc_kdf, "document root", "iterations"), doc_kdf,
      "iterations"));

  std::string default_prf_name = enums.default_kdf;
  if (auto it = kdf_doc.find("default-algorithm"); it != kdf_doc.end()) {
    default_prf_name = require_string(*it, doc_kdf, "default-algorithm");
  }
  if (std::find(prf_names.begin(), prf_names.end(), default_prf_name) ==
      prf_names.end()) {
    throw_parse(doc_kdf, "default-algorithm [" + default_prf_name +
                             "] is not in the algorithms list");
  }
  kdf.default_algorithm = parse_prf(default_prf_name);

  // --- interop document ---------------------------------------------------
  const std::string doc_interop = "interop";
  json interop_doc = parse_document(documents.interop, doc_interop);
  reject_unknown_keys(interop_doc, doc_interop, "document root",
                      {"interoperable-languages"});
  const json& languages = require_key(interop_doc, doc_interop,
                                      "document root",
                                      "interoperable-languages");
  if (!languages.is_object()) {
    throw_parse(doc_interop, "interoperable-languages must be an object");
  }

  std::map<std::string, InteropProfile, std::less<>> interop;
  for (const auto& [language, profile_doc] : languages.items()) {
    if (!profile_doc.is_object()) {
      throw_parse(doc_interop, "profile [" + language + "] must be an object");
    }
    reject_unknown_keys(profile_doc, doc_interop, "profile [" + language + "]",
                        {"library-Provider", "symmetric"});
    std::string provider = require_string(
        require_key(profile_doc, doc_interop, "profile [" + language + "]",
                    "library-Provider"),
        doc_interop, "library-Provider");

    const json& symmetric_doc = require_key(
        profile_doc, doc_interop, "profile [" + language + "]", "symmetric");
    if (!symmetric_doc.is_object()) {
      throw_parse(doc_interop,
                  "profile [" + language + "].symmetric must be an object");
    }
    reject_unknown_keys(symmetric_doc, doc_interop,
                        "profile [" + language + "].symmetric",
                        {"default-algo", "iv-bytes", "tag-bits"});
    std::string algo_name = require_string(
        require_key(symmetric_doc, doc_interop,
                    "profile [" + language + "].symmetric", "default-algo"),
        doc_interop, "default-algo");
    AlgorithmId profile_algorithm = AlgorithmId::parse(algo_name);
    if (std::find(whitelist.begin(), whitelist.end(), profile_algorithm) ==
        whitelist.end()) {
      throw make_error(ErrorCatalog::builtin(), codes::kDefaultNotWhitelisted,
                       ErrorPhase::kConfig, {{"alg", algo_name}});
    }

    json constraint_doc = json::object();
    constraint_doc["iv-bytes"] = require_key(
        symmetric_doc, doc_interop,
        "profile [" + language + "].symmetric", "iv-bytes");
    if (auto it = symmetric_doc.find("tag-bits"); it != symmetric_doc.end()) {
      constraint_doc["tag-bits"] = *it;
    }
    ModeConstraints profile_constraints = parse_constraints(
        constraint_doc, doc_interop, "profile [" + language + "].symmetric",
        profile_algorithm.mode());

    interop.emplace(language, InteropProfile{language, std::move(provider),
                                             profile_algorithm,
                                             profile_constraints});
  }

  // --- errors document ----------------------------------------------------
  ErrorCatalog catalog = ErrorCatalog::from_json(documents.errors);

  return Registry(std::move(whitelist), default_algorithm,
                  std::move(constraints), std::move(kdf), std::move(interop),
                  std::move(catalog));
}

Registry Registry::load_shipped() { return load(ConfigDocuments::shipped()); }

Registry Registry::load_from_dir(const std::filesystem::path& dir) {
  return load(ConfigDocuments::from_dir(dir));
}

bool Registry::is_whitelisted(const AlgorithmId& algorithm) const {
  return std::find(whitelist_.begin(), whitelist_.end(), algorithm) !=
         whitelist_.end();
}

void Registry::validate_whitelisted(const AlgorithmId& algorithm) const {
  if (!is_whitelisted(algorithm)) {
    throw make_error(catalog_, codes::kNotWhitelisted, ErrorPhase::kConfig,
                     {{"alg", algorithm.canonical()}});
  }
}

const ModeConstraints& Registry::constraints_for(
    const AlgorithmId& algorithm) const {
  validate_whitelisted(algorithm);
  auto it = constraints_.find(algorithm.family_mode());
  // Load-time validation guarantees a hit for every whitelisted algorithm.
  if (it == constraints_.end()) {
    throw make_error(catalog_, codes::kConstraintMissing, ErrorPhase::kConfig,
                     {{"mode", algorithm.family_mode()}});
  }
  return it->second;
}

const InteropProfile& Registry::interop_profile(
    std::string_view language) const {
  auto it = interop_.find(language);
  if (it == interop_.end()) {
    throw make_error(catalog_, codes::kUnknownProfile, ErrorPhase::kConfig,
                     {{"language", std::string(language)}});
  }
  return it->second;
}

const Registry& default_registry() {
  static const Registry registry = [] {
    if (const char* dir = std::getenv("SAFENCRYPT_CONFIG_DIR");
        dir != nullptr && *dir != '\0') {
      return Registry::load_from_dir(dir);
    }
    return Registry::load_shipped();
  }();
  return registry;
}

}  // namespace safencrypt
