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

#include "safencrypt/error_mapping.hpp"

#include <array>
#include <iostream>
#include <mutex>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace safencrypt {

std::string_view to_string(ErrorPhase phase) {
  switch (phase) {
    case ErrorPhase::kKeyBinding:
      return "key-binding";
    case ErrorPhase::kIvBinding:
      return "iv-binding";
    case ErrorPhase::kEncrypt:
      return "encrypt";
    case ErrorPhase::kDecrypt:
      return "decrypt";
    case ErrorPhase::kConfig:
      return "config";
  }
  return "unknown";
}

namespace codes {

std::span<const std::string_view> all() {
  static constexpr std::array<std::string_view, 18> kAll = {
      kMalformedAlgorithm, kNotWhitelisted,   kKeyLength,
      kIvLength,           kCiphertextLength, kEmptyPassword,
      kSaltLength,         kUnknownProfile,   kEntropyUnavailable,
      kDecryptMismatch,    kCbcWarning,       kConfigParse,
      kConfigDrift,        kConstraintMissing, kDefaultNotWhitelisted,
      kIoFailure,          kDecode,           kBackendCatchAll,
  };
  return kAll;
}

}  // namespace codes

SafError::SafError(std::string code, std::string message, ErrorPhase phase,
                   std::optional<BackendError> backend)
    : code_(std::move(code)),
      message_(std::move(message)),
      phase_(phase),
      backend_(std::move(backend)) {
  std::ostringstream out;
  if (backend_) {
    out << "[" << backend_->class_name << ": " << backend_->message << "] | ";
  }
  out << "[" << code_ << " : " << message_ << "]";
  rendered_ = out.str();
}

std::string render(const SafError& error) { return error.what(); }

IoError::IoError(std::string reason, ErrorPhase phase, std::uint64_t position)
    : IoError(ErrorCatalog::builtin(), std::move(reason), phase, position) {}

IoError::IoError(const ErrorCatalog& catalog, std::string reason,
                 ErrorPhase phase, std::uint64_t position)
    : SafError(std::string(codes::kIoFailure),
               catalog.render_template(codes::kIoFailure,
                                       {{"position", std::to_string(position)},
                                        {"reason", std::move(reason)}}),
               phase),
      position_(position) {}

InvalidPaddingError::InvalidPaddingError()
    : std::runtime_error("Given final block not properly padded") {}

namespace {

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

WarningSink& sink_slot() {
  static WarningSink sink;  // empty means: use the default stderr sink
  return sink;
}

void default_warning_sink(const SafError& warning) {
  std::cerr << "WARN safencrypt - " << render(warning) << "\n";
}

}  // namespace

WarningSink set_warning_sink(WarningSink sink) {
  std::lock_guard<std::mutex> lock(sink_mutex());
  WarningSink previous = std::move(sink_slot());
  sink_slot() = std::move(sink);
  return previous;
}

void emit_warning(const SafError& warning) {
  WarningSink sink;
  {
    std::lock_guard<std::mutex> lock(sink_mutex());
    sink = sink_slot();
  }
  if (sink) {
    sink(warning);
  } else {
    default_warning_sink(warning);
  }
}

const ErrorCatalog& ErrorCatalog::builtin() {
  static const ErrorCatalog catalog(
      std::map<std::string, std::string, std::less<>>{
          {"SAF_001", "Algorithm [{alg}] could not be parsed: {reason}"},
          {"SAF_002",
           "Selected Algorithm [{alg}] is not in the configured whitelist"},
          {"SAF_003",
           "Provided Key With Length [{n}] bytes is not compatible with "
           "selected algorithm [{alg}], it should be exact [{m}] bytes long"},
          {"SAF_004",
           "Provided IV With Length [{n}] bytes is not compatible with "
           "selected algorithm [{alg}], it should be exact [{m}] bytes long"},
          {"SAF_005",
           "Provided Ciphertext With Length [{n}] bytes is not valid for "
           "selected algorithm [{alg}]: {reason}"},
          {"SAF_006", "Provided password must not be empty"},
          {"SAF_007",
           "Provided Salt With Length [{n}] bytes is not compatible with "
           "configured key derivation, it should be exact [{m}] bytes long"},
          {"SAF_008",
           "Interoperability profile [{language}] is not defined in the "
           "configuration"},
          {"SAF_009", "Secure random source is unavailable: {reason}"},
          {"SAF_010",
           "Either the Mode/Key/IV/Padding used for encryption was different "
           "than provided for decryption"},
          {"SAF_011",
           "Usage of Algorithm [AES/CBC] is insecure in client-server "
           "architecture"},
          {"SAF_020",
           "Configuration document [{document}] could not be parsed: "
           "{reason}"},
          {"SAF_021", "Configuration drift detected in [{document}]: {reason}"},
          {"SAF_022", "No cipher constraints configured for mode [{mode}]"},
          {"SAF_023",
           "Configured default algorithm [{alg}] is not in the whitelist"},
          {"SAF_030", "I/O failure at stream position [{position}]: {reason}"},
          {"SAF_031", "Malformed {encoding} input at offset [{offset}]: "
                      "{reason}"},
          {"SAF_099", "Unexpected backend failure during {phase}"},
      });
  return catalog;
}

ErrorCatalog ErrorCatalog::from_json(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr,
                                             /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw make_error(builtin(), codes::kConfigParse, ErrorPhase::kConfig,
                     {{"document", "errors"},
                      {"reason", "document is not a JSON object"}});
  }

  std::map<std::string, std::string, std::less<>> templates;
  for (const auto& [code, value] : doc.items()) {
    if (!value.is_string()) {
      throw make_error(builtin(), codes::kConfigParse, ErrorPhase::kConfig,
                       {{"document", "errors"},
                        {"reason", "template for [" + code +
                                       "] is not a string"}});
    }
    templates.emplace(code, value.get<std::string>());
  }

  // The code set is closed: deployments may reword messages but cannot
  // invent or retire codes without a matching library change.
  for (std::string_view code : codes::all()) {
    if (templates.find(code) == templates.end()) {
      throw make_error(builtin(), codes::kConfigDrift, ErrorPhase::kConfig,
                       {{"document", "errors"},
                        {"reason", "message template for [" +
                                       std::string(code) + "] is missing"}});
    }
  }
  if (templates.size() != codes::all().size()) {
    for (const auto& [code, unused] : templates) {
      bool known = false;
      for (std::string_view compiled : codes::all()) {
        if (code == compiled) {
          known = true;
          break;
        }
      }
      if (!known) {
        throw make_error(builtin(), codes::kConfigDrift, ErrorPhase::kConfig,
                         {{"document", "errors"},
                          {"reason",
                           "template for unknown code [" + code + "]"}});
      }
    }
  }

  return ErrorCatalog(std::move(templates));
}

bool ErrorCatalog::contains(std::string_view code) const {
  return templates_.find(code) != templates_.end();
}

std::string ErrorCatalog::render_template(
    std::string_view code, std::initializer_list<TemplateArg> args) const {
  auto it = templates_.find(code);
  if (it == templates_.end()) {
    throw std::logic_error("no message template for code " + std::string(code));
  }
  const std::string& tmpl = it->second;

  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    char c = tmpl[pos];
    if (c != '{') {
      out.push_back(c);
      ++pos;
      continue;
    }
    std::size_t close = tmpl.find('}', pos + 1);
    if (close == std::string::npos) {
      throw TemplateArityError("unterminated placeholder in template for " +
                               std::string(code));
    }
    std::string_view name(tmpl.data() + pos + 1, close - pos - 1);
    bool bound = false;
    for (const TemplateArg& arg : args) {
      if (arg.first == name) {
        out += arg.second;
        bound = true;
        break;
      }
    }
    if (!bound) {
      throw TemplateArityError("template for " + std::string(code) +
                               " references unbound placeholder {" +
                               std::string(name) + "}");
    }
    pos = close + 1;
  }
  return out;
}

SafError make_error(const ErrorCatalog& catalog, std::string_view code,
                    ErrorPhase phase, std::initializer_list<TemplateArg> args,
                    std::optional<BackendError> backend) {
  return SafError(std::string(code), catalog.render_template(code, args),
                  phase, std::move(backend));
}

SafError map_backend_error(std::string_view backend_class,
                           std::string_view backend_message, ErrorPhase phase,
                           const ErrorCatalog& catalog) {
  BackendError backend{std::string(backend_class),
                       std::string(backend_message)};
  auto class_contains = [&](std::string_view needle) {
    return backend_class.find(needle) != std::string_view::npos;
  };
  if (phase == ErrorPhase::kDecrypt &&
      (class_contains("Padding") || class_contains("BadTag") ||
       class_contains("TagMismatch") || class_contains("BlockSize"))) {
    return make_error(catalog, codes::kDecryptMismatch, phase, {},
                      std::move(backend));
  }
  return make_error(catalog, codes::kBackendCatchAll, phase,
                    {{"phase", std::string(to_string(phase))}},
                    std::move(backend));
}

}  // namespace safencrypt
