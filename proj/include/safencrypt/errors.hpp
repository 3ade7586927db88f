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
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace safencrypt {

// Phase of the pipeline in which a diagnostic was produced. Binding phases
// exist so fail-fast errors can be told apart from failures inside the
// actual cipher call.
enum class ErrorPhase {
  kKeyBinding,
  kIvBinding,
  kEncrypt,
  kDecrypt,
  kConfig,
};

std::string_view to_string(ErrorPhase phase);

// Stable diagnostic codes. Every code listed here must have a message
// template in the error catalog, and vice versa; the registry loader
// enforces that in both directions.
namespace codes {

inline constexpr std::string_view kMalformedAlgorithm = "SAF_001";
inline constexpr std::string_view kNotWhitelisted = "SAF_002";
inline constexpr std::string_view kKeyLength = "SAF_003";
inline constexpr std::string_view kIvLength = "SAF_004";
inline constexpr std::string_view kCiphertextLength = "SAF_005";
inline constexpr std::string_view kEmptyPassword = "SAF_006";
inline constexpr std::string_view kSaltLength = "SAF_007";
inline constexpr std::string_view kUnknownProfile = "SAF_008";
inline constexpr std::string_view kEntropyUnavailable = "SAF_009";
inline constexpr std::string_view kDecryptMismatch = "SAF_010";
inline constexpr std::string_view kCbcWarning = "SAF_011";
inline constexpr std::string_view kConfigParse = "SAF_020";
inline constexpr std::string_view kConfigDrift = "SAF_021";
inline constexpr std::string_view kConstraintMissing = "SAF_022";
inline constexpr std::string_view kDefaultNotWhitelisted = "SAF_023";
inline constexpr std::string_view kIoFailure = "SAF_030";
inline constexpr std::string_view kDecode = "SAF_031";
inline constexpr std::string_view kBackendCatchAll = "SAF_099";

// All codes the library can produce, in catalog order.
std::span<const std::string_view> all();

}  // namespace codes

// The low-level failure a diagnostic wraps, when one exists. For errors
// raised by the fail-fast validators there is no backend component.
struct BackendError {
  std::string class_name;
  std::string message;
};

// Coded diagnostic carried by every error the library raises. Rendering is
// two-part when a backend failure is attached:
//
//   [<backend class>: <backend message>] | [<code> : <message>]
//
// and single-part otherwise:
//
//   [<code> : <message>]
class SafError : public std::exception {
 public:
  SafError(std::string code, std::string message, ErrorPhase phase,
           std::optional<BackendError> backend = std::nullopt);

  const char* what() const noexcept override { return rendered_.c_str(); }

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  ErrorPhase phase() const noexcept { return phase_; }
  const std::optional<BackendError>& backend() const noexcept {
    return backend_;
  }

 private:
  std::string code_;
  std::string message_;
  ErrorPhase phase_;
  std::optional<BackendError> backend_;
  std::string rendered_;
};

// Renders the diagnostic in the wire format described on SafError.
std::string render(const SafError& error);

class ErrorCatalog;

// I/O failure during stream processing; carries the stream position at
// which the failure was observed. The message is rendered from the SAF_030
// template with {position} and {reason} bound.
class IoError : public SafError {
 public:
  IoError(std::string reason, ErrorPhase phase, std::uint64_t position);
  IoError(const ErrorCatalog& catalog, std::string reason, ErrorPhase phase,
          std::uint64_t position);

  std::uint64_t position() const noexcept { return position_; }

 private:
  std::uint64_t position_;
};

// Raised by catalog rendering when a template references a placeholder the
// call site did not bind. This is a catalog authoring bug, not a runtime
// condition, hence logic_error.
class TemplateArityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by unpad_pkcs7 on a malformed trailer. The message is uniform
// across all trailer defects so callers cannot distinguish padding-failure
// causes.
class InvalidPaddingError : public std::runtime_error {
 public:
  InvalidPaddingError();
};

// Warnings (currently only SAF_011) are reported through a process-wide
// sink instead of being thrown; the pipeline that triggered one still
// succeeds. The default sink writes the rendered warning to stderr.
using WarningSink = std::function<void(const SafError&)>;

// Installs a new sink and returns the previous one. Passing nullptr
// restores the default stderr sink.
WarningSink set_warning_sink(WarningSink sink);

// Delivers a warning to the installed sink.
void emit_warning(const SafError& warning);

}  // namespace safencrypt
