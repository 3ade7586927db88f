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

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "safencrypt/errors.hpp"

namespace safencrypt {

// One named value bound into a message template.
using TemplateArg = std::pair<std::string_view, std::string>;

// Immutable map from diagnostic code to message template. Templates use
// {name} placeholders. Deployments may personalize the message text through
// the errors config document, but the code set itself is closed: the loader
// rejects catalogs that add or drop codes relative to codes::all().
class ErrorCatalog {
 public:
  // The catalog compiled into the library; also the fallback when no errors
  // config document is present.
  static const ErrorCatalog& builtin();

  // Parses an errors config document of the form {"CODE": "template", ...}
  // and validates closure against the compiled code list. Throws SafError
  // SAF_020 on malformed JSON and SAF_021 on a code-set mismatch.
  static ErrorCatalog from_json(std::string_view json_text);

  const std::map<std::string, std::string, std::less<>>& templates() const {
    return templates_;
  }

  bool contains(std::string_view code) const;

  // Substitutes {name} placeholders in the template for `code`. Throws
  // TemplateArityError if the template references a name that is not bound;
  // unused bindings are permitted so personalized templates may drop
  // placeholders. Unknown codes are a programming error (logic_error).
  std::string render_template(std::string_view code,
                              std::initializer_list<TemplateArg> args) const;

 private:
  explicit ErrorCatalog(
      std::map<std::string, std::string, std::less<>> templates)
      : templates_(std::move(templates)) {}

  std::map<std::string, std::string, std::less<>> templates_;
};

// Builds a SafError for `code` by rendering its catalog template.
SafError make_error(const ErrorCatalog& catalog, std::string_view code,
                    ErrorPhase phase, std::initializer_list<TemplateArg> args = {},
                    std::optional<BackendError> backend = std::nullopt);

// Translates a backend failure into a coded diagnostic, preserving the
// backend class and message for two-part rendering. Padding, tag and block
// size failures observed while decrypting map to SAF_010 (the inputs given
// for decryption do not match the ones used for encryption); everything
// else falls through to SAF_099.
SafError map_backend_error(std::string_view backend_class,
                           std::string_view backend_message, ErrorPhase phase,
                           const ErrorCatalog& catalog = ErrorCatalog::builtin());

}  // namespace safencrypt
