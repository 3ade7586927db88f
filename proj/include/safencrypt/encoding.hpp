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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "safencrypt/error_mapping.hpp"

namespace safencrypt {

// Wire encodings for keys, IVs, salts and ciphertext. Encoding and decoding
// are exact duals: decode(encode(x)) == x for every byte string and format.
enum class WireFormat { kBase64, kHex, kRaw };

std::string_view to_string(WireFormat format);
std::optional<WireFormat> parse_wire_format(std::string_view text);

// kBase64: standard alphabet with '=' padding. kHex: lowercase, two digits
// per byte. kRaw: the bytes themselves.
std::string encode_bytes(std::span<const std::uint8_t> data,
                         WireFormat format);

// Strict decoder: any malformed character raises SAF_031 naming its offset.
// Hex accepts either case; base64 requires canonical padding.
std::vector<std::uint8_t> decode_bytes(
    std::string_view text, WireFormat format,
    const ErrorCatalog& catalog = ErrorCatalog::builtin());

}  // namespace safencrypt
