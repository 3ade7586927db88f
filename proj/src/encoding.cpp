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

#include "safencrypt/encoding.hpp"

#include <array>

namespace safencrypt {

namespace {

constexpr char kBase64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

constexpr char kHexDigits[] = "0123456789abcdef";

[[noreturn]] void throw_decode(const ErrorCatalog& catalog,
                               std::string_view encoding, std::size_t offset,
                               std::string reason) {
  throw make_error(catalog, codes::kDecode, ErrorPhase::kConfig,
                   {{"encoding", std::string(encoding)},
                    {"offset", std::to_string(offset)},
                    {"reason", std::move(reason)}});
}

// 0..63 for alphabet members, 64 for '=', 255 otherwise.
std::array<std::uint8_t, 256> build_base64_reverse() {
  std::array<std::uint8_t, 256> table{};
  table.fill(255);
  for (std::uint8_t i = 0; i < 64; ++i) {
    table[static_cast<unsigned char>(kBase64Alphabet[i])] = i;
  }
  table[static_cast<unsigned char>('=')] = 64;
  return table;
}

std::vector<std::uint8_t> decode_base64(std::string_view text,
                                        const ErrorCatalog& catalog) {
  static const std::array<std::uint8_t, 256> reverse = build_base64_reverse();
  // Report the first bad character before complaining about length, so a
  // corrupt payload names the corruption, not a side effect of it.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (reverse[static_cast<unsigned char>(text[i])] == 255) {
      throw_decode(catalog, "base64", i,
                   "character is outside the base64 alphabet");
    }
  }
  if (text.size() % 4 != 0) {
    throw_decode(catalog, "base64", text.size(),
                 "length must be a multiple of 4");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  std::size_t pad = 0;
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t word = 0;
    std::size_t group_pad = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      std::uint8_t value = reverse[static_cast<unsigned char>(text[i + j])];
      if (value == 64) {
        // '=' is only legal as the final one or two characters.
        if (i + 4 != text.size() || j < 2) {
          throw_decode(catalog, "base64", i + j, "unexpected padding");
        }
        ++group_pad;
        value = 0;
      } else if (group_pad > 0) {
        throw_decode(catalog, "base64", i + j,
                     "data after padding is not allowed");
      }
      word = (word << 6) | value;
    }
    pad = group_pad;
    out.push_back(static_cast<std::uint8_t>(word >> 16));
    if (pad < 2) {
      out.push_back(static_cast<std::uint8_t>(word >> 8));
    }
    if (pad < 1) {
      out.push_back(static_cast<std::uint8_t>(word));
    }
  }
  return out;
}

std::string encode_base64(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= data.size(); i += 3) {
    std::uint32_t word = (static_cast<std::uint32_t>(data[i]) << 16) |
                         (static_cast<std::uint32_t>(data[i + 1]) << 8) |
                         data[i + 2];
    out.push_back(kBase64Alphabet[(word >> 18) & 0x3F]);
    out.push_back(kBase64Alphabet[(word >> 12) & 0x3F]);
    out.push_back(kBase64Alphabet[(word >> 6) & 0x3F]);
    out.push_back(kBase64Alphabet[word & 0x3F]);
  }
  std::size_t rest = data.size() - i;
  if (rest == 1) {
    std::uint32_t word = static_cast<std::uint32_t>(data[i]) << 16;
    out.push_back(kBase64Alphabet[(word >> 18) & 0x3F]);
    out.push_back(kBase64Alphabet[(word >> 12) & 0x3F]);
    out.append("==");
  } else if (rest == 2) {
    std::uint32_t word = (static_cast<std::uint32_t>(data[i]) << 16) |
                         (static_cast<std::uint32_t>(data[i + 1]) << 8);
    out.push_back(kBase64Alphabet[(word >> 18) & 0x3F]);
    out.push_back(kBase64Alphabet[(word >> 12) & 0x3F]);
    out.push_back(kBase64Alphabet[(word >> 6) & 0x3F]);
    out.push_back('=');
  }
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') {
    return c - '0';
  }
  if (c >= 'a' && c <= 'f') {
    return c - 'a' + 10;
  }
  if (c >= 'A' && c <= 'F') {
    return c - 'A' + 10;
  }
  return -1;
}

std::vector<std::uint8_t> decode_hex(std::string_view text,
                                     const ErrorCatalog& catalog) {
  if (text.size() % 2 != 0) {
    throw_decode(catalog, "hex", text.size(),
                 "length must be a multiple of 2");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    int high = hex_value(text[i]);
    if (high < 0) {
      throw_decode(catalog, "hex", i, "character is not a hex digit");
    }
    int low = hex_value(text[i + 1]);
    if (low < 0) {
      throw_decode(catalog, "hex", i + 1, "character is not a hex digit");
    }
    out.push_back(static_cast<std::uint8_t>((high << 4) | low));
  }
  return out;
}

}  // namespace

std::string_view to_string(WireFormat format) {
  switch (format) {
    case WireFormat::kBase64:
      return "base64";
    case WireFormat::kHex:
      return "hex";
    case WireFormat::kRaw:
      return "raw";
  }
  return "unknown";
}

std::optional<WireFormat> parse_wire_format(std::string_view text) {
  if (text == "base64") {
    return WireFormat::kBase64;
  }
  if (text == "hex") {
    return WireFormat::kHex;
  }
  if (text == "raw") {
    return WireFormat::kRaw;
  }
  return std::nullopt;
}

std::string encode_bytes(std::span<const std::uint8_t> data,
                         WireFormat format) {
  switch (format) {
    case WireFormat::kBase64:
      return encode_base64(data);
    case WireFormat::kHex: {
      std::string out;
      out.reserve(data.size() * 2);
      for (std::uint8_t byte : data) {
        out.push_back(kHexDigits[byte >> 4]);
        out.push_back(kHexDigits[byte & 0x0F]);
      }
      return out;
    }
    case WireFormat::kRaw:
      return std::string(reinterpret_cast<const char*>(data.data()),
                         data.size());
  }
  return {};
}

std::vector<std::uint8_t> decode_bytes(std::string_view text,
                                       WireFormat format,
                                       const ErrorCatalog& catalog) {
  switch (format) {
    case WireFormat::kBase64:
      return decode_base64(text, catalog);
    case WireFormat::kHex:
      return decode_hex(text, catalog);
    case WireFormat::kRaw:
      return std::vector<std::uint8_t>(text.begin(), text.end());
  }
  return {};
}

}  // namespace safencrypt
