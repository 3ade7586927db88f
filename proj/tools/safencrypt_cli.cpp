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
//
// Command-line front end over the staged pipelines.
//
// Exit status: 0 success, 1 coded SafEncrypt error (rendered on stderr),
// 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "safencrypt/safencrypt.hpp"

namespace {

using nlohmann::ordered_json;
namespace se = safencrypt;

constexpr int kExitOk = 0;
constexpr int kExitSafError = 1;
constexpr int kExitUsage = 2;

// Thrown for CLI-level misuse that CLI11's declarative checks cannot
// express (e.g. two stdin consumers); maps to exit status 2.
struct UsageError {
  std::string message;
};

std::vector<std::uint8_t> read_input(const std::string& path) {
  if (path == "-") {
    std::vector<std::uint8_t> data;
    char buffer[4096];
    while (std::cin.read(buffer, sizeof(buffer)) || std::cin.gcount() > 0) {
      data.insert(data.end(), buffer, buffer + std::cin.gcount());
    }
    return data;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw se::IoError("cannot open input file " + path, se::ErrorPhase::kConfig,
                      0);
  }
  std::vector<std::uint8_t> data;
  char buffer[4096];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    data.insert(data.end(), buffer, buffer + in.gcount());
  }
  if (in.bad()) {
    throw se::IoError("failed while reading " + path, se::ErrorPhase::kConfig,
                      data.size());
  }
  return data;
}

void write_output(const std::string& path,
                  std::span<const std::uint8_t> data) {
  if (path == "-") {
    std::cout.write(reinterpret_cast<const char*>(data.data()),
                    static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw se::IoError("cannot open output file " + path,
                      se::ErrorPhase::kConfig, 0);
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw se::IoError("failed while writing " + path, se::ErrorPhase::kConfig,
                      0);
  }
}

std::string read_password_line() {
  std::string line;
  if (!std::getline(std::cin, line)) {
    throw UsageError{"--password-stdin given but standard input is empty"};
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.pop_back();
  }
  return line;
}

// Options shared by encrypt and decrypt.
struct CipherOptions {
  std::string algorithm;
  std::string interop;
  std::string key_b64;
  std::string password;
  bool password_stdin = false;
  bool gen_key = false;
  std::string salt_b64;
  std::string iv_b64;
  std::string in_path = "-";
  std::string out_path = "-";
  std::string format = "base64";
};

void add_common_cipher_options(CLI::App* cmd, CipherOptions& opt,
                               bool decrypting) {
  cmd->add_option("--alg", opt.algorithm,
                  "Algorithm id (default: registry default)");
  cmd->add_option("--interop", opt.interop,
                  "Use an interoperability profile (e.g. Python, CSharp)");
  cmd->add_option("--key", opt.key_b64, "Key, base64");
  cmd->add_option("--password", opt.password,
                  "Password for PBKDF2 key derivation (visible in the "
                  "process list; prefer --password-stdin)");
  cmd->add_flag("--password-stdin", opt.password_stdin,
                "Read the password from the first line of standard input");
  cmd->add_option("--salt", opt.salt_b64, "PBKDF2 salt, base64");
  if (decrypting) {
    cmd->add_option("--iv", opt.iv_b64, "IV, base64");
  } else {
    cmd->add_flag("--gen-key", opt.gen_key,
                  "Generate a fresh key; printed base64 on stderr");
  }
  cmd->add_option("--in", opt.in_path, "Input file, or - for stdin");
  cmd->add_option("--out", opt.out_path, "Output file, or - for stdout");
  cmd->add_option("--format", opt.format,
                  "Wire format: base64 | hex | raw (default base64)")
      ->check(CLI::IsMember({"base64", "hex", "raw"}));
}

se::WireFormat resolve_format(const std::string& text) {
  std::optional<se::WireFormat> format = se::parse_wire_format(text);
  if (!format) {
    throw UsageError{"--format must be base64, hex or raw"};
  }
  return *format;
}

void warn_password_on_command_line() {
  std::cerr << "warning: --password is visible to other users via the "
               "process list; prefer --password-stdin\n";
}

std::string resolve_password(const CipherOptions& opt) {
  if (opt.password_stdin) {
    if (opt.in_path == "-") {
      throw UsageError{
          "--password-stdin cannot be combined with reading data from stdin; "
          "pass --in <path>"};
    }
    return read_password_line();
  }
  warn_password_on_command_line();
  return opt.password;
}

int count_key_sources(const CipherOptions& opt) {
  return (opt.key_b64.empty() ? 0 : 1) + (opt.password.empty() ? 0 : 1) +
         (opt.password_stdin ? 1 : 0) + (opt.gen_key ? 1 : 0);
}

se::AlgorithmId resolve_algorithm(const se::Registry& registry,
                                  const CipherOptions& opt) {
  if (!opt.interop.empty()) {
    return registry.interop_profile(opt.interop).default_algorithm;
  }
  if (!opt.algorithm.empty()) {
    return se::AlgorithmId::parse(opt.algorithm);
  }
  return registry.default_algorithm();
}

// --- encrypt -----------------------------------------------------------------

int run_encrypt(const se::Registry& registry, const CipherOptions& opt) {
  if (count_key_sources(opt) != 1) {
    throw UsageError{
        "exactly one key source is required: --key | --password | "
        "--password-stdin | --gen-key"};
  }
  if (!opt.interop.empty() && !opt.algorithm.empty()) {
    throw UsageError{"--interop already selects an algorithm; drop --alg"};
  }
  se::WireFormat format = resolve_format(opt.format);

  if (format == se::WireFormat::kRaw) {
    if (opt.out_path == "-") {
      throw UsageError{
          "--format raw writes a ciphertext file plus a .meta.json sidecar "
          "and needs --out <path>"};
    }
    se::AlgorithmId algorithm = resolve_algorithm(registry, opt);

    std::optional<se::PbeParameters> pbe;
    std::optional<se::SymmetricKey> key;
    if (!opt.key_b64.empty()) {
      key = se::SymmetricKey::from_bytes(
          se::decode_bytes(opt.key_b64, se::WireFormat::kBase64,
                           registry.error_catalog()));
    } else if (opt.gen_key) {
      key = se::generate_key(algorithm, registry);
    } else {
      se::PbeDerivation derivation =
          se::derive_key(resolve_password(opt), algorithm, registry);
      pbe = se::PbeParameters{derivation.salt, derivation.prf,
                              derivation.iterations};
      key = std::move(derivation.key);
    }

    se::StreamJob job =
        opt.interop.empty()
            ? se::StreamJob::encryption(registry, algorithm, *key)
            : se::StreamJob::encryption(
                  registry, registry.interop_profile(opt.interop), *key);

    std::ifstream file_in;
    std::istream* source = &std::cin;
    if (opt.in_path != "-") {
      file_in.open(opt.in_path, std::ios::binary);
      if (!file_in) {
        throw se::IoError("cannot open input file " + opt.in_path,
                          se::ErrorPhase::kConfig, 0);
      }
      source = &file_in;
    }
    std::ofstream sink(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!sink) {
      throw se::IoError("cannot open output file " + opt.out_path,
                        se::ErrorPhase::kConfig, 0);
    }

    se::StreamSummary summary =
        se::encrypt_stream(std::move(job), *source, sink);

    ordered_json meta;
    meta["alg"] = summary.algorithm.canonical();
    meta["iv"] = se::encode_bytes(summary.iv, se::WireFormat::kBase64);
    if (pbe) {
      meta["salt"] = se::encode_bytes(pbe->salt, se::WireFormat::kBase64);
      meta["prf"] = std::string(se::canonical_name(pbe->prf));
      meta["iterations"] = pbe->iterations;
    }
    std::ofstream meta_out(opt.out_path + ".meta.json",
                           std::ios::binary | std::ios::trunc);
    meta_out << meta.dump(2) << "\n";
    if (!meta_out) {
      throw se::IoError("failed while writing " + opt.out_path + ".meta.json",
                        se::ErrorPhase::kConfig, 0);
    }

    if (opt.gen_key) {
      std::cerr << "generated-key: "
                << se::encode_bytes(key->bytes(), se::WireFormat::kBase64)
                << "\n";
    }
    return kExitOk;
  }

  // base64 / hex: one-shot through the staged pipeline, JSON envelope out.
  std::vector<std::uint8_t> plaintext = read_input(opt.in_path);

  se::EncryptionBuilder pipeline =
      opt.interop.empty()
          ? (opt.algorithm.empty()
                 ? se::symmetric_encryption(registry)
                 : se::symmetric_encryption(
                       registry, se::AlgorithmId::parse(opt.algorithm)))
          : se::symmetric_interop(registry, opt.interop);

  std::optional<se::SymmetricKey> generated;
  se::KeyedEncryptionBuilder keyed = [&]() {
    if (!opt.key_b64.empty()) {
      return std::move(pipeline).key(se::SymmetricKey::from_bytes(
          se::decode_bytes(opt.key_b64, se::WireFormat::kBase64,
                           registry.error_catalog())));
    }
    if (opt.gen_key) {
      generated = se::generate_key(pipeline.algorithm(), registry);
      return std::move(pipeline).key(*generated);
    }
    return std::move(pipeline).password(resolve_password(opt));
  }();

  se::SymmetricCipherResult result =
      std::move(keyed).plaintext(plaintext).encrypt();

  ordered_json envelope;
  envelope["alg"] = result.algorithm.canonical();
  envelope["iv"] = se::encode_bytes(result.iv, format);
  envelope["ct"] = se::encode_bytes(result.ciphertext, format);
  if (result.pbe) {
    envelope["salt"] = se::encode_bytes(result.pbe->salt, format);
  }
  std::string text = envelope.dump() + "\n";
  write_output(opt.out_path,
               std::span<const std::uint8_t>(
                   reinterpret_cast<const std::uint8_t*>(text.data()),
                   text.size()));

  if (generated) {
    std::cerr << "generated-key: "
              << se::encode_bytes(generated->bytes(), se::WireFormat::kBase64)
              << "\n";
  }
  return kExitOk;
}

// --- decrypt -----------------------------------------------------------------

ordered_json parse_envelope(const std::vector<std::uint8_t>& text,
                            const se::Registry& registry, const char* what) {
  ordered_json doc = ordered_json::parse(text.begin(), text.end(), nullptr,
                                         /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw se::make_error(registry.error_catalog(), se::codes::kConfigParse,
                         se::ErrorPhase::kConfig,
                         {{"document", what},
                          {"reason", "not a JSON object"}});
  }
  return doc;
}

std::string require_envelope_string(const ordered_json& doc, const char* key,
                                    const se::Registry& registry,
                                    const char* what) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) {
    throw se::make_error(
        registry.error_catalog(), se::codes::kConfigParse,
        se::ErrorPhase::kConfig,
        {{"document", what},
         {"reason", std::string("missing string field [") + key + "]"}});
  }
  return it->get<std::string>();
}

int run_decrypt(const se::Registry& registry, const CipherOptions& opt) {
  int key_sources = (opt.key_b64.empty() ? 0 : 1) +
                    (opt.password.empty() ? 0 : 1) +
                    (opt.password_stdin ? 1 : 0);
  if (key_sources != 1) {
    throw UsageError{
        "exactly one key source is required: --key | --password | "
        "--password-stdin"};
  }
  if (!opt.interop.empty() && !opt.algorithm.empty()) {
    throw UsageError{"--interop already selects an algorithm; drop --alg"};
  }
  se::WireFormat format = resolve_format(opt.format);
  const se::ErrorCatalog& catalog = registry.error_catalog();

  se::AlgorithmId algorithm = resolve_algorithm(registry, opt);
  std::vector<std::uint8_t> iv;
  std::vector<std::uint8_t> ciphertext;
  std::optional<std::vector<std::uint8_t>> salt;
  std::optional<se::KeyDerivationPrf> prf;

  std::optional<std::ifstream> raw_in;
  if (format == se::WireFormat::kRaw) {
    if (opt.in_path == "-") {
      throw UsageError{
          "--format raw reads the .meta.json sidecar next to the ciphertext "
          "and needs --in <path>"};
    }
    std::string meta_path = opt.in_path + ".meta.json";
    if (std::filesystem::exists(meta_path)) {
      ordered_json meta =
          parse_envelope(read_input(meta_path), registry, "metadata");
      if (opt.algorithm.empty() && opt.interop.empty()) {
        algorithm = se::AlgorithmId::parse(
            require_envelope_string(meta, "alg", registry, "metadata"));
      }
      if (opt.iv_b64.empty()) {
        iv = se::decode_bytes(
            require_envelope_string(meta, "iv", registry, "metadata"),
            se::WireFormat::kBase64, catalog);
      }
      if (auto it = meta.find("salt"); it != meta.end() && it->is_string()) {
        salt = se::decode_bytes(it->get<std::string>(),
                                se::WireFormat::kBase64, catalog);
      }
      if (auto it = meta.find("prf"); it != meta.end() && it->is_string()) {
        prf = se::parse_prf(it->get<std::string>());
      }
    } else if (opt.iv_b64.empty()) {
      throw UsageError{"no sidecar " + meta_path +
                       " found; pass --alg and --iv explicitly"};
    }
  } else {
    ordered_json envelope =
        parse_envelope(read_input(opt.in_path), registry, "envelope");
    if (opt.algorithm.empty() && opt.interop.empty()) {
      algorithm = se::AlgorithmId::parse(
          require_envelope_string(envelope, "alg", registry, "envelope"));
    }
    if (opt.iv_b64.empty()) {
      iv = se::decode_bytes(
          require_envelope_string(envelope, "iv", registry, "envelope"),
          format, catalog);
    }
    ciphertext = se::decode_bytes(
        require_envelope_string(envelope, "ct", registry, "envelope"), format,
        catalog);
    if (auto it = envelope.find("salt");
        it != envelope.end() && it->is_string()) {
      salt = se::decode_bytes(it->get<std::string>(), format, catalog);
    }
  }

  if (!opt.iv_b64.empty()) {
    iv = se::decode_bytes(opt.iv_b64, se::WireFormat::kBase64, catalog);
  }
  if (!opt.salt_b64.empty()) {
    salt = se::decode_bytes(opt.salt_b64, se::WireFormat::kBase64, catalog);
  }

  // Key material: raw key, or re-derivation from password + salt.
  std::optional<se::SymmetricKey> key;
  if (!opt.key_b64.empty()) {
    key = se::SymmetricKey::from_bytes(
        se::decode_bytes(opt.key_b64, se::WireFormat::kBase64, catalog));
  } else {
    if (!salt) {
      throw UsageError{
          "password decryption needs the salt recorded at encryption time "
          "(envelope/sidecar field or --salt)"};
    }
    se::PbeDerivation derivation = se::derive_key(
        resolve_password(opt), algorithm, registry,
        std::span<const std::uint8_t>(salt->data(), salt->size()), prf);
    key = std::move(derivation.key);
  }

  if (format == se::WireFormat::kRaw) {
    se::StreamJob job =
        opt.interop.empty()
            ? se::StreamJob::decryption(registry, algorithm, *key, iv)
            : se::StreamJob::decryption(
                  registry, registry.interop_profile(opt.interop), *key, iv);
    std::ifstream source(opt.in_path, std::ios::binary);
    if (!source) {
      throw se::IoError("cannot open input file " + opt.in_path,
                        se::ErrorPhase::kConfig, 0);
    }
    std::ofstream file_sink;
    std::ostream* sink = &std::cout;
    if (opt.out_path != "-") {
      file_sink.open(opt.out_path, std::ios::binary | std::ios::trunc);
      if (!file_sink) {
        throw se::IoError("cannot open output file " + opt.out_path,
                          se::ErrorPhase::kConfig, 0);
      }
      sink = &file_sink;
    }
    se::decrypt_stream(std::move(job), source, *sink);
    return kExitOk;
  }

  se::DecryptionBuilder pipeline =
      opt.interop.empty()
          ? se::symmetric_decryption(registry, algorithm)
          : se::symmetric_interop_decryption(registry, opt.interop);
  std::vector<std::uint8_t> plaintext =
      std::move(pipeline).key(*key).iv(iv).cipher_text(ciphertext).decrypt();
  write_output(opt.out_path, plaintext);
  return kExitOk;
}

// --- small commands ----------------------------------------------------------

int run_keygen(const se::Registry& registry, const std::string& algorithm,
               const std::string& format_name) {
  se::WireFormat format = resolve_format(format_name);
  se::AlgorithmId id = algorithm.empty() ? registry.default_algorithm()
                                         : se::AlgorithmId::parse(algorithm);
  se::SymmetricKey key = se::generate_key(id, registry);
  std::cout << se::encode_bytes(key.bytes(), format);
  if (format != se::WireFormat::kRaw) {
    std::cout << "\n";
  }
  return kExitOk;
}

int run_derive_key(const se::Registry& registry, const std::string& algorithm,
                   const std::string& password, bool password_stdin,
                   const std::string& salt_b64, const std::string& prf_name,
                   const std::string& format_name) {
  se::WireFormat format = resolve_format(format_name);
  if (password.empty() == !password_stdin) {
    throw UsageError{"pass exactly one of --password or --password-stdin"};
  }
  if (!password.empty()) {
    warn_password_on_command_line();
  }
  std::string secret = password_stdin ? read_password_line() : password;

  se::AlgorithmId id = algorithm.empty() ? registry.default_algorithm()
                                         : se::AlgorithmId::parse(algorithm);
  std::optional<std::vector<std::uint8_t>> salt;
  if (!salt_b64.empty()) {
    salt = se::decode_bytes(salt_b64, se::WireFormat::kBase64,
                            registry.error_catalog());
  }
  std::optional<se::KeyDerivationPrf> prf;
  if (!prf_name.empty()) {
    prf = se::parse_prf(prf_name);
  }

  se::PbeDerivation derivation = se::derive_key(
      secret, id, registry,
      salt ? std::optional<std::span<const std::uint8_t>>(
                 std::span<const std::uint8_t>(salt->data(), salt->size()))
           : std::nullopt,
      prf);

  ordered_json out;
  out["key"] = se::encode_bytes(derivation.key.bytes(), format);
  out["salt"] = se::encode_bytes(derivation.salt, format);
  out["prf"] = std::string(se::canonical_name(derivation.prf));
  out["iterations"] = derivation.iterations;
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_algorithms(const se::Registry& registry) {
  for (const se::AlgorithmId& algorithm : registry.whitelist()) {
    std::cout << algorithm.canonical() << "\n";
  }
  return kExitOk;
}

int run_config(const se::Registry& registry) {
  ordered_json doc;
  doc["default-algorithm"] = registry.default_algorithm().canonical();
  doc["symmetric-algorithms"] = ordered_json::array();
  for (const se::AlgorithmId& algorithm : registry.whitelist()) {
    doc["symmetric-algorithms"].push_back(algorithm.canonical());
  }
  doc["constraints"] = ordered_json::object();
  for (const se::AlgorithmId& algorithm : registry.whitelist()) {
    const se::ModeConstraints& constraints =
        registry.constraints_for(algorithm);
    ordered_json entry;
    entry["iv-bytes"] = constraints.iv_bytes;
    if (constraints.tag_bits) {
      entry["tag-bits"] = *constraints.tag_bits;
    }
    doc["constraints"][algorithm.family_mode()] = entry;
  }
  const se::KdfConfig& kdf = registry.kdf();
  ordered_json kdf_doc;
  kdf_doc["algorithms"] = ordered_json::array();
  for (se::KeyDerivationPrf prf : kdf.algorithms) {
    kdf_doc["algorithms"].push_back(std::string(se::canonical_name(prf)));
  }
  kdf_doc["default-algorithm"] =
      std::string(se::canonical_name(kdf.default_algorithm));
  kdf_doc["salt-bytes"] = kdf.salt_bytes;
  kdf_doc["iterations"] = kdf.iterations;
  doc["kdf"] = kdf_doc;
  doc["interoperable-languages"] = ordered_json::object();
  for (const auto& [language, profile] : registry.interop_profiles()) {
    ordered_json entry;
    entry["library-Provider"] = profile.library_provider;
    entry["default-algo"] = profile.default_algorithm.canonical();
    entry["iv-bytes"] = profile.constraints.iv_bytes;
    if (profile.constraints.tag_bits) {
      entry["tag-bits"] = *profile.constraints.tag_bits;
    }
    doc["interoperable-languages"][language] = entry;
  }
  doc["error-codes"] = ordered_json::array();
  for (const auto& [code, unused] : registry.error_catalog().templates()) {
    doc["error-codes"].push_back(code);
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "SafEncrypt: misuse-resistant symmetric encryption for humans and "
      "scripts"};
  app.require_subcommand(1);

  std::string config_dir;
  app.add_option("--config-dir", config_dir,
                 "Directory with symmetric.json / kdf.json / interop.json / "
                 "errors.json overrides")
      ->envname("SAFENCRYPT_CONFIG_DIR");

  CipherOptions encrypt_opt;
  CLI::App* encrypt_cmd =
      app.add_subcommand("encrypt", "Encrypt stdin or a file");
  add_common_cipher_options(encrypt_cmd, encrypt_opt, /*decrypting=*/false);

  CipherOptions decrypt_opt;
  CLI::App* decrypt_cmd =
      app.add_subcommand("decrypt", "Decrypt an envelope or a raw file");
  add_common_cipher_options(decrypt_cmd, decrypt_opt, /*decrypting=*/true);

  std::string keygen_alg;
  std::string keygen_format = "base64";
  CLI::App* keygen_cmd =
      app.add_subcommand("keygen", "Generate a random key (printed, by "
                                   "explicit request, on stdout)");
  keygen_cmd->add_option("--alg", keygen_alg,
                         "Algorithm id (default: registry default)");
  keygen_cmd->add_option("--format", keygen_format,
                         "Wire format: base64 | hex | raw")
      ->check(CLI::IsMember({"base64", "hex", "raw"}));

  std::string derive_alg;
  std::string derive_password;
  bool derive_password_stdin = false;
  std::string derive_salt;
  std::string derive_prf;
  std::string derive_format = "base64";
  CLI::App* derive_cmd = app.add_subcommand(
      "derive-key", "Derive a key from a password via PBKDF2");
  derive_cmd->add_option("--alg", derive_alg,
                         "Target algorithm (fixes the key length)");
  derive_cmd->add_option("--password", derive_password, "Password");
  derive_cmd->add_flag("--password-stdin", derive_password_stdin,
                       "Read the password from the first line of stdin");
  derive_cmd->add_option("--salt", derive_salt,
                         "Salt, base64 (default: fresh random salt)");
  derive_cmd->add_option(
      "--prf", derive_prf,
      "PBKDF2WithHmacSHA256 | PBKDF2WithHmacSHA512 (default from config)");
  derive_cmd->add_option("--format", derive_format,
                         "Wire format for key/salt output")
      ->check(CLI::IsMember({"base64", "hex", "raw"}));

  CLI::App* algorithms_cmd =
      app.add_subcommand("algorithms", "List the whitelisted algorithms");

  CLI::App* config_cmd = app.add_subcommand(
      "config", "Validate and pretty-print the effective configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    se::Registry registry = config_dir.empty()
                                ? se::Registry::load_shipped()
                                : se::Registry::load_from_dir(config_dir);
    if (encrypt_cmd->parsed()) {
      return run_encrypt(registry, encrypt_opt);
    }
    if (decrypt_cmd->parsed()) {
      return run_decrypt(registry, decrypt_opt);
    }
    if (keygen_cmd->parsed()) {
      return run_keygen(registry, keygen_alg, keygen_format);
    }
    if (derive_cmd->parsed()) {
      return run_derive_key(registry, derive_alg, derive_password,
                            derive_password_stdin, derive_salt, derive_prf,
                            derive_format);
    }
    if (algorithms_cmd->parsed()) {
      return run_algorithms(registry);
    }
    if (config_cmd->parsed()) {
      return run_config(registry);
    }
    std::cerr << "no command given\n";
    return kExitUsage;
  } catch (const UsageError& usage) {
    std::cerr << "usage error: " << usage.message << "\n";
    return kExitUsage;
  } catch (const se::SafError& error) {
    std::cerr << se::render(error) << "\n";
    return kExitSafError;
  } catch (const std::exception& unexpected) {
    std::cerr << "unexpected error: " << unexpected.what() << "\n";
    return kExitSafError;
  }
}
