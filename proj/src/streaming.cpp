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

#include "safencrypt/streaming.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cipher_backend.hpp"
#include "safencrypt/cipher_engine.hpp"

namespace safencrypt {

namespace {

void warn_if_cbc(const AlgorithmId& algorithm, const Registry& registry) {
  if (algorithm.mode() == CipherMode::kCbc) {
    emit_warning(make_error(registry.error_catalog(), codes::kCbcWarning,
                            ErrorPhase::kConfig));
  }
}

[[noreturn]] void throw_io(const ErrorCatalog& catalog, ErrorPhase phase,
                           std::uint64_t position, const std::string& reason) {
  throw IoError(catalog, reason, phase, position);
}

// Reads up to chunk_bytes from the source; returns the byte count, 0 at
// end-of-stream. Only badbit means a real I/O failure — a short read that
// sets failbit+eofbit is the normal final chunk.
std::size_t read_chunk(std::istream& source, std::vector<std::uint8_t>& buffer,
                       std::size_t chunk_bytes, std::uint64_t position,
                       const ErrorCatalog& catalog, ErrorPhase phase) {
  buffer.resize(chunk_bytes);
  source.read(reinterpret_cast<char*>(buffer.data()),
              static_cast<std::streamsize>(chunk_bytes));
  if (source.bad()) {
    throw_io(catalog, phase, position, "reading from the source stream failed");
  }
  std::size_t got = static_cast<std::size_t>(source.gcount());
  buffer.resize(got);
  return got;
}

void write_all(std::ostream& sink, std::span<const std::uint8_t> data,
               std::uint64_t position, const ErrorCatalog& catalog,
               ErrorPhase phase) {
  if (data.empty()) {
    return;
  }
  sink.write(reinterpret_cast<const char*>(data.data()),
             static_cast<std::streamsize>(data.size()));
  if (!sink) {
    throw_io(catalog, phase, position, "writing to the sink stream failed");
  }
}

}  // namespace

StreamJob::StreamJob(const Registry& registry, AlgorithmId algorithm,
                     ModeConstraints constraints, SymmetricKey key,
                     std::vector<std::uint8_t> iv, std::size_t chunk_bytes,
                     StreamDirection direction, GcmReleasePolicy policy)
    : registry_(&registry),
      algorithm_(std::move(algorithm)),
      constraints_(constraints),
      key_(std::move(key)),
      iv_(std::move(iv)),
      chunk_bytes_(chunk_bytes),
      direction_(direction),
      policy_(policy) {
  if (chunk_bytes_ < 16) {
    throw std::invalid_argument("stream chunk size must be at least 16 bytes");
  }
}

StreamJob StreamJob::encryption(const Registry& registry,
                                const AlgorithmId& algorithm,
                                const SymmetricKey& key,
                                std::size_t chunk_bytes) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  validate_key_length(key, algorithm, registry.error_catalog());
  warn_if_cbc(algorithm, registry);
  std::vector<std::uint8_t> iv = detail::random_bytes(
      constraints.iv_length(), registry.error_catalog());
  return StreamJob(registry, algorithm, constraints, key, std::move(iv),
                   chunk_bytes, StreamDirection::kEncrypt,
                   GcmReleasePolicy::kVerifyBeforeRelease);
}

StreamJob StreamJob::encryption(const Registry& registry,
                                const InteropProfile& profile,
                                const SymmetricKey& key,
                                std::size_t chunk_bytes) {
  registry.validate_whitelisted(profile.default_algorithm);
  validate_key_length(key, profile.default_algorithm,
                      registry.error_catalog());
  warn_if_cbc(profile.default_algorithm, registry);
  std::vector<std::uint8_t> iv = detail::random_bytes(
      profile.constraints.iv_length(), registry.error_catalog());
  return StreamJob(registry, profile.default_algorithm, profile.constraints,
                   key, std::move(iv), chunk_bytes, StreamDirection::kEncrypt,
                   GcmReleasePolicy::kVerifyBeforeRelease);
}

StreamJob StreamJob::decryption(const Registry& registry,
                                const AlgorithmId& algorithm,
                                const SymmetricKey& key,
                                std::span<const std::uint8_t> iv,
                                std::size_t chunk_bytes,
                                GcmReleasePolicy policy) {
  const ModeConstraints& constraints = registry.constraints_for(algorithm);
  validate_key_length(key, algorithm, registry.error_catalog());
  detail::validate_iv_length(iv.size(), algorithm, constraints,
                             registry.error_catalog());
  warn_if_cbc(algorithm, registry);
  return StreamJob(registry, algorithm, constraints, key,
                   std::vector<std::uint8_t>(iv.begin(), iv.end()),
                   chunk_bytes, StreamDirection::kDecrypt, policy);
}

StreamJob StreamJob::decryption(const Registry& registry,
                                const InteropProfile& profile,
                                const SymmetricKey& key,
                                std::span<const std::uint8_t> iv,
                                std::size_t chunk_bytes,
                                GcmReleasePolicy policy) {
  registry.validate_whitelisted(profile.default_algorithm);
  validate_key_length(key, profile.default_algorithm,
                      registry.error_catalog());
  detail::validate_iv_length(iv.size(), profile.default_algorithm,
                             profile.constraints, registry.error_catalog());
  warn_if_cbc(profile.default_algorithm, registry);
  return StreamJob(registry, profile.default_algorithm, profile.constraints,
                   key, std::vector<std::uint8_t>(iv.begin(), iv.end()),
                   chunk_bytes, StreamDirection::kDecrypt, policy);
}

StreamSummary encrypt_stream(StreamJob&& job, std::istream& source,
                             std::ostream& sink) {
  if (job.direction_ != StreamDirection::kEncrypt) {
    throw std::logic_error("encrypt_stream requires an encryption job");
  }
  const ErrorCatalog& catalog = job.registry_->error_catalog();
  detail::CipherContext context(detail::CipherContext::Direction::kEncrypt,
                                job.algorithm_, job.key_.bytes(), job.iv_,
                                job.constraints_, catalog);
  const bool cbc = job.algorithm_.mode() == CipherMode::kCbc;

  std::uint64_t read_total = 0;
  std::uint64_t written_total = 0;
  std::vector<std::uint8_t> chunk;
  std::vector<std::uint8_t> carry;  // CBC only: sub-block remainder
  std::vector<std::uint8_t> produced;

  for (;;) {
    std::size_t got = read_chunk(source, chunk, job.chunk_bytes_, read_total,
                                 catalog, ErrorPhase::kEncrypt);
    if (got == 0) {
      break;
    }
    read_total += got;
    produced.clear();
    if (cbc) {
      // Feed whole blocks only; the final sub-block is padded at
      // end-of-stream exactly as the one-shot path pads the whole message.
      carry.insert(carry.end(), chunk.begin(), chunk.end());
      std::size_t aligned = (carry.size() / 16) * 16;
      context.update(std::span<const std::uint8_t>(carry.data(), aligned),
                     produced);
      carry.erase(carry.begin(),
                  carry.begin() + static_cast<std::ptrdiff_t>(aligned));
    } else {
      context.update(chunk, produced);
    }
    write_all(sink, produced, written_total, catalog, ErrorPhase::kEncrypt);
    written_total += produced.size();
  }

  produced.clear();
  if (cbc) {
    std::vector<std::uint8_t> padded = pad_pkcs7(carry);
    context.update(padded, produced);
  }
  context.finish_encrypt(produced);
  write_all(sink, produced, written_total, catalog, ErrorPhase::kEncrypt);
  written_total += produced.size();
  sink.flush();

  return StreamSummary{std::move(job.algorithm_), std::move(job.iv_),
                       read_total, written_total};
}

std::uint64_t decrypt_stream(StreamJob&& job, std::istream& source,
                             std::ostream& sink) {
  if (job.direction_ != StreamDirection::kDecrypt) {
    throw std::logic_error("decrypt_stream requires a decryption job");
  }
  const ErrorCatalog& catalog = job.registry_->error_catalog();
  detail::CipherContext context(detail::CipherContext::Direction::kDecrypt,
                                job.algorithm_, job.key_.bytes(), job.iv_,
                                job.constraints_, catalog);
  const bool cbc = job.algorithm_.mode() == CipherMode::kCbc;
  // CBC: hold back one decrypted block (it may be the pad block). GCM: hold
  // back tag-length input bytes (they are the trailing tag, not ciphertext).
  const std::size_t holdback = cbc ? 16 : job.constraints_.tag_bytes();
  const bool buffer_everything =
      !cbc && job.policy_ == GcmReleasePolicy::kVerifyBeforeRelease;

  std::uint64_t read_total = 0;
  std::uint64_t written_total = 0;
  std::vector<std::uint8_t> chunk;
  std::vector<std::uint8_t> carry;
  std::vector<std::uint8_t> pending;  // decrypted, not yet released

  auto release = [&](std::size_t keep_back) {
    if (buffer_everything || pending.size() <= keep_back) {
      return;
    }
    std::size_t releasable = pending.size() - keep_back;
    write_all(sink,
              std::span<const std::uint8_t>(pending.data(), releasable),
              written_total, catalog, ErrorPhase::kDecrypt);
    written_total += releasable;
    pending.erase(pending.begin(),
                  pending.begin() + static_cast<std::ptrdiff_t>(releasable));
  };

  for (;;) {
    std::size_t got = read_chunk(source, chunk, job.chunk_bytes_, read_total,
                                 catalog, ErrorPhase::kDecrypt);
    if (got == 0) {
      break;
    }
    read_total += got;
    carry.insert(carry.end(), chunk.begin(), chunk.end());
    std::size_t feedable = carry.size() > holdback ? carry.size() - holdback : 0;
    if (cbc) {
      feedable = (feedable / 16) * 16;
    }
    if (feedable > 0) {
      context.update(std::span<const std::uint8_t>(carry.data(), feedable),
                     pending);
      carry.erase(carry.begin(),
                  carry.begin() + static_cast<std::ptrdiff_t>(feedable));
      release(cbc ? 16 : 0);
    }
  }

  // Fail-fast length contract, applied to the total the stream turned out
  // to have: CBC needs a positive multiple of 16, GCM at least the tag.
  detail::validate_ciphertext_length(read_total, job.algorithm_,
                                     job.constraints_, catalog);

  if (cbc) {
    // With a block-multiple total, the carry is exactly the final block.
    context.update(carry, pending);
    context.finish_decrypt({}, pending);
    // `pending` ends with the pad block; everything before it is released.
    std::vector<std::uint8_t> tail;
    try {
      tail = unpad_pkcs7(std::span<const std::uint8_t>(
          pending.data() + pending.size() - 16, 16));
    } catch (const InvalidPaddingError& padding_error) {
      throw map_backend_error("InvalidPaddingError", padding_error.what(),
                              ErrorPhase::kDecrypt, catalog);
    }
    pending.resize(pending.size() - 16);
    pending.insert(pending.end(), tail.begin(), tail.end());
  } else {
    context.finish_decrypt(carry, pending);
  }

  write_all(sink, pending, written_total, catalog, ErrorPhase::kDecrypt);
  written_total += pending.size();
  sink.flush();
  return written_total;
}

}  // namespace safencrypt
