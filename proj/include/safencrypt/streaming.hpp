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
#include <iosfwd>
#include <span>
#include <vector>

#include "safencrypt/algorithm.hpp"
#include "safencrypt/key_material.hpp"
#include "safencrypt/registry.hpp"

namespace safencrypt {

inline constexpr std::size_t kDefaultChunkBytes = 4096;

enum class StreamDirection { kEncrypt, kDecrypt };

// GCM places the authentication tag at the end of the stream, so a decryptor
// cannot both verify-before-release and emit plaintext incrementally.
// kVerifyBeforeRelease (the default) buffers all plaintext and writes the
// sink only after the tag verifies — peak memory is O(stream), traded for
// the AEAD guarantee. kUnsafeEarlyRelease emits plaintext as it is produced
// and still fails at the end on tamper, but by then unauthenticated bytes
// have reached the sink; opt in only when the sink is revocable.
enum class GcmReleasePolicy { kVerifyBeforeRelease, kUnsafeEarlyRelease };

// What a finished encryption pass produced: everything a decryption needs
// plus the byte counts.
struct StreamSummary {
  AlgorithmId algorithm;
  std::vector<std::uint8_t> iv;
  std::uint64_t plaintext_bytes = 0;
  std::uint64_t ciphertext_bytes = 0;
};

// A single chunked encryption or decryption pass. Jobs are validated
// fail-fast at construction (whitelist, key length, IV length) and consumed
// by the run functions, which forbids accidental IV reuse by re-running.
class StreamJob {
 public:
  // Encryption job under a fresh internally generated IV (exposed via iv()
  // and in the run summary, for transport alongside the ciphertext).
  static StreamJob encryption(const Registry& registry,
                              const AlgorithmId& algorithm,
                              const SymmetricKey& key,
                              std::size_t chunk_bytes = kDefaultChunkBytes);

  // Encryption job configured from an interoperability profile.
  static StreamJob encryption(const Registry& registry,
                              const InteropProfile& profile,
                              const SymmetricKey& key,
                              std::size_t chunk_bytes = kDefaultChunkBytes);

  static StreamJob decryption(
      const Registry& registry, const AlgorithmId& algorithm,
      const SymmetricKey& key, std::span<const std::uint8_t> iv,
      std::size_t chunk_bytes = kDefaultChunkBytes,
      GcmReleasePolicy policy = GcmReleasePolicy::kVerifyBeforeRelease);

  static StreamJob decryption(
      const Registry& registry, const InteropProfile& profile,
      const SymmetricKey& key, std::span<const std::uint8_t> iv,
      std::size_t chunk_bytes = kDefaultChunkBytes,
      GcmReleasePolicy policy = GcmReleasePolicy::kVerifyBeforeRelease);

  StreamJob(const StreamJob&) = delete;
  StreamJob& operator=(const StreamJob&) = delete;
  StreamJob(StreamJob&&) noexcept = default;
  StreamJob& operator=(StreamJob&&) noexcept = default;

  const AlgorithmId& algorithm() const { return algorithm_; }
  const std::vector<std::uint8_t>& iv() const { return iv_; }
  std::size_t chunk_bytes() const { return chunk_bytes_; }
  StreamDirection direction() const { return direction_; }
  GcmReleasePolicy release_policy() const { return policy_; }

 private:
  friend StreamSummary encrypt_stream(StreamJob&& job, std::istream& source,
                                      std::ostream& sink);
  friend std::uint64_t decrypt_stream(StreamJob&& job, std::istream& source,
                                      std::ostream& sink);

  StreamJob(const Registry& registry, AlgorithmId algorithm,
            ModeConstraints constraints, SymmetricKey key,
            std::vector<std::uint8_t> iv, std::size_t chunk_bytes,
            StreamDirection direction, GcmReleasePolicy policy);

  const Registry* registry_;
  AlgorithmId algorithm_;
  ModeConstraints constraints_;
  SymmetricKey key_;
  std::vector<std::uint8_t> iv_;
  std::size_t chunk_bytes_;
  StreamDirection direction_;
  GcmReleasePolicy policy_;
};

// Chunked encryption whose sink bytes are identical to what the one-shot
// encrypt() would produce for the whole stream under the same key and IV:
// CBC padding is finalized at end-of-stream, the GCM tag is written last.
// Throws IoError on stream failures (with the position) and SafError for
// cipher-level problems.
StreamSummary encrypt_stream(StreamJob&& job, std::istream& source,
                             std::ostream& sink);

// Chunked decryption dual. Returns the plaintext byte count. On a GCM tag
// mismatch or CBC padding failure throws SAF_010; under the default
// verify-before-release policy the sink receives nothing in that case.
std::uint64_t decrypt_stream(StreamJob&& job, std::istream& source,
                             std::ostream& sink);

}  // namespace safencrypt
