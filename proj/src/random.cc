// Copyright 2026 The Fairstop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairstop/random.h"

namespace fairstop {
namespace {

std::mt19937_64 MakeEngine(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t path, bool nested) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>(index >> 32),
      static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32),
      static_cast<std::uint32_t>(nested ? 0x9e3779b9u : 0u)};
  return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed,
                           std::uint64_t stream_index)
    : RandomStream(master_seed, stream_index, 0, false) {}

RandomStream::RandomStream(std::uint64_t master_seed,
                           std::uint64_t stream_index, std::uint64_t sub_path,
                           bool nested)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      sub_path_(sub_path),
      engine_(MakeEngine(master_seed, stream_index, sub_path, nested)) {}

RandomStream RandomStream::Substream(std::uint64_t sub_index) const {
  // Fold the parent path so grandchildren differ from children.
  const std::uint64_t path = sub_path_ * 0x100000001b3ULL + sub_index + 1;
  return RandomStream(master_seed_, stream_index_, path, true);
}

double RandomStream::NextUniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::NextBelow(std::uint64_t bound) {
  // Rejection sampling, no modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace fairstop
