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

#ifndef FAIRSTOP_RANDOM_H_
#define FAIRSTOP_RANDOM_H_

#include <cstdint>
#include <random>

namespace fairstop {

// A reproducible random stream keyed by (master seed, stream index). Streams
// with distinct indices are seeded through std::seed_seq and are treated as
// independent; identical keys replay identical draw sequences.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

  // A child stream for work nested inside this one (e.g. an audit within a
  // trial). Deterministic in (seed, index, sub_index).
  RandomStream Substream(std::uint64_t sub_index) const;

  // Uniform on [0, 1) with 53 random bits.
  double NextUniform();
  // Uniform integer on [0, bound).
  std::uint64_t NextBelow(std::uint64_t bound);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }
  std::mt19937_64& engine() { return engine_; }

 private:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index,
               std::uint64_t sub_index, bool nested);

  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t sub_path_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace fairstop

#endif  // FAIRSTOP_RANDOM_H_
