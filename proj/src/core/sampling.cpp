// Copyright 2026 The djsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "djsim/error.hpp"
#include "djsim/qstate.hpp"

namespace djsim {

namespace {

constexpr std::uint64_t kShotsPerWorker = 1u << 16;

std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi32(std::uint64_t x) {
    return static_cast<std::uint32_t>(x >> 32);
}

} // namespace

double shot_uniform(std::uint64_t seed, std::uint64_t shot) {
    std::seed_seq seq{lo32(seed), hi32(seed), lo32(shot), hi32(shot)};
    std::mt19937_64 engine(seq);
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

CountTable sample_shots(const ProbabilityTable &dist, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots == 0) {
        fail(ErrorKind::InvalidArgument, "sample_shots needs shots >= 1");
    }
    if (dist.empty()) {
        fail(ErrorKind::InvalidArgument, "empty probability table");
    }
    std::vector<Outcome> keys;
    std::vector<double> cdf;
    double total = 0.0;
    for (const auto &[k, p] : dist) {
        if (!std::isfinite(p) || p < 0.0) {
            fail(ErrorKind::InvalidArgument,
                 "probability table has a negative or non-finite entry");
        }
        total += p;
        keys.push_back(k);
        cdf.push_back(total);
    }
    if (std::abs(total - 1.0) > 1e-9) {
        fail(ErrorKind::InvalidArgument,
             "probability table sums to " + std::to_string(total));
    }
    // The last bucket absorbs rounding so every draw lands somewhere.
    cdf.back() = std::numeric_limits<double>::infinity();

    auto draw = [&](std::uint64_t shot) -> std::size_t {
        const double u = shot_uniform(seed, shot) * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        return static_cast<std::size_t>(it - cdf.begin());
    };

    const std::uint64_t workers = std::clamp<std::uint64_t>(
        shots / kShotsPerWorker, 1,
        std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(keys.size(), 0));
    {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::uint64_t begin = shots * w / workers;
                const std::uint64_t end = shots * (w + 1) / workers;
                for (std::uint64_t s = begin; s < end; ++s) {
                    ++partial[w][draw(s)];
                }
            });
        }
    }

    CountTable counts;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        std::uint64_t c = 0;
        for (const auto &p : partial) {
            c += p[i];
        }
        counts.emplace(keys[i], c);
    }
    return counts;
}

} // namespace djsim
