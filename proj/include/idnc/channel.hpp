#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "idnc/model.hpp"

namespace idnc::channel {

// The per-episode random stream is a pure function of (master_seed,
// episode_index); replaying the pair replays the episode bit for bit.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t episode_index = 0;
};

class RandomStream {
 public:
  explicit RandomStream(SeedSpec seed);

  std::uint64_t next_u64();
  double next_unit();  // uniform in [0, 1)

  static constexpr std::string_view algorithm_name() { return "splitmix64"; }

 private:
  std::uint64_t state_ = 0;
};

enum class ErasureMode { Homogeneous, Heterogeneous };

std::string_view to_string(ErasureMode mode);
ErasureMode erasure_mode_from_string(std::string_view name);  // throws on unknown names

// Independent Bernoulli erasure per user. Draws for every user, complete or
// not, so the erasure matrix of an episode does not depend on the policy.
std::vector<bool> draw_erasures(const SystemState& state, RandomStream& stream);

// Homogeneous: every user gets avg_prob. Heterogeneous: i.i.d. uniform on
// [avg_prob - 0.15, avg_prob + 0.15], clipped to [0.01, 0.9]. Rejects
// avg_prob outside (0, 0.9].
std::vector<double> sample_erasure_probs(int num_users, double avg_prob, ErasureMode mode,
                                         RandomStream& stream);

}  // namespace idnc::channel
