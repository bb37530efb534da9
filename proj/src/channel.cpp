#include "idnc/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace idnc::channel {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(SeedSpec seed) {
  std::uint64_t master = seed.master_seed;
  std::uint64_t episode = seed.episode_index + 0x9e3779b97f4a7c15ULL;
  state_ = splitmix_step(master) ^ (splitmix_step(episode) + 0x6a09e667f3bcc909ULL);
}

std::uint64_t RandomStream::next_u64() { return splitmix_step(state_); }

double RandomStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::string_view to_string(ErasureMode mode) {
  return mode == ErasureMode::Homogeneous ? "homogeneous" : "heterogeneous";
}

ErasureMode erasure_mode_from_string(std::string_view name) {
  if (name == "homogeneous") return ErasureMode::Homogeneous;
  if (name == "heterogeneous") return ErasureMode::Heterogeneous;
  throw std::invalid_argument("unknown erasure mode: " + std::string(name));
}

std::vector<bool> draw_erasures(const SystemState& state, RandomStream& stream) {
  std::vector<bool> erased(state.users().size());
  for (std::size_t i = 0; i < state.users().size(); ++i)
    erased[i] = stream.next_unit() < state.users()[i].erasure_prob();
  return erased;
}

std::vector<double> sample_erasure_probs(int num_users, double avg_prob, ErasureMode mode,
                                         RandomStream& stream) {
  if (num_users < 1) throw std::invalid_argument("need at least one user");
  if (!(avg_prob > 0.0) || avg_prob > 0.9)
    throw std::invalid_argument("average erasure probability must lie in (0, 0.9]");
  std::vector<double> probs(num_users, avg_prob);
  if (mode == ErasureMode::Heterogeneous) {
    for (double& p : probs) {
      p = avg_prob - 0.15 + 0.3 * stream.next_unit();
      p = std::clamp(p, 0.01, 0.9);
    }
  }
  return probs;
}

}  // namespace idnc::channel
