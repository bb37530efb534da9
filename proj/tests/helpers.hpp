#pragma once

#include <random>
#include <vector>

#include "idnc/model.hpp"

namespace idnc_test {

// The three-user, four-message instance used throughout: user 1 holds {1,2},
// user 2 holds {3}, user 3 holds {1,3,4}; lossless links.
inline idnc::SystemState three_user_instance() {
  return idnc::new_system(4, {{1, 2}, {3}, {1, 3, 4}}, {0.0, 0.0, 0.0});
}

struct RandomInstanceOptions {
  int max_users = 4;
  int max_messages = 5;
  double has_density = 0.4;
  bool zero_erasure = true;   // otherwise p is drawn on a 1/64 grid in [0, 0.5)
};

// Random instance with at least one incomplete user.
inline idnc::SystemState random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opt = {}) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const int users = 1 + static_cast<int>(rng() % opt.max_users);
    const int messages = 2 + static_cast<int>(rng() % (opt.max_messages - 1));
    std::vector<std::vector<idnc::MessageId>> has(users);
    std::vector<double> probs(users, 0.0);
    bool incomplete = false;
    for (int u = 0; u < users; ++u) {
      for (idnc::MessageId m = 1; m <= messages; ++m)
        if (unit(rng) < opt.has_density) has[u].push_back(m);
      if (static_cast<int>(has[u].size()) < messages) incomplete = true;
      if (!opt.zero_erasure) probs[u] = static_cast<double>(rng() % 32) / 64.0;
    }
    if (incomplete) return idnc::new_system(messages, has, probs);
  }
}

// Random schedule that completes every user: arbitrary combinations mixed
// with first-wanted singletons so the episode always terminates.
inline std::vector<idnc::Combination> random_completing_schedule(const idnc::SystemState& initial,
                                                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  idnc::SystemState probe = initial;
  const std::vector<bool> none(probe.users().size(), false);
  std::vector<idnc::Combination> schedule;
  while (!probe.complete()) {
    std::vector<idnc::MessageId> ids;
    if (unit(rng) < 0.5) {
      for (idnc::MessageId m = 1; m <= probe.num_messages(); ++m)
        if (unit(rng) < 0.5) ids.push_back(m);
      if (ids.empty()) ids.push_back(1 + static_cast<int>(rng() % probe.num_messages()));
    } else {
      std::vector<const idnc::UserState*> open;
      for (const auto& u : probe.users())
        if (!u.complete()) open.push_back(&u);
      ids.push_back(*open[rng() % open.size()]->first_wanted());
    }
    idnc::Combination kappa(std::move(ids));
    schedule.push_back(kappa);
    probe.step(kappa, none);
  }
  return schedule;
}

}  // namespace idnc_test
