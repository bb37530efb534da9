// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Each check recomputes its expectations through an independent
// route (state-machine replays, subset enumeration, exact rationals) rather
// than trusting the code path under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "idnc/channel.hpp"
#include "idnc/clique.hpp"
#include "idnc/graph.hpp"
#include "idnc/harness.hpp"
#include "idnc/json_io.hpp"
#include "idnc/metrics.hpp"
#include "idnc/model.hpp"
#include "idnc/policy.hpp"
#include "idnc/rational.hpp"

using namespace idnc;

namespace {

int failures = 0;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

void report(int index, const std::string& name, const Check& check) {
  if (check.ok) {
    std::cout << "[PASS] " << index << " " << name;
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
  } else {
    ++failures;
    std::cout << "[FAIL] " << index << " " << name << ": " << check.detail << "\n";
  }
}

SystemState worked_instance() {
  return new_system(4, {{1, 2}, {3}, {1, 3, 4}}, {0.0, 0.0, 0.0});
}

// --------------------------------------------------------------------------
// 1. Worked-example replay: schedules {2^3,4,1}, {2^3,1,4}, {1,2^3,4} give
//    overall delivery times 9, 7, 10 and completion time 3.

void criterion_1() {
  Check c;
  const std::vector<std::vector<Combination>> schedules = {
      {Combination{2, 3}, Combination{4}, Combination{1}},
      {Combination{2, 3}, Combination{1}, Combination{4}},
      {Combination{1}, Combination{2, 3}, Combination{4}}};
  const long long expected[] = {9, 7, 10};
  std::ostringstream got;
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    SystemState s = worked_instance();
    for (const auto& kappa : schedules[i]) s.step(kappa, {false, false, false});
    long long total = 0;
    for (const auto& u : s.users()) total += u.delivery_time();
    if (i > 0) got << "/";
    got << total;
    c.require(s.complete() && s.slot() == 3, "completion time != 3 on schedule " +
                                                 std::to_string(i + 1));
    c.require(total == expected[i], "schedule " + std::to_string(i + 1) + " gave " +
                                        std::to_string(total) + ", expected " +
                                        std::to_string(expected[i]));
  }
  if (c.ok) c.detail = "overall delivery " + got.str() + ", completion 3";
  report(1, "worked-example replay", c);
}

// --------------------------------------------------------------------------
// 2. Minimum delivery time: closed form equals M(M-1)/2 on full wants sets
//    for M = 1..50 and equals an independent sequential replay on 200 random
//    partial wants sets.

long long sequential_replay(int num_messages, const std::vector<MessageId>& wants) {
  std::vector<MessageId> has;
  for (MessageId m = 1; m <= num_messages; ++m)
    if (std::find(wants.begin(), wants.end(), m) == wants.end()) has.push_back(m);
  SystemState s = new_system(num_messages, {has}, {0.0});
  for (MessageId m : wants) s.step(Combination{m}, {false});
  return s.complete() ? s.user(1).delivery_time() : -1;
}

void criterion_2() {
  Check c;
  for (int m = 1; m <= 50 && c.ok; ++m) {
    std::vector<MessageId> all(m);
    for (int i = 0; i < m; ++i) all[i] = i + 1;
    c.require(metrics::min_delivery_time(m, all) == static_cast<long long>(m) * (m - 1) / 2,
              "full wants set mismatch at M=" + std::to_string(m));
  }
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200 && c.ok; ++i) {
    const int m = 1 + static_cast<int>(rng() % 12);
    std::vector<MessageId> wants;
    for (MessageId id = 1; id <= m; ++id)
      if (unit(rng) < 0.6) wants.push_back(id);
    c.require(metrics::min_delivery_time(m, wants) == sequential_replay(m, wants),
              "sequential replay disagrees on instance " + std::to_string(i));
  }
  if (c.ok) c.detail = "M=1..50 closed form, 200 random partial instances";
  report(2, "minimum delivery time", c);
}

// --------------------------------------------------------------------------
// 3. Delivery identity: realized delivery time == minimum delivery time +
//    accumulated delay, exactly, on 1000 random erasure-free completing
//    schedules with U <= 4, M <= 5.

SystemState random_instance(std::mt19937_64& rng, int max_users, int max_messages,
                            bool grid_probs) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const int users = 1 + static_cast<int>(rng() % max_users);
    const int messages = 2 + static_cast<int>(rng() % (max_messages - 1));
    std::vector<std::vector<MessageId>> has(users);
    std::vector<double> probs(users, 0.0);
    bool incomplete = false;
    for (int u = 0; u < users; ++u) {
      for (MessageId m = 1; m <= messages; ++m)
        if (unit(rng) < 0.4) has[u].push_back(m);
      if (static_cast<int>(has[u].size()) < messages) incomplete = true;
      if (grid_probs) probs[u] = static_cast<double>(rng() % 512) / 1024.0;
    }
    if (incomplete) return new_system(messages, has, probs);
  }
}

void criterion_3() {
  Check c;
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int pairs = 0;
  while (pairs < 1000 && c.ok) {
    const SystemState initial = random_instance(rng, 4, 5, false);
    SystemState probe = initial;
    std::vector<Combination> schedule;
    const std::vector<bool> none(probe.users().size(), false);
    while (!probe.complete()) {
      std::vector<MessageId> ids;
      if (unit(rng) < 0.5) {
        for (MessageId m = 1; m <= probe.num_messages(); ++m)
          if (unit(rng) < 0.5) ids.push_back(m);
        if (ids.empty()) ids.push_back(1 + static_cast<int>(rng() % probe.num_messages()));
      } else {
        std::vector<const UserState*> open;
        for (const auto& u : probe.users())
          if (!u.complete()) open.push_back(&u);
        ids.push_back(*open[rng() % open.size()]->first_wanted());
      }
      Combination kappa(std::move(ids));
      schedule.push_back(kappa);
      probe.step(kappa, none);
    }
    const auto report = metrics::delivery_time_identity_check(initial, schedule);
    c.require(report.all_completed(), "schedule failed to complete every user");
    for (const auto& row : report.rows)
      c.require(row.realized == row.min_delivery + row.cum_delay,
                "identity violated for user " + std::to_string(row.user_id) + " on pair " +
                    std::to_string(pairs));
    ++pairs;
  }
  if (c.ok) c.detail = std::to_string(pairs) + " pairs, zero failures";
  report(3, "delivery identity on erasure-free schedules", c);
}

// --------------------------------------------------------------------------
// 4. Scheduling equivalence: the clique-based choice attains the exhaustive
//    per-slot minimum on 300 random states, with objectives compared in
//    exact rational arithmetic (p on a 1/1024 grid).

void criterion_4() {
  Check c;
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 300 && c.ok; ++trial) {
    const SystemState s = random_instance(rng, 4, 5, true);
    std::vector<int> p_num;
    for (const auto& u : s.users())
      p_num.push_back(static_cast<int>(std::llround(u.erasure_prob() * 1024.0)));

    auto objective = [&](const Combination& kappa) {
      Rational total(0);
      for (std::size_t i = 0; i < s.users().size(); ++i) {
        const auto& u = s.users()[i];
        if (u.complete()) continue;
        total += Rational(metrics::delay_increment(u, kappa, true)) /
                 (Rational(1) - Rational(p_num[i], 1024));
      }
      return total;
    };

    const Combination chosen = policy::min_adt_select(s);
    bool have_best = false;
    Rational best(0);
    for (unsigned mask = 1; mask < (1u << s.num_messages()); ++mask) {
      std::vector<MessageId> ids;
      for (int bit = 0; bit < s.num_messages(); ++bit)
        if ((mask >> bit) & 1u) ids.push_back(bit + 1);
      const Rational score = objective(Combination(std::move(ids)));
      if (!have_best || score < best) {
        best = score;
        have_best = true;
      }
    }
    c.require(objective(chosen) == best,
              "objective " + objective(chosen).to_string() + " != minimum " + best.to_string() +
                  " on trial " + std::to_string(trial));

    const auto argmin = policy::exhaustive_optimal_select(s);
    c.require(std::find(argmin.begin(), argmin.end(), chosen) != argmin.end(),
              "chosen combination missing from the enumerated argmin set on trial " +
                  std::to_string(trial));
  }
  if (c.ok) c.detail = "300 states, exact rational equality";
  report(4, "clique choice equals exhaustive minimum", c);
}

// --------------------------------------------------------------------------
// 5. Clique solver vs subset enumeration on 500 random coding graphs with
//    |V| <= 15; exact weight agreement (integer weights exactly, grid
//    weights within the solver's tie tolerance).

void criterion_5() {
  Check c;
  std::mt19937_64 rng(1005);
  int checked = 0;
  while (checked < 500 && c.ok) {
    const bool lossless = checked % 2 == 0;
    const SystemState s = random_instance(rng, 4, 4, !lossless);
    const IdncGraph g = build_graph(s);
    if (g.size() > 15) continue;
    const CliqueResult exact = max_weight_clique_exact(g);
    const CliqueResult brute = brute_force_clique(g);
    c.require(exact.exact, "search exceeded its budget on graph " + std::to_string(checked));
    if (lossless) {
      c.require(exact.total_weight == brute.total_weight,
                "weights differ on lossless graph " + std::to_string(checked));
    } else {
      c.require(weight_equal(exact.total_weight, brute.total_weight),
                "weights differ on graph " + std::to_string(checked));
    }
    ++checked;
  }
  if (c.ok) c.detail = "500 graphs";
  report(5, "clique search agrees with enumeration", c);
}

// --------------------------------------------------------------------------
// 6. Single-user statistics: sequential retransmit-until-received over
//    M = 50, p = 0.25; the empirical mean delivery time over 2000 episodes
//    lands within 5% of (M(M-1)/2) / (1 - p).

struct FirstWantedSelector final : policy::Selector {
  Combination select(const SystemState& s) override {
    return Combination{*s.users().front().first_wanted()};
  }
  std::string_view name() const override { return "sequential"; }
};

void criterion_6() {
  Check c;
  const int m = 50;
  const double p = 0.25;
  const long long min_delivery = static_cast<long long>(m) * (m - 1) / 2;
  const double predicted = static_cast<double>(min_delivery) / (1.0 - p);

  double sum = 0.0;
  const int episodes = 2000;
  for (int ep = 0; ep < episodes; ++ep) {
    channel::RandomStream stream({2026, static_cast<std::uint64_t>(ep)});
    FirstWantedSelector selector;
    const auto record = harness::run_episode_with(
        new_system(m, {{}}, {p}), selector, stream, 100000);
    if (record.truncated) {
      c.require(false, "episode " + std::to_string(ep) + " truncated");
      break;
    }
    sum += static_cast<double>(record.overall_delivery_time);
    // this policy only ever decodes the first wanted message: zero delay
    c.require(record.per_user_delay[0] == 0, "sequential policy accumulated delay");
  }
  const double mean = sum / episodes;
  const double rel = std::fabs(mean - predicted) / predicted;
  std::ostringstream detail;
  detail << "mean " << mean << " vs " << predicted << ", rel err " << rel;
  c.require(rel < 0.05, detail.str());
  if (c.ok) c.detail = detail.str();
  report(6, "single-user mean delivery vs closed form", c);
}

// --------------------------------------------------------------------------
// 7. Policy ordering at U = M = 10, P = 0.25, 500 common-random-number
//    episodes: the delay-aware policy beats both order-blind baselines on
//    mean delivery with non-overlapping 95% intervals, and its completion
//    time stays within 25% of the completion heuristic's.

void criterion_7() {
  Check c;
  harness::ExperimentConfig config;
  config.num_users = 10;
  config.num_messages = 10;
  config.avg_erasure_prob = 0.25;
  config.iterations = 500;
  config.master_seed = 7;
  config.policies = {"min-adt", "max-clique", "completion-standin", "ssp-h-standin"};

  const auto stats = harness::run_monte_carlo(config);
  auto find = [&stats](const std::string& name) -> const harness::PolicyStats& {
    for (const auto& s : stats)
      if (s.policy == name) return s;
    throw std::logic_error("missing policy stats: " + name);
  };
  const auto& min_adt = find("min-adt");
  const auto& max_clique = find("max-clique");
  const auto& completion = find("completion-standin");

  c.require(min_adt.truncated == 0 && max_clique.truncated == 0 && completion.truncated == 0,
            "unexpected truncations");
  c.require(min_adt.mean_delivery + min_adt.ci_delivery <
                max_clique.mean_delivery - max_clique.ci_delivery,
            "delivery interval overlaps max-clique");
  c.require(min_adt.mean_delivery + min_adt.ci_delivery <
                completion.mean_delivery - completion.ci_delivery,
            "delivery interval overlaps completion-standin");
  c.require(min_adt.mean_completion <= 1.25 * completion.mean_completion,
            "completion degradation above 25%");

  std::ostringstream detail;
  detail << "delivery " << min_adt.mean_delivery << "±" << min_adt.ci_delivery << " < "
         << max_clique.mean_delivery << "±" << max_clique.ci_delivery << " and "
         << completion.mean_delivery << "±" << completion.ci_delivery << "; completion "
         << min_adt.mean_completion << " <= 1.25*" << completion.mean_completion;
  if (c.ok)
    c.detail = detail.str();
  else
    c.detail += " [" + detail.str() + "]";
  report(7, "policy ordering at U=M=10", c);
}

// --------------------------------------------------------------------------
// 8. Channel statistics: empirical erasure rate within ±0.01 of p over 1e5
//    draws, and byte-identical records when replaying the same seed.

void criterion_8() {
  Check c;
  const SystemState s = new_system(2, {{}}, {0.25});
  channel::RandomStream stream({8, 0});
  int erased = 0;
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) erased += channel::draw_erasures(s, stream)[0];
  const double rate = static_cast<double>(erased) / draws;
  c.require(std::fabs(rate - 0.25) < 0.01,
            "empirical rate " + std::to_string(rate) + " off from 0.25");

  harness::ExperimentConfig config;
  config.num_users = 4;
  config.num_messages = 6;
  config.avg_erasure_prob = 0.3;
  config.master_seed = 99;
  const auto a = harness::run_episode(config, "min-adt", 3, true);
  const auto b = harness::run_episode(config, "min-adt", 3, true);
  c.require(json_io::to_json(a).dump() == json_io::to_json(b).dump(),
            "replayed records differ");
  if (c.ok)
    c.detail = "rate " + std::to_string(rate) + ", replay byte-exact";
  report(8, "channel statistics and replay determinism", c);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::cout << "acceptance: all 8 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
  return 1;
}
