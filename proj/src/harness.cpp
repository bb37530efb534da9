#include "idnc/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "idnc/json_io.hpp"
#include "idnc/metrics.hpp"

namespace idnc::harness {

SystemState ScenarioSpec::build() const {
  return new_system(num_messages, has_sets, erasure_probs);
}

void ExperimentConfig::validate() const {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (policies.empty()) throw std::invalid_argument("need at least one policy");
  for (const auto& name : policies)
    if (!policy::is_registered(name)) throw std::invalid_argument("unknown policy: " + name);
  if (scenario) {
    scenario->build();  // throws when malformed
    if (slot_cap != 0 && slot_cap < scenario->num_messages)
      throw std::invalid_argument("slot cap below the message count");
    return;
  }
  if (num_users < 1) throw std::invalid_argument("need at least one user");
  if (num_messages < 1) throw std::invalid_argument("need at least one message");
  if (!(avg_erasure_prob > 0.0) || avg_erasure_prob > 0.9)
    throw std::invalid_argument("average erasure probability must lie in (0, 0.9]");
  if (slot_cap != 0 && slot_cap < num_messages)
    throw std::invalid_argument("slot cap below the message count");
}

long long ExperimentConfig::effective_slot_cap(double max_erasure_prob) const {
  if (slot_cap > 0) return slot_cap;
  const int m = scenario ? scenario->num_messages : num_messages;
  return static_cast<long long>(std::ceil(20.0 * m / (1.0 - max_erasure_prob)));
}

ExperimentConfig ExperimentConfig::preset(std::string_view name) {
  if (name == "paper-scale") {
    ExperimentConfig config;
    config.num_users = 30;
    config.num_messages = 30;
    config.avg_erasure_prob = 0.25;
    return config;
  }
  if (name == "small") {
    ExperimentConfig config;
    config.num_users = 5;
    config.num_messages = 8;
    config.avg_erasure_prob = 0.25;
    return config;
  }
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

SystemState initial_state(const ExperimentConfig& config, channel::RandomStream& stream) {
  if (config.scenario) return config.scenario->build();
  const auto probs = channel::sample_erasure_probs(config.num_users, config.avg_erasure_prob,
                                                   config.erasure_mode, stream);
  const std::vector<std::vector<MessageId>> empty_has(config.num_users);
  return new_system(config.num_messages, empty_has, probs);
}

RunRecord run_episode_with(SystemState state, policy::Selector& selector,
                           channel::RandomStream& stream, long long slot_cap,
                           bool record_trace) {
  RunRecord record;
  record.policy = std::string(selector.name());
  for (const auto& u : state.users()) record.erasure_probs.push_back(u.erasure_prob());

  const std::size_t num_users = state.users().size();
  while (!state.complete()) {
    if (state.slot() >= slot_cap) {
      record.truncated = true;
      break;
    }
    const Combination kappa = selector.select(state);
    const auto erased = channel::draw_erasures(state, stream);
    std::vector<long long> before;
    if (record_trace) {
      before.reserve(num_users);
      for (const auto& u : state.users()) before.push_back(u.delivery_time());
    }
    state.step(kappa, erased);
    if (record_trace) {
      SlotTrace slot{kappa, erased, {}};
      slot.delivery_increments.reserve(num_users);
      for (std::size_t i = 0; i < num_users; ++i)
        slot.delivery_increments.push_back(state.users()[i].delivery_time() - before[i]);
      record.trace.push_back(std::move(slot));
    }
  }

  record.slots_used = state.slot();
  record.completion_time = state.slot();
  for (const auto& u : state.users()) {
    record.per_user_delivery.push_back(u.delivery_time());
    record.per_user_delay.push_back(u.cum_delay());
  }
  record.overall_delivery_time = metrics::overall_delivery_time(record.per_user_delivery);
  return record;
}

RunRecord run_episode(const ExperimentConfig& config, const std::string& policy_name,
                      std::uint64_t episode_index, bool record_trace) {
  channel::RandomStream stream({config.master_seed, episode_index});
  SystemState state = initial_state(config, stream);
  double max_p = 0.0;
  for (const auto& u : state.users()) max_p = std::max(max_p, u.erasure_prob());
  auto selector = policy::make_selector(policy_name);
  RunRecord record = run_episode_with(std::move(state), *selector, stream,
                                      config.effective_slot_cap(max_p), record_trace);
  record.master_seed = config.master_seed;
  record.episode_index = episode_index;
  return record;
}

namespace {

int thread_count(int iterations) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("IDNC_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(parsed));
  }
  return static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(iterations)));
}

struct EpisodeOutcome {
  long long delivery = 0;
  long long completion = 0;
  bool truncated = false;
};

PolicyStats summarize(const std::string& policy, const std::vector<EpisodeOutcome>& outcomes) {
  PolicyStats stats;
  stats.policy = policy;
  double sum_d = 0.0;
  double sum_c = 0.0;
  for (const auto& o : outcomes) {
    if (o.truncated) {
      ++stats.truncated;
      continue;
    }
    ++stats.episodes;
    sum_d += static_cast<double>(o.delivery);
    sum_c += static_cast<double>(o.completion);
  }
  if (stats.episodes == 0) return stats;
  stats.mean_delivery = sum_d / stats.episodes;
  stats.mean_completion = sum_c / stats.episodes;
  if (stats.episodes > 1) {
    double var_d = 0.0;
    double var_c = 0.0;
    for (const auto& o : outcomes) {
      if (o.truncated) continue;
      var_d += std::pow(static_cast<double>(o.delivery) - stats.mean_delivery, 2);
      var_c += std::pow(static_cast<double>(o.completion) - stats.mean_completion, 2);
    }
    var_d /= stats.episodes - 1;
    var_c /= stats.episodes - 1;
    stats.ci_delivery = 1.96 * std::sqrt(var_d / stats.episodes);
    stats.ci_completion = 1.96 * std::sqrt(var_c / stats.episodes);
  }
  return stats;
}

}  // namespace

std::vector<PolicyStats> run_monte_carlo(const ExperimentConfig& config) {
  config.validate();
  const int iterations = config.iterations;
  const std::size_t num_policies = config.policies.size();

  // outcomes[policy][episode]; episode slots are preassigned, so merge order
  // does not depend on thread scheduling.
  std::vector<std::vector<EpisodeOutcome>> outcomes(
      num_policies, std::vector<EpisodeOutcome>(iterations));

  auto worker = [&](int first, int stride) {
    for (int ep = first; ep < iterations; ep += stride) {
      for (std::size_t pi = 0; pi < num_policies; ++pi) {
        const RunRecord r = run_episode(config, config.policies[pi], ep);
        outcomes[pi][ep] = {r.overall_delivery_time, r.completion_time, r.truncated};
      }
    }
  };

  const int threads = thread_count(iterations);
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& t : pool) t.join();
  }

  std::vector<PolicyStats> stats;
  stats.reserve(num_policies);
  for (std::size_t pi = 0; pi < num_policies; ++pi)
    stats.push_back(summarize(config.policies[pi], outcomes[pi]));
  return stats;
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Users: return "U";
    case SweepAxis::Messages: return "M";
    case SweepAxis::ErasureProb: return "P";
  }
  return "?";
}

SweepAxis axis_from_string(std::string_view name) {
  if (name == "U") return SweepAxis::Users;
  if (name == "M") return SweepAxis::Messages;
  if (name == "P") return SweepAxis::ErasureProb;
  throw std::invalid_argument("unknown sweep axis: " + std::string(name));
}

std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis,
                            const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one axis value");
  if (base.scenario)
    throw std::invalid_argument("sweeps need a sampled configuration, not a fixed scenario");
  std::vector<SweepRow> rows;
  for (double value : values) {
    ExperimentConfig config = base;
    switch (axis) {
      case SweepAxis::Users: config.num_users = static_cast<int>(std::llround(value)); break;
      case SweepAxis::Messages: config.num_messages = static_cast<int>(std::llround(value)); break;
      case SweepAxis::ErasureProb: config.avg_erasure_prob = value; break;
    }
    for (auto& stats : run_monte_carlo(config)) rows.push_back({axis, value, std::move(stats)});
  }
  return rows;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, const std::string& path) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::runtime_error("bad numeric field in " + path + ": " + std::string(text));
  return out;
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "axis,axis_value,policy,mean_delivery,ci_delivery,mean_completion,ci_completion,"
         "episodes,truncated\n";
  for (const auto& row : rows) {
    out << axis_name(row.axis) << ',' << format_double(row.axis_value) << ','
        << row.stats.policy << ',' << format_double(row.stats.mean_delivery) << ','
        << format_double(row.stats.ci_delivery) << ','
        << format_double(row.stats.mean_completion) << ','
        << format_double(row.stats.ci_completion) << ',' << row.stats.episodes << ','
        << row.stats.truncated << '\n';
  }
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

std::vector<SweepRow> parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 9) throw std::runtime_error("bad CSV row in " + path + ": " + line);
    SweepRow row;
    row.axis = axis_from_string(fields[0]);
    row.axis_value = parse_double(fields[1], path);
    row.stats.policy = fields[2];
    row.stats.mean_delivery = parse_double(fields[3], path);
    row.stats.ci_delivery = parse_double(fields[4], path);
    row.stats.mean_completion = parse_double(fields[5], path);
    row.stats.ci_completion = parse_double(fields[6], path);
    row.stats.episodes = static_cast<int>(parse_double(fields[7], path));
    row.stats.truncated = static_cast<int>(parse_double(fields[8], path));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_manifest(const ExperimentConfig& config, SweepAxis axis,
                    const std::vector<double>& values, const std::string& path) {
  nlohmann::json j{{"tool", "idnc"},
                   {"version", "0.1.0"},
                   {"rng", std::string(channel::RandomStream::algorithm_name())},
                   {"axis", std::string(axis_name(axis))},
                   {"values", values},
                   {"config", json_io::to_json(config)}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

// ---------------------------------------------------------------------------
// Built-in verification suites.

namespace {

SystemState worked_example() {
  return new_system(4, {{1, 2}, {3}, {1, 3, 4}}, {0.0, 0.0, 0.0});
}

bool check_worked_example(std::ostream& out) {
  const std::vector<std::vector<Combination>> schedules = {
      {Combination{2, 3}, Combination{4}, Combination{1}},
      {Combination{2, 3}, Combination{1}, Combination{4}},
      {Combination{1}, Combination{2, 3}, Combination{4}}};
  const long long expected[] = {9, 7, 10};
  bool ok = true;
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    SystemState state = worked_example();
    for (const auto& kappa : schedules[i]) state.step(kappa, {false, false, false});
    long long total = 0;
    for (const auto& u : state.users()) total += u.delivery_time();
    ok = ok && state.complete() && state.slot() == 3 && total == expected[i];
  }
  out << (ok ? "[PASS]" : "[FAIL]")
      << " worked-example replay: three schedules give delivery 9/7/10, completion 3\n";
  return ok;
}

// Random incomplete instance; erasure probabilities on a 1/64 grid so scaled
// objective comparisons stay exact.
SystemState random_instance(channel::RandomStream& rng, int max_users, int max_messages) {
  while (true) {
    const int users = 1 + static_cast<int>(rng.next_u64() % max_users);
    const int messages = 2 + static_cast<int>(rng.next_u64() % (max_messages - 1));
    std::vector<std::vector<MessageId>> has(users);
    std::vector<double> probs(users);
    bool incomplete = false;
    for (int u = 0; u < users; ++u) {
      for (MessageId m = 1; m <= messages; ++m)
        if (rng.next_unit() < 0.4) has[u].push_back(m);
      if (static_cast<int>(has[u].size()) < messages) incomplete = true;
      probs[u] = static_cast<double>(rng.next_u64() % 32) / 64.0;  // [0, 0.5) grid
    }
    if (incomplete) return new_system(messages, has, probs);
  }
}

bool check_delivery_identity(std::ostream& out) {
  channel::RandomStream rng({0xC0FFEE, 1});
  int checked = 0;
  bool ok = true;
  while (checked < 1000 && ok) {
    SystemState initial = random_instance(rng, 4, 5);
    // Random completing schedule: mostly arbitrary combinations, with
    // first-wanted singletons mixed in so every episode terminates.
    SystemState probe = initial;
    std::vector<Combination> schedule;
    const std::vector<bool> none(probe.users().size(), false);
    while (!probe.complete()) {
      Combination kappa{1};
      if (rng.next_unit() < 0.5) {
        std::vector<MessageId> ids;
        for (MessageId m = 1; m <= probe.num_messages(); ++m)
          if (rng.next_unit() < 0.5) ids.push_back(m);
        if (ids.empty()) ids.push_back(1 + static_cast<int>(rng.next_u64() % probe.num_messages()));
        kappa = Combination(std::move(ids));
      } else {
        std::vector<const UserState*> open;
        for (const auto& u : probe.users())
          if (!u.complete()) open.push_back(&u);
        const auto* u = open[rng.next_u64() % open.size()];
        kappa = Combination{*u->first_wanted()};
      }
      schedule.push_back(kappa);
      probe.step(kappa, none);
    }
    const auto report = metrics::delivery_time_identity_check(initial, schedule);
    ok = ok && report.all_completed();
    for (const auto& row : report.rows)
      ok = ok && row.realized == row.min_delivery + row.cum_delay;
    ++checked;
  }
  out << (ok ? "[PASS]" : "[FAIL]") << " delivery identity: " << checked
      << " random erasure-free replays, realized == minimum + delay\n";
  return ok;
}

bool check_objective_equivalence(std::ostream& out) {
  channel::RandomStream rng({0xC0FFEE, 2});
  bool ok = true;
  for (int i = 0; i < 300 && ok; ++i) {
    const SystemState state = random_instance(rng, 4, 5);
    const Combination chosen = policy::min_adt_select(state);
    const auto argmin = policy::exhaustive_optimal_select(state);
    const double best = policy::delay_objective_scaled(state, argmin.front());
    const double attained = policy::delay_objective_scaled(state, chosen);
    ok = ok && weight_equal(best, attained) &&
         std::find(argmin.begin(), argmin.end(), chosen) != argmin.end();
  }
  out << (ok ? "[PASS]" : "[FAIL]")
      << " scheduling objective: clique choice attains the exhaustive minimum on 300 states\n";
  return ok;
}

bool check_clique_agreement(std::ostream& out) {
  channel::RandomStream rng({0xC0FFEE, 3});
  int checked = 0;
  bool ok = true;
  while (checked < 500 && ok) {
    const SystemState state = random_instance(rng, 4, 4);
    const IdncGraph g = build_graph(state);
    if (g.size() > 15) continue;
    const CliqueResult exact = max_weight_clique_exact(g);
    const CliqueResult brute = brute_force_clique(g);
    ok = ok && exact.exact && weight_equal(exact.total_weight, brute.total_weight);
    ++checked;
  }
  out << (ok ? "[PASS]" : "[FAIL]") << " clique search: matches subset enumeration on "
      << checked << " graphs\n";
  return ok;
}

bool check_erasure_free_runs(std::ostream& out) {
  bool ok = true;
  std::vector<SystemState> instances;
  instances.push_back(worked_example());
  instances.push_back(new_system(5, {{}, {}, {}}, {0.0, 0.0, 0.0}));
  for (const auto& initial : instances) {
    for (const auto& name : policy::registry_names()) {
      if (name == "oracle" && initial.num_messages() > 12) continue;
      auto selector = policy::make_selector(name);
      channel::RandomStream stream({7, 0});
      const RunRecord r =
          run_episode_with(initial, *selector, stream, 20LL * initial.num_messages());
      ok = ok && !r.truncated && r.completion_time <= initial.num_messages();
    }
  }
  out << (ok ? "[PASS]" : "[FAIL]")
      << " erasure-free episodes: no truncation, completion within the message count\n";
  return ok;
}

}  // namespace

bool verify(std::ostream& out) {
  bool ok = true;
  ok = check_worked_example(out) && ok;
  ok = check_delivery_identity(out) && ok;
  ok = check_objective_equivalence(out) && ok;
  ok = check_clique_agreement(out) && ok;
  ok = check_erasure_free_runs(out) && ok;
  out << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok;
}

}  // namespace idnc::harness
