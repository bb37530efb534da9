#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idnc/channel.hpp"
#include "idnc/model.hpp"
#include "idnc/policy.hpp"

namespace idnc::harness {

// Fixed initial instance (per-user Has sets and erasure probabilities)
// instead of the sampled U/M/P setting.
struct ScenarioSpec {
  int num_messages = 0;
  std::vector<std::vector<MessageId>> has_sets;
  std::vector<double> erasure_probs;

  SystemState build() const;
};

struct ExperimentConfig {
  int num_users = 10;
  int num_messages = 10;
  double avg_erasure_prob = 0.25;
  channel::ErasureMode erasure_mode = channel::ErasureMode::Heterogeneous;
  std::vector<std::string> policies = {"min-adt", "max-clique", "completion-standin",
                                       "ssp-h-standin"};
  int iterations = 200;
  std::uint64_t master_seed = 1;
  long long slot_cap = 0;  // 0: use 20*M/(1 - max p), rounded up
  std::optional<ScenarioSpec> scenario;

  void validate() const;  // throws std::invalid_argument
  long long effective_slot_cap(double max_erasure_prob) const;

  // Named presets; "paper-scale" is U=30, M=30, P=0.25.
  static ExperimentConfig preset(std::string_view name);
};

struct SlotTrace {
  Combination combo;
  std::vector<bool> erased;
  std::vector<long long> delivery_increments;
};

struct RunRecord {
  std::string policy;
  std::uint64_t master_seed = 0;
  std::uint64_t episode_index = 0;
  long long overall_delivery_time = 0;
  long long completion_time = 0;
  long long slots_used = 0;
  bool truncated = false;
  std::vector<long long> per_user_delivery;
  std::vector<long long> per_user_delay;
  std::vector<double> erasure_probs;
  std::vector<SlotTrace> trace;  // filled only when requested
};

// Slot-0 state for one episode; samples per-user erasure probabilities from
// the stream unless the config pins a scenario.
SystemState initial_state(const ExperimentConfig& config, channel::RandomStream& stream);

// One episode: select, draw erasures, step, until complete or the slot cap.
// Hitting the cap yields a truncated record, not an error.
RunRecord run_episode(const ExperimentConfig& config, const std::string& policy_name,
                      std::uint64_t episode_index, bool record_trace = false);

// Lower-level variant for scripted schedules and tests.
RunRecord run_episode_with(SystemState state, policy::Selector& selector,
                           channel::RandomStream& stream, long long slot_cap,
                           bool record_trace = false);

struct PolicyStats {
  std::string policy;
  double mean_delivery = 0.0;
  double ci_delivery = 0.0;  // 95% normal-approximation half-width
  double mean_completion = 0.0;
  double ci_completion = 0.0;
  int episodes = 0;   // episodes included in the means
  int truncated = 0;  // excluded from the means
};

// Runs every configured policy over the same episode streams (common random
// numbers: identical erasure draws per episode index across policies).
// Episodes run in parallel, capped by the IDNC_THREADS environment variable.
std::vector<PolicyStats> run_monte_carlo(const ExperimentConfig& config);

enum class SweepAxis { Users, Messages, ErasureProb };

std::string_view axis_name(SweepAxis axis);
SweepAxis axis_from_string(std::string_view name);  // throws on unknown names

struct SweepRow {
  SweepAxis axis = SweepAxis::Users;
  double axis_value = 0.0;
  PolicyStats stats;
};

// One Monte Carlo run per axis value, base config otherwise unchanged.
// Rejects an empty value list.
std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis,
                            const std::vector<double>& values);

// CSV schema:
// axis,axis_value,policy,mean_delivery,ci_delivery,mean_completion,ci_completion,episodes,truncated
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> parse_csv(const std::string& path);

// Line plot of mean delivery time vs the sweep axis, one series per policy.
// Rejects an empty table.
void emit_svg_plot(const std::vector<SweepRow>& rows, const std::string& path);

// Everything needed to regenerate a sweep: config, seed, RNG name, version.
void write_manifest(const ExperimentConfig& config, SweepAxis axis,
                    const std::vector<double>& values, const std::string& path);

// Built-in consistency checks: worked-example replay, the delivery-time
// identity on random erasure-free episodes, clique search vs enumeration,
// scheduling-objective equivalence, and an erasure-free truncation sanity
// run. Prints one line per check; true when all pass.
bool verify(std::ostream& out);

}  // namespace idnc::harness
