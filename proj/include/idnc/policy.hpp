#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "idnc/clique.hpp"
#include "idnc/graph.hpp"
#include "idnc/model.hpp"

namespace idnc::policy {

// Sum over incomplete users of delay_increment(u, kappa, received) / (1 - p_u):
// the one-slot cost the scheduler tries to minimize.
double delay_objective(const SystemState& state, const Combination& kappa);

// Same objective multiplied by the product of all incomplete users' (1 - p_u):
// an argmin-preserving rescale with no divisions, so comparisons between
// combinations are exact whenever the (1 - p_u) are short dyadic fractions.
double delay_objective_scaled(const SystemState& state, const Combination& kappa);

// The proposed scheduler: maximum-weight clique over the coding graph with
// vertex weight (M - m + 1) / (1 - p_u), mapped back to a combination.
Combination min_adt_select(const SystemState& state, const CliqueSearchOptions& opt = {});

// Enumerates every non-empty combination of 1..M and returns all minimizers
// of the delay objective, in ascending combination order. Requires an
// incomplete state and M <= 12.
std::vector<Combination> exhaustive_optimal_select(const SystemState& state);

// Serves the most users with any new message: maximum-cardinality clique.
Combination max_clique_select(const SystemState& state, const CliqueSearchOptions& opt = {});

// Order-blind completion heuristic stand-in: maximum-weight clique under
// vertex weight |wants(u)| / (1 - p_u). A documented stand-in, not the
// published algorithm.
Combination completion_heuristic_select(const SystemState& state, const CliqueSearchOptions& opt = {});

// In-order heuristic stand-in: the coding graph restricted to each user's
// first wanted message, then maximum-weight clique. A documented stand-in,
// not the published algorithm.
Combination first_wanted_select(const SystemState& state, const CliqueSearchOptions& opt = {});

// Uncoded control: the next wanted message in cyclic 1..M order starting at
// `cursor`; advances the caller-owned cursor past the served message.
Combination round_robin_select(const SystemState& state, MessageId& cursor);

// Per-episode policy instance. Selectors are deterministic functions of the
// state; round-robin keeps its cursor here.
class Selector {
 public:
  virtual ~Selector() = default;
  virtual Combination select(const SystemState& state) = 0;
  virtual std::string_view name() const = 0;
};

// Replays a fixed schedule; used for scripted episodes and worked examples.
class ScriptedSelector : public Selector {
 public:
  explicit ScriptedSelector(std::vector<Combination> schedule);
  Combination select(const SystemState& state) override;
  std::string_view name() const override { return "scripted"; }

 private:
  std::vector<Combination> schedule_;
  std::size_t next_ = 0;
};

// Registry names: "min-adt", "max-clique", "completion-standin",
// "ssp-h-standin", "round-robin", "oracle".
const std::vector<std::string>& registry_names();
bool is_registered(std::string_view name);
std::unique_ptr<Selector> make_selector(std::string_view name);  // throws on unknown names

}  // namespace idnc::policy
