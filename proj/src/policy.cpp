#include "idnc/policy.hpp"

#include <algorithm>
#include <stdexcept>

#include "idnc/metrics.hpp"

namespace idnc::policy {

namespace {

void require_incomplete(const SystemState& state, const char* op) {
  if (state.complete())
    throw std::invalid_argument(std::string(op) + ": every user is already complete");
}

Combination clique_choice(const IdncGraph& g, const CliqueSearchOptions& opt) {
  const CliqueResult c = max_weight_clique_exact(g, opt);
  return clique_to_combination(g, c.vertices).combo;
}

}  // namespace

double delay_objective(const SystemState& state, const Combination& kappa) {
  double total = 0.0;
  for (const auto& u : state.users()) {
    if (u.complete()) continue;
    total += static_cast<double>(metrics::delay_increment(u, kappa, true)) /
             (1.0 - u.erasure_prob());
  }
  return total;
}

double delay_objective_scaled(const SystemState& state, const Combination& kappa) {
  double total = 0.0;
  for (const auto& u : state.users()) {
    if (u.complete()) continue;
    double term = static_cast<double>(metrics::delay_increment(u, kappa, true));
    for (const auto& v : state.users()) {
      if (v.complete() || v.user_id() == u.user_id()) continue;
      term *= 1.0 - v.erasure_prob();
    }
    total += term;
  }
  return total;
}

Combination min_adt_select(const SystemState& state, const CliqueSearchOptions& opt) {
  require_incomplete(state, "min_adt_select");
  IdncGraph g = build_graph(state);
  if (g.empty()) throw std::logic_error("incomplete state produced an empty coding graph");
  return clique_choice(g, opt);
}

std::vector<Combination> exhaustive_optimal_select(const SystemState& state) {
  require_incomplete(state, "exhaustive_optimal_select");
  const int m = state.num_messages();
  if (m > 12) throw std::invalid_argument("exhaustive search capped at 12 messages");

  std::vector<Combination> argmin;
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<MessageId> ids;
    for (int bit = 0; bit < m; ++bit)
      if ((mask >> bit) & 1u) ids.push_back(bit + 1);
    Combination kappa(std::move(ids));
    const double score = delay_objective_scaled(state, kappa);
    if (argmin.empty() || (score < best && !weight_equal(score, best))) {
      argmin.assign(1, kappa);
      best = score;
    } else if (weight_equal(score, best)) {
      argmin.push_back(kappa);
    }
  }
  std::sort(argmin.begin(), argmin.end());
  return argmin;
}

Combination max_clique_select(const SystemState& state, const CliqueSearchOptions& opt) {
  require_incomplete(state, "max_clique_select");
  IdncGraph g = build_graph(state);
  for (int i = 0; i < g.size(); ++i) g.set_weight(i, 1.0);
  return clique_choice(g, opt);
}

Combination completion_heuristic_select(const SystemState& state,
                                        const CliqueSearchOptions& opt) {
  require_incomplete(state, "completion_heuristic_select");
  IdncGraph g = build_graph(state);
  for (int i = 0; i < g.size(); ++i) {
    const UserState& u = state.user(g.vertex(i).user_id);
    g.set_weight(i, static_cast<double>(u.wants_count()) / (1.0 - u.erasure_prob()));
  }
  return clique_choice(g, opt);
}

Combination first_wanted_select(const SystemState& state, const CliqueSearchOptions& opt) {
  require_incomplete(state, "first_wanted_select");
  IdncGraph g = build_graph(state);
  std::vector<int> keep;
  for (int i = 0; i < g.size(); ++i) {
    const Vertex& v = g.vertex(i);
    if (state.user(v.user_id).first_wanted() == v.message) keep.push_back(i);
  }
  return clique_choice(g.induced(keep), opt);
}

Combination round_robin_select(const SystemState& state, MessageId& cursor) {
  require_incomplete(state, "round_robin_select");
  const int m = state.num_messages();
  if (cursor < 1 || cursor > m) cursor = 1;
  for (int probe = 0; probe < m; ++probe) {
    const MessageId candidate = (cursor - 1 + probe) % m + 1;
    bool wanted = std::any_of(state.users().begin(), state.users().end(),
                              [candidate](const UserState& u) {
                                return !u.complete() && u.wants_message(candidate);
                              });
    if (wanted) {
      cursor = candidate % m + 1;
      return Combination{candidate};
    }
  }
  throw std::logic_error("incomplete state with no wanted message");
}

ScriptedSelector::ScriptedSelector(std::vector<Combination> schedule)
    : schedule_(std::move(schedule)) {}

Combination ScriptedSelector::select(const SystemState&) {
  if (next_ >= schedule_.size()) throw std::out_of_range("scripted schedule exhausted");
  return schedule_[next_++];
}

namespace {

struct MinAdtSelector : Selector {
  Combination select(const SystemState& s) override { return min_adt_select(s); }
  std::string_view name() const override { return "min-adt"; }
};

struct MaxCliqueSelector : Selector {
  Combination select(const SystemState& s) override { return max_clique_select(s); }
  std::string_view name() const override { return "max-clique"; }
};

struct CompletionStandinSelector : Selector {
  Combination select(const SystemState& s) override { return completion_heuristic_select(s); }
  std::string_view name() const override { return "completion-standin"; }
};

struct SspHStandinSelector : Selector {
  Combination select(const SystemState& s) override { return first_wanted_select(s); }
  std::string_view name() const override { return "ssp-h-standin"; }
};

struct RoundRobinSelector : Selector {
  MessageId cursor = 1;
  Combination select(const SystemState& s) override { return round_robin_select(s, cursor); }
  std::string_view name() const override { return "round-robin"; }
};

struct OracleSelector : Selector {
  Combination select(const SystemState& s) override {
    return exhaustive_optimal_select(s).front();  // ascending order: first minimizer
  }
  std::string_view name() const override { return "oracle"; }
};

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = {
      "min-adt", "max-clique", "completion-standin", "ssp-h-standin", "round-robin", "oracle"};
  return names;
}

bool is_registered(std::string_view name) {
  const auto& names = registry_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::unique_ptr<Selector> make_selector(std::string_view name) {
  if (name == "min-adt") return std::make_unique<MinAdtSelector>();
  if (name == "max-clique") return std::make_unique<MaxCliqueSelector>();
  if (name == "completion-standin") return std::make_unique<CompletionStandinSelector>();
  if (name == "ssp-h-standin") return std::make_unique<SspHStandinSelector>();
  if (name == "round-robin") return std::make_unique<RoundRobinSelector>();
  if (name == "oracle") return std::make_unique<OracleSelector>();
  throw std::invalid_argument("unknown policy: " + std::string(name));
}

}  // namespace idnc::policy
