#pragma once

#include <vector>

#include "idnc/model.hpp"
#include "idnc/rational.hpp"

namespace idnc::metrics {

// Delivery time of the best possible (in-order, erasure-free) schedule for a
// user wanting exactly `wants_sorted`: sum over the 2nd..n-th wanted message
// of (M - w_k + 1). M(M-1)/2 for a full wants set, 0 for at most one wanted.
long long min_delivery_time(int num_messages, const std::vector<MessageId>& wants_sorted);

// Per-slot delay penalty of a received combination: distance of the decoded
// message from the first wanted one, or the full undelivered count when the
// slot brings nothing decodable. Erased slots and complete users add 0.
long long delay_increment(const UserState& u, const Combination& kappa, bool received);

// (min_delivery + cum_delay) / (1 - p), the running estimate of where the
// user's delivery time will land.
double anticipated_delivery_time(const UserState& u, long long min_delivery);
Rational anticipated_delivery_time_exact(long long min_delivery, long long cum_delay,
                                         const Rational& erasure_prob);

long long overall_delivery_time(const std::vector<long long>& per_user_delivery);

struct IdentityRow {
  int user_id = 0;
  long long realized = 0;      // delivery time accumulated by the replay
  long long min_delivery = 0;  // from the user's wants at the initial state
  long long cum_delay = 0;
  bool completed = false;      // identity is only meaningful for completed users
};

struct IdentityReport {
  std::vector<IdentityRow> rows;
  bool all_completed() const;
  std::vector<int> incomplete_users() const;
};

// Replays a schedule erasure-free from `initial` and reports, per user, the
// realized delivery time next to min_delivery + cum_delay. For every user the
// schedule completes, realized == min_delivery + cum_delay exactly.
IdentityReport delivery_time_identity_check(const SystemState& initial,
                                            const std::vector<Combination>& schedule);

struct DelayLedgerRow {
  int user_id = 0;
  long long min_delivery = 0;
  long long cum_delay = 0;
  long long realized = 0;
  double anticipated = 0.0;  // recomputed, never cached
};

// Snapshot of the delay bookkeeping; min_delivery values are the ones frozen
// at episode start.
std::vector<DelayLedgerRow> build_delay_ledger(const SystemState& state,
                                               const std::vector<long long>& initial_min_delivery);

}  // namespace idnc::metrics
