#include "idnc/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace idnc::metrics {

long long min_delivery_time(int num_messages, const std::vector<MessageId>& wants_sorted) {
  for (std::size_t i = 0; i < wants_sorted.size(); ++i) {
    MessageId m = wants_sorted[i];
    if (m < 1 || m > num_messages) throw std::invalid_argument("wanted id outside 1..M");
    if (i > 0 && wants_sorted[i - 1] >= m)
      throw std::invalid_argument("wants list must be strictly ascending");
  }
  long long total = 0;
  for (std::size_t k = 1; k < wants_sorted.size(); ++k)
    total += num_messages - wants_sorted[k] + 1;
  return total;
}

long long delay_increment(const UserState& u, const Combination& kappa, bool received) {
  if (!received || u.complete()) return 0;
  const MessageId first = *u.first_wanted();
  const auto decoded = u.instantly_decodable(kappa);
  if (decoded) return *decoded - first;
  return u.num_messages() - first + 1;
}

double anticipated_delivery_time(const UserState& u, long long min_delivery) {
  return static_cast<double>(min_delivery + u.cum_delay()) / (1.0 - u.erasure_prob());
}

Rational anticipated_delivery_time_exact(long long min_delivery, long long cum_delay,
                                         const Rational& erasure_prob) {
  return Rational(min_delivery + cum_delay) / (Rational(1) - erasure_prob);
}

long long overall_delivery_time(const std::vector<long long>& per_user_delivery) {
  long long total = 0;
  for (long long t : per_user_delivery) total += t;
  return total;
}

bool IdentityReport::all_completed() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.completed; });
}

std::vector<int> IdentityReport::incomplete_users() const {
  std::vector<int> out;
  for (const auto& r : rows)
    if (!r.completed) out.push_back(r.user_id);
  return out;
}

IdentityReport delivery_time_identity_check(const SystemState& initial,
                                            const std::vector<Combination>& schedule) {
  SystemState state = initial;
  std::vector<long long> min_delivery;
  min_delivery.reserve(state.users().size());
  for (const auto& u : state.users())
    min_delivery.push_back(min_delivery_time(state.num_messages(), u.wants()));

  const std::vector<bool> none_erased(state.users().size(), false);
  for (const auto& kappa : schedule) state.step(kappa, none_erased);

  IdentityReport report;
  for (std::size_t i = 0; i < state.users().size(); ++i) {
    const auto& u = state.users()[i];
    report.rows.push_back({u.user_id(), u.delivery_time(), min_delivery[i], u.cum_delay(),
                           u.complete()});
  }
  return report;
}

std::vector<DelayLedgerRow> build_delay_ledger(const SystemState& state,
                                               const std::vector<long long>& initial_min_delivery) {
  if (initial_min_delivery.size() != state.users().size())
    throw std::invalid_argument("need one min-delivery value per user");
  std::vector<DelayLedgerRow> rows;
  rows.reserve(state.users().size());
  for (std::size_t i = 0; i < state.users().size(); ++i) {
    const auto& u = state.users()[i];
    rows.push_back({u.user_id(), initial_min_delivery[i], u.cum_delay(), u.delivery_time(),
                    anticipated_delivery_time(u, initial_min_delivery[i])});
  }
  return rows;
}

}  // namespace idnc::metrics
