#include "idnc/model.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace idnc {

Combination::Combination(std::vector<MessageId> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw std::invalid_argument("combination needs at least one message");
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (ids_.front() < 1) throw std::invalid_argument("message ids are 1-based");
}

bool Combination::contains(MessageId m) const {
  return std::binary_search(ids_.begin(), ids_.end(), m);
}

std::string Combination::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out << '^';
    out << ids_[i];
  }
  return out.str();
}

UserState::UserState(int user_id, int num_messages, const std::vector<MessageId>& has,
                     double erasure_prob)
    : user_id_(user_id),
      num_messages_(num_messages),
      erasure_prob_(erasure_prob),
      has_(static_cast<std::size_t>(num_messages) + 1, false) {
  if (num_messages < 1) throw std::invalid_argument("need at least one message");
  if (user_id < 1) throw std::invalid_argument("user ids are 1-based");
  if (erasure_prob < 0.0 || erasure_prob >= 1.0)
    throw std::invalid_argument("erasure probability must lie in [0, 1)");
  for (MessageId m : has) {
    if (m < 1 || m > num_messages)
      throw std::invalid_argument("has-set message id outside 1..M");
    if (!has_[m]) {
      has_[m] = true;
      ++has_count_;
    }
  }
  while (first_wanted_ <= num_messages_ && has_[first_wanted_]) ++first_wanted_;
}

bool UserState::has_message(MessageId m) const {
  if (m < 1 || m > num_messages_) throw std::invalid_argument("message id outside 1..M");
  return has_[m];
}

std::vector<MessageId> UserState::wants() const {
  std::vector<MessageId> out;
  out.reserve(wants_count());
  for (MessageId m = first_wanted_; m <= num_messages_; ++m)
    if (!has_[m]) out.push_back(m);
  return out;
}

std::optional<MessageId> UserState::first_wanted() const {
  if (complete()) return std::nullopt;
  return first_wanted_;
}

MessageId UserState::kth_wanted(int k) const {
  if (k < 1 || k > wants_count()) throw std::out_of_range("wanted-message index out of range");
  int seen = 0;
  for (MessageId m = first_wanted_; m <= num_messages_; ++m) {
    if (!has_[m] && ++seen == k) return m;
  }
  throw std::out_of_range("wanted-message index out of range");  // unreachable
}

std::optional<MessageId> UserState::instantly_decodable(const Combination& kappa) const {
  std::optional<MessageId> hit;
  for (MessageId m : kappa.messages()) {
    if (m > num_messages_) throw std::invalid_argument("combination id outside 1..M");
    if (!has_[m]) {
      if (hit) return std::nullopt;  // two wanted messages, undecodable
      hit = m;
    }
  }
  return hit;
}

void UserState::check_incomplete(const char* op) const {
  if (complete()) throw std::logic_error(std::string(op) + " on a complete user");
}

void UserState::apply_reception(const Combination& kappa) {
  check_incomplete("apply_reception");
  const auto target = instantly_decodable(kappa);
  if (target) {
    const MessageId m = *target;
#ifndef NDEBUG
    for (MessageId other : kappa.messages()) assert(other == m || has_[other]);
#endif
    cum_delay_ += m - first_wanted_;  // the decoded message IS the k-th wanted, valued m
    has_[m] = true;
    ++has_count_;
    while (first_wanted_ <= num_messages_ && has_[first_wanted_]) ++first_wanted_;
  } else {
    cum_delay_ += num_messages_ - first_wanted_ + 1;
  }
  delivery_time_ += num_messages_ - delivered_count();
}

void UserState::note_erased_slot() {
  check_incomplete("note_erased_slot");
  delivery_time_ += num_messages_ - delivered_count();
}

bool SystemState::complete() const {
  return std::all_of(users_.begin(), users_.end(),
                     [](const UserState& u) { return u.complete(); });
}

const UserState& SystemState::user(int user_id) const {
  if (user_id < 1 || user_id > num_users()) throw std::out_of_range("user id outside 1..U");
  return users_[static_cast<std::size_t>(user_id) - 1];
}

void SystemState::step(const Combination& kappa, const std::vector<bool>& erased) {
  if (static_cast<int>(erased.size()) != num_users())
    throw std::invalid_argument("erasure flags must cover every user");
  for (MessageId m : kappa.messages())
    if (m > num_messages_) throw std::invalid_argument("combination id outside 1..M");
  ++slot_;
  for (auto& u : users_) {
    if (u.complete()) continue;
    if (erased[static_cast<std::size_t>(u.user_id()) - 1])
      u.note_erased_slot();
    else
      u.apply_reception(kappa);
  }
}

SystemState new_system(int num_messages, const std::vector<std::vector<MessageId>>& has_sets,
                       const std::vector<double>& erasure_probs) {
  if (num_messages < 1) throw std::invalid_argument("need at least one message");
  if (has_sets.empty() || has_sets.size() != erasure_probs.size())
    throw std::invalid_argument("need one has-set and one erasure probability per user, U >= 1");
  SystemState state;
  state.num_messages_ = num_messages;
  state.users_.reserve(has_sets.size());
  for (std::size_t i = 0; i < has_sets.size(); ++i)
    state.users_.emplace_back(static_cast<int>(i) + 1, num_messages, has_sets[i],
                              erasure_probs[i]);
  return state;
}

}  // namespace idnc
