#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace idnc {

// Message ids are 1-based and totally ordered; id ranges over 1..M.
using MessageId = int;

// The set of message ids XORed into one coded transmission. Always non-empty,
// stored sorted and deduplicated.
class Combination {
 public:
  explicit Combination(std::vector<MessageId> ids);
  Combination(std::initializer_list<MessageId> ids)
      : Combination(std::vector<MessageId>(ids)) {}

  const std::vector<MessageId>& messages() const { return ids_; }
  bool contains(MessageId m) const;
  std::size_t size() const { return ids_.size(); }
  std::string to_string() const;  // e.g. "2^3"

  friend bool operator==(const Combination& a, const Combination& b) { return a.ids_ == b.ids_; }
  friend bool operator<(const Combination& a, const Combination& b) { return a.ids_ < b.ids_; }

 private:
  std::vector<MessageId> ids_;
};

// One receiver: its Has set, erasure probability and the two running
// order-aware tallies (cumulative delay, realized delivery time). The Wants
// set is always the complement of Has; the Delivered set is always the
// longest prefix 1..j contained in Has. Both are derived, never stored.
class UserState {
 public:
  UserState(int user_id, int num_messages, const std::vector<MessageId>& has, double erasure_prob);

  int user_id() const { return user_id_; }
  int num_messages() const { return num_messages_; }
  double erasure_prob() const { return erasure_prob_; }
  long long cum_delay() const { return cum_delay_; }
  long long delivery_time() const { return delivery_time_; }

  bool has_message(MessageId m) const;
  bool wants_message(MessageId m) const { return !has_message(m); }
  bool complete() const { return first_wanted_ > num_messages_; }
  int has_count() const { return has_count_; }
  int wants_count() const { return num_messages_ - has_count_; }
  std::vector<MessageId> wants() const;  // ascending

  // Smallest wanted id; empty when the user holds everything.
  std::optional<MessageId> first_wanted() const;
  // k-th smallest wanted id, 1-based. Out-of-range k throws std::out_of_range.
  MessageId kth_wanted(int k) const;
  // Number of delivered messages, i.e. the length of the prefix 1..j of Has.
  int delivered_count() const { return first_wanted_ - 1; }

  // A combination is instantly decodable when it overlaps the Wants set in
  // exactly one message; returns that message, or nothing.
  std::optional<MessageId> instantly_decodable(const Combination& kappa) const;

  // One successfully received slot: decode if instantly decodable, book the
  // delay penalty, then grow delivery time by the post-update undelivered
  // count. Requires an incomplete user.
  void apply_reception(const Combination& kappa);

  // One erased slot: sets and delay untouched, delivery time still grows by
  // the undelivered count. Requires an incomplete user.
  void note_erased_slot();

 private:
  void check_incomplete(const char* op) const;

  int user_id_ = 0;
  int num_messages_ = 0;
  double erasure_prob_ = 0.0;
  std::vector<bool> has_;   // index 1..M
  int has_count_ = 0;
  int first_wanted_ = 1;    // M+1 when complete
  long long cum_delay_ = 0;
  long long delivery_time_ = 0;
};

// Broadcast state: the shared message universe 1..M, all users, and the
// transmission counter.
class SystemState {
 public:
  int num_messages() const { return num_messages_; }
  int num_users() const { return static_cast<int>(users_.size()); }
  long long slot() const { return slot_; }
  bool complete() const;

  const std::vector<UserState>& users() const { return users_; }
  const UserState& user(int user_id) const;  // 1-based

  // One transmission: every incomplete user either applies the reception or
  // books an erased slot; complete users are frozen. erased[i] flags user i+1.
  void step(const Combination& kappa, const std::vector<bool>& erased);

  friend SystemState new_system(int num_messages,
                                const std::vector<std::vector<MessageId>>& has_sets,
                                const std::vector<double>& erasure_probs);

 private:
  SystemState() = default;

  int num_messages_ = 0;
  long long slot_ = 0;
  std::vector<UserState> users_;
};

// Builds the slot-0 state. Rejects p outside [0,1), has-set ids outside 1..M,
// and mismatched list lengths.
SystemState new_system(int num_messages,
                       const std::vector<std::vector<MessageId>>& has_sets,
                       const std::vector<double>& erasure_probs);

}  // namespace idnc
