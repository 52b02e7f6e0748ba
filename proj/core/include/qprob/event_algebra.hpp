#ifndef QPROB_EVENT_ALGEBRA_HPP
#define QPROB_EVENT_ALGEBRA_HPP

#include <cstdint>
#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "qprob/report.hpp"

namespace qprob {

// Finite universe of elementary events. Element order is significant: it
// fixes the index of every element and therefore the canonical form of
// every event over it.
class Universe {
 public:
  // Full power sets are enumerated in several checkers, so the size is
  // capped. Practical suites stay at or below 6 elements.
  static constexpr std::size_t kMaxElements = 16;

  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name_of(int index) const { return elements_.at(index); }
  // -1 when the name is not an element.
  int index_of(const std::string& name) const;
  std::uint32_t full_mask() const {
    return size() == 0 ? 0u : (std::uint32_t{1} << size()) - 1u;
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<std::string> elements_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> elements);

// A subset of a universe in canonical bitmask form. Equality is structural:
// same universe contents, same members.
class Event {
 public:
  Event(UniversePtr universe, std::uint32_t mask);

  const UniversePtr& universe() const { return universe_; }
  std::uint32_t mask() const { return mask_; }
  std::size_t size() const;
  std::vector<int> members() const;
  bool contains(int index) const { return (mask_ >> index) & 1u; }
  bool empty() const { return mask_ == 0; }
  bool is_universe() const { return mask_ == universe_->full_mask(); }

  // Canonical text form, members in index order: "{a b}", "{}" for the
  // empty event.
  std::string to_string() const;

  bool same_universe(const Event& other) const;

  friend bool operator==(const Event& a, const Event& b);
  // Lexicographic on the sorted member index sequence; this is the witness
  // and serialization order everywhere.
  friend bool operator<(const Event& a, const Event& b);

 private:
  UniversePtr universe_;
  std::uint32_t mask_;
};

// Lexicographic comparison of two events' member sequences given as masks.
bool mask_lex_less(std::uint32_t a, std::uint32_t b);

enum class SetOp { Union, Intersection, Difference, Complement };

// For Complement, b is ignored. Throws UniverseMismatch.
Event combine(const Event& a, const Event& b, SetOp op);
Event complement(const Event& a);

// A duplicate-free collection of events over one universe, kept in
// canonical (member-lexicographic) order.
class EventFamily {
 public:
  EventFamily(UniversePtr universe, std::vector<Event> events);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  const Event& at(std::size_t i) const { return events_[i]; }

  bool contains_mask(std::uint32_t mask) const;
  bool contains(const Event& e) const;
  // Position in events(), or -1.
  int index_of_mask(std::uint32_t mask) const;

  bool contains_empty() const { return contains_empty_; }
  bool contains_universe() const { return contains_universe_; }

  bool is_power_set() const { return events_.size() == (std::size_t{1} << universe_->size()); }
  // True iff every event of this family belongs to other.
  bool subset_of(const EventFamily& other) const;

  friend bool operator==(const EventFamily& a, const EventFamily& b);

 private:
  UniversePtr universe_;
  std::vector<Event> events_;       // canonical order
  std::vector<int> index_by_mask_;  // 2^n entries, -1 when absent
  bool contains_empty_ = false;
  bool contains_universe_ = false;
};

EventFamily power_set(const UniversePtr& universe);

enum class ClosureMode { Algebra, Field };

// Least superset of seed plus {empty, U} closed under union, intersection
// and difference (Algebra), and additionally complement (Field). On
// concrete subset families the two modes coincide because difference with
// U yields complements; both are kept for interface fidelity.
EventFamily close_family(const EventFamily& seed, ClosureMode mode);

enum class FamilyAxiom { SIP1, SIP2, SIP3 };

// SIP2: U and the empty event present, closed under union, intersection,
// difference. SIP3: SIP2 plus complement closure. SIP1 is checked as SIP3:
// a Boolean subalgebra of a concrete power set is exactly a set field.
AxiomReport check_family(const EventFamily& f, FamilyAxiom axiom);
std::vector<AxiomReport> check_family_all(const EventFamily& f);

const char* family_axiom_name(FamilyAxiom axiom);

}  // namespace qprob

#endif  // QPROB_EVENT_ALGEBRA_HPP
