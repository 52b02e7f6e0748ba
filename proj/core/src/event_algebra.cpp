#include "qprob/event_algebra.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_set>

#include "qprob/errors.hpp"

namespace qprob {

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.size() > kMaxElements) {
    throw Error("universe exceeds the " + std::to_string(kMaxElements) + "-element cap");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : elements_) {
    if (name.empty()) throw Error("universe element names must be non-empty");
    if (!seen.insert(name).second) {
      throw Error("duplicate universe element '" + name + "'");
    }
  }
}

int Universe::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

UniversePtr make_universe(std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(elements));
}

Event::Event(UniversePtr universe, std::uint32_t mask) : universe_(std::move(universe)), mask_(mask) {
  if (!universe_) throw Error("event requires a universe");
  if ((mask_ & ~universe_->full_mask()) != 0) {
    throw Error("event mask references elements outside the universe");
  }
}

std::size_t Event::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<int> Event::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (contains(static_cast<int>(i))) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string Event::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ' ';
    out += universe_->name_of(i);
    first = false;
  }
  out += '}';
  return out;
}

bool Event::same_universe(const Event& other) const {
  return universe_ == other.universe_ || *universe_ == *other.universe_;
}

bool operator==(const Event& a, const Event& b) {
  return a.mask_ == b.mask_ && a.same_universe(b);
}

bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  const std::uint32_t above = ~((std::uint32_t{1} << d) | ((std::uint32_t{1} << d) - 1u));
  if ((a >> d) & 1u) {
    // a's next member is d; a < b iff b still continues above d.
    return (b & above) != 0;
  }
  // b's next member is d; a < b iff a is a strict prefix (nothing above d).
  return (a & above) == 0;
}

bool operator<(const Event& a, const Event& b) { return mask_lex_less(a.mask_, b.mask_); }

Event combine(const Event& a, const Event& b, SetOp op) {
  if (op == SetOp::Complement) {
    return Event(a.universe(), a.universe()->full_mask() & ~a.mask());
  }
  if (!a.same_universe(b)) {
    throw UniverseMismatch("events belong to different universes");
  }
  switch (op) {
    case SetOp::Union:
      return Event(a.universe(), a.mask() | b.mask());
    case SetOp::Intersection:
      return Event(a.universe(), a.mask() & b.mask());
    case SetOp::Difference:
      return Event(a.universe(), a.mask() & ~b.mask());
    default:
      break;
  }
  throw Error("unreachable set operation");
}

Event complement(const Event& a) { return combine(a, a, SetOp::Complement); }

EventFamily::EventFamily(UniversePtr universe, std::vector<Event> events)
    : universe_(std::move(universe)), events_(std::move(events)) {
  if (!universe_) throw Error("family requires a universe");
  for (const auto& e : events_) {
    if (!(*e.universe() == *universe_)) {
      throw UniverseMismatch("family event over a different universe");
    }
  }
  std::sort(events_.begin(), events_.end());
  events_.erase(std::unique(events_.begin(), events_.end(),
                            [](const Event& a, const Event& b) { return a.mask() == b.mask(); }),
                events_.end());
  index_by_mask_.assign(std::size_t{1} << universe_->size(), -1);
  for (std::size_t i = 0; i < events_.size(); ++i) {
    index_by_mask_[events_[i].mask()] = static_cast<int>(i);
  }
  contains_empty_ = contains_mask(0);
  contains_universe_ = contains_mask(universe_->full_mask());
}

bool EventFamily::contains_mask(std::uint32_t mask) const {
  return mask < index_by_mask_.size() && index_by_mask_[mask] >= 0;
}

bool EventFamily::contains(const Event& e) const {
  return (*e.universe() == *universe_) && contains_mask(e.mask());
}

int EventFamily::index_of_mask(std::uint32_t mask) const {
  if (mask >= index_by_mask_.size()) return -1;
  return index_by_mask_[mask];
}

bool EventFamily::subset_of(const EventFamily& other) const {
  if (!(*universe_ == *other.universe_)) return false;
  return std::all_of(events_.begin(), events_.end(),
                     [&](const Event& e) { return other.contains_mask(e.mask()); });
}

bool operator==(const EventFamily& a, const EventFamily& b) {
  if (!(*a.universe_ == *b.universe_)) return false;
  if (a.events_.size() != b.events_.size()) return false;
  for (std::size_t i = 0; i < a.events_.size(); ++i) {
    if (a.events_[i].mask() != b.events_[i].mask()) return false;
  }
  return true;
}

EventFamily power_set(const UniversePtr& universe) {
  std::vector<Event> events;
  const std::size_t count = std::size_t{1} << universe->size();
  events.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    events.emplace_back(universe, mask);
  }
  return EventFamily(universe, std::move(events));
}

EventFamily close_family(const EventFamily& seed, ClosureMode /*mode*/) {
  // The generated family is the set of unions of the atoms of the partition
  // the seed induces on U; with U adjoined before closing, algebra and
  // field closure coincide (difference with U yields complements), so the
  // mode does not change the result.
  if (seed.size() == 0) throw Error("close_family requires a non-empty seed");
  const auto& u = seed.universe();

  std::vector<std::uint32_t> atoms;
  if (u->full_mask() != 0) atoms.push_back(u->full_mask());
  for (std::size_t j = 0; j < seed.size(); ++j) {
    const std::uint32_t s = seed.at(j).mask();
    std::vector<std::uint32_t> refined;
    for (std::uint32_t a : atoms) {
      if ((a & s) != 0) refined.push_back(a & s);
      if ((a & ~s) != 0) refined.push_back(a & ~s);
    }
    atoms = std::move(refined);
  }

  std::vector<Event> events;
  events.reserve(std::size_t{1} << atoms.size());
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << atoms.size()); ++pick) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if ((pick >> i) & 1u) mask |= atoms[i];
    }
    events.emplace_back(u, mask);
  }
  return EventFamily(u, std::move(events));
}

const char* family_axiom_name(FamilyAxiom axiom) {
  switch (axiom) {
    case FamilyAxiom::SIP1: return "SIP1";
    case FamilyAxiom::SIP2: return "SIP2";
    case FamilyAxiom::SIP3: return "SIP3";
  }
  return "?";
}

namespace {

std::optional<Witness> find_missing_universe(const EventFamily& f) {
  if (!f.contains_universe()) {
    return Witness{{Event(f.universe(), f.universe()->full_mask()).to_string()}, "U missing"};
  }
  return std::nullopt;
}

std::optional<Witness> find_missing_complement(const EventFamily& f) {
  for (const auto& a : f.events()) {
    const Event c = complement(a);
    if (!f.contains_mask(c.mask())) {
      return Witness{{a.to_string(), c.to_string()}, "complement missing"};
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_missing_pairwise(const EventFamily& f, bool with_difference) {
  struct OpSpec {
    SetOp op;
    const char* clause;
  };
  std::vector<OpSpec> ops = {{SetOp::Union, "union missing"},
                             {SetOp::Intersection, "intersection missing"}};
  if (with_difference) ops.push_back({SetOp::Difference, "difference missing"});
  for (const auto& a : f.events()) {
    for (const auto& b : f.events()) {
      for (const auto& spec : ops) {
        const Event r = combine(a, b, spec.op);
        if (!f.contains_mask(r.mask())) {
          return Witness{{a.to_string(), b.to_string(), r.to_string()}, spec.clause};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_family(const EventFamily& f, FamilyAxiom axiom) {
  const std::string name = family_axiom_name(axiom);
  if (f.is_power_set()) return pass_report(name);  // closed under everything

  std::optional<Witness> w = find_missing_universe(f);
  if (!w && axiom != FamilyAxiom::SIP2) w = find_missing_complement(f);
  if (!w) w = find_missing_pairwise(f, /*with_difference=*/axiom != FamilyAxiom::SIP1);
  if (w) return report_from_witnesses(name, {*w});
  return pass_report(name);
}

std::vector<AxiomReport> check_family_all(const EventFamily& f) {
  return {check_family(f, FamilyAxiom::SIP1), check_family(f, FamilyAxiom::SIP2),
          check_family(f, FamilyAxiom::SIP3)};
}

}  // namespace qprob
