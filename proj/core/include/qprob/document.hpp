#ifndef QPROB_DOCUMENT_HPP
#define QPROB_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qprob/event_algebra.hpp"
#include "qprob/rational.hpp"

namespace qprob {

// Parsed form of the line-oriented text format. Parsing canonicalizes:
// events in member order, rationals in lowest terms, pair lists sorted and
// deduplicated. serialize(parse(text)) is idempotent and parse(serialize(d))
// == d.
struct Document {
  enum class FamilyDecl { Default, Powerset, Explicit };
  enum class OrderKind { Strict, Equiv };

  struct OrderDecl {
    int a = 0, b = 0;  // label indices into scale_labels
    OrderKind kind = OrderKind::Strict;
    friend auto operator<=>(const OrderDecl&, const OrderDecl&) = default;
  };

  UniversePtr universe;

  FamilyDecl family_decl = FamilyDecl::Default;
  std::vector<Event> family_events;  // canonical order, Explicit only

  std::vector<std::string> scale_labels;      // declared order
  std::vector<OrderDecl> orders;              // canonical order
  std::vector<std::pair<Event, std::string>> maps;  // sorted by event

  std::vector<std::pair<Event, Rational>> assignments;  // sorted by event
  std::optional<long> bound;

  std::vector<std::pair<Event, Event>> rel_strict;  // sorted
  std::vector<std::pair<Event, Event>> rel_equiv;   // (min, max), sorted

  bool has_scale() const { return !scale_labels.empty(); }
  bool has_assignment() const { return !assignments.empty(); }
  bool has_relation() const { return !rel_strict.empty() || !rel_equiv.empty(); }

  // The family the document works over: explicit events, or the power set.
  EventFamily resolve_family() const;

  friend bool operator==(const Document& a, const Document& b);
};

// Throws ParseError with a 1-based line number.
Document parse_document(std::string_view text);

// Canonical text: sections in fixed order (universe, family, scale, map,
// order, assign, bound, rel), events sorted by canonical form, rationals
// in lowest terms.
std::string serialize_document(const Document& d);

}  // namespace qprob

#endif  // QPROB_DOCUMENT_HPP
