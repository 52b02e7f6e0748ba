#include "qprob/document.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qprob/errors.hpp"

namespace qprob {

namespace {

struct Token {
  enum Kind { Name, EventTok, Equals, Comma, Arrow, Greater, Less, Tilde } kind;
  std::string text;                 // Name: the name; EventTok: raw inside of the braces
  std::vector<std::string> names;  // EventTok members
};

std::vector<Token> tokenize_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto is_name_char = [](char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != '=' &&
           c != ',' && c != '<' && c != '>' && c != '~' && c != '#' && c != ':';
  };
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{') {
      const std::size_t close = line.find('}', i);
      if (close == std::string::npos) throw ParseError(lineno, "unterminated event '{'");
      Token t{Token::EventTok, line.substr(i + 1, close - i - 1), {}};
      std::istringstream ss(t.text);
      std::string name;
      while (ss >> name) t.names.push_back(name);
      out.push_back(std::move(t));
      i = close + 1;
      continue;
    }
    if (c == '=') {
      out.push_back({Token::Equals, "=", {}});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({Token::Comma, ",", {}});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", {}});
      i += 2;
      continue;
    }
    if (c == '>') {
      out.push_back({Token::Greater, ">", {}});
      ++i;
      continue;
    }
    if (c == '<') {
      out.push_back({Token::Less, "<", {}});
      ++i;
      continue;
    }
    if (c == '~') {
      out.push_back({Token::Tilde, "~", {}});
      ++i;
      continue;
    }
    if (is_name_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_name_char(line[j])) ++j;
      out.push_back({Token::Name, line.substr(i, j - i), {}});
      i = j;
      continue;
    }
    throw ParseError(lineno, std::string("unexpected character '") + c + "'");
  }
  return out;
}

Event event_from_token(const Token& t, const UniversePtr& u, int lineno) {
  std::uint32_t mask = 0;
  for (const auto& name : t.names) {
    const int idx = u->index_of(name);
    if (idx < 0) throw ParseError(lineno, "unknown element '" + name + "'");
    mask |= std::uint32_t{1} << idx;
  }
  return Event(u, mask);
}

bool event_pair_less(const std::pair<Event, Event>& a, const std::pair<Event, Event>& b) {
  if (a.first < b.first) return true;
  if (b.first < a.first) return false;
  return a.second < b.second;
}

}  // namespace

EventFamily Document::resolve_family() const {
  if (family_decl == FamilyDecl::Explicit) return EventFamily(universe, family_events);
  return power_set(universe);
}

bool operator==(const Document& a, const Document& b) {
  const auto events_eq = [](const std::vector<Event>& x, const std::vector<Event>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].mask() != y[i].mask()) return false;
    }
    return true;
  };
  if (!(a.universe && b.universe && *a.universe == *b.universe)) return false;
  if (a.family_decl != b.family_decl || !events_eq(a.family_events, b.family_events)) return false;
  if (a.scale_labels != b.scale_labels || a.orders != b.orders) return false;
  if (a.maps.size() != b.maps.size() || a.assignments.size() != b.assignments.size()) return false;
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    if (a.maps[i].first.mask() != b.maps[i].first.mask() || a.maps[i].second != b.maps[i].second) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.assignments.size(); ++i) {
    if (a.assignments[i].first.mask() != b.assignments[i].first.mask() ||
        a.assignments[i].second != b.assignments[i].second) {
      return false;
    }
  }
  if (a.bound != b.bound) return false;
  const auto pairs_eq = [](const std::vector<std::pair<Event, Event>>& x,
                           const std::vector<std::pair<Event, Event>>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].first.mask() != y[i].first.mask() || x[i].second.mask() != y[i].second.mask()) {
        return false;
      }
    }
    return true;
  };
  return pairs_eq(a.rel_strict, b.rel_strict) && pairs_eq(a.rel_equiv, b.rel_equiv);
}

Document parse_document(std::string_view text) {
  Document d;
  bool saw_universe = false, saw_family = false, saw_scale = false, saw_assign = false,
       saw_bound = false;
  struct PendingEvent {
    Event e;
    int line;
  };
  std::vector<PendingEvent> family_membership_checks;

  std::istringstream input{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(input, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    // trim
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(b, e - b + 1);

    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'section: ...'");
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              key.end());
    const std::string rest = line.substr(colon + 1);
    std::vector<Token> toks = tokenize_line(rest, lineno);

    if (key == "universe") {
      if (saw_universe) throw ParseError(lineno, "duplicate section 'universe'");
      std::vector<std::string> names;
      for (const auto& t : toks) {
        if (t.kind != Token::Name) throw ParseError(lineno, "universe expects element names");
        names.push_back(t.text);
      }
      try {
        d.universe = make_universe(std::move(names));
      } catch (const Error& err) {
        throw ParseError(lineno, err.what());
      }
      saw_universe = true;
      continue;
    }
    if (!saw_universe) throw ParseError(lineno, "universe must be declared first");

    if (key == "family") {
      if (saw_family) throw ParseError(lineno, "duplicate section 'family'");
      saw_family = true;
      if (toks.size() == 1 && toks[0].kind == Token::Name && toks[0].text == "powerset") {
        d.family_decl = Document::FamilyDecl::Powerset;
        continue;
      }
      if (toks.empty()) throw ParseError(lineno, "family expects 'powerset' or events");
      d.family_decl = Document::FamilyDecl::Explicit;
      for (const auto& t : toks) {
        if (t.kind != Token::EventTok) throw ParseError(lineno, "family expects events");
        d.family_events.push_back(event_from_token(t, d.universe, lineno));
      }
      std::sort(d.family_events.begin(), d.family_events.end());
      d.family_events.erase(std::unique(d.family_events.begin(), d.family_events.end(),
                                        [](const Event& a, const Event& b) {
                                          return a.mask() == b.mask();
                                        }),
                            d.family_events.end());
      continue;
    }
    if (key == "scale") {
      if (saw_scale) throw ParseError(lineno, "duplicate section 'scale'");
      saw_scale = true;
      for (const auto& t : toks) {
        if (t.kind != Token::Name) throw ParseError(lineno, "scale expects label names");
        if (std::find(d.scale_labels.begin(), d.scale_labels.end(), t.text) !=
            d.scale_labels.end()) {
          throw ParseError(lineno, "duplicate scale label '" + t.text + "'");
        }
        d.scale_labels.push_back(t.text);
      }
      if (d.scale_labels.empty()) throw ParseError(lineno, "scale expects at least one label");
      continue;
    }
    if (key == "order") {
      if (!saw_scale) throw ParseError(lineno, "order requires a scale section first");
      if (toks.size() != 3 || toks[0].kind != Token::Name || toks[2].kind != Token::Name ||
          (toks[1].kind != Token::Less && toks[1].kind != Token::Tilde)) {
        throw ParseError(lineno, "order expects '<label> < <label>' or '<label> ~ <label>'");
      }
      const auto label_idx = [&](const std::string& name) {
        const auto it = std::find(d.scale_labels.begin(), d.scale_labels.end(), name);
        if (it == d.scale_labels.end()) {
          throw ParseError(lineno, "unknown scale label '" + name + "'");
        }
        return static_cast<int>(it - d.scale_labels.begin());
      };
      Document::OrderDecl decl;
      decl.a = label_idx(toks[0].text);
      decl.b = label_idx(toks[2].text);
      decl.kind = toks[1].kind == Token::Less ? Document::OrderKind::Strict
                                              : Document::OrderKind::Equiv;
      if (decl.kind == Document::OrderKind::Equiv && decl.b < decl.a) std::swap(decl.a, decl.b);
      d.orders.push_back(decl);
      continue;
    }
    if (key == "map") {
      if (!saw_scale) throw ParseError(lineno, "map requires a scale section first");
      if (toks.size() != 3 || toks[0].kind != Token::EventTok || toks[1].kind != Token::Arrow ||
          toks[2].kind != Token::Name) {
        throw ParseError(lineno, "map expects '<event> -> <label>'");
      }
      if (std::find(d.scale_labels.begin(), d.scale_labels.end(), toks[2].text) ==
          d.scale_labels.end()) {
        throw ParseError(lineno, "unknown scale label '" + toks[2].text + "'");
      }
      Event ev = event_from_token(toks[0], d.universe, lineno);
      for (const auto& [existing, label] : d.maps) {
        if (existing.mask() == ev.mask()) {
          throw ParseError(lineno, "duplicate map for event " + ev.to_string());
        }
      }
      family_membership_checks.push_back({ev, lineno});
      d.maps.emplace_back(std::move(ev), toks[2].text);
      continue;
    }
    if (key == "assign") {
      if (saw_assign) throw ParseError(lineno, "duplicate section 'assign'");
      saw_assign = true;
      std::size_t i = 0;
      while (i < toks.size()) {
        if (toks[i].kind != Token::EventTok) throw ParseError(lineno, "assign expects an event");
        if (i + 2 >= toks.size() || toks[i + 1].kind != Token::Equals ||
            toks[i + 2].kind != Token::Name) {
          throw ParseError(lineno, "assign expects '<event> = <rational>'");
        }
        Event ev = event_from_token(toks[i], d.universe, lineno);
        Rational value;
        try {
          value = parse_rational(toks[i + 2].text);
        } catch (const Error& err) {
          throw ParseError(lineno, err.what());
        }
        for (const auto& [existing, v] : d.assignments) {
          if (existing.mask() == ev.mask()) {
            throw ParseError(lineno, "duplicate assignment for event " + ev.to_string());
          }
        }
        family_membership_checks.push_back({ev, lineno});
        d.assignments.emplace_back(std::move(ev), std::move(value));
        i += 3;
        if (i < toks.size()) {
          if (toks[i].kind != Token::Comma) throw ParseError(lineno, "expected ',' in assign");
          ++i;
        }
      }
      if (d.assignments.empty()) throw ParseError(lineno, "assign expects at least one entry");
      continue;
    }
    if (key == "bound") {
      if (saw_bound) throw ParseError(lineno, "duplicate section 'bound'");
      saw_bound = true;
      if (toks.size() != 1 || toks[0].kind != Token::Name) {
        throw ParseError(lineno, "bound expects a positive integer");
      }
      long v = 0;
      try {
        std::size_t pos = 0;
        v = std::stol(toks[0].text, &pos);
        if (pos != toks[0].text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bound expects a positive integer");
      }
      if (v < 1) throw ParseError(lineno, "bound must be >= 1");
      d.bound = v;
      continue;
    }
    if (key == "rel") {
      if (toks.size() != 3 || toks[0].kind != Token::EventTok || toks[2].kind != Token::EventTok ||
          (toks[1].kind != Token::Greater && toks[1].kind != Token::Tilde)) {
        throw ParseError(lineno, "rel expects '<event> > <event>' or '<event> ~ <event>'");
      }
      Event a = event_from_token(toks[0], d.universe, lineno);
      Event b = event_from_token(toks[2], d.universe, lineno);
      family_membership_checks.push_back({a, lineno});
      family_membership_checks.push_back({b, lineno});
      if (toks[1].kind == Token::Greater) {
        d.rel_strict.emplace_back(std::move(a), std::move(b));
      } else {
        if (b < a) std::swap(a, b);
        d.rel_equiv.emplace_back(std::move(a), std::move(b));
      }
      continue;
    }
    throw ParseError(lineno, "unknown section '" + key + "'");
  }

  if (!saw_universe) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'universe' section");

  if (d.family_decl == Document::FamilyDecl::Explicit) {
    const EventFamily fam = d.resolve_family();
    for (const auto& [ev, line] : family_membership_checks) {
      if (!fam.contains_mask(ev.mask())) {
        throw ParseError(line, "event " + ev.to_string() + " outside family");
      }
    }
  }

  std::sort(d.orders.begin(), d.orders.end());
  d.orders.erase(std::unique(d.orders.begin(), d.orders.end()), d.orders.end());
  std::sort(d.maps.begin(), d.maps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(d.assignments.begin(), d.assignments.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(d.rel_strict.begin(), d.rel_strict.end(), event_pair_less);
  d.rel_strict.erase(std::unique(d.rel_strict.begin(), d.rel_strict.end(),
                                 [](const auto& a, const auto& b) {
                                   return a.first.mask() == b.first.mask() &&
                                          a.second.mask() == b.second.mask();
                                 }),
                     d.rel_strict.end());
  std::sort(d.rel_equiv.begin(), d.rel_equiv.end(), event_pair_less);
  d.rel_equiv.erase(std::unique(d.rel_equiv.begin(), d.rel_equiv.end(),
                                [](const auto& a, const auto& b) {
                                  return a.first.mask() == b.first.mask() &&
                                         a.second.mask() == b.second.mask();
                                }),
                    d.rel_equiv.end());
  return d;
}

std::string serialize_document(const Document& d) {
  std::ostringstream out;
  out << "universe:";
  for (const auto& name : d.universe->elements()) out << ' ' << name;
  out << '\n';

  if (d.family_decl == Document::FamilyDecl::Powerset) {
    out << "family: powerset\n";
  } else if (d.family_decl == Document::FamilyDecl::Explicit) {
    out << "family:";
    for (const auto& e : d.family_events) out << ' ' << e.to_string();
    out << '\n';
  }

  if (!d.scale_labels.empty()) {
    out << "scale:";
    for (const auto& label : d.scale_labels) out << ' ' << label;
    out << '\n';
  }
  for (const auto& [e, label] : d.maps) {
    out << "map: " << e.to_string() << " -> " << label << '\n';
  }
  for (const auto& o : d.orders) {
    out << "order: " << d.scale_labels[o.a]
        << (o.kind == Document::OrderKind::Strict ? " < " : " ~ ") << d.scale_labels[o.b] << '\n';
  }

  if (!d.assignments.empty()) {
    out << "assign:";
    for (std::size_t i = 0; i < d.assignments.size(); ++i) {
      out << (i == 0 ? " " : ", ") << d.assignments[i].first.to_string() << " = "
          << format_rational(d.assignments[i].second);
    }
    out << '\n';
  }
  if (d.bound) out << "bound: " << *d.bound << '\n';

  for (const auto& [a, b] : d.rel_strict) {
    out << "rel: " << a.to_string() << " > " << b.to_string() << '\n';
  }
  for (const auto& [a, b] : d.rel_equiv) {
    out << "rel: " << a.to_string() << " ~ " << b.to_string() << '\n';
  }
  return out.str();
}

}  // namespace qprob
