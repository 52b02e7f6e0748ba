#include "qprob/scale.hpp"

#include <algorithm>
#include <numeric>

#include "qprob/errors.hpp"

namespace qprob {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

void close_transitively(std::vector<std::vector<bool>>& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) m[i][j] = true;
      }
    }
  }
}

}  // namespace

int Scale::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  throw UnknownLabel("unknown scale label '" + label + "'");
}

int Scale::class_of_label(const std::string& label) const {
  return class_of_[label_index(label)];
}

bool Scale::class_strict(int above, int below) const { return strict_[above][below]; }

bool Scale::holds(const std::string& a, const std::string& b, OrderRel rel) const {
  const int ca = class_of_label(a);
  const int cb = class_of_label(b);
  switch (rel) {
    case OrderRel::Strict: return class_strict(ca, cb);
    case OrderRel::NonStrict: return class_nonstrict(ca, cb);
    case OrderRel::Equiv: return ca == cb;
  }
  return false;
}

bool Scale::is_total_on_classes(const std::vector<int>& class_ids,
                                std::pair<int, int>* incomparable) const {
  for (std::size_t i = 0; i < class_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < class_ids.size(); ++j) {
      const int a = class_ids[i], b = class_ids[j];
      if (a == b) continue;
      if (!class_strict(a, b) && !class_strict(b, a)) {
        if (incomparable) *incomparable = {std::min(a, b), std::max(a, b)};
        return false;
      }
    }
  }
  return true;
}

bool Scale::is_total_on(const std::vector<std::string>& subset,
                        std::pair<int, int>* incomparable) const {
  std::vector<int> ids;
  ids.reserve(subset.size());
  for (const auto& label : subset) ids.push_back(class_of_label(label));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return is_total_on_classes(ids, incomparable);
}

std::vector<int> Scale::linear_extension() const {
  std::vector<int> all(classes_.size());
  std::iota(all.begin(), all.end(), 0);
  return linear_extension_of(all);
}

std::vector<int> Scale::linear_extension_of(const std::vector<int>& class_ids) const {
  // Kahn's algorithm, lowest first; among ready classes the smallest class
  // id wins, and ids are ordered by least member insertion index.
  std::vector<int> ids = class_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<int> out;
  std::vector<bool> emitted(classes_.size(), false);
  while (out.size() < ids.size()) {
    int pick = -1;
    for (int c : ids) {
      if (emitted[c]) continue;
      bool ready = true;
      for (int d : ids) {
        if (d != c && !emitted[d] && class_strict(c, d)) {
          ready = false;  // something below c is still pending
          break;
        }
      }
      if (ready) {
        pick = c;
        break;
      }
    }
    if (pick < 0) throw CycleDetected("scale order contains a cycle");  // unreachable by invariant
    emitted[pick] = true;
    out.push_back(pick);
  }
  return out;
}

const std::string& Scale::class_label(int class_id) const {
  return labels_[classes_[class_id].front()];
}

bool operator==(const Scale& a, const Scale& b) {
  return a.labels_ == b.labels_ && a.class_of_ == b.class_of_ && a.strict_ == b.strict_;
}

Scale build_scale(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& strict_pairs,
                  const std::vector<std::pair<std::string, std::string>>& equiv_pairs) {
  Scale s;
  s.labels_ = std::move(labels);
  {
    std::vector<std::string> sorted = s.labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("duplicate scale label");
    }
  }

  const int n = static_cast<int>(s.labels_.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : equiv_pairs) {
    uf_union(parent, s.label_index(a), s.label_index(b));
  }

  // Class ids ordered by least member insertion index.
  s.class_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf_find(parent, i);
    if (s.class_of_[root] < 0) {
      s.class_of_[root] = static_cast<int>(s.classes_.size());
      s.classes_.emplace_back();
    }
    s.class_of_[i] = s.class_of_[root];
    s.classes_[s.class_of_[i]].push_back(i);
  }

  const std::size_t c = s.classes_.size();
  s.strict_.assign(c, std::vector<bool>(c, false));
  for (const auto& [hi, lo] : strict_pairs) {
    const int ch = s.class_of_[s.label_index(hi)];
    const int cl = s.class_of_[s.label_index(lo)];
    if (ch == cl) {
      throw Contradiction("strict pair '" + hi + "' > '" + lo +
                          "' lands inside one equivalence class");
    }
    s.strict_[ch][cl] = true;
  }
  close_transitively(s.strict_);
  for (std::size_t i = 0; i < c; ++i) {
    if (s.strict_[i][i]) {
      throw CycleDetected("strict order contains a cycle through '" + s.class_label(static_cast<int>(i)) + "'");
    }
  }
  return s;
}

}  // namespace qprob
