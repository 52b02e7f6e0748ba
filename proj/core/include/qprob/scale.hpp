#ifndef QPROB_SCALE_HPP
#define QPROB_SCALE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qprob {

enum class OrderRel { Strict, NonStrict, Equiv };

// A finite probability scale: labels partitioned into equivalence classes,
// with a strict partial order on the classes stored as a transitive
// closure. The working elements are the classes; label-level queries go
// through their class. Class ids are ordered by the smallest insertion
// index of their members, which is also the tie-break used by
// linear_extension.
class Scale {
 public:
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t label_count() const { return labels_.size(); }
  std::size_t class_count() const { return classes_.size(); }

  // Members (label indices, ascending) of each class.
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  int label_index(const std::string& label) const;  // throws UnknownLabel
  int class_of_label(const std::string& label) const;
  int class_of_index(int label_index) const { return class_of_[label_index]; }

  bool class_strict(int above, int below) const;
  bool class_nonstrict(int a, int b) const { return a == b || class_strict(a, b); }

  bool holds(const std::string& a, const std::string& b, OrderRel rel) const;

  // True iff every pair of distinct classes touching the given labels is
  // comparable. When false and incomparable is non-null, it receives the
  // first incomparable class pair (by class id).
  bool is_total_on(const std::vector<std::string>& subset,
                   std::pair<int, int>* incomparable = nullptr) const;
  bool is_total_on_classes(const std::vector<int>& class_ids,
                           std::pair<int, int>* incomparable = nullptr) const;

  // Deterministic topological order of all classes, lowest first: among
  // ready classes the one with the smallest id is emitted.
  std::vector<int> linear_extension() const;
  // Same, restricted to the given classes and the order among them.
  std::vector<int> linear_extension_of(const std::vector<int>& class_ids) const;

  // Label of a class for rendering: the earliest-inserted member.
  const std::string& class_label(int class_id) const;

  friend bool operator==(const Scale& a, const Scale& b);

  friend Scale build_scale(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& strict_pairs,
                           const std::vector<std::pair<std::string, std::string>>& equiv_pairs);

 private:
  Scale() = default;

  std::vector<std::string> labels_;
  std::vector<int> class_of_;               // label index -> class id
  std::vector<std::vector<int>> classes_;   // class id -> member label indices
  std::vector<std::vector<bool>> strict_;   // transitive closure on classes
};

// Throws CycleDetected when a class is reachable from itself through the
// strict relation, Contradiction when a declared strict pair lands inside
// one equivalence class, Error on duplicate labels, UnknownLabel on pairs
// referencing undeclared labels.
Scale build_scale(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& strict_pairs,
                  const std::vector<std::pair<std::string, std::string>>& equiv_pairs);

}  // namespace qprob

#endif  // QPROB_SCALE_HPP
