#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vila {

// Page-space rectangle in abstract points. Origin is the top-left corner of
// the page and y grows downward, matching PDF viewer conventions.
struct BBox {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double cx() const { return 0.5 * (x0 + x1); }
  double cy() const { return 0.5 * (y0 + y1); }

  // Strict interior test; points on the border do not count.
  bool strictly_contains(double px, double py) const {
    return px > x0 && px < x1 && py > y0 && py < y1;
  }

  // Smallest rectangle covering both boxes.
  BBox united(const BBox& o) const {
    return {std::min(x0, o.x0), std::min(y0, o.y0), std::max(x1, o.x1),
            std::max(y1, o.y1)};
  }

  bool operator==(const BBox& o) const = default;
};

constexpr int kNoLabel = -1;

// One PDF word with its rectangle and (optionally) a gold category id.
struct Token {
  std::string text;
  BBox bbox;
  int gold_label = kNoLabel;

  bool operator==(const Token& o) const = default;
};

enum class GroupKind { Line, Block };

inline const char* to_string(GroupKind k) {
  return k == GroupKind::Line ? "line" : "block";
}

// A visual layout group: a rectangle plus the ordered indices of the page
// tokens allocated to it. token_indices are strictly increasing so in-group
// order always matches page reading order.
struct VisualGroup {
  BBox bbox;
  GroupKind kind = GroupKind::Line;
  std::vector<int> token_indices;
  int label = kNoLabel;

  bool operator==(const VisualGroup& o) const = default;
};

struct Page {
  std::string paper_id;
  int page_index = 0;
  double width = 0.0;
  double height = 0.0;
  std::vector<Token> tokens;
  std::vector<VisualGroup> lines;
  std::vector<VisualGroup> blocks;

  const std::vector<VisualGroup>& groups(GroupKind k) const {
    return k == GroupKind::Line ? lines : blocks;
  }
  std::vector<VisualGroup>& groups(GroupKind k) {
    return k == GroupKind::Line ? lines : blocks;
  }

  BBox extent() const { return {0.0, 0.0, width, height}; }

  bool operator==(const Page& o) const = default;
};

// Ordered category inventory. background_index marks the majority body-text
// category (e.g. "paragraph"), used by reports and noise injection.
struct LabelSet {
  std::vector<std::string> names;
  int background_index = 0;

  int size() const { return static_cast<int>(names.size()); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return kNoLabel;
  }

  bool operator==(const LabelSet& o) const = default;
};

struct Dataset {
  std::vector<Page> pages;
  LabelSet labels;

  bool operator==(const Dataset& o) const = default;
};

// One invariant violation found by validate_page. Violations are data, not
// failures: validation never throws on malformed numeric input.
struct Violation {
  enum class Code {
    BadBBox,            // non-finite, negative, or inverted coordinates
    TokenOutOfPage,     // token bbox outside [0,width]x[0,height]
    EmptyTokenText,     // empty or whitespace-containing token text
    BadLabel,           // label id outside the label set
    BadTokenIndex,      // group references token index >= n or < 0
    NonIncreasingIndices,  // group token_indices not strictly increasing
    GroupOverlap,       // two same-kind groups share a token index
  };
  Code code;
  std::string message;
  int token_index = -1;   // when a token is implicated
  int group_index = -1;   // when a group is implicated (index within its kind)
  int other_group = -1;   // second group for overlap violations
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool empty() const { return violations.empty(); }
  size_t size() const { return violations.size(); }
};

ValidationReport validate_page(const Page& page, const LabelSet& labels);

// Deterministic two-stage reading order: lines sorted by (top y, left x),
// tokens within a line by left x. Group token_indices are remapped to the
// new order and groups are re-emitted by first token index. Idempotent.
// Throws std::invalid_argument if the page has no line groups.
Page reading_order_sort(const Page& page);

}  // namespace vila
