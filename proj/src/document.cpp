#include "vila/document.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace vila {

namespace {

bool bbox_well_formed(const BBox& b) {
  return std::isfinite(b.x0) && std::isfinite(b.y0) && std::isfinite(b.x1) &&
         std::isfinite(b.y1) && b.x0 >= 0.0 && b.y0 >= 0.0 && b.x0 <= b.x1 &&
         b.y0 <= b.y1;
}

void check_groups(const Page& page, const std::vector<VisualGroup>& groups,
                  const char* kind_name, ValidationReport& report) {
  const int n = static_cast<int>(page.tokens.size());
  // token index -> first group of this kind claiming it
  std::unordered_map<int, int> owner;
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    const auto& group = groups[g];
    if (!bbox_well_formed(group.bbox)) {
      report.violations.push_back({Violation::Code::BadBBox,
                                   std::string(kind_name) + " group " +
                                       std::to_string(g) + " has a malformed bbox",
                                   -1, g, -1});
    }
    int prev = -1;
    for (int idx : group.token_indices) {
      if (idx < 0 || idx >= n) {
        report.violations.push_back(
            {Violation::Code::BadTokenIndex,
             std::string(kind_name) + " group " + std::to_string(g) +
                 " references token " + std::to_string(idx) +
                 " outside [0," + std::to_string(n) + ")",
             idx, g, -1});
        continue;
      }
      if (idx <= prev) {
        report.violations.push_back(
            {Violation::Code::NonIncreasingIndices,
             std::string(kind_name) + " group " + std::to_string(g) +
                 " token_indices not strictly increasing at " +
                 std::to_string(idx),
             idx, g, -1});
      }
      prev = idx;
      auto [it, inserted] = owner.emplace(idx, g);
      if (!inserted && it->second != g) {
        report.violations.push_back(
            {Violation::Code::GroupOverlap,
             std::string(kind_name) + " groups " + std::to_string(it->second) +
                 " and " + std::to_string(g) + " share token " +
                 std::to_string(idx),
             idx, it->second, g});
      }
    }
  }
}

}  // namespace

ValidationReport validate_page(const Page& page, const LabelSet& labels) {
  ValidationReport report;
  const int n = static_cast<int>(page.tokens.size());
  for (int i = 0; i < n; ++i) {
    const Token& tok = page.tokens[i];
    if (tok.text.empty() ||
        tok.text.find_first_of(" \t\n\r") != std::string::npos) {
      report.violations.push_back({Violation::Code::EmptyTokenText,
                                   "token " + std::to_string(i) +
                                       " text empty or contains whitespace",
                                   i, -1, -1});
    }
    if (!bbox_well_formed(tok.bbox)) {
      report.violations.push_back(
          {Violation::Code::BadBBox,
           "token " + std::to_string(i) + " has a malformed bbox", i, -1, -1});
    } else if (tok.bbox.x1 > page.width || tok.bbox.y1 > page.height) {
      report.violations.push_back(
          {Violation::Code::TokenOutOfPage,
           "token " + std::to_string(i) + " bbox exceeds the page extent", i,
           -1, -1});
    }
    if (tok.gold_label != kNoLabel &&
        (tok.gold_label < 0 || tok.gold_label >= labels.size())) {
      report.violations.push_back(
          {Violation::Code::BadLabel,
           "token " + std::to_string(i) + " label " +
               std::to_string(tok.gold_label) + " outside the label set",
           i, -1, -1});
    }
  }
  check_groups(page, page.lines, "line", report);
  check_groups(page, page.blocks, "block", report);
  for (const auto& groups : {&page.lines, &page.blocks}) {
    for (int g = 0; g < static_cast<int>(groups->size()); ++g) {
      int label = (*groups)[g].label;
      if (label != kNoLabel && (label < 0 || label >= labels.size())) {
        report.violations.push_back(
            {Violation::Code::BadLabel,
             "group " + std::to_string(g) + " label " + std::to_string(label) +
                 " outside the label set",
             -1, g, -1});
      }
    }
  }
  return report;
}

Page reading_order_sort(const Page& page) {
  if (page.lines.empty()) {
    throw std::invalid_argument(
        "reading_order_sort: page has no line groups; run detect_lines first "
        "or supply lines");
  }
  const int n = static_cast<int>(page.tokens.size());

  // Order lines by (top y, left x), then tokens within each line by left x.
  std::vector<int> line_order(page.lines.size());
  std::iota(line_order.begin(), line_order.end(), 0);
  std::stable_sort(line_order.begin(), line_order.end(), [&](int a, int b) {
    const BBox& ba = page.lines[a].bbox;
    const BBox& bb = page.lines[b].bbox;
    if (ba.y0 != bb.y0) return ba.y0 < bb.y0;
    return ba.x0 < bb.x0;
  });

  std::vector<int> new_to_old;
  new_to_old.reserve(n);
  for (int li : line_order) {
    std::vector<int> members = page.lines[li].token_indices;
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
      return page.tokens[a].bbox.x0 < page.tokens[b].bbox.x0;
    });
    for (int idx : members) new_to_old.push_back(idx);
  }
  // Tokens not claimed by any line keep their relative order at the end.
  std::vector<char> seen(n, 0);
  for (int idx : new_to_old) seen[idx] = 1;
  for (int i = 0; i < n; ++i)
    if (!seen[i]) new_to_old.push_back(i);

  std::vector<int> old_to_new(n, -1);
  for (int ni = 0; ni < n; ++ni) old_to_new[new_to_old[ni]] = ni;

  Page out = page;
  out.tokens.clear();
  out.tokens.reserve(n);
  for (int idx : new_to_old) out.tokens.push_back(page.tokens[idx]);

  auto remap = [&](std::vector<VisualGroup> groups) {
    for (auto& g : groups) {
      for (int& idx : g.token_indices) idx = old_to_new[idx];
      std::sort(g.token_indices.begin(), g.token_indices.end());
    }
    std::stable_sort(groups.begin(), groups.end(),
                     [](const VisualGroup& a, const VisualGroup& b) {
                       int fa = a.token_indices.empty() ? -1 : a.token_indices[0];
                       int fb = b.token_indices.empty() ? -1 : b.token_indices[0];
                       return fa < fb;
                     });
    return groups;
  };
  out.lines = remap(page.lines);
  out.blocks = remap(page.blocks);
  return out;
}

}  // namespace vila
