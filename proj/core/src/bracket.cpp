#include "graphlin/errors.hpp"
#include "graphlin/families.hpp"

namespace graphlin::families {
namespace {

void append_symbol(std::string& out, char symbol, int count, std::size_t stars) {
  for (int c = 0; c < count; ++c) {
    out += symbol;
    out.append(stars, '*');
  }
}

}  // namespace

std::vector<std::string> bracket_labels(int n, const std::vector<std::vector<Arc>>& planes) {
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<BracketCounts> counts(size);
  for (std::size_t p = 0; p < planes.size(); ++p) {
    std::fill(counts.begin(), counts.end(), BracketCounts{});
    for (const Arc& arc : planes[p]) {
      auto& head = counts[static_cast<std::size_t>(arc.head)];
      auto& dep = counts[static_cast<std::size_t>(arc.dep)];
      if (arc.direction() == Direction::Rightward) {
        ++head.open_right;
        ++dep.close_right;
      } else {
        ++head.close_left;
        ++dep.open_left;
      }
    }
    for (int i = 1; i <= n; ++i) {
      const auto& c = counts[static_cast<std::size_t>(i)];
      auto& label = labels[static_cast<std::size_t>(i - 1)];
      append_symbol(label, '>', c.close_right, p);
      append_symbol(label, '\\', c.close_left, p);
      append_symbol(label, '<', c.open_left, p);
      append_symbol(label, '/', c.open_right, p);
    }
  }
  return labels;
}

std::vector<BracketCounts> parse_bracket(std::string_view label, int token, int k) {
  std::vector<BracketCounts> counts(static_cast<std::size_t>(k));
  if (label == "_") return counts;
  std::size_t pos = 0;
  while (pos < label.size()) {
    const char symbol = label[pos++];
    std::size_t stars = 0;
    while (pos < label.size() && label[pos] == '*') {
      ++stars;
      ++pos;
    }
    if (stars >= static_cast<std::size_t>(k)) {
      throw LabelSyntaxError(token, "bracket symbol for plane " + std::to_string(stars + 1) +
                                        " exceeds k=" + std::to_string(k));
    }
    auto& c = counts[stars];
    switch (symbol) {
      case '>': ++c.close_right; break;
      case '\\': ++c.close_left; break;
      case '<': ++c.open_left; break;
      case '/': ++c.open_right; break;
      default:
        throw LabelSyntaxError(token, std::string("unknown bracket symbol '") + symbol + "'");
    }
  }
  return counts;
}

std::vector<StructuralArc> decode_brackets(std::span<const std::string> labels, int k,
                                           std::vector<Repair>& repairs) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<BracketCounts>> parsed;
  parsed.reserve(labels.size());
  for (int i = 1; i <= n; ++i) {
    parsed.push_back(parse_bracket(labels[static_cast<std::size_t>(i - 1)], i, k));
  }

  std::vector<StructuralArc> arcs;
  std::vector<int> right_open, left_open;
  for (int p = 0; p < k; ++p) {
    right_open.clear();
    left_open.clear();
    for (int i = 1; i <= n; ++i) {
      const auto& c = parsed[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)];
      for (int s = 0; s < c.close_right; ++s) {
        if (right_open.empty()) {
          repairs.push_back({i, RepairKind::CloseOnEmptyStack, p + 1});
          continue;
        }
        arcs.push_back({right_open.back(), i, p + 1});
        right_open.pop_back();
      }
      for (int s = 0; s < c.close_left; ++s) {
        if (left_open.empty()) {
          repairs.push_back({i, RepairKind::CloseOnEmptyStack, p + 1});
          continue;
        }
        arcs.push_back({i, left_open.back(), p + 1});
        left_open.pop_back();
      }
      left_open.insert(left_open.end(), static_cast<std::size_t>(c.open_left), i);
      right_open.insert(right_open.end(), static_cast<std::size_t>(c.open_right), i);
    }
    for (int pos : right_open) repairs.push_back({pos, RepairKind::UnmatchedOpener, p + 1});
    for (int pos : left_open) repairs.push_back({pos, RepairKind::UnmatchedOpener, p + 1});
  }
  return arcs;
}

}  // namespace graphlin::families
