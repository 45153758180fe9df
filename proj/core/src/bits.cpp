#include "graphlin/errors.hpp"
#include "graphlin/families.hpp"

namespace graphlin::families {
namespace {

// Per-plane facts behind the bit semantics. Index 0 is the dummy node.
struct PlaneFacts {
  std::vector<int> parent;
  std::vector<char> farthest;
  std::vector<char> left_deps;
  std::vector<char> right_deps;
};

PlaneFacts plane_facts(int n, std::span<const Arc> arcs) {
  const auto size = static_cast<std::size_t>(n) + 1;
  PlaneFacts f{std::vector<int>(size, -1), std::vector<char>(size, 0),
               std::vector<char>(size, 0), std::vector<char>(size, 0)};
  std::vector<int> leftmost(size, -1), rightmost(size, -1);
  for (const Arc& arc : arcs) {
    const auto h = static_cast<std::size_t>(arc.head);
    f.parent[static_cast<std::size_t>(arc.dep)] = arc.head;
    if (arc.dep < arc.head) {
      f.left_deps[h] = 1;
      if (leftmost[h] < 0 || arc.dep < leftmost[h]) leftmost[h] = arc.dep;
    } else {
      f.right_deps[h] = 1;
      rightmost[h] = std::max(rightmost[h], arc.dep);
    }
  }
  for (int i = 1; i <= n; ++i) {
    const int p = f.parent[static_cast<std::size_t>(i)];
    if (p < 0) continue;
    const auto pu = static_cast<std::size_t>(p);
    f.farthest[static_cast<std::size_t>(i)] = (i < p ? leftmost[pu] : rightmost[pu]) == i;
  }
  return f;
}

char bit(bool value) { return value ? '1' : '0'; }

bool bit_at(std::string_view label, std::size_t offset) { return label[offset] == '1'; }

// Left-to-right pass: a token that attaches takes the stack top as head, pops
// it when it is that head's farthest dependent, then pushes itself when it has
// dependents to the right.
template <class Attach, class Pop, class Push>
void rightward_pass(int n, int plane, bool dummy_on_stack, Attach attach, Pop pop, Push push,
                    std::vector<int>& stack, std::vector<StructuralArc>& arcs,
                    std::vector<Repair>& repairs) {
  stack.clear();
  if (dummy_on_stack) stack.push_back(kRootPosition);
  bool dummy_has_dependents = false;
  for (int i = 1; i <= n; ++i) {
    if (attach(i)) {
      if (stack.empty()) {
        repairs.push_back({i, RepairKind::AttachOnEmptyStack, plane});
      } else {
        dummy_has_dependents |= stack.back() == kRootPosition;
        arcs.push_back({stack.back(), i, plane});
        if (pop(i)) stack.pop_back();
      }
    }
    if (push(i)) stack.push_back(i);
  }
  // The dummy node may stay on the stack only if nothing attached to it.
  for (int pos : stack) {
    if (pos != kRootPosition || dummy_has_dependents) {
      repairs.push_back({pos, RepairKind::UnmatchedOpener, plane});
    }
  }
}

// Mirror image of rightward_pass, scanning right to left.
template <class Attach, class Pop, class Push>
void leftward_pass(int n, int plane, Attach attach, Pop pop, Push push, std::vector<int>& stack,
                   std::vector<StructuralArc>& arcs, std::vector<Repair>& repairs) {
  stack.clear();
  for (int i = n; i >= 1; --i) {
    if (attach(i)) {
      if (stack.empty()) {
        repairs.push_back({i, RepairKind::AttachOnEmptyStack, plane});
      } else {
        arcs.push_back({stack.back(), i, plane});
        if (pop(i)) stack.pop_back();
      }
    }
    if (push(i)) stack.push_back(i);
  }
  for (int pos : stack) repairs.push_back({pos, RepairKind::UnmatchedOpener, plane});
}

void check_all(std::span<const std::string> labels, std::size_t width) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    check_bits(labels[i], static_cast<int>(i) + 1, width);
  }
}

}  // namespace

void check_bits(std::string_view label, int token, std::size_t width) {
  if (label.size() != width) {
    throw LabelSyntaxError(token, "expected " + std::to_string(width) + " bits, got '" +
                                      std::string(label) + "'");
  }
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw LabelSyntaxError(token, "non-binary character in bit label '" + std::string(label) +
                                        "'");
    }
  }
}

std::vector<std::string> bits4_labels(int n, const std::vector<std::vector<Arc>>& planes, int k) {
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (auto& label : labels) label.reserve(static_cast<std::size_t>(4 * k));
  for (int j = 0; j < k; ++j) {
    const std::span<const Arc> arcs =
        static_cast<std::size_t>(j) < planes.size() ? std::span<const Arc>(planes[j])
                                                    : std::span<const Arc>{};
    const PlaneFacts f = plane_facts(n, arcs);
    for (int i = 1; i <= n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      auto& label = labels[iu - 1];
      label += bit(f.parent[iu] >= 0 && f.parent[iu] < i);
      label += bit(f.farthest[iu]);
      label += bit(f.left_deps[iu]);
      label += bit(f.right_deps[iu]);
    }
  }
  return labels;
}

std::vector<std::string> bits6_labels(int n, const DirectionPairs& pairs, int k) {
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (auto& label : labels) label.reserve(static_cast<std::size_t>(6 * k));
  const auto plane_or_empty = [](const std::vector<std::vector<Arc>>& planes, int j) {
    return static_cast<std::size_t>(j) < planes.size() ? std::span<const Arc>(planes[j])
                                                       : std::span<const Arc>{};
  };
  for (int j = 0; j < k; ++j) {
    const PlaneFacts r = plane_facts(n, plane_or_empty(pairs.rightward, j));
    const PlaneFacts l = plane_facts(n, plane_or_empty(pairs.leftward, j));
    for (int i = 1; i <= n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      auto& label = labels[iu - 1];
      label += bit(r.parent[iu] >= 0);
      label += bit(r.farthest[iu]);
      label += bit(r.right_deps[iu]);
      label += bit(l.parent[iu] >= 0);
      label += bit(l.farthest[iu]);
      label += bit(l.left_deps[iu]);
    }
  }
  return labels;
}

std::vector<StructuralArc> decode_bits4(std::span<const std::string> labels, int k,
                                        std::vector<Repair>& repairs) {
  check_all(labels, static_cast<std::size_t>(4 * k));
  const int n = static_cast<int>(labels.size());
  const auto at = [&](int i, std::size_t offset) {
    return bit_at(labels[static_cast<std::size_t>(i - 1)], offset);
  };
  std::vector<StructuralArc> arcs;
  std::vector<int> stack;
  for (int j = 0; j < k; ++j) {
    const auto base = static_cast<std::size_t>(4 * j);
    rightward_pass(
        n, j + 1, true, [&](int i) { return at(i, base); }, [&](int i) { return at(i, base + 1); },
        [&](int i) { return at(i, base + 3); }, stack, arcs, repairs);
    leftward_pass(
        n, j + 1, [&](int i) { return !at(i, base); }, [&](int i) { return at(i, base + 1); },
        [&](int i) { return at(i, base + 2); }, stack, arcs, repairs);
  }
  return arcs;
}

std::vector<StructuralArc> decode_bits6(std::span<const std::string> labels, int k,
                                        std::vector<Repair>& repairs) {
  check_all(labels, static_cast<std::size_t>(6 * k));
  const int n = static_cast<int>(labels.size());
  const auto at = [&](int i, std::size_t offset) {
    return bit_at(labels[static_cast<std::size_t>(i - 1)], offset);
  };
  std::vector<StructuralArc> arcs;
  std::vector<int> stack;
  for (int j = 0; j < k; ++j) {
    const auto base = static_cast<std::size_t>(6 * j);
    rightward_pass(
        n, j + 1, true, [&](int i) { return at(i, base); }, [&](int i) { return at(i, base + 1); },
        [&](int i) { return at(i, base + 2); }, stack, arcs, repairs);
    leftward_pass(
        n, j + 1, [&](int i) { return at(i, base + 3); }, [&](int i) { return at(i, base + 4); },
        [&](int i) { return at(i, base + 5); }, stack, arcs, repairs);
  }
  return arcs;
}

}  // namespace graphlin::families
