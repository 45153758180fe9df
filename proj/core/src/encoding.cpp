#include "graphlin/encoding.hpp"

#include <tuple>

#include "graphlin/errors.hpp"
#include "graphlin/families.hpp"
#include "graphlin/planes.hpp"

namespace graphlin {
namespace {

using families::StructuralArc;

// An arc kept by a structural encoding, tagged with its plane so that ties in
// the relation channel (same head, different planes) have a fixed order.
struct PlacedArc {
  int head;
  int dep;
  int plane;
  std::string relation;
};

void fill_relations(const std::vector<PlacedArc>& kept, LabelSeq& out) {
  std::vector<const PlacedArc*> order;
  order.reserve(kept.size());
  for (const PlacedArc& arc : kept) order.push_back(&arc);
  std::sort(order.begin(), order.end(), [](const PlacedArc* x, const PlacedArc* y) {
    return std::tie(x->dep, x->head, x->plane) < std::tie(y->dep, y->head, y->plane);
  });
  for (const PlacedArc* arc : order) {
    out.relations[static_cast<std::size_t>(arc->dep - 1)].push_back(arc->relation);
  }
}

void collect_planes(const std::vector<std::vector<Arc>>& planes, std::vector<PlacedArc>& kept) {
  for (std::size_t p = 0; p < planes.size(); ++p) {
    for (const Arc& arc : planes[p]) {
      if (arc.head == kRootPosition) continue;  // dummy / anchor attachments
      kept.push_back({arc.head, arc.dep, static_cast<int>(p) + 1,
                      arc.kind == ArcKind::Null ? std::string(kNullRelation) : arc.relation});
    }
  }
}

std::size_t count_regular(const std::vector<Arc>& arcs) {
  return static_cast<std::size_t>(std::count_if(
      arcs.begin(), arcs.end(), [](const Arc& a) { return a.kind == ArcKind::Regular; }));
}

// Position-0 arcs for the tokens selected by `wanted`, marked as Dummy.
template <class Pred>
std::vector<Arc> dummy_arcs(const DepGraph& g, Pred wanted) {
  std::vector<Arc> out;
  for (int i = 1; i <= g.size(); ++i) {
    if (wanted(i)) out.push_back(Arc{kRootPosition, i, {}, ArcKind::Dummy});
  }
  return out;
}

bool has_non_root_parent(const DepGraph& g, int i) {
  const auto in = g.incoming(i);
  return std::any_of(in.begin(), in.end(), [](const Arc& a) { return !a.is_root(); });
}

void encode_positional(const DepGraph& g, bool relative, LabelSeq& out) {
  std::vector<int> heads;
  for (int i = 1; i <= g.size(); ++i) {
    heads.clear();
    auto& rels = out.relations[static_cast<std::size_t>(i - 1)];
    for (const Arc& arc : g.incoming(i)) {
      heads.push_back(arc.head);
      rels.push_back(arc.relation);
    }
    out.structural[static_cast<std::size_t>(i - 1)] =
        families::positional_label(heads, i, relative);
  }
}

// Greedy 4k decomposition over real and dummy arcs. Every token without a
// regular parent hangs from the dummy node.
PlaneAssignment bits4_planes(const DepGraph& g, std::size_t k) {
  std::vector<Arc> arcs = g.non_root_arcs();
  auto dummies = dummy_arcs(g, [&](int i) { return !has_non_root_parent(g, i); });
  arcs.insert(arcs.end(), dummies.begin(), dummies.end());
  return split_in_degree(arcs, k);
}

// Root-only tokens become the farthest right dependents of position 0, which
// keeps single-rooted trees within the 4-bit label space.
bool needs_anchor(const DepGraph& g, int i) {
  const auto in = g.incoming(i);
  return !in.empty() && in.front().is_root() && in.size() == 1;
}

// Greedy direction pairs, unless splitting the 4k planes by direction drops
// fewer arcs. The second option makes 6k lossless whenever 4k is.
DirectionPairs bits6_pairs(const DepGraph& g, std::size_t k) {
  std::vector<Arc> arcs = g.non_root_arcs();
  auto anchors = dummy_arcs(g, [&](int i) { return needs_anchor(g, i); });
  arcs.insert(arcs.end(), anchors.begin(), anchors.end());
  DirectionPairs greedy = assign_direction_pairs(arcs, k);
  const std::size_t greedy_dropped = count_regular(greedy.overflow);
  if (greedy_dropped == 0) return greedy;

  PlaneAssignment four = bits4_planes(g, k);
  if (count_regular(four.overflow) >= greedy_dropped) return greedy;
  // Only the anchors of root-only tokens survive; other dummies carry nothing.
  for (auto& plane : four.planes) {
    std::erase_if(plane, [&](const Arc& a) { return a.is_root() && !needs_anchor(g, a.dep); });
  }
  std::erase_if(four.overflow, [](const Arc& a) { return a.kind != ArcKind::Regular; });
  return pairs_from_planes(four);
}

// Greedy bracket planes, unless joining the 6k pairs drops fewer arcs, so that
// brackets are lossless whenever 6k is.
PlaneAssignment bracket_planes(const DepGraph& g, std::size_t k) {
  const std::vector<Arc> arcs = g.non_root_arcs();
  PlaneAssignment greedy = greedy_assign(arcs, k, IncompatibilityRule::SameDirectionCross);
  if (greedy.overflow.empty()) return greedy;

  DirectionPairs pairs = bits6_pairs(g, k);
  if (count_regular(pairs.overflow) >= greedy.overflow.size()) return greedy;
  for (auto& plane : pairs.rightward) std::erase_if(plane, [](const Arc& a) { return a.is_root(); });
  return planes_from_pairs(pairs);
}

void encode_structural(const DepGraph& g, const EncodingSpec& spec, LabelSeq& out) {
  const int n = g.size();
  const auto k = static_cast<std::size_t>(spec.k);
  std::vector<PlacedArc> kept;

  for (const Arc& root : g.root_arcs()) {
    out.roots[static_cast<std::size_t>(root.dep - 1)] = root.relation;
  }

  switch (spec.family) {
    case Family::Bracket: {
      const PlaneAssignment pa = bracket_planes(g, k);
      out.structural = families::bracket_labels(n, pa.planes);
      collect_planes(pa.planes, kept);
      out.coverage.dropped_arcs = count_regular(pa.overflow);
      break;
    }
    case Family::Bits4: {
      const PlaneAssignment pa = bits4_planes(g, k);
      const auto planes = add_null_arcs(pa, n, k);
      out.structural = families::bits4_labels(n, planes, spec.k);
      collect_planes(planes, kept);
      out.coverage.dropped_arcs = count_regular(pa.overflow);
      break;
    }
    case Family::Bits6: {
      const DirectionPairs pairs = bits6_pairs(g, k);
      out.structural = families::bits6_labels(n, pairs, spec.k);
      collect_planes(pairs.rightward, kept);
      collect_planes(pairs.leftward, kept);
      out.coverage.dropped_arcs = count_regular(pairs.overflow);
      break;
    }
    default:
      break;
  }
  fill_relations(kept, out);
}

// Candidate heads for one token, in relation-channel order.
struct Candidate {
  int head;
  int plane;
  bool valid;
};

std::vector<std::vector<Candidate>> positional_candidates(const LabelSeq& labels, bool relative,
                                                          std::vector<Repair>& repairs) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<Candidate>> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> heads =
        families::parse_positional(labels.structural[static_cast<std::size_t>(i - 1)], i, relative);
    if (!std::is_sorted(heads.begin(), heads.end())) {
      repairs.push_back({i, RepairKind::UnsortedTuple, 0});
      std::sort(heads.begin(), heads.end());
    }
    auto& cands = out[static_cast<std::size_t>(i - 1)];
    for (std::size_t e = 0; e < heads.size(); ++e) {
      const int h = heads[e];
      bool valid = true;
      if (h < 0 || h > n) {
        repairs.push_back({i, RepairKind::HeadOutOfRange, 0});
        valid = false;
      } else if (h == i) {
        repairs.push_back({i, RepairKind::SelfArc, 0});
        valid = false;
      } else if (e > 0 && heads[e - 1] == h) {
        repairs.push_back({i, RepairKind::DuplicateHead, 0});
        valid = false;
      }
      cands.push_back({h, 0, valid});
    }
  }
  return out;
}

std::vector<std::vector<Candidate>> structural_candidates(const LabelSeq& labels,
                                                          const EncodingSpec& spec,
                                                          std::vector<Repair>& repairs) {
  std::vector<StructuralArc> arcs;
  switch (spec.family) {
    case Family::Bracket: arcs = families::decode_brackets(labels.structural, spec.k, repairs); break;
    case Family::Bits4: arcs = families::decode_bits4(labels.structural, spec.k, repairs); break;
    case Family::Bits6: arcs = families::decode_bits6(labels.structural, spec.k, repairs); break;
    default: break;
  }
  std::sort(arcs.begin(), arcs.end(), [](const StructuralArc& x, const StructuralArc& y) {
    return std::tie(x.dep, x.head, x.plane) < std::tie(y.dep, y.head, y.plane);
  });
  std::vector<std::vector<Candidate>> out(labels.size());
  for (const StructuralArc& arc : arcs) {
    if (arc.head == kRootPosition) continue;
    out[static_cast<std::size_t>(arc.dep - 1)].push_back({arc.head, arc.plane, true});
  }
  return out;
}

}  // namespace

std::string_view to_string(RepairKind kind) noexcept {
  switch (kind) {
    case RepairKind::HeadOutOfRange: return "head-out-of-range";
    case RepairKind::SelfArc: return "self-arc";
    case RepairKind::DuplicateHead: return "duplicate-head";
    case RepairKind::UnsortedTuple: return "unsorted-tuple";
    case RepairKind::CloseOnEmptyStack: return "close-on-empty-stack";
    case RepairKind::UnmatchedOpener: return "unmatched-opener";
    case RepairKind::AttachOnEmptyStack: return "attach-on-empty-stack";
    case RepairKind::RelationCountMismatch: return "relation-count-mismatch";
    case RepairKind::DuplicateArc: return "duplicate-arc";
  }
  return "unknown";
}

std::string Repair::describe() const {
  std::string out = std::string(to_string(kind)) + " at token " + std::to_string(token);
  if (plane > 0) out += " (plane " + std::to_string(plane) + ")";
  return out;
}

LabelSeq encode(const DepGraph& g, const EncodingSpec& spec) {
  const auto n = static_cast<std::size_t>(g.size());
  LabelSeq out;
  out.sentence_id = g.sentence_id();
  out.forms.reserve(n);
  for (const Token& t : g.tokens()) out.forms.push_back(t.form);
  out.structural.resize(n);
  out.relations.resize(n);
  out.roots.resize(n);
  out.coverage.total_arcs = g.arcs().size();

  if (spec.positional()) {
    encode_positional(g, spec.family == Family::RelativePositional, out);
  } else {
    encode_structural(g, spec, out);
  }
  return out;
}

DecodeResult decode_with_repairs(const LabelSeq& labels, const EncodingSpec& spec) {
  const std::size_t n = labels.size();
  const auto channel_ok = [n](std::size_t size) { return size == 0 || size == n; };
  if (!channel_ok(labels.relations.size()) || !channel_ok(labels.roots.size()) ||
      !channel_ok(labels.forms.size())) {
    throw std::invalid_argument("label channels disagree in length for sentence '" +
                                labels.sentence_id + "'");
  }

  DecodeResult result;
  auto& repairs = result.repairs;
  const auto candidates = spec.positional()
                              ? positional_candidates(
                                    labels, spec.family == Family::RelativePositional, repairs)
                              : structural_candidates(labels, spec, repairs);

  static const std::vector<std::string> kNoRelations;
  std::vector<Arc> arcs;
  for (std::size_t d = 0; d < n; ++d) {
    const int dep = static_cast<int>(d) + 1;
    const auto& cands = candidates[d];
    const auto& rels = labels.relations.empty() ? kNoRelations : labels.relations[d];
    if (cands.size() != rels.size()) {
      repairs.push_back({dep, RepairKind::RelationCountMismatch, 0});
    }
    const std::size_t first_arc = arcs.size();
    for (std::size_t c = 0; c < cands.size(); ++c) {
      const std::string relation = c < rels.size() ? rels[c] : "_";
      if (!cands[c].valid || relation == kNullRelation) continue;
      const bool duplicate =
          std::any_of(arcs.begin() + static_cast<std::ptrdiff_t>(first_arc), arcs.end(),
                      [&](const Arc& a) { return a.head == cands[c].head; });
      if (duplicate) {
        repairs.push_back({dep, RepairKind::DuplicateArc, cands[c].plane});
        continue;
      }
      arcs.push_back(Arc{cands[c].head, dep, relation, ArcKind::Regular});
    }
    if (!labels.roots.empty() && labels.roots[d]) {
      const bool duplicate =
          std::any_of(arcs.begin() + static_cast<std::ptrdiff_t>(first_arc), arcs.end(),
                      [](const Arc& a) { return a.head == kRootPosition; });
      if (duplicate) {
        repairs.push_back({dep, RepairKind::DuplicateArc, 0});
      } else {
        arcs.push_back(Arc{kRootPosition, dep, *labels.roots[d], ArcKind::Regular});
      }
    }
  }

  std::vector<Token> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tokens.push_back(Token{static_cast<int>(i) + 1,
                           labels.forms.empty() ? std::string() : labels.forms[i], {}});
  }
  result.graph = DepGraph(std::move(tokens), std::move(arcs), labels.sentence_id);
  return result;
}

DepGraph decode(const LabelSeq& labels, const EncodingSpec& spec, bool strict) {
  DecodeResult result = decode_with_repairs(labels, spec);
  if (strict && !result.repairs.empty()) {
    throw IllFormedError(result.repairs.size(), result.repairs.front().describe());
  }
  return std::move(result.graph);
}

RepairReport repair_report(const LabelSeq& labels, const EncodingSpec& spec) {
  DecodeResult result = decode_with_repairs(labels, spec);
  return RepairReport{result.repairs.empty(), std::move(result.repairs)};
}

}  // namespace graphlin
