#pragma once

#include <string>
#include <vector>

#include "graphlin/graph.hpp"
#include "graphlin/labels.hpp"

namespace graphlin {

/// Linearizes `g`. Never throws on input graphs: arcs outside the encoding's
/// coverage class are dropped and counted in LabelSeq::coverage.
///
/// Root arcs travel in the root channel for Bracket, Bits4 and Bits6. The
/// positional families encode them directly as head 0 (absolute) or offset -i
/// (relative).
LabelSeq encode(const DepGraph& g, const EncodingSpec& spec);

enum class RepairKind : std::uint8_t {
  HeadOutOfRange,
  SelfArc,
  DuplicateHead,
  UnsortedTuple,
  CloseOnEmptyStack,
  UnmatchedOpener,
  AttachOnEmptyStack,
  RelationCountMismatch,
  DuplicateArc,
};

std::string_view to_string(RepairKind kind) noexcept;

struct Repair {
  int token = 0;
  RepairKind kind = RepairKind::HeadOutOfRange;
  /// 1-based plane / subgraph / pair; 0 when not plane-specific.
  int plane = 0;

  std::string describe() const;
  bool operator==(const Repair&) const = default;
};

struct DecodeResult {
  DepGraph graph;
  std::vector<Repair> repairs;

  bool well_formed() const noexcept { return repairs.empty(); }
};

/// Decodes any syntactically valid label sequence, repairing ill-formed parts.
/// Throws LabelSyntaxError when a label does not parse under the family grammar
/// and std::invalid_argument when the channels disagree in length.
DecodeResult decode_with_repairs(const LabelSeq& labels, const EncodingSpec& spec);

/// Same as decode_with_repairs but returns only the graph. With `strict`, any
/// repair raises IllFormedError instead.
DepGraph decode(const LabelSeq& labels, const EncodingSpec& spec, bool strict = false);

struct RepairReport {
  bool well_formed = true;
  std::vector<Repair> repairs;
};

/// Membership check for the set of well-formed sequences.
RepairReport repair_report(const LabelSeq& labels, const EncodingSpec& spec);

}  // namespace graphlin
