#pragma once

// Per-family structural codecs. encode()/decode() in encoding.hpp compose these
// with plane assignment and the relation/root channels; they are public so that
// callers can linearize a hand-made plane split.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphlin/encoding.hpp"
#include "graphlin/graph.hpp"
#include "graphlin/planes.hpp"

namespace graphlin::families {

/// An arc read back from structural labels, before relations are attached.
struct StructuralArc {
  int head = 0;
  int dep = 0;
  /// 1-based plane / subgraph / pair index.
  int plane = 1;

  bool operator==(const StructuralArc&) const = default;
};

// --- positional -------------------------------------------------------------

/// "(h1,h2,...)" with entries ascending; offsets h - dep when `relative`.
std::string positional_label(std::span<const int> heads, int dep, bool relative);

/// Absolute head positions listed by a positional label, in label order.
/// Accepts "", "_" and "()" as the empty tuple.
std::vector<int> parse_positional(std::string_view label, int dep, bool relative);

// --- unbounded brackets -----------------------------------------------------

/// Symbol counts of one plane within a bracket label.
struct BracketCounts {
  int close_right = 0;  // '>' incoming from the left
  int close_left = 0;   // '\' outgoing to the left
  int open_left = 0;    // '<' incoming from the right
  int open_right = 0;   // '/' outgoing to the right
};

/// Labels for bracket planes (planes[j] becomes the symbols with j asterisks).
/// Within a plane, symbols are emitted in the order > \ < /.
std::vector<std::string> bracket_labels(int n, const std::vector<std::vector<Arc>>& planes);

/// Counts per plane (index 0 = plane 1). Throws LabelSyntaxError on unknown
/// symbols or a plane above `k`.
std::vector<BracketCounts> parse_bracket(std::string_view label, int token, int k);

std::vector<StructuralArc> decode_brackets(std::span<const std::string> labels, int k,
                                           std::vector<Repair>& repairs);

// --- bounded bit encodings --------------------------------------------------

/// 4k-bit labels from k planes in which every token has exactly one parent
/// (regular, dummy or null).
std::vector<std::string> bits4_labels(int n, const std::vector<std::vector<Arc>>& planes, int k);

/// 6k-bit labels from k direction pairs.
std::vector<std::string> bits6_labels(int n, const DirectionPairs& pairs, int k);

/// Throws LabelSyntaxError unless the label is exactly `width` bits.
void check_bits(std::string_view label, int token, std::size_t width);

/// Decoded arcs include head-0 arcs (dummy / anchor attachments); callers strip
/// them.
std::vector<StructuralArc> decode_bits4(std::span<const std::string> labels, int k,
                                        std::vector<Repair>& repairs);
std::vector<StructuralArc> decode_bits6(std::span<const std::string> labels, int k,
                                        std::vector<Repair>& repairs);

}  // namespace graphlin::families
