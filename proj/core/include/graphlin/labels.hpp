#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphlin {

enum class Family : std::uint8_t {
  AbsolutePositional,
  RelativePositional,
  Bracket,
  Bits4,
  Bits6,
};

/// Relation string reserved for null arcs of the 4k-bit encoding.
inline constexpr std::string_view kNullRelation = "NULL";

struct EncodingSpec {
  Family family = Family::AbsolutePositional;
  /// Planes (Bracket), subgraphs (Bits4) or subgraph pairs (Bits6).
  /// Positional families ignore it and always carry k = 1.
  int k = 1;

  /// Parses "abs", "rel", "b[:k]", "b4[:k]" or "b6[:k]". Without an explicit k,
  /// brackets default to 2 and bit encodings to 3. Throws std::invalid_argument.
  static EncodingSpec parse(std::string_view text);
  std::string to_string() const;

  bool positional() const noexcept {
    return family == Family::AbsolutePositional || family == Family::RelativePositional;
  }

  bool operator==(const EncodingSpec&) const = default;
};

/// Every spec in a comma separated list, e.g. "abs,b:2,b4:3".
std::vector<EncodingSpec> parse_spec_list(std::string_view text);

struct CoverageReport {
  std::size_t dropped_arcs = 0;
  std::size_t total_arcs = 0;

  CoverageReport& operator+=(const CoverageReport& other) noexcept {
    dropped_arcs += other.dropped_arcs;
    total_arcs += other.total_arcs;
    return *this;
  }
  bool operator==(const CoverageReport&) const = default;
};

/// One sentence in label space: a structural label and a relation tuple per
/// token, plus the root channel.
struct LabelSeq {
  std::string sentence_id;
  std::vector<std::string> forms;
  std::vector<std::string> structural;
  /// Relations of the arcs entering each token, by head position.
  std::vector<std::vector<std::string>> relations;
  /// Relation of the 0 -> i arc, if any. Positional families leave it empty
  /// and encode head 0 in the structural tuple instead.
  std::vector<std::optional<std::string>> roots;
  CoverageReport coverage;

  std::size_t size() const noexcept { return structural.size(); }
  bool operator==(const LabelSeq&) const = default;
};

}  // namespace graphlin
