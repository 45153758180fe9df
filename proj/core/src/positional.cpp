#include <charconv>
#include <limits>

#include "graphlin/errors.hpp"
#include "graphlin/families.hpp"

namespace graphlin::families {

std::string positional_label(std::span<const int> heads, int dep, bool relative) {
  std::string out = "(";
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(relative ? heads[i] - dep : heads[i]);
  }
  out += ')';
  return out;
}

std::vector<int> parse_positional(std::string_view label, int dep, bool relative) {
  std::vector<int> heads;
  if (label.empty() || label == "_" || label == "()") return heads;
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') {
    throw LabelSyntaxError(dep, "positional label must look like (a,b,...): '" +
                                    std::string(label) + "'");
  }
  std::string_view body = label.substr(1, label.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    long long value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw LabelSyntaxError(dep, "bad integer '" + std::string(item) + "' in positional label");
    }
    // Anything outside int range is out of range for any sentence anyway.
    constexpr long long kLimit = std::numeric_limits<int>::max() / 2;
    const long long head = (value > kLimit || value < -kLimit) ? -1
                           : relative                          ? dep + value
                                                               : value;
    heads.push_back(head < 0 ? -1 : static_cast<int>(head));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return heads;
}

}  // namespace graphlin::families
