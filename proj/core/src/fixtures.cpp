#include "graphlin/formats.hpp"

namespace graphlin {

DepGraph fixture_fig1() {
  std::vector<Token> tokens;
  for (int i = 1; i <= 6; ++i) tokens.push_back(Token{i, "w" + std::to_string(i), {}});
  std::vector<Arc> arcs{{2, 1, "dep"}, {2, 3, "dep"}, {3, 5, "dep"}, {4, 5, "dep"},
                        {5, 6, "dep"}, {6, 3, "dep"}, {1, 4, "dep"}, {1, 5, "dep"}};
  return DepGraph(std::move(tokens), std::move(arcs), "fig1");
}

}  // namespace graphlin
