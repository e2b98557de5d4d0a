#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "randsub/rational.hpp"
#include "randsub/subtraction_set.hpp"

namespace randsub {

// Games whose move sets depend on the position, and multi-pile games.

// Remove one chip or the whole pile: a_0 = 0, a_n = 1 - a_{n-1} / 2.
Rational dynamic_one_or_all(std::size_t n);
// (2/3)(1 - (-1/2)^n).
Rational dynamic_one_or_all_closed_form(std::size_t n);

// Remove any number of chips: a_0 = 0, a_1 = 1,
// a_n = 1 - (a_0 + ... + a_{n-1}) / n for n >= 2.
Rational take_any(std::size_t n);

class MultiPileGame {
 public:
  explicit MultiPileGame(std::vector<SubtractionSet> sets);

  std::size_t piles() const noexcept { return sets_.size(); }
  const std::vector<SubtractionSet>& sets() const noexcept { return sets_; }
  // Every pile uses the same subtraction set.
  bool symmetric() const noexcept { return symmetric_; }

 private:
  std::vector<SubtractionSet> sets_;
  bool symmetric_;
};

// Parses per-pile sets separated by ';', e.g. "1,2;3".
MultiPileGame parse_multipile(const std::string& text);

struct PilePosition {
  std::vector<std::size_t> counts;
};

// Parses "2,1". Throws ValidationError.
PilePosition parse_position(const std::string& text);

// How the random move is drawn. When every move in every pile is legal,
// pile_first gives each move weight 1 / (r |S_j|); uniform_pair gives the same
// weights only when all |S_j| are equal.
enum class BoundaryRule {
  pile_first,    // uniform over piles with a legal move, then uniform within the pile
  uniform_pair,  // uniform over all legal (pile, amount) pairs
};

struct MultiPileOptions {
  BoundaryRule rule = BoundaryRule::pile_first;
  std::size_t max_states = std::size_t{1} << 22;
};

struct MultiPileValue {
  Rational value;
  std::size_t visited_states;
};

// Exact win probability for the player to move, by memoized recursion.
// A position with no legal move anywhere is a loss (value 0). Throws
// ValidationError on a pile-count mismatch and ResourceLimitError when the
// memo grows past options.max_states.
MultiPileValue multipile_value(const MultiPileGame& game, const PilePosition& pos, const MultiPileOptions& options = {});

}  // namespace randsub
