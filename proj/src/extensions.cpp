#include "randsub/extensions.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "randsub/errors.hpp"

namespace randsub {

Rational dynamic_one_or_all(std::size_t n) {
  Rational a = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    a = 1 - a / 2;
    a.canonicalize();
  }
  return a;
}

Rational dynamic_one_or_all_closed_form(std::size_t n) {
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n);
  Rational r(n % 2 == 0 ? BigInt(1) : BigInt(-1), pow2);
  r.canonicalize();
  Rational out = Rational(2, 3) * (1 - r);
  out.canonicalize();
  return out;
}

Rational take_any(std::size_t n) {
  if (n == 0) return 0;
  Rational sum = 0;  // a_0 + ... + a_{i-1}
  Rational a = 1;    // a_1
  sum += a;
  for (std::size_t i = 2; i <= n; ++i) {
    a = 1 - sum / static_cast<unsigned long>(i);
    a.canonicalize();
    sum += a;
  }
  return a;
}

MultiPileGame::MultiPileGame(std::vector<SubtractionSet> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) throw ValidationError("a multi-pile game needs at least one pile");
  symmetric_ = std::all_of(sets_.begin(), sets_.end(), [&](const auto& s) { return s == sets_.front(); });
}

MultiPileGame parse_multipile(const std::string& text) {
  std::vector<SubtractionSet> sets;
  std::size_t pos = 0;
  while (true) {
    const std::size_t semi = text.find(';', pos);
    sets.push_back(parse_set(text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return MultiPileGame(std::move(sets));
}

PilePosition parse_position(const std::string& text) {
  PilePosition out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (pos == end || ec != std::errc{} || ptr != text.data() + end) {
      throw ValidationError("cannot parse position '" + text + "'");
    }
    out.counts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

class MultiPileSolver {
 public:
  MultiPileSolver(const MultiPileGame& game, const MultiPileOptions& options) : game_(game), options_(options) {}

  Rational solve(std::vector<std::size_t> counts) {
    if (game_.symmetric()) std::sort(counts.begin(), counts.end());
    if (auto it = memo_.find(counts); it != memo_.end()) return it->second;
    if (memo_.size() >= options_.max_states) {
      throw ResourceLimitError("multi-pile memo exceeded " + std::to_string(options_.max_states) + " states");
    }

    // Legal moves per pile.
    std::vector<std::vector<std::uint32_t>> legal(counts.size());
    std::size_t movable = 0, pairs = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      for (auto k : game_.sets()[j].elements()) {
        if (k <= counts[j]) legal[j].push_back(k);
      }
      movable += !legal[j].empty();
      pairs += legal[j].size();
    }

    // Win probability = sum over moves of P(move) * (1 - a(after move)).
    Rational value = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (legal[j].empty()) continue;
      const Rational weight = options_.rule == BoundaryRule::pile_first
                                  ? Rational(1, static_cast<unsigned long>(movable * legal[j].size()))
                                  : Rational(1, static_cast<unsigned long>(pairs));
      for (auto k : legal[j]) {
        std::vector<std::size_t> next = counts;
        next[j] -= k;
        if (game_.symmetric()) std::sort(next.begin(), next.end());
        value += weight * (1 - solve(std::move(next)));
      }
    }
    value.canonicalize();
    memo_.emplace(std::move(counts), value);
    return value;
  }

  std::size_t visited() const { return memo_.size(); }

 private:
  const MultiPileGame& game_;
  const MultiPileOptions& options_;
  std::map<std::vector<std::size_t>, Rational> memo_;
};

}  // namespace

MultiPileValue multipile_value(const MultiPileGame& game, const PilePosition& pos, const MultiPileOptions& options) {
  if (pos.counts.size() != game.piles()) {
    throw ValidationError("position has " + std::to_string(pos.counts.size()) + " piles, game has " +
                          std::to_string(game.piles()));
  }
  MultiPileSolver solver(game, options);
  Rational value = solver.solve(pos.counts);
  return {value, solver.visited()};
}

}  // namespace randsub
