#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bruhat/matrix.hpp"

namespace bruhat {

/// Random member of the class of `start`: a walk of `steps` uniformly chosen
/// interchanges in either direction. Interchanges connect every class, so
/// long walks reach every member.
template <class Rng>
[[nodiscard]] BinaryMatrix random_walk_member(const BinaryMatrix& start, std::size_t steps, Rng& rng) {
  BinaryMatrix current = start;
  for (std::size_t s = 0; s < steps; ++s) {
    auto moves = find_interchanges(current, Direction::ItoL);
    const auto back = find_interchanges(current, Direction::LtoI);
    moves.insert(moves.end(), back.begin(), back.end());
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    current = apply_interchange(current, moves[pick(rng)]);
  }
  return current;
}

}  // namespace bruhat
