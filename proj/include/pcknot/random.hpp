#pragma once

#include <cstdint>
#include <random>

#include "pcknot/diagram.hpp"
#include "pcknot/moves.hpp"

namespace pcknot {

using Rng = std::mt19937_64;

struct RandomSpec {
  int crossings = 4;
  int components = 1;
  bool flat = false;
  int max_word_length = 2;
};

/// Surface with boundary on 1..max_generators of a, b, c, ... with random w1
/// bits, at least one of them 1.
SurfacePresentation random_surface(Rng& rng, int max_generators = 3);

/// Freely reduced word of length 0..max_length.
Word random_word(Rng& rng, const SurfacePresentation& s, int max_length);

/// Random Gauss sequence, corners, roles, edge words and labelings. Samples
/// with an orientation-reversing component are rejected and redrawn.
LinkDiagram random_diagram(Rng& rng, const SurfacePresentation& s, const RandomSpec& spec);
LinkDiagram random_diagram(std::uint64_t seed, int crossings, const SurfacePresentation& s);

R1Insert random_r1(Rng& rng, const LinkDiagram& d);
R2Insert random_r2(Rng& rng, const LinkDiagram& d);

/// Two bigon insertions that set up a triangle at a random crossing when
/// the side choices line up. Returns the moves and the resulting diagram.
std::pair<std::vector<Move>, LinkDiagram> plant_triangle(Rng& rng, const LinkDiagram& d);

/// A random applicable move. Removals and triangle moves are taken when
/// available; otherwise an insertion is drawn. Planting a triangle may
/// contribute extra moves, so the result is a short sequence.
std::pair<std::vector<Move>, LinkDiagram> random_moves(Rng& rng, const LinkDiagram& d);

}  // namespace pcknot
