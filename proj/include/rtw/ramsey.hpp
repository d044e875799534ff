#pragma once

#include <optional>
#include <string>

#include "rtw/bitset_graph.hpp"
#include "rtw/model.hpp"

namespace rtw {

// Minimum edge-color string over all vertex permutations; pairs are listed
// in colex order (grouped by the larger endpoint), so each newly placed
// vertex appends a contiguous segment and prefix pruning applies.
std::string canonical_form(const ColoredGraph& g);

ColoredGraph coloring_from_canonical(int n, const std::string& s);

// Canonical key of a weighted colored graph: vertex-color chars interleaved
// with two-char pair symbols ('0.' zero, 'bh'/'bf'/'rh'/'rf' otherwise),
// minimized over all vertex permutations. Weight-0 pairs drop their color.
std::string wccg_canonical_key(const WCCG& g);

BitGraph color_subgraph(const ColoredGraph& g, Color c);
BitGraph underlying_graph(const ColoredGraph& g);

bool has_mono_clique(const ColoredGraph& g, Color c, int k);

// True when the complete coloring avoids both a red K_p and a blue K_q.
bool is_ramsey_graph(const ColoredGraph& g, int p_red, int q_blue);

// Complete colorings of K_n with no red K_p and no blue K_q, one canonical
// representative per isomorphism class, sorted by canonical string.
std::vector<ColoredGraph> enumerate_ramsey(int n, int p_red, int q_blue);
size_t count_ramsey(int n, int p_red, int q_blue);

// Exhaustive 2^C(n,2) filter, kept as the pruning-soundness oracle (n <= 6).
std::vector<ColoredGraph> enumerate_ramsey_brute(int n, int p_red, int q_blue);

// Circulant coloring of K_{3k-1}: pair {i,j} is blue iff the cyclic
// difference lies in {k,...,2k-1}. k=2 gives the pentagon-vs-pentagon
// coloring of K_5; k=3 gives the 3-regular blue graph on 8 vertices.
ColoredGraph nice_coloring(int k);

ColoredGraph pentagonlike();

// The three colorings of K_8 with no red K_4 and no blue K_3: the circulant
// one plus the graphs obtained by recoloring one, then two independent blue
// diagonals red.
std::vector<ColoredGraph> gamma8_family();

}  // namespace rtw
