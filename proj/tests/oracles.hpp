#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these share code with the library beyond the FusionRule container.

#include "fusion/fusion_rule.hpp"

#include <vector>

namespace oracle {

// SU(2)_k fusion coefficients from the Verlinde formula with
// S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1)/(k+2)). Labels are 2j = 0..k.
std::vector<fusion::Multiplicity> su2k_verlinde(std::size_t k);

// SO(8)_2 fusion coefficients from the Kac-Peterson S-matrix of D4 at level 2
// and the Verlinde formula. Weights are ordered by quantum dimension and then
// lexicographically in orthogonal coordinates.
std::vector<fusion::Multiplicity> so8_level2_verlinde();

// Literal reading of the acyclicity definition: search every label sequence
// (i_1, ..., i_n), n <= rank, i_1 != vacuum, for one with
// N_{i_k, dual i_k}^{i_{k+1}} > 0 for all k and i_{n+1} = i_1.
bool acyclic_by_sequences(const fusion::FusionRule &rule);

// Descending central series on dense boolean label masks, returning the rank
// of each term. Stops at rank one or after the first repeated term, so the
// rule is nilpotent iff the last entry is 1.
std::vector<std::size_t> central_series_ranks(const fusion::FusionRule &rule);

} // namespace oracle
