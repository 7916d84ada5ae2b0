#pragma once

#include "fusion/fusion_rule.hpp"
#include "fusion/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fusion {

/// Pointed rule of a group: x_g x_h = x_{gh}, dual = inverse.
FusionRule pointed(const FiniteGroup &group);

/// SU(2)_k fusion rule on doubled spins a = 0..k, labelled "0", "1/2", "1", ...
/// N_{ab}^c = 1 iff a + b + c is even and |a - b| <= c <= min(a + b, 2k - a - b).
FusionRule su2k(std::size_t k);

/// Named fixtures: trivial, semion, ising, fibonacci, toric, three_fermion, so8_2.
/// Throws LookupError listing the catalogue on an unknown name.
FusionRule named_fixture(std::string_view name);
std::vector<std::string> fixture_catalogue();

/// Fusion rule of the Drinfeld double D(G), i.e. of Z(Vec_G). Simple labels
/// are pairs (conjugacy class, irreducible character of the centralizer of
/// the class representative); see drinfeld_double.cpp for the construction.
///
/// Throws CapacityError above max_order and NumericalError if any raw
/// multiplicity is further than `tolerance` from a non-negative integer.
FusionRule drinfeld_double(const FiniteGroup &group, double tolerance = 1e-6,
                           std::size_t max_order = kDefaultGroupCap);

/// Number of simple objects of D(G) counted as G-orbits of commuting pairs
/// under simultaneous conjugation, i.e. #{commuting triples} / |G|.
std::size_t double_rank_from_commuting_triples(const FiniteGroup &group);

} // namespace fusion
