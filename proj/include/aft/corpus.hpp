#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aft/adf.hpp"
#include "aft/lp.hpp"

namespace aft::corpus {

/// Deterministic generator used by every seeded corpus.
using Rng = std::mt19937_64;

/// The 22 distinct rules over atoms {p, q} whose body is a set of at most
/// two literals from {p, q, not p, not q}.
const std::vector<lp::Rule>& two_atom_rules();

/// Number of normal programs over {p, q} with bodies of size <= 2, taken
/// as sets of rules (each subset of two_atom_rules() once): 2^22.
std::uint64_t two_atom_program_count();

/// The program whose rules are the members of two_atom_rules() selected by
/// the bits of `index`.
lp::LogicProgram two_atom_program(std::uint64_t index);

/// Program over the first `atoms` names of p, q, r, s, t, ... with between
/// one and 2 * atoms rules and bodies of up to three literals.
lp::LogicProgram random_program(Rng& rng, std::size_t atoms);

/// `count` programs, each over a uniformly chosen atom count in
/// [min_atoms, max_atoms].
std::vector<lp::LogicProgram> random_programs(std::uint64_t seed, std::size_t count, std::size_t min_atoms,
                                              std::size_t max_atoms);

/// ADF with `statements` statements named a, b, c, ... and random
/// conditions of depth at most three.
adf::Adf random_adf(Rng& rng, std::size_t statements);

std::vector<adf::Adf> random_adfs(std::uint64_t seed, std::size_t count, std::size_t max_statements);

/// One representative of every lattice with 1 to 5 elements up to
/// isomorphism (ten in total).
std::vector<FiniteLattice> small_lattices();

/// Operator with a uniformly random table.
LatticeOperator random_operator(Rng& rng, const FiniteLattice& lattice);

/// Uniformly random subset of the elements.
std::vector<Element> random_subset(Rng& rng, const FiniteLattice& lattice);

}  // namespace aft::corpus
