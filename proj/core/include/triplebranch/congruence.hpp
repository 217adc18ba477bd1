#pragma once

#include <compare>
#include <vector>

#include "triplebranch/newton.hpp"

namespace tb {

// A set of primes cut out by congruence conditions: the units in
// `residues` mod `modulus`. Primes dividing the modulus are excluded from
// membership claims; they do not affect the density.
struct CongruenceSet {
    long long modulus = 1;
    std::vector<long long> residues;  // sorted subset of units(modulus)

    bool contains(long long u) const;
    bool full() const;

    auto operator<=>(const CongruenceSet&) const = default;
};

CongruenceSet make_congruence_set(long long modulus, std::vector<long long> residues);

// |residues| / phi(modulus), exactly; equals the natural density of the
// represented set of primes by Dirichlet's theorem.
Rational density(const CongruenceSet& cs);

// The same prime set expressed mod a multiple of the modulus.
CongruenceSet lift(const CongruenceSet& cs, long long new_modulus);

// Smallest divisor of the modulus that expresses the same set.
CongruenceSet reduce_modulus(const CongruenceSet& cs);

// Union after lifting everything to the lcm of the moduli.
CongruenceSet union_sets(const std::vector<CongruenceSet>& sets);
CongruenceSet intersect_sets(const std::vector<CongruenceSet>& sets);

// Units u mod the group exponent for which newton_polygon(a, u) is
// supersingular.
CongruenceSet supersingular_residues(const InertiaType& a);

// Union over a genus's full cover list, cross-checked against the stored
// cover count for 5 <= g <= 10.
struct SgResult {
    CongruenceSet primes;
    Rational natural_density;
};
SgResult sg_set(int genus, const std::vector<std::pair<InertiaType, CongruenceSet>>& covers);

// Expected number of inertia classes per genus (the stored golden
// enumeration); empty optional outside the tabulated range.
long long expected_cover_count(int genus);

}  // namespace tb
