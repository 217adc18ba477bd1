#pragma once

#include <compare>
#include <vector>

#include "triplebranch/rational.hpp"

namespace tb {

// A residue class value mod modulus, kept reduced into [0, modulus).
struct Residue {
    long long value = 0;
    long long modulus = 1;

    auto operator<=>(const Residue&) const = default;
};

Residue residue(long long value, long long modulus);

// Units mod M, sorted ascending. units(1) = {0} (degenerate modulus).
std::vector<long long> units(long long modulus);

long long euler_phi(long long modulus);

bool is_unit(long long value, long long modulus);

// Least k >= 1 with u^k = 1; rejects non-units.
long long mult_order(const Residue& u);
long long mult_order(long long value, long long modulus);

// Additive order of j in Z/M, i.e. M / gcd(M, j).
long long additive_order(long long j, long long modulus);

// Orbit of the multiplication-by-p map on nonzero residues mod M.
// All elements share one additive order; the canonical key is the
// minimum element.
struct FrobeniusOrbit {
    long long modulus = 1;
    std::vector<long long> elements;  // sorted ascending, nonempty

    long long representative() const { return elements.front(); }
    long long size() const { return static_cast<long long>(elements.size()); }
    bool contains(long long j) const;

    auto operator<=>(const FrobeniusOrbit&) const = default;
};

// Partition of {1, ..., M-1} into x p orbits, sorted by representative.
// p must be a unit mod M.
std::vector<FrobeniusOrbit> frobenius_orbits(long long modulus, long long p);

// True iff negation mod M maps the orbit onto itself.
bool is_self_dual(const FrobeniusOrbit& orbit);

}  // namespace tb
