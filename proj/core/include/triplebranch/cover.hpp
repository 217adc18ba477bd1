#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "triplebranch/group.hpp"

namespace tb {

// Ramification data [c0, c1, cinf, s] of an abelian cover of the line
// branched at {0, 1, oo}: inertia orders at the three points, sorted
// c0 >= c1 >= cinf, and the index s of I_0 in the Galois group.
struct RamificationType {
    long long c0 = 1;
    long long c1 = 1;
    long long cinf = 1;
    long long s = 1;

    long long r() const;      // gcd(c0, c1, cinf)
    long long e01() const;    // gcd(c0, c1) / r
    long long e0inf() const;  // gcd(c0, cinf) / r
    long long e1inf() const;  // gcd(c1, cinf) / r
    long long group_order() const { return s * c0; }

    auto operator<=>(const RamificationType&) const = default;
};

// Throws with a reason when the tuple violates the structural constraints
// (ordering, the e_{i,j} product relations, pairwise coprimality, s | c1,
// s | cinf).
void validate_ramification(const RamificationType& z);
bool is_valid_ramification(const RamificationType& z);

// Genus from Riemann-Hurwitz; throws when the right-hand side is not an
// even nonnegative integer (the tuple is inconsistent).
long long genus_of_ramification(const RamificationType& z);

// Complete, duplicate-free list of ramification types of genus g, sorted
// by (s, c0, c1, cinf).
std::vector<RamificationType> enumerate_ramification_types(long long genus);

// Z/c0 for s = 1; Z/c0 x Z/s when s | cinf | c1 | c0; anything else is
// outside the two-generator regime and throws.
AbelianGroupShape group_shape(const RamificationType& z);

// Canonical generators of inertia (a0, a1, ainf): orders (c0, c1, cinf),
// the three generate the group, and a0 + a1 + ainf = 0.
struct InertiaType {
    AbelianGroupShape shape;
    std::array<GroupElement, 3> gens;

    const GroupElement& a0() const { return gens[0]; }
    const GroupElement& a1() const { return gens[1]; }
    const GroupElement& ainf() const { return gens[2]; }
    std::array<long long, 3> orders() const;

    auto operator<=>(const InertiaType&) const = default;
};

// Validating constructors. The cyclic overload takes Z/m exponents.
InertiaType make_inertia(const AbelianGroupShape& shape, const GroupElement& a0,
                         const GroupElement& a1, const GroupElement& ainf);
InertiaType make_cyclic_inertia(long long m, long long a0, long long a1, long long ainf);

bool is_valid_inertia(const AbelianGroupShape& shape, const GroupElement& a0,
                      const GroupElement& a1, const GroupElement& ainf,
                      std::string* why = nullptr);

// Ramification type recovered from the generator orders (s = |G| / c0).
RamificationType ramification_of(const InertiaType& a);

// Lexicographically minimal representative of the equivalence class
// (group automorphisms composed with permutations of branch points whose
// inertia orders agree), normalized so a0 = 1 resp. (1, 0). Idempotent.
InertiaType canonicalize_inertia(const InertiaType& a);

// Equivalence-class representatives compatible with z, sorted; empty when
// the ramification type admits no inertia type.
std::vector<InertiaType> enumerate_inertia_types(const RamificationType& z);

// Genus of the cover itself (Riemann-Hurwitz over the full group).
long long genus_of_inertia(const InertiaType& a);

// Genus of the quotient curve X/H, from the inertia images in G/H.
long long genus_of_quotient(const InertiaType& a, const Subgroup& H);

std::string to_string(const RamificationType& z);
std::string to_string(const InertiaType& a);

}  // namespace tb
