#pragma once

#include <compare>
#include <vector>

#include "triplebranch/newton.hpp"

namespace tb {

// Inertia images of a quotient cover X/H -> P^1 before canonicalization;
// some images may be trivial, in which case the quotient is branched at
// fewer than three points and has genus 0.
struct QuotientCover {
    AbelianGroupShape shape;               // shape of G/H
    std::array<GroupElement, 3> images;    // projections of (a0, a1, ainf)
    long long genus = 0;

    bool branched_at_three() const;
};

QuotientCover quotient_cover(const InertiaType& a, const Subgroup& H);

// Canonical inertia type of X/H; throws when the quotient degenerates to
// a cover branched at fewer than three points.
InertiaType quotient_inertia(const InertiaType& a, const Subgroup& H);

// One term of a formal Jacobian decomposition: a cover (cyclic, or rank 2
// for nested non-cyclic pieces) whose Jacobian appears with an integer
// multiplicity. Genus-0 pieces never enter a ledger.
struct LedgerPiece {
    InertiaType inertia;  // canonical

    long long modulus() const { return inertia.shape.exponent(); }
    long long genus() const { return genus_of_inertia(inertia); }
    bool cyclic() const { return inertia.shape.cyclic(); }

    auto operator<=>(const LedgerPiece&) const = default;
};

// Formal integer combination of quotient Jacobians isogenous to Jac(X).
// Negative multiplicities denote quotients; genus balance is enforced at
// construction and slope subtraction is checked at evaluation.
struct JacobianLedger {
    std::vector<std::pair<LedgerPiece, long long>> terms;  // canonical order, mult != 0

    long long genus() const;
    bool empty() const { return terms.empty(); }

    auto operator<=>(const JacobianLedger&) const = default;
};

JacobianLedger make_ledger(std::vector<std::pair<LedgerPiece, long long>> raw_terms,
                           long long expected_genus);

// Kani-Rosen bookkeeping: given subgroups H_1..H_t with pairwise trivial
// intersections whose union is a subgroup K, solve
//   (t-1) Jac(X) + |K| Jac(X/K) ~ sum |H_i| Jac(X/H_i)
// for Jac(X). Requires every aggregated multiplicity on the right to be
// divisible by t-1; anything else signals a wrong subgroup family.
JacobianLedger kani_rosen_ledger(const InertiaType& a, const std::vector<Subgroup>& subgroups);

// The ell+1 order-ell subgroups of the ell-torsion, which must be
// (Z/ell)^2. These are the families used for every non-cyclic case in the
// g <= 10 range.
std::vector<Subgroup> torsion_subgroup_family(const AbelianGroupShape& shape, long long ell);

// Catalog entry point: decompose along the ell-torsion for the smallest
// prime ell dividing n2. Only meaningful for non-cyclic covers.
JacobianLedger standard_ledger(const InertiaType& a);

// Closed-form ledger for z = [2r, 2r, 2, 2] (genus r-1): two copies of the
// cyclic (2r, (1, r, r-1)) cover when r is odd; one copy plus the
// Z/r x Z/2 cover with inertia ((1,0), (-1,-1), (0,1)) when r is even.
JacobianLedger reduce2_ledger(long long r);

// Multiset sum of the pieces' polygons, with checked subtraction for
// negative terms. p is read mod each piece's modulus; its own modulus must
// be a common multiple.
NewtonPolygon newton_from_ledger(const JacobianLedger& ledger, const Residue& p);

}  // namespace tb
