#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "triplebranch/cover.hpp"

namespace tb {

// A character of Z/n1 x Z/n2, written additively as a pair of exponents.
// Evaluation on a group element is the exponent t(g) = <j1 x1/n1 + j2 x2/n2>,
// an exact rational in [0,1).
struct Character {
    AbelianGroupShape shape;
    long long j1 = 0;
    long long j2 = 0;

    bool trivial() const { return j1 == 0 && j2 == 0; }
    long long order() const;  // lcm of the component additive orders
    Rational exponent_on(const GroupElement& g) const;
    Character times(long long p) const;
    Character conjugate() const;

    auto operator<=>(const Character&) const = default;
};

std::vector<Character> nontrivial_characters(const AbelianGroupShape& shape);

struct SignatureEntry {
    Character chi;
    int f = 0;              // dimension of the chi-eigenspace of holomorphic differentials
    bool degenerate = false;  // some t_b vanishes: chi kills one inertia generator
};

// Eigenspace dimensions f_chi for every nontrivial character; the total is
// the genus, and on non-degenerate characters f_chi + f_{conj chi} = 1.
struct SignatureType {
    AbelianGroupShape shape;
    std::vector<SignatureEntry> entries;  // canonical character order

    long long genus() const;
    const SignatureEntry& at(const Character& chi) const;
};

SignatureType signature(const InertiaType& a);

// (S_0, S_1): non-degenerate characters with f = 0 resp. f = 1.
std::pair<std::vector<Character>, std::vector<Character>> s_epsilon_sets(const SignatureType& f);

// Symmetric multiset of Frobenius slopes with multiplicities; height 2g,
// total rise g. Slopes are exact rationals in [0,1].
struct NewtonPolygon {
    std::vector<std::pair<Rational, long long>> slopes;  // ascending, multiplicities > 0

    long long height() const;
    Rational total_rise() const;
    bool empty() const { return slopes.empty(); }
    bool symmetric() const;
    long long multiplicity_of(const Rational& slope) const;

    auto operator<=>(const NewtonPolygon&) const = default;
};

NewtonPolygon polygon_from_multiset(std::vector<std::pair<Rational, long long>> raw);

// p-divisible group notation: "(G_{0,1} (+) G_{1,0})^a (+) G_{1,1}^b (+) ...".
std::string display(const NewtonPolygon& np);

bool is_supersingular(const NewtonPolygon& np);  // every slope 1/2 (vacuous when empty)
bool is_ordinary(const NewtonPolygon& np);       // slopes contained in {0, 1}

// Shimura-Taniyama: each Frobenius orbit r of non-degenerate characters
// contributes the slope #(r cap S_1) / #r with multiplicity #r. p must be
// prime to the group order ("good reduction"); it is read mod the exponent.
NewtonPolygon newton_polygon(const InertiaType& a, const Residue& p);
NewtonPolygon newton_polygon(const InertiaType& a, long long p);

}  // namespace tb
