#pragma once

#include <compare>
#include <vector>

#include "triplebranch/modular.hpp"

namespace tb {

// The group Z/n1 x Z/n2 with n2 | n1 (cyclic iff n2 == 1). Every abelian
// group generated by two elements has this form, and that covers all the
// Galois groups this project meets.
struct AbelianGroupShape {
    long long n1 = 1;
    long long n2 = 1;

    long long order() const { return n1 * n2; }
    long long exponent() const { return n1; }
    bool cyclic() const { return n2 == 1; }

    auto operator<=>(const AbelianGroupShape&) const = default;
};

AbelianGroupShape make_shape(long long n1, long long n2);

struct GroupElement {
    long long x1 = 0;
    long long x2 = 0;

    bool is_identity() const { return x1 == 0 && x2 == 0; }

    auto operator<=>(const GroupElement&) const = default;
};

GroupElement reduce(const AbelianGroupShape& shape, long long x1, long long x2);
GroupElement add(const AbelianGroupShape& shape, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroupShape& shape, const GroupElement& a);
GroupElement scalar_mul(const AbelianGroupShape& shape, long long k, const GroupElement& a);
long long order_of(const AbelianGroupShape& shape, const GroupElement& a);
std::vector<GroupElement> all_elements(const AbelianGroupShape& shape);

// A subgroup given by its full (sorted) element set; the groups here are
// tiny, so explicit sets beat cleverness.
struct Subgroup {
    std::vector<GroupElement> elements;  // sorted, contains the identity

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const GroupElement& g) const;

    auto operator<=>(const Subgroup&) const = default;
};

Subgroup trivial_subgroup();
Subgroup subgroup_generated_by(const AbelianGroupShape& shape,
                               const std::vector<GroupElement>& gens);

// Automorphisms realized as 2x2 integer matrices acting componentwise,
// filtered to bijections.
struct Automorphism {
    long long a = 1, b = 0, c = 0, d = 1;
    GroupElement apply(const AbelianGroupShape& shape, const GroupElement& g) const;
};

std::vector<Automorphism> automorphisms(const AbelianGroupShape& shape);

// G/H expressed back in Z/n1' x Z/n2' coordinates. Quotients of rank-2
// groups are again rank <= 2; needing more generators is impossible and
// is asserted.
class QuotientGroup {
  public:
    QuotientGroup(const AbelianGroupShape& parent, const Subgroup& H);

    const AbelianGroupShape& shape() const { return shape_; }
    GroupElement project(const GroupElement& g) const;

  private:
    AbelianGroupShape parent_;
    Subgroup subgroup_;
    AbelianGroupShape shape_;
    std::vector<GroupElement> coset_rep_;     // indexed by parent element
    std::vector<GroupElement> coordinates_;   // indexed by parent element
    size_t index_of(const GroupElement& g) const;
};

}  // namespace tb
