#include "triplebranch/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tb {

AbelianGroupShape make_shape(long long n1, long long n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("make_shape: orders must be positive");
    if (n1 % n2 != 0) throw std::invalid_argument("make_shape: n2 must divide n1");
    return AbelianGroupShape{n1, n2};
}

GroupElement reduce(const AbelianGroupShape& shape, long long x1, long long x2) {
    long long a = x1 % shape.n1;
    if (a < 0) a += shape.n1;
    long long b = x2 % shape.n2;
    if (b < 0) b += shape.n2;
    return GroupElement{a, b};
}

GroupElement add(const AbelianGroupShape& shape, const GroupElement& a, const GroupElement& b) {
    return reduce(shape, a.x1 + b.x1, a.x2 + b.x2);
}

GroupElement neg(const AbelianGroupShape& shape, const GroupElement& a) {
    return reduce(shape, -a.x1, -a.x2);
}

GroupElement scalar_mul(const AbelianGroupShape& shape, long long k, const GroupElement& a) {
    return reduce(shape, k * a.x1, k * a.x2);
}

long long order_of(const AbelianGroupShape& shape, const GroupElement& a) {
    return std::lcm(additive_order(a.x1, shape.n1), additive_order(a.x2, shape.n2));
}

std::vector<GroupElement> all_elements(const AbelianGroupShape& shape) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(shape.order()));
    for (long long x1 = 0; x1 < shape.n1; ++x1)
        for (long long x2 = 0; x2 < shape.n2; ++x2)
            out.push_back(GroupElement{x1, x2});
    return out;
}

bool Subgroup::contains(const GroupElement& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup trivial_subgroup() {
    return Subgroup{{GroupElement{0, 0}}};
}

Subgroup subgroup_generated_by(const AbelianGroupShape& shape,
                               const std::vector<GroupElement>& gens) {
    std::set<GroupElement> closure{GroupElement{0, 0}};
    std::vector<GroupElement> frontier{GroupElement{0, 0}};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier) {
            for (const GroupElement& gen : gens) {
                GroupElement h = add(shape, g, reduce(shape, gen.x1, gen.x2));
                if (closure.insert(h).second) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    Subgroup H;
    H.elements.assign(closure.begin(), closure.end());
    return H;
}

GroupElement Automorphism::apply(const AbelianGroupShape& shape, const GroupElement& g) const {
    return reduce(shape, a * g.x1 + b * g.x2, c * g.x1 + d * g.x2);
}

std::vector<Automorphism> automorphisms(const AbelianGroupShape& shape) {
    // Candidate endomorphisms: e1 -> (a, c), e2 -> (b, d). Well-definedness
    // forces b to be a multiple of n1/n2; c is free because n2 | n1.
    const long long step = shape.n1 / shape.n2;
    std::vector<Automorphism> out;
    const auto elems = all_elements(shape);
    for (long long a = 0; a < shape.n1; ++a) {
        for (long long b = 0; b < shape.n1; b += step) {
            for (long long c = 0; c < shape.n2; ++c) {
                for (long long d = 0; d < shape.n2; ++d) {
                    const Automorphism phi{a, b, c, d};
                    std::set<GroupElement> image;
                    bool bijective = true;
                    for (const GroupElement& g : elems) {
                        if (!image.insert(phi.apply(shape, g)).second) {
                            bijective = false;
                            break;
                        }
                    }
                    if (bijective) out.push_back(phi);
                }
            }
        }
    }
    return out;
}

namespace {

std::vector<GroupElement> sorted_elements(const AbelianGroupShape& shape) {
    auto elems = all_elements(shape);
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

QuotientGroup::QuotientGroup(const AbelianGroupShape& parent, const Subgroup& H)
    : parent_(parent), subgroup_(H) {
    for (const GroupElement& h : H.elements)
        if (h != reduce(parent, h.x1, h.x2) )
            throw std::invalid_argument("QuotientGroup: subgroup element not reduced");

    const auto elems = sorted_elements(parent);
    const long long n = parent.order();
    coset_rep_.assign(static_cast<size_t>(n), GroupElement{});
    coordinates_.assign(static_cast<size_t>(n), GroupElement{});

    // Canonical coset representative: minimum element of g + H.
    std::vector<GroupElement> reps;
    for (const GroupElement& g : elems) {
        GroupElement rep = g;
        for (const GroupElement& h : H.elements) rep = std::min(rep, add(parent, g, h));
        coset_rep_[index_of(g)] = rep;
        if (rep == g) reps.push_back(g);
    }

    const long long q_order = n / H.order();
    if (static_cast<long long>(reps.size()) != q_order)
        throw std::logic_error("QuotientGroup: coset count mismatch");

    auto coset_order = [&](const GroupElement& rep) {
        long long k = 1;
        GroupElement acc = coset_rep_[index_of(rep)];
        while (!acc.is_identity()) {
            acc = coset_rep_[index_of(add(parent, acc, rep))];
            ++k;
        }
        return k;
    };

    long long exp = 1;
    GroupElement g1{0, 0};
    for (const GroupElement& rep : reps) {
        const long long k = coset_order(rep);
        if (k > exp) {
            exp = k;
            g1 = rep;
        }
    }
    const long long n2 = q_order / exp;
    if (exp * n2 != q_order || exp % n2 != 0)
        throw std::logic_error("QuotientGroup: quotient needs more than two generators");
    shape_ = AbelianGroupShape{exp, n2};

    // Complete g1 to a basis: any coset of order n2 meeting <g1> trivially.
    GroupElement g2{0, 0};
    bool found = n2 == 1;
    if (!found) {
        std::set<GroupElement> span1;
        {
            GroupElement acc{0, 0};
            for (long long i = 0; i < exp; ++i) {
                span1.insert(acc);
                acc = coset_rep_[index_of(add(parent, acc, g1))];
            }
        }
        for (const GroupElement& rep : reps) {
            if (coset_order(rep) != n2) continue;
            bool trivial_meet = true;
            GroupElement acc = rep;
            for (long long i = 1; i < n2; ++i) {
                if (span1.count(acc)) {
                    trivial_meet = false;
                    break;
                }
                acc = coset_rep_[index_of(add(parent, acc, rep))];
            }
            if (trivial_meet) {
                g2 = rep;
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::logic_error("QuotientGroup: no rank-2 basis found");

    // Coordinate table: every coset must be i*g1 + j*g2 exactly once.
    std::set<GroupElement> assigned;
    GroupElement acc1{0, 0};
    for (long long i = 0; i < shape_.n1; ++i) {
        GroupElement acc = acc1;
        for (long long j = 0; j < shape_.n2; ++j) {
            const GroupElement rep = coset_rep_[index_of(acc)];
            if (!assigned.insert(rep).second)
                throw std::logic_error("QuotientGroup: basis does not span freely");
            coordinates_[index_of(rep)] = GroupElement{i, j};
            acc = coset_rep_[index_of(add(parent, acc, g2))];
        }
        acc1 = coset_rep_[index_of(add(parent, acc1, g1))];
    }
    if (static_cast<long long>(assigned.size()) != q_order)
        throw std::logic_error("QuotientGroup: coordinate table incomplete");
}

size_t QuotientGroup::index_of(const GroupElement& g) const {
    return static_cast<size_t>(g.x1 * parent_.n2 + g.x2);
}

GroupElement QuotientGroup::project(const GroupElement& g) const {
    const GroupElement r = reduce(parent_, g.x1, g.x2);
    return coordinates_[index_of(coset_rep_[index_of(r)])];
}

}  // namespace tb
