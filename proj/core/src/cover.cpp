#include "triplebranch/cover.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tb {

long long RamificationType::r() const {
    return std::gcd(c0, std::gcd(c1, cinf));
}

long long RamificationType::e01() const { return std::gcd(c0, c1) / r(); }
long long RamificationType::e0inf() const { return std::gcd(c0, cinf) / r(); }
long long RamificationType::e1inf() const { return std::gcd(c1, cinf) / r(); }

void validate_ramification(const RamificationType& z) {
    if (z.cinf < 2 || z.s < 1)
        throw std::invalid_argument("ramification type: need cinf >= 2 and s >= 1");
    if (!(z.c0 >= z.c1 && z.c1 >= z.cinf))
        throw std::invalid_argument("ramification type: inertia orders must be sorted");
    const long long r = z.r();
    const long long e01 = z.e01(), e0inf = z.e0inf(), e1inf = z.e1inf();
    if (z.c0 != r * e01 * e0inf || z.c1 != r * e01 * e1inf || z.cinf != r * e0inf * e1inf)
        throw std::invalid_argument("ramification type: e_{i,j} product relations fail");
    if (std::gcd(e01, e0inf) != 1 || std::gcd(e01, e1inf) != 1 || std::gcd(e0inf, e1inf) != 1)
        throw std::invalid_argument("ramification type: e_{i,j} not pairwise coprime");
    if (z.c1 % z.s != 0 || z.cinf % z.s != 0)
        throw std::invalid_argument("ramification type: s must divide c1 and cinf");
}

bool is_valid_ramification(const RamificationType& z) {
    try {
        validate_ramification(z);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

long long genus_of_ramification(const RamificationType& z) {
    validate_ramification(z);
    // 2g - 2 = s (c0 - (1 + c0/c1 + c0/cinf)), cleared of denominators.
    const long long num = z.s * (z.c0 * z.c1 * z.cinf - z.c1 * z.cinf - z.c0 * z.cinf - z.c0 * z.c1);
    const long long den = z.c1 * z.cinf;
    if (num % den != 0)
        throw std::invalid_argument("ramification type: genus is not an integer");
    const long long two_g_minus_2 = num / den;
    if (two_g_minus_2 % 2 != 0)
        throw std::invalid_argument("ramification type: 2g-2 is odd");
    if (two_g_minus_2 < -2)
        throw std::invalid_argument("ramification type: negative genus");
    return (two_g_minus_2 + 2) / 2;
}

std::vector<RamificationType> enumerate_ramification_types(long long genus) {
    if (genus < 2) throw std::invalid_argument("enumerate_ramification_types: genus must be >= 2");
    // For an admissible tuple, c0 (1 - 1/c1 - 1/cinf) = 1 + (2g-2)/s and the
    // parenthesis is at least 1/6 whenever positive, so c0 <= 6(2g-2) + 6.
    const long long bound = 6 * (2 * genus - 2) + 6;
    std::vector<RamificationType> out;
    for (long long cinf = 2; cinf <= bound; ++cinf) {
        for (long long c1 = cinf; c1 <= bound; ++c1) {
            for (long long c0 = c1; c0 <= bound; ++c0) {
                const long long bracket_num =
                    c0 * c1 * cinf - c1 * cinf - c0 * cinf - c0 * c1;
                if (bracket_num <= 0) continue;
                const long long num = (2 * genus - 2) * c1 * cinf;
                if (num % bracket_num != 0) continue;
                const long long s = num / bracket_num;
                if (s < 1 || c1 % s != 0 || cinf % s != 0) continue;
                RamificationType z{c0, c1, cinf, s};
                if (!is_valid_ramification(z)) continue;
                if (genus_of_ramification(z) != genus) continue;
                out.push_back(z);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RamificationType& a, const RamificationType& b) {
        return std::tie(a.s, a.c0, a.c1, a.cinf) < std::tie(b.s, b.c0, b.c1, b.cinf);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AbelianGroupShape group_shape(const RamificationType& z) {
    validate_ramification(z);
    if (z.s == 1) return make_shape(z.c0, 1);
    if (z.cinf % z.s != 0 || z.c1 % z.cinf != 0 || z.c0 % z.c1 != 0)
        throw std::invalid_argument(
            "group_shape: unsupported group shape (s > 1 without the divisibility chain "
            "s | cinf | c1 | c0)");
    return make_shape(z.c0, z.s);
}

std::array<long long, 3> InertiaType::orders() const {
    return {order_of(shape, gens[0]), order_of(shape, gens[1]), order_of(shape, gens[2])};
}

bool is_valid_inertia(const AbelianGroupShape& shape, const GroupElement& a0,
                      const GroupElement& a1, const GroupElement& ainf, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!add(shape, add(shape, a0, a1), ainf).is_identity())
        return fail("inertia generators do not multiply to the identity");
    if (order_of(shape, a0) < 2 || order_of(shape, a1) < 2 || order_of(shape, ainf) < 2)
        return fail("a branch point with trivial inertia is not branched");
    if (subgroup_generated_by(shape, {a0, a1}).order() != shape.order())
        return fail("inertia generators do not generate the group");
    return true;
}

InertiaType make_inertia(const AbelianGroupShape& shape, const GroupElement& a0,
                         const GroupElement& a1, const GroupElement& ainf) {
    const GroupElement r0 = reduce(shape, a0.x1, a0.x2);
    const GroupElement r1 = reduce(shape, a1.x1, a1.x2);
    const GroupElement ri = reduce(shape, ainf.x1, ainf.x2);
    std::string why;
    if (!is_valid_inertia(shape, r0, r1, ri, &why))
        throw std::invalid_argument("make_inertia: " + why);
    return InertiaType{shape, {r0, r1, ri}};
}

InertiaType make_cyclic_inertia(long long m, long long a0, long long a1, long long ainf) {
    const AbelianGroupShape shape = make_shape(m, 1);
    return make_inertia(shape, GroupElement{a0 % m, 0}, GroupElement{a1 % m, 0},
                        GroupElement{ainf % m, 0});
}

RamificationType ramification_of(const InertiaType& a) {
    auto ord = a.orders();
    std::sort(ord.begin(), ord.end(), std::greater<long long>());
    return RamificationType{ord[0], ord[1], ord[2], a.shape.order() / ord[0]};
}

namespace {

constexpr int kPermutations[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

bool orders_descending(const AbelianGroupShape& shape, const std::array<GroupElement, 3>& t) {
    const long long o0 = order_of(shape, t[0]);
    const long long o1 = order_of(shape, t[1]);
    const long long o2 = order_of(shape, t[2]);
    return o0 >= o1 && o1 >= o2;
}

bool leading_normalized(const GroupElement& g) {
    return g.x1 == 1 && g.x2 == 0;
}

}  // namespace

InertiaType canonicalize_inertia(const InertiaType& a) {
    const AbelianGroupShape& shape = a.shape;
    bool found = false;
    std::array<GroupElement, 3> best{};
    for (const Automorphism& phi : automorphisms(shape)) {
        const std::array<GroupElement, 3> image{phi.apply(shape, a.gens[0]),
                                                phi.apply(shape, a.gens[1]),
                                                phi.apply(shape, a.gens[2])};
        for (const auto& perm : kPermutations) {
            const std::array<GroupElement, 3> cand{image[perm[0]], image[perm[1]],
                                                   image[perm[2]]};
            if (!orders_descending(shape, cand)) continue;
            if (!leading_normalized(cand[0])) continue;
            if (!found || cand < best) {
                best = cand;
                found = true;
            }
        }
    }
    if (!found)
        throw std::logic_error("canonicalize_inertia: no normalized representative found");
    return InertiaType{shape, best};
}

std::vector<InertiaType> enumerate_inertia_types(const RamificationType& z) {
    const AbelianGroupShape shape = group_shape(z);
    const GroupElement a0{1, 0};  // order c0 = n1; every class has such a representative
    std::set<InertiaType> classes;
    for (const GroupElement& a1 : all_elements(shape)) {
        if (order_of(shape, a1) != z.c1) continue;
        const GroupElement ainf = neg(shape, add(shape, a0, a1));
        if (order_of(shape, ainf) != z.cinf) continue;
        if (subgroup_generated_by(shape, {a0, a1}).order() != shape.order()) continue;
        classes.insert(canonicalize_inertia(InertiaType{shape, {a0, a1, ainf}}));
    }
    return {classes.begin(), classes.end()};
}

long long genus_of_inertia(const InertiaType& a) {
    return genus_of_quotient(a, trivial_subgroup());
}

long long genus_of_quotient(const InertiaType& a, const Subgroup& H) {
    const QuotientGroup q(a.shape, H);
    const long long n = q.shape().order();
    // 2g' - 2 = -2|G/H| + sum_b (|G/H| / c_b)(c_b - 1), c_b the image orders.
    long long two_g_minus_2 = -2 * n;
    for (const GroupElement& g : a.gens) {
        const long long cb = order_of(q.shape(), q.project(g));
        two_g_minus_2 += (n / cb) * (cb - 1);
    }
    if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
        throw std::logic_error("genus_of_quotient: Riemann-Hurwitz gave a non-genus");
    return (two_g_minus_2 + 2) / 2;
}

std::string to_string(const RamificationType& z) {
    std::ostringstream os;
    os << '[' << z.c0 << ',' << z.c1 << ',' << z.cinf << ',' << z.s << ']';
    return os.str();
}

std::string to_string(const InertiaType& a) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < 3; ++i) {
        if (i) os << ',';
        if (a.shape.cyclic())
            os << a.gens[i].x1;
        else
            os << '(' << a.gens[i].x1 << ',' << a.gens[i].x2 << ')';
    }
    os << ')';
    return os.str();
}

}  // namespace tb
