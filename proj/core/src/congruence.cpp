#include "triplebranch/congruence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tb {

bool CongruenceSet::contains(long long u) const {
    long long v = u % modulus;
    if (v < 0) v += modulus;
    return std::binary_search(residues.begin(), residues.end(), v);
}

bool CongruenceSet::full() const {
    return static_cast<long long>(residues.size()) == euler_phi(modulus);
}

CongruenceSet make_congruence_set(long long modulus, std::vector<long long> residues) {
    if (modulus < 1) throw std::invalid_argument("congruence set: modulus must be positive");
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    for (long long r : residues) {
        if (r < 0 || r >= modulus || !is_unit(r, modulus))
            throw std::invalid_argument("congruence set: residues must be units in [0, M)");
    }
    return CongruenceSet{modulus, std::move(residues)};
}

Rational density(const CongruenceSet& cs) {
    return Rational(static_cast<long long>(cs.residues.size()), euler_phi(cs.modulus));
}

CongruenceSet lift(const CongruenceSet& cs, long long new_modulus) {
    if (new_modulus % cs.modulus != 0)
        throw std::invalid_argument("lift: target modulus is not a multiple");
    if (new_modulus == cs.modulus) return cs;
    std::vector<long long> lifted;
    for (long long u : units(new_modulus))
        if (cs.contains(u % cs.modulus)) lifted.push_back(u);
    return CongruenceSet{new_modulus, std::move(lifted)};
}

CongruenceSet reduce_modulus(const CongruenceSet& cs) {
    for (long long d = 1; d <= cs.modulus; ++d) {
        if (cs.modulus % d != 0) continue;
        std::set<long long> projected;
        for (long long r : cs.residues) projected.insert(r % d);
        bool all_units = true;
        for (long long r : projected)
            if (!is_unit(r, d)) all_units = false;
        if (!all_units) continue;
        CongruenceSet candidate{d, {projected.begin(), projected.end()}};
        if (lift(candidate, cs.modulus).residues == cs.residues) return candidate;
    }
    return cs;
}

CongruenceSet union_sets(const std::vector<CongruenceSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("union_sets: empty input");
    long long m = 1;
    for (const CongruenceSet& cs : sets) m = lcm_checked(m, cs.modulus);
    std::set<long long> acc;
    for (const CongruenceSet& cs : sets) {
        const CongruenceSet lifted = lift(cs, m);
        acc.insert(lifted.residues.begin(), lifted.residues.end());
    }
    return CongruenceSet{m, {acc.begin(), acc.end()}};
}

CongruenceSet intersect_sets(const std::vector<CongruenceSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("intersect_sets: empty input");
    long long m = 1;
    for (const CongruenceSet& cs : sets) m = lcm_checked(m, cs.modulus);
    std::vector<long long> acc = lift(sets.front(), m).residues;
    for (size_t i = 1; i < sets.size(); ++i) {
        const CongruenceSet lifted = lift(sets[i], m);
        std::vector<long long> next;
        std::set_intersection(acc.begin(), acc.end(), lifted.residues.begin(),
                              lifted.residues.end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return CongruenceSet{m, std::move(acc)};
}

CongruenceSet supersingular_residues(const InertiaType& a) {
    // The exponent and the order have the same prime divisors, so units mod
    // the exponent are exactly the good-reduction classes.
    const long long m = a.shape.exponent();
    std::vector<long long> ss;
    for (long long u : units(m))
        if (is_supersingular(newton_polygon(a, u))) ss.push_back(u);
    return CongruenceSet{m, std::move(ss)};
}

long long expected_cover_count(int genus) {
    // Inertia equivalence classes over all abelian covers of the given
    // genus (cyclic and not), as pinned by the enumeration golden tests.
    switch (genus) {
        case 5: return 8;
        case 6: return 16;
        case 7: return 14;
        case 8: return 13;
        case 9: return 20;
        case 10: return 22;
        default: return -1;
    }
}

SgResult sg_set(int genus, const std::vector<std::pair<InertiaType, CongruenceSet>>& covers) {
    const long long expected = expected_cover_count(genus);
    if (expected >= 0 && static_cast<long long>(covers.size()) != expected)
        throw std::runtime_error("sg_set: incomplete cover enumeration for genus " +
                                 std::to_string(genus));
    std::vector<CongruenceSet> sets;
    sets.reserve(covers.size());
    for (const auto& [a, cs] : covers) sets.push_back(cs);
    CongruenceSet u = union_sets(sets);
    Rational d = density(u);
    return SgResult{std::move(u), std::move(d)};
}

}  // namespace tb
