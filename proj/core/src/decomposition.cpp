#include "triplebranch/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tb {

bool QuotientCover::branched_at_three() const {
    for (const GroupElement& g : images)
        if (g.is_identity()) return false;
    return true;
}

QuotientCover quotient_cover(const InertiaType& a, const Subgroup& H) {
    const QuotientGroup q(a.shape, H);
    QuotientCover out;
    out.shape = q.shape();
    for (int i = 0; i < 3; ++i) out.images[i] = q.project(a.gens[i]);
    out.genus = genus_of_quotient(a, H);
    return out;
}

InertiaType quotient_inertia(const InertiaType& a, const Subgroup& H) {
    const QuotientCover qc = quotient_cover(a, H);
    if (!qc.branched_at_three())
        throw std::invalid_argument(
            "quotient_inertia: quotient is branched at fewer than three points");
    return canonicalize_inertia(InertiaType{qc.shape, qc.images});
}

long long JacobianLedger::genus() const {
    long long total = 0;
    for (const auto& [piece, mult] : terms) total += mult * piece.genus();
    return total;
}

JacobianLedger make_ledger(std::vector<std::pair<LedgerPiece, long long>> raw_terms,
                           long long expected_genus) {
    std::map<LedgerPiece, long long> acc;
    for (auto& [piece, mult] : raw_terms) {
        if (mult == 0) continue;
        if (piece.genus() == 0)
            throw std::invalid_argument("make_ledger: genus-0 pieces do not belong in ledgers");
        acc[piece] += mult;
    }
    JacobianLedger L;
    for (const auto& [piece, mult] : acc)
        if (mult != 0) L.terms.emplace_back(piece, mult);
    if (L.genus() != expected_genus)
        throw std::logic_error("make_ledger: genus balance violated");
    return L;
}

std::vector<Subgroup> torsion_subgroup_family(const AbelianGroupShape& shape, long long ell) {
    if (shape.n1 % ell != 0 || shape.n2 % ell != 0)
        throw std::invalid_argument("torsion_subgroup_family: ell-torsion has rank < 2");
    const GroupElement t1{shape.n1 / ell, 0};
    const GroupElement t2{0, shape.n2 / ell};
    std::vector<Subgroup> family;
    family.push_back(subgroup_generated_by(shape, {t2}));
    for (long long k = 0; k < ell; ++k)
        family.push_back(subgroup_generated_by(shape, {add(shape, t1, scalar_mul(shape, k, t2))}));
    std::sort(family.begin(), family.end());
    return family;
}

JacobianLedger kani_rosen_ledger(const InertiaType& a, const std::vector<Subgroup>& subgroups) {
    if (subgroups.size() < 2)
        throw std::invalid_argument("kani_rosen_ledger: need at least two subgroups");
    // Hypotheses: pairwise trivial intersections, union is a subgroup K.
    std::set<GroupElement> union_set;
    for (size_t i = 0; i < subgroups.size(); ++i) {
        for (size_t j = i + 1; j < subgroups.size(); ++j) {
            for (const GroupElement& g : subgroups[i].elements) {
                if (g.is_identity()) continue;
                if (subgroups[j].contains(g))
                    throw std::invalid_argument(
                        "kani_rosen_ledger: subgroups do not intersect trivially");
            }
        }
        union_set.insert(subgroups[i].elements.begin(), subgroups[i].elements.end());
    }
    std::vector<GroupElement> union_elems(union_set.begin(), union_set.end());
    const Subgroup K = subgroup_generated_by(a.shape, union_elems);
    if (K.elements != union_elems)
        throw std::invalid_argument("kani_rosen_ledger: union of the family is not a subgroup");

    const long long t = static_cast<long long>(subgroups.size());
    // (t-1) [X] = sum |H_i| [X/H_i] - |K| [X/K]; positive-genus pieces only.
    std::map<LedgerPiece, long long> rhs;
    auto add_term = [&](const Subgroup& H, long long mult) {
        const QuotientCover qc = quotient_cover(a, H);
        if (qc.genus == 0) return;
        const InertiaType piece = canonicalize_inertia(InertiaType{qc.shape, qc.images});
        rhs[LedgerPiece{piece}] += mult;
    };
    for (const Subgroup& H : subgroups) add_term(H, H.order());
    add_term(K, -K.order());

    std::vector<std::pair<LedgerPiece, long long>> terms;
    for (const auto& [piece, mult] : rhs) {
        if (mult == 0) continue;
        if (mult % (t - 1) != 0)
            throw std::logic_error(
                "kani_rosen_ledger: isogeny identity not solvable for Jac(X) "
                "(multiplicity not divisible by t-1)");
        terms.emplace_back(piece, mult / (t - 1));
    }
    return make_ledger(std::move(terms), genus_of_inertia(a));
}

JacobianLedger standard_ledger(const InertiaType& a) {
    if (a.shape.cyclic())
        throw std::invalid_argument("standard_ledger: cover is already cyclic");
    long long ell = a.shape.n2;
    for (long long d = 2; d * d <= ell; ++d) {
        if (ell % d == 0) {
            ell = d;
            break;
        }
    }
    return kani_rosen_ledger(a, torsion_subgroup_family(a.shape, ell));
}

JacobianLedger reduce2_ledger(long long r) {
    if (r < 2) throw std::invalid_argument("reduce2_ledger: need r >= 2");
    const long long g = r - 1;
    std::vector<std::pair<LedgerPiece, long long>> terms;
    const InertiaType cyclic_piece =
        canonicalize_inertia(make_cyclic_inertia(2 * r, 1, r, r - 1));
    if (r % 2 == 1) {
        terms.emplace_back(LedgerPiece{cyclic_piece}, 2);
    } else {
        terms.emplace_back(LedgerPiece{cyclic_piece}, 1);
        const AbelianGroupShape half = make_shape(r, 2);
        const InertiaType rank2 = canonicalize_inertia(
            make_inertia(half, GroupElement{1, 0}, reduce(half, -1, -1), GroupElement{0, 1}));
        if (genus_of_inertia(rank2) > 0) terms.emplace_back(LedgerPiece{rank2}, 1);
    }
    return make_ledger(std::move(terms), g);
}

NewtonPolygon newton_from_ledger(const JacobianLedger& ledger, const Residue& p) {
    std::map<Rational, long long> acc;
    for (const auto& [piece, mult] : ledger.terms) {
        if (p.modulus % piece.modulus() != 0)
            throw std::invalid_argument(
                "newton_from_ledger: residue modulus incompatible with a piece");
        const NewtonPolygon np = newton_polygon(piece.inertia, residue(p.value, piece.modulus()));
        for (const auto& [slope, m] : np.slopes) acc[slope] += mult * m;
    }
    std::vector<std::pair<Rational, long long>> raw;
    for (const auto& [slope, m] : acc) {
        if (m < 0)
            throw std::logic_error(
                "newton_from_ledger: subtraction removes slopes that are not present");
        if (m > 0) raw.emplace_back(slope, m);
    }
    NewtonPolygon np = polygon_from_multiset(std::move(raw));
    const long long g = ledger.genus();
    if (np.height() != 2 * g || !np.symmetric())
        throw std::logic_error("newton_from_ledger: polygon fails height/symmetry checks");
    return np;
}

}  // namespace tb
