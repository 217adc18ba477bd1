#include "triplebranch/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tb {

long long Character::order() const {
    return std::lcm(additive_order(j1, shape.n1), additive_order(j2, shape.n2));
}

Rational Character::exponent_on(const GroupElement& g) const {
    return frac(Rational(j1 * g.x1, shape.n1) + Rational(j2 * g.x2, shape.n2));
}

Character Character::times(long long p) const {
    const GroupElement r = reduce(shape, p * j1, p * j2);
    return Character{shape, r.x1, r.x2};
}

Character Character::conjugate() const {
    const GroupElement r = reduce(shape, -j1, -j2);
    return Character{shape, r.x1, r.x2};
}

std::vector<Character> nontrivial_characters(const AbelianGroupShape& shape) {
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(shape.order() - 1));
    for (const GroupElement& g : all_elements(shape))
        if (!g.is_identity()) out.push_back(Character{shape, g.x1, g.x2});
    return out;
}

long long SignatureType::genus() const {
    long long total = 0;
    for (const SignatureEntry& e : entries) total += e.f;
    return total;
}

const SignatureEntry& SignatureType::at(const Character& chi) const {
    for (const SignatureEntry& e : entries)
        if (e.chi == chi) return e;
    throw std::out_of_range("SignatureType::at: unknown character");
}

SignatureType signature(const InertiaType& a) {
    SignatureType sig;
    sig.shape = a.shape;
    for (const Character& chi : nontrivial_characters(a.shape)) {
        int zeros = 0;
        Rational f = -1;
        for (const GroupElement& g : a.gens) {
            const Rational t = chi.exponent_on(g);
            if (t == 0) ++zeros;
            f += frac(-t);
        }
        // A nontrivial character killing two generators would kill the third
        // by the product-one relation, contradicting generation.
        if (zeros >= 2)
            throw std::logic_error("signature: character kills two inertia generators");
        if (f != 0 && f != 1)
            throw std::logic_error("signature: eigenspace dimension outside {0,1}");
        sig.entries.push_back(SignatureEntry{chi, f == 1 ? 1 : 0, zeros == 1});
    }
    if (sig.genus() != genus_of_inertia(a))
        throw std::logic_error("signature: dimensions do not sum to the genus");
    return sig;
}

std::pair<std::vector<Character>, std::vector<Character>> s_epsilon_sets(const SignatureType& f) {
    std::vector<Character> s0, s1;
    for (const SignatureEntry& e : f.entries) {
        if (e.degenerate) continue;
        (e.f == 1 ? s1 : s0).push_back(e.chi);
    }
    return {std::move(s0), std::move(s1)};
}

long long NewtonPolygon::height() const {
    long long h = 0;
    for (const auto& [slope, mult] : slopes) h += mult;
    return h;
}

Rational NewtonPolygon::total_rise() const {
    Rational sum = 0;
    for (const auto& [slope, mult] : slopes) sum += slope * mult;
    return sum;
}

bool NewtonPolygon::symmetric() const {
    for (const auto& [slope, mult] : slopes)
        if (multiplicity_of(Rational(1) - slope) != mult) return false;
    return true;
}

long long NewtonPolygon::multiplicity_of(const Rational& slope) const {
    for (const auto& [s, mult] : slopes)
        if (s == slope) return mult;
    return 0;
}

NewtonPolygon polygon_from_multiset(std::vector<std::pair<Rational, long long>> raw) {
    std::map<Rational, long long> acc;
    for (const auto& [slope, mult] : raw) {
        if (mult == 0) continue;
        if (slope < 0 || slope > 1)
            throw std::invalid_argument("polygon_from_multiset: slope outside [0,1]");
        acc[slope] += mult;
    }
    NewtonPolygon np;
    for (const auto& [slope, mult] : acc) {
        if (mult < 0) throw std::invalid_argument("polygon_from_multiset: negative multiplicity");
        if (mult > 0) np.slopes.emplace_back(slope, mult);
    }
    return np;
}

std::string display(const NewtonPolygon& np) {
    if (np.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& part, long long count) {
        if (!first) os << " (+) ";
        os << part;
        if (count > 1) os << "^" << count;
        first = false;
    };
    // Ordinary part first, then slope pairs ascending, G_{1,1} last.
    const long long ord = np.multiplicity_of(Rational(0));
    if (ord > 0) emit("(G_{0,1} (+) G_{1,0})", ord);
    for (const auto& [slope, mult] : np.slopes) {
        if (slope == 0 || slope >= Rational(1, 2)) continue;
        const BigInt den = denominator(slope);
        const BigInt num = numerator(slope);
        const long long height = static_cast<long long>(den);
        std::ostringstream part;
        part << "(G_{" << (den - num) << "," << num << "} (+) G_{" << num << ","
             << (den - num) << "})";
        emit(part.str(), mult / height);
    }
    const long long ss = np.multiplicity_of(Rational(1, 2));
    if (ss > 0) emit("G_{1,1}", ss / 2);
    return os.str();
}

bool is_supersingular(const NewtonPolygon& np) {
    for (const auto& [slope, mult] : np.slopes)
        if (slope != Rational(1, 2)) return false;
    return true;
}

bool is_ordinary(const NewtonPolygon& np) {
    for (const auto& [slope, mult] : np.slopes)
        if (slope != 0 && slope != 1) return false;
    return true;
}

NewtonPolygon newton_polygon(const InertiaType& a, const Residue& p) {
    const long long m = a.shape.exponent();
    if (p.modulus % m != 0)
        throw std::invalid_argument("newton_polygon: residue modulus incompatible with the group");
    const long long pr = p.value % m;
    if (std::gcd(pr, a.shape.order()) != 1)
        throw std::invalid_argument("newton_polygon: bad reduction (p shares a factor with |G|)");

    const SignatureType sig = signature(a);
    std::map<Character, const SignatureEntry*> lookup;
    for (const SignatureEntry& e : sig.entries) lookup[e.chi] = &e;

    std::vector<std::pair<Rational, long long>> raw;
    std::set<Character> seen;
    for (const SignatureEntry& e : sig.entries) {
        if (seen.count(e.chi)) continue;
        // Frobenius orbit of chi under multiplication by p.
        std::vector<const SignatureEntry*> orbit;
        Character cur = e.chi;
        do {
            orbit.push_back(lookup.at(cur));
            seen.insert(cur);
            cur = cur.times(pr);
        } while (!(cur == e.chi));
        const bool degenerate = orbit.front()->degenerate;
        for (const SignatureEntry* oe : orbit)
            if (oe->degenerate != degenerate)
                throw std::logic_error("newton_polygon: degeneracy not orbit-invariant");
        if (degenerate) continue;
        long long alpha = 0;
        for (const SignatureEntry* oe : orbit) alpha += oe->f;
        raw.emplace_back(Rational(alpha, static_cast<long long>(orbit.size())),
                         static_cast<long long>(orbit.size()));
    }
    NewtonPolygon np = polygon_from_multiset(std::move(raw));
    const long long g = sig.genus();
    if (np.height() != 2 * g || np.total_rise() != g || !np.symmetric())
        throw std::logic_error("newton_polygon: polygon fails height/symmetry checks");
    return np;
}

NewtonPolygon newton_polygon(const InertiaType& a, long long p) {
    return newton_polygon(a, residue(p, a.shape.exponent()));
}

}  // namespace tb
