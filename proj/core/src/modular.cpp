#include "triplebranch/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace tb {

Residue residue(long long value, long long modulus) {
    if (modulus < 1) throw std::invalid_argument("residue: modulus must be positive");
    long long v = value % modulus;
    if (v < 0) v += modulus;
    return Residue{v, modulus};
}

std::vector<long long> units(long long modulus) {
    if (modulus < 1) throw std::invalid_argument("units: modulus must be positive");
    if (modulus == 1) return {0};
    std::vector<long long> out;
    for (long long v = 1; v < modulus; ++v)
        if (std::gcd(v, modulus) == 1) out.push_back(v);
    return out;
}

long long euler_phi(long long modulus) {
    return static_cast<long long>(units(modulus).size());
}

bool is_unit(long long value, long long modulus) {
    if (modulus == 1) return true;
    long long v = value % modulus;
    if (v < 0) v += modulus;
    return std::gcd(v, modulus) == 1;
}

long long mult_order(const Residue& u) {
    if (!is_unit(u.value, u.modulus))
        throw std::invalid_argument("mult_order: value is not a unit mod modulus");
    if (u.modulus == 1) return 1;
    long long k = 1;
    long long acc = u.value % u.modulus;
    while (acc != 1) {
        acc = (acc * u.value) % u.modulus;
        ++k;
    }
    return k;
}

long long mult_order(long long value, long long modulus) {
    return mult_order(residue(value, modulus));
}

long long additive_order(long long j, long long modulus) {
    if (modulus < 1) throw std::invalid_argument("additive_order: modulus must be positive");
    long long v = j % modulus;
    if (v < 0) v += modulus;
    return modulus / std::gcd(v, modulus);
}

bool FrobeniusOrbit::contains(long long j) const {
    return std::binary_search(elements.begin(), elements.end(), j);
}

std::vector<FrobeniusOrbit> frobenius_orbits(long long modulus, long long p) {
    if (!is_unit(p, modulus))
        throw std::invalid_argument("frobenius_orbits: p is not coprime to the modulus");
    const long long pr = residue(p, modulus).value;
    std::vector<bool> seen(static_cast<size_t>(std::max<long long>(modulus, 1)), false);
    std::vector<FrobeniusOrbit> orbits;
    for (long long j = 1; j < modulus; ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        FrobeniusOrbit orbit;
        orbit.modulus = modulus;
        long long cur = j;
        do {
            seen[static_cast<size_t>(cur)] = true;
            orbit.elements.push_back(cur);
            cur = (cur * pr) % modulus;
        } while (cur != j);
        std::sort(orbit.elements.begin(), orbit.elements.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const FrobeniusOrbit& a, const FrobeniusOrbit& b) {
                  return a.representative() < b.representative();
              });
    return orbits;
}

bool is_self_dual(const FrobeniusOrbit& orbit) {
    for (long long j : orbit.elements) {
        const long long neg = (orbit.modulus - j) % orbit.modulus;
        if (!orbit.contains(neg)) return false;
    }
    return true;
}

}  // namespace tb
