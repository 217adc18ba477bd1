#pragma once

#include <vector>

#include "triplebranch/newton.hpp"

namespace tb {

struct FiniteFieldSpec {
    long long p = 3;  // odd prime
    int k = 1;        // extension degree
    long long q = 3;  // p^k
};

FiniteFieldSpec split_prime_power(long long q);

// F_q as exp/log tables over a fixed generator; elements are encoded as
// base-p digit vectors packed into an integer in [0, q). Fields here are
// desk-sized, so full tables are the simplest correct thing.
class FiniteField {
  public:
    FiniteField(long long p, int k);
    explicit FiniteField(long long q) : FiniteField(split_prime_power(q).p, split_prime_power(q).k) {}

    long long p() const { return p_; }
    int k() const { return k_; }
    long long q() const { return q_; }

    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const;
    long long mul(long long a, long long b) const;
    long long log(long long a) const;          // a != 0
    long long from_log(long long e) const;

  private:
    long long p_;
    int k_;
    long long q_;
    std::vector<long long> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<long long> log_;  // inverse table; log_[0] = -1
    long long poly_mul(long long a, long long b, const std::vector<long long>& mod_poly) const;
};

// Rational points of the smooth projective model of y^m = x^{a0} (1-x)^{a1}
// over F_q. Affine points away from x in {0,1} come from m'-th power
// counts; the fibers above 0, 1, infinity come from the branch
// combinatorics (gcd(m, a_b) branches, Frobenius acting through roots of
// the local unit constant).
long long count_points(long long m, long long a0, long long a1, const FiniteField& F);
long long count_points(long long m, long long a0, long long a1, long long q);

// Rational points of y^2 = x^3 + A x + B (smooth Weierstrass model).
long long count_points_cubic(long long A, long long B, const FiniteField& F);
long long count_points_cubic(long long A, long long B, long long q);

// L-polynomial coefficients a_0..a_{2g} from the counts N_1..N_g over
// F_{q^i}, via Newton's identities and the functional equation
// a_{2g-i} = q^{g-i} a_i. Counts violating the Weil bound are rejected.
std::vector<BigInt> l_polynomial(const std::vector<long long>& counts, long long q, int genus);

// Newton polygon of an L-polynomial over F_{p^k}: lower convex hull of
// (i, val_p(a_i)) with slopes normalized by k.
NewtonPolygon np_from_lpoly(const std::vector<BigInt>& coeffs, long long p, int k);

struct OracleReport {
    long long m = 0;
    std::array<long long, 3> a{};   // cyclic inertia triple
    long long p = 0;
    std::vector<long long> counts;  // N_1..N_g
    std::vector<BigInt> l_poly;
    NewtonPolygon np;
};

// Full desk check of one cyclic cover at one prime; throws when p^genus
// exceeds the budget.
OracleReport oracle_report(const InertiaType& cyclic, long long p, long long q_budget);

// Same for the two explicit elliptic models y^2 = x^3 - x and y^2 = x^3 - 1.
OracleReport oracle_report_cubic(long long A, long long B, long long p);

}  // namespace tb
