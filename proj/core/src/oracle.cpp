#include "triplebranch/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tb {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FiniteFieldSpec split_prime_power(long long q) {
    if (q < 2) throw std::invalid_argument("split_prime_power: q must be a prime power >= 2");
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            long long rest = q;
            int k = 0;
            while (rest % p == 0) {
                rest /= p;
                ++k;
            }
            if (rest != 1)
                throw std::invalid_argument("split_prime_power: q is not a prime power");
            return FiniteFieldSpec{p, k, q};
        }
    }
    return FiniteFieldSpec{q, 1, q};
}

long long FiniteField::poly_mul(long long a, long long b,
                                const std::vector<long long>& mod_poly) const {
    // Dense schoolbook multiplication of base-p encoded polynomials,
    // reduced by the monic mod_poly (degree k_).
    std::vector<long long> da(static_cast<size_t>(k_)), db(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i, a /= p_) da[static_cast<size_t>(i)] = a % p_;
    for (int i = 0; i < k_; ++i, b /= p_) db[static_cast<size_t>(i)] = b % p_;
    std::vector<long long> prod(static_cast<size_t>(2 * k_ - 1), 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] + da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p_;
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        const long long c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int i = 0; i < k_; ++i) {
            auto& slot = prod[static_cast<size_t>(d - k_ + i)];
            slot = ((slot - c * mod_poly[static_cast<size_t>(i)]) % p_ + p_) % p_;
        }
    }
    long long packed = 0;
    for (int i = k_ - 1; i >= 0; --i) packed = packed * p_ + prod[static_cast<size_t>(i)];
    return packed;
}

FiniteField::FiniteField(long long p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
    if (k < 1) throw std::invalid_argument("FiniteField: k must be positive");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        if (q_ > 2'000'000 / p) throw std::invalid_argument("FiniteField: q too large");
        q_ *= p;
    }

    // Monic irreducible of degree k: lowest non-leading coefficients first.
    // Irreducibility by trial division against all monic polynomials of
    // degree up to k/2 (fields here are tiny).
    std::vector<long long> mod_poly(static_cast<size_t>(k), 0);  // x^k + sum c_i x^i
    if (k > 1) {
        auto divides = [&](const std::vector<long long>& divisor, int deg_divisor) {
            // Synthetic division of x^k + mod_poly by the monic divisor.
            std::vector<long long> rem(static_cast<size_t>(k + 1), 0);
            rem[static_cast<size_t>(k)] = 1;
            for (int i = 0; i < k; ++i) rem[static_cast<size_t>(i)] = mod_poly[static_cast<size_t>(i)];
            for (int d = k; d >= deg_divisor; --d) {
                const long long c = rem[static_cast<size_t>(d)];
                if (c == 0) continue;
                rem[static_cast<size_t>(d)] = 0;
                for (int i = 0; i < deg_divisor; ++i) {
                    auto& slot = rem[static_cast<size_t>(d - deg_divisor + i)];
                    slot = ((slot - c * divisor[static_cast<size_t>(i)]) % p_ + p_) % p_;
                }
            }
            return std::all_of(rem.begin(), rem.end(), [](long long c) { return c == 0; });
        };
        bool found = false;
        for (long long code = 0; code < q_ && !found; ++code) {
            long long rest = code;
            for (int i = 0; i < k; ++i, rest /= p) mod_poly[static_cast<size_t>(i)] = rest % p;
            if (mod_poly[0] == 0) continue;  // divisible by x
            bool irreducible = true;
            for (int deg = 1; 2 * deg <= k && irreducible; ++deg) {
                long long n_div = 1;
                for (int i = 0; i < deg; ++i) n_div *= p;
                std::vector<long long> divisor(static_cast<size_t>(deg));
                for (long long dc = 0; dc < n_div && irreducible; ++dc) {
                    long long r2 = dc;
                    for (int i = 0; i < deg; ++i, r2 /= p) divisor[static_cast<size_t>(i)] = r2 % p;
                    if (divides(divisor, deg)) irreducible = false;
                }
            }
            found = irreducible;
        }
        if (!found) throw std::logic_error("FiniteField: no irreducible polynomial found");
    }

    // Multiplicative generator, then the exp/log tables.
    const auto factors = prime_factors(q_ - 1);
    auto pow_mod = [&](long long base, long long e) {
        long long acc = 1;
        while (e > 0) {
            if (e & 1) acc = poly_mul(acc, base, mod_poly);
            base = poly_mul(base, base, mod_poly);
            e >>= 1;
        }
        return acc;
    };
    long long gen = 0;
    for (long long cand = 2; cand < q_; ++cand) {
        bool primitive = true;
        for (long long ell : factors) {
            if (pow_mod(cand, (q_ - 1) / ell) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("FiniteField: no generator found");

    exp_.assign(static_cast<size_t>(q_ - 1), 0);
    log_.assign(static_cast<size_t>(q_), -1);
    long long acc = 1;
    for (long long i = 0; i < q_ - 1; ++i) {
        exp_[static_cast<size_t>(i)] = acc;
        if (log_[static_cast<size_t>(acc)] != -1)
            throw std::logic_error("FiniteField: generator order too small");
        log_[static_cast<size_t>(acc)] = i;
        acc = poly_mul(acc, gen, mod_poly);
    }
}

long long FiniteField::add(long long a, long long b) const {
    long long out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        out += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

long long FiniteField::sub(long long a, long long b) const {
    long long out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        out += mult * (((a % p_ - b % p_) % p_ + p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

long long FiniteField::mul(long long a, long long b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<size_t>((log(a) + log(b)) % (q_ - 1))];
}

long long FiniteField::log(long long a) const {
    if (a <= 0 || a >= q_) throw std::invalid_argument("FiniteField::log: not a unit");
    return log_[static_cast<size_t>(a)];
}

long long FiniteField::from_log(long long e) const {
    long long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[static_cast<size_t>(r)];
}

namespace {

// Solutions of w^d = c in F_q*, with c given by its discrete log.
long long root_count(long long d, long long c_log, long long q) {
    const long long g = std::gcd(d, q - 1);
    return (c_log % g == 0) ? g : 0;
}

}  // namespace

long long count_points(long long m, long long a0, long long a1, const FiniteField& F) {
    if (m < 2) throw std::invalid_argument("count_points: m must be >= 2");
    if (F.p() == 2) throw std::invalid_argument("count_points: odd characteristic only");
    if (m % F.p() == 0)
        throw std::invalid_argument("count_points: characteristic divides m");
    a0 = ((a0 % m) + m) % m;
    a1 = ((a1 % m) + m) % m;
    const long long ainf = ((-(a0 + a1)) % m + m) % m;
    if (a0 % m == 0 || a1 % m == 0 || ainf == 0)
        throw std::invalid_argument("count_points: cover is not branched at all of 0, 1, oo");
    if (std::gcd(std::gcd(a0, a1), m) != 1)
        throw std::invalid_argument("count_points: (m, a0, a1) is not a connected cover datum");

    const long long q = F.q();
    const long long mp = std::gcd(m, q - 1);
    long long total = 0;
    const long long one = 1;
    for (long long x = 0; x < q; ++x) {
        if (x == 0 || x == one) continue;
        const long long lhs = F.sub(one, x);  // 1 - x, nonzero here
        const long long c_log = (a0 % (q - 1)) * F.log(x) + (a1 % (q - 1)) * F.log(lhs);
        if (c_log % mp == 0) total += mp;
    }
    // Fibers above the three branch points.
    total += std::gcd(std::gcd(m, a0), q - 1);
    total += std::gcd(std::gcd(m, a1), q - 1);
    const long long dinf = std::gcd(m, a0 + a1);
    const long long minus_one_log = (q - 1) / 2;  // q odd here
    const long long const_log = (a1 % 2 == 0) ? 0 : minus_one_log;
    total += root_count(dinf, const_log, q);
    return total;
}

long long count_points(long long m, long long a0, long long a1, long long q) {
    const FiniteField F(q);
    return count_points(m, a0, a1, F);
}

long long count_points_cubic(long long A, long long B, const FiniteField& F) {
    if (F.p() < 3) throw std::invalid_argument("count_points_cubic: odd characteristic only");
    const long long q = F.q();
    long long Ar = ((A % F.p()) + F.p()) % F.p();
    long long Br = ((B % F.p()) + F.p()) % F.p();
    long long total = 1;  // the point at infinity
    for (long long x = 0; x < q; ++x) {
        const long long x2 = F.mul(x, x);
        const long long rhs = F.add(F.add(F.mul(x2, x), F.mul(Ar, x)), Br);
        if (rhs == 0) {
            total += 1;
        } else if (F.log(rhs) % 2 == 0) {
            total += 2;
        }
    }
    return total;
}

long long count_points_cubic(long long A, long long B, long long q) {
    const FiniteField F(q);
    return count_points_cubic(A, B, F);
}

std::vector<BigInt> l_polynomial(const std::vector<long long>& counts, long long q, int genus) {
    if (static_cast<int>(counts.size()) < genus)
        throw std::invalid_argument("l_polynomial: need counts over F_{q^1}..F_{q^genus}");
    // Power sums of the inverse roots: s_i = q^i + 1 - N_i, Weil-bounded.
    std::vector<BigInt> s(static_cast<size_t>(genus + 1), 0);
    BigInt qi = 1;
    for (int i = 1; i <= genus; ++i) {
        qi *= q;
        s[static_cast<size_t>(i)] = qi + 1 - counts[static_cast<size_t>(i - 1)];
        if (s[static_cast<size_t>(i)] * s[static_cast<size_t>(i)] > BigInt(4) * genus * genus * qi)
            throw std::invalid_argument("l_polynomial: counts violate the Weil bound");
    }
    std::vector<BigInt> a(static_cast<size_t>(2 * genus + 1), 0);
    a[0] = 1;
    for (int i = 1; i <= genus; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < i; ++j) acc += a[static_cast<size_t>(j)] * s[static_cast<size_t>(i - j)];
        if (acc % i != 0) throw std::logic_error("l_polynomial: Newton identity not integral");
        a[static_cast<size_t>(i)] = -acc / i;
    }
    BigInt qpow = 1;
    for (int i = genus - 1; i >= 0; --i) {
        qpow *= q;  // q^(g-i)
        a[static_cast<size_t>(2 * genus - i)] = qpow * a[static_cast<size_t>(i)];
    }
    return a;
}

NewtonPolygon np_from_lpoly(const std::vector<BigInt>& coeffs, long long p, int k) {
    if (coeffs.empty() || coeffs.front() == 0 || coeffs.back() == 0)
        throw std::invalid_argument("np_from_lpoly: zero leading or trailing coefficient");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    auto val = [&](const BigInt& c) {
        long long v = 0;
        BigInt x = abs(c);
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    // Lower convex hull of (i, val_p(a_i)); zero coefficients are +infinity
    // and never on the hull.
    std::vector<std::pair<long long, long long>> pts;
    for (int i = 0; i <= deg; ++i)
        if (coeffs[static_cast<size_t>(i)] != 0) pts.emplace_back(i, val(coeffs[static_cast<size_t>(i)]));
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a->pt
            if ((b.second - a.second) * (pt.first - a.first) <
                (pt.second - a.second) * (b.first - a.first))
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<std::pair<Rational, long long>> raw;
    for (size_t i = 1; i < hull.size(); ++i) {
        const long long run = hull[i].first - hull[i - 1].first;
        const long long rise = hull[i].second - hull[i - 1].second;
        raw.emplace_back(Rational(rise, run * k), run);
    }
    return polygon_from_multiset(std::move(raw));
}

OracleReport oracle_report(const InertiaType& cyclic, long long p, long long q_budget) {
    if (!cyclic.shape.cyclic())
        throw std::invalid_argument("oracle_report: point counting is for cyclic covers");
    const long long m = cyclic.shape.exponent();
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("oracle_report: p must be an odd prime");
    if (m % p == 0) throw std::invalid_argument("oracle_report: p divides m");
    const long long genus = genus_of_inertia(cyclic);

    OracleReport rep;
    rep.m = m;
    rep.a = {cyclic.gens[0].x1, cyclic.gens[1].x1, cyclic.gens[2].x1};
    rep.p = p;
    long long q = 1;
    for (long long i = 1; i <= genus; ++i) {
        if (q > q_budget / p) throw std::invalid_argument("oracle_report: q-budget exceeded");
        q *= p;
        const FiniteField F(p, static_cast<int>(i));
        rep.counts.push_back(count_points(m, rep.a[0], rep.a[1], F));
    }
    rep.l_poly = l_polynomial(rep.counts, p, static_cast<int>(genus));
    rep.np = np_from_lpoly(rep.l_poly, p, 1);
    return rep;
}

OracleReport oracle_report_cubic(long long A, long long B, long long p) {
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("oracle_report_cubic: p must be an odd prime");
    OracleReport rep;
    rep.m = 2;
    rep.a = {A, B, 0};
    rep.p = p;
    rep.counts.push_back(count_points_cubic(A, B, FiniteField(p, 1)));
    rep.l_poly = l_polynomial(rep.counts, p, 1);
    rep.np = np_from_lpoly(rep.l_poly, p, 1);
    return rep;
}

}  // namespace tb
