#ifndef LATTICE_FORGE_NUMERIC_HPP
#define LATTICE_FORGE_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lattice_forge {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_all(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

// Floor-division remainder in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool is_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        if (divides(p, n)) {
            ps.push_back(p);
            while (divides(p, n)) n = exact_div(n, p);
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Largest power of p dividing n (n != 0).
inline Int p_power_part(Int n, const Int& p) {
    if (n < 0) n = -n;
    Int q = 1;
    while (divides(p, n)) {
        n = exact_div(n, p);
        q *= p;
    }
    return q;
}

inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("inverse_mod: not invertible");
    return r;
}

// Canonical representative of r mod n*Z in [0, n), n a positive integer.
inline Rat rat_mod(const Rat& r, int n) {
    Rat x = r;
    x.canonicalize();
    Int den = x.get_den();
    Int num = x.get_num();
    Int m = mod_floor(num, n * den);
    Rat out(m, den);
    out.canonicalize();
    return out;
}

// Representative in [0, 2): values of finite quadratic forms.
inline Rat mod_two(const Rat& r) { return rat_mod(r, 2); }
// Representative in [0, 1): values of finite bilinear forms.
inline Rat mod_one(const Rat& r) { return rat_mod(r, 1); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace lattice_forge

#endif
