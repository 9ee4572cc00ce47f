#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace epnlab {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over arbitrary-precision integers,
// coefficients stored ascending (c[k] multiplies x^k).
struct UniPoly {
    std::vector<Int> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs);

    static UniPoly zero();
    static UniPoly constant(const Int& v);
    // x^k with unit coefficient
    static UniPoly monomial(unsigned k, const Int& coeff = 1);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const;
    void trim();

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return c == o.c; }

    UniPoly derivative() const;
    // p(-x)
    UniPoly reflect() const;

    Int content() const;          // gcd of coefficients, nonnegative
    UniPoly primitive_part() const;  // content removed, leading coefficient > 0

    Rat eval(const Rat& x) const;
    double eval(double x) const;
    int sign_at(const Rat& x) const;

    // exact division; throws std::domain_error if the division is not exact
    UniPoly divexact(const UniPoly& d) const;
    bool try_divide(const UniPoly& d, UniPoly& quotient) const;

    std::string to_string(const std::string& var) const;
};

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r
UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b);

// gcd via subresultant pseudo-remainder sequence; primitive, positive leading coefficient
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// distinct-factor part p / gcd(p, p'), content removed, positive leading coefficient
UniPoly squarefree(const UniPoly& p);

struct RootInterval {
    Rat lo, hi;            // open interval containing exactly one real root
    bool multiplicity_free = true;
};

// Sturm chain of a squarefree polynomial (content-reduced at each step)
std::vector<UniPoly> sturm_chain(const UniPoly& p);
// number of real roots in (a, b]
int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

// all real roots of a squarefree polynomial, disjoint isolating intervals sorted ascending
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// bisection refinement of an isolated root to within tol
double refine_root(const UniPoly& p, const RootInterval& iv, double tol);
Rat refine_root_exact(const UniPoly& p, const RootInterval& iv, const Rat& tol);

// Sparse multivariate polynomial over arbitrary-precision integers.
// Term map: exponent tuple (length nvars) -> nonzero coefficient.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<unsigned>, Int> terms;

    MultiPoly() = default;
    explicit MultiPoly(int nv) : nvars(nv) {}

    static MultiPoly zero(int nvars);
    static MultiPoly constant(int nvars, const Int& v);
    static MultiPoly var(int nvars, int index);

    bool is_zero() const { return terms.empty(); }
    void insert_term(const std::vector<unsigned>& exps, const Int& coeff);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly pow(unsigned k) const;
    int degree_in(int var) const;
    int total_degree() const;

    // replace variable `var` by q (q must not involve `var`); nvars unchanged
    MultiPoly substitute(int var, const MultiPoly& q) const;
    MultiPoly derivative(int var) const;

    // coefficients as polynomials in the remaining variables, ascending in `var`
    std::vector<MultiPoly> dense_in(int var) const;
    static MultiPoly from_dense(int var, const std::vector<MultiPoly>& coeffs);

    double eval_double(const std::vector<double>& x) const;
    Rat eval_rat(const std::vector<Rat>& x) const;

    // substitute exact rationals for every variable except keep_var,
    // clear denominators and remove integer content
    UniPoly specialize(int keep_var, const std::vector<Rat>& values) const;

    std::string to_string(const std::vector<std::string>& names) const;
};

// exact multivariate division (throws std::domain_error if not exact)
MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

// resultant with respect to `var` via the subresultant pseudo-remainder sequence
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

}  // namespace epnlab
