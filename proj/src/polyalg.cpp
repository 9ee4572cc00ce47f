#include "epnlab/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace epnlab {

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int int_divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("inexact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

UniPoly::UniPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

UniPoly UniPoly::zero() { return UniPoly{}; }

UniPoly UniPoly::constant(const Int& v) {
    UniPoly p;
    if (v != 0) p.c = {v};
    return p;
}

UniPoly UniPoly::monomial(unsigned k, const Int& coeff) {
    UniPoly p;
    if (coeff != 0) {
        p.c.assign(k + 1, Int(0));
        p.c[k] = coeff;
    }
    return p;
}

const Int& UniPoly::lc() const {
    if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Int(static_cast<unsigned long>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::reflect() const {
    UniPoly r = *this;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

Int UniPoly::content() const {
    Int g = 0;
    for (const auto& v : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return zero();
    Int g = content();
    if (lc() < 0) g = -g;
    UniPoly r = *this;
    for (auto& v : r.c) v = int_divexact(v, g);
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

double UniPoly::eval(double x) const {
    double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + it->get_d();
    return v;
}

int UniPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    const Int num = x.get_num();
    const Int den = x.get_den();
    // integer Horner on den^deg * p(num/den)
    Int w = c.back();
    Int dpow = 1;
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        dpow *= den;
        w = w * num + c[static_cast<size_t>(i)] * dpow;
    }
    return sgn(w);
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    UniPoly q;
    if (!try_divide(d, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

bool UniPoly::try_divide(const UniPoly& d, UniPoly& quotient) const {
    if (d.is_zero()) return false;
    if (is_zero()) {
        quotient = zero();
        return true;
    }
    if (degree() < d.degree()) return false;
    UniPoly r = *this;
    UniPoly q;
    q.c.assign(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        if (!mpz_divisible_p(r.lc().get_mpz_t(), d.lc().get_mpz_t())) return false;
        Int qc = int_divexact(r.lc(), d.lc());
        size_t shift = static_cast<size_t>(r.degree() - d.degree());
        q.c[shift] = qc;
        for (size_t i = 0; i < d.c.size(); ++i) r.c[shift + i] -= qc * d.c[i];
        r.trim();
    }
    if (!r.is_zero()) return false;
    q.trim();
    quotient = q;
    return true;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& v = c[static_cast<size_t>(k)];
        if (v == 0) continue;
        Int a = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? "-" : "+");
        }
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
    if (a.degree() < b.degree()) return a;
    UniPoly r = a;
    const Int& d = b.lc();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        Int rl = r.lc();
        for (auto& v : r.c) v *= d;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= rl * b.c[i];
        r.trim();
        --e;
    }
    Int f = int_pow(d, static_cast<unsigned long>(std::max(e, 0)));
    for (auto& v : r.c) v *= f;
    r.trim();
    return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.is_zero() ? UniPoly::zero() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    UniPoly p = a.primitive_part();
    UniPoly q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    Int g = 1, h = 1;
    while (true) {
        int delta = p.degree() - q.degree();
        UniPoly r = pseudo_rem(p, q);
        if (r.is_zero()) return q.primitive_part();
        if (q.degree() == 0) return UniPoly::constant(1);
        Int div = g * int_pow(h, static_cast<unsigned long>(delta));
        p = q;
        q = r;
        for (auto& v : q.c) v = int_divexact(v, div);
        g = p.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = int_divexact(int_pow(g, static_cast<unsigned long>(delta)),
                             int_pow(h, static_cast<unsigned long>(delta - 1)));
        if (q.degree() == 0) return UniPoly::constant(1);
    }
}

UniPoly squarefree(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    UniPoly pp = p.primitive_part();
    if (pp.degree() == 0) return UniPoly::constant(1);
    UniPoly g = gcd(pp, pp.derivative());
    UniPoly sf = pp.divexact(g);
    return sf.primitive_part();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        const UniPoly& s1 = chain[chain.size() - 2];
        const UniPoly& s2 = chain.back();
        UniPoly r = pseudo_rem(s1, s2);
        if (r.is_zero()) break;
        // pseudo-division multiplied s1 by lc(s2)^(delta+1); flip so the
        // chain keeps the Sturm sign relation s_{k+1} = -rem(s_{k-1}, s_k)
        int delta = s1.degree() - s2.degree();
        bool mult_positive = (s2.lc() > 0) || ((delta + 1) % 2 == 0);
        UniPoly next = mult_positive ? -r : r;
        Int cont = next.content();
        for (auto& v : next.c) v = int_divexact(v, cont);
        chain.push_back(next);
    }
    return chain;
}

namespace {

int sign_changes(const std::vector<UniPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return changes;
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

namespace {

// split point in (lo, hi) avoiding roots of p; p has finitely many roots while
// deg+2 distinct candidates are available
Rat nonroot_split(const UniPoly& p, const Rat& lo, const Rat& hi) {
    Rat mid = (lo + hi) / 2;
    if (p.sign_at(mid) != 0) return mid;
    int m = p.degree() + 2;
    for (int k = 1; k < m; ++k) {
        Rat cand = (lo * k + hi * (m - k)) / m;
        if (p.sign_at(cand) != 0) return cand;
    }
    throw std::logic_error("no root-free split point found");
}

void isolate_rec(const UniPoly& p, const std::vector<UniPoly>& chain, const Rat& lo,
                 const Rat& hi, int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi, true});
        return;
    }
    Rat mid = nonroot_split(p, lo, hi);
    int left = sturm_count(chain, lo, mid);
    isolate_rec(p, chain, lo, mid, left, out);
    isolate_rec(p, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("root isolation of zero polynomial");
    if (p.degree() == 0) return {};
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) throw std::invalid_argument("root isolation requires a squarefree polynomial");
    Rat maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat m = Rat(abs(p.c[static_cast<size_t>(i)])) / Rat(abs(p.lc()));
        if (m > maxc) maxc = m;
    }
    Rat bound = maxc + 2;  // strictly beyond the Cauchy bound, never a root
    auto chain = sturm_chain(p);
    int total = sturm_count(chain, -bound, bound);
    std::vector<RootInterval> out;
    isolate_rec(p, chain, -bound, bound, total, out);
    return out;
}

Rat refine_root_exact(const UniPoly& p, const RootInterval& iv, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    Rat lo = iv.lo, hi = iv.hi;
    int slo = p.sign_at(lo);
    int shi = p.sign_at(hi);
    if (slo == 0) return lo;
    if (shi == 0) return hi;
    if (slo == shi) throw std::invalid_argument("interval does not bracket a sign change");
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

double refine_root(const UniPoly& p, const RootInterval& iv, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    Rat rtol(tol);
    Rat r = refine_root_exact(p, iv, rtol / 4);
    double x = r.get_d();
    // Newton polish inside the certified bracket
    UniPoly dp = p.derivative();
    double lo = iv.lo.get_d(), hi = iv.hi.get_d();
    for (int it = 0; it < 3; ++it) {
        double f = p.eval(x), df = dp.eval(x);
        if (!(std::isfinite(f) && std::isfinite(df)) || df == 0) break;
        double step = f / df;
        double xn = x - step;
        if (!(xn >= lo && xn <= hi)) break;
        x = xn;
        if (std::abs(step) < tol * 1e-3) break;
    }
    if (std::abs(x - r.get_d()) > tol) x = r.get_d();
    return x;
}

MultiPoly MultiPoly::zero(int nvars) { return MultiPoly(nvars); }

MultiPoly MultiPoly::constant(int nvars, const Int& v) {
    MultiPoly p(nvars);
    if (v != 0) p.terms[std::vector<unsigned>(static_cast<size_t>(nvars), 0)] = v;
    return p;
}

MultiPoly MultiPoly::var(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    std::vector<unsigned> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.terms[e] = 1;
    return p;
}

void MultiPoly::insert_term(const std::vector<unsigned>& exps, const Int& coeff) {
    if (exps.size() != static_cast<size_t>(nvars)) throw std::invalid_argument("exponent tuple length mismatch");
    if (coeff == 0) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
        terms[exps] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, v] : o.terms) r.insert_term(e, v);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars);
    std::vector<unsigned> e(static_cast<size_t>(nvars));
    for (const auto& [ea, va] : terms)
        for (const auto& [eb, vb] : o.terms) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, va * vb);
        }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms) v = -v;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars == o.nvars && terms == o.terms;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(nvars, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, v] : terms) d = std::max(d, static_cast<int>(e[static_cast<size_t>(var)]));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, v] : terms) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& q) const {
    if (q.nvars != nvars) throw std::invalid_argument("variable count mismatch");
    if (q.degree_in(var) > 0) throw std::invalid_argument("substitution target involves the replaced variable");
    auto coeffs = dense_in(var);
    MultiPoly r = zero(nvars);
    MultiPoly qp = constant(nvars, 1);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k) qp = qp * q;
        r = r + coeffs[k] * qp;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars);
    for (const auto& [e, v] : terms) {
        unsigned k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        auto en = e;
        en[static_cast<size_t>(var)] = k - 1;
        r.insert_term(en, v * Int(static_cast<unsigned long>(k)));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::dense_in(int var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, 0)) + 1, MultiPoly(nvars));
    if (is_zero()) return out;
    for (const auto& [e, v] : terms) {
        auto en = e;
        unsigned k = en[static_cast<size_t>(var)];
        en[static_cast<size_t>(var)] = 0;
        out[k].insert_term(en, v);
    }
    return out;
}

MultiPoly MultiPoly::from_dense(int var, const std::vector<MultiPoly>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    MultiPoly r(coeffs.front().nvars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, v] : coeffs[k].terms) {
            auto en = e;
            en[static_cast<size_t>(var)] += static_cast<unsigned>(k);
            r.insert_term(en, v);
        }
    }
    return r;
}

double MultiPoly::eval_double(const std::vector<double>& x) const {
    if (x.size() != static_cast<size_t>(nvars)) throw std::invalid_argument("evaluation point length mismatch");
    double sum = 0;
    for (const auto& [e, v] : terms) {
        double t = v.get_d();
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        sum += t;
    }
    return sum;
}

Rat MultiPoly::eval_rat(const std::vector<Rat>& x) const {
    if (x.size() != static_cast<size_t>(nvars)) throw std::invalid_argument("evaluation point length mismatch");
    Rat sum = 0;
    for (const auto& [e, v] : terms) {
        Rat t(v);
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        sum += t;
    }
    return sum;
}

UniPoly MultiPoly::specialize(int keep_var, const std::vector<Rat>& values) const {
    if (values.size() != static_cast<size_t>(nvars)) throw std::invalid_argument("value list length mismatch");
    int d = degree_in(keep_var);
    std::vector<Rat> acc(static_cast<size_t>(std::max(d, 0)) + 1, Rat(0));
    for (const auto& [e, v] : terms) {
        Rat t(v);
        for (size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == keep_var) continue;
            for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
        }
        acc[e[static_cast<size_t>(keep_var)]] += t;
    }
    Int den = 1;
    for (const auto& r : acc) {
        Int d2;
        mpz_lcm(d2.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
        den = d2;
    }
    UniPoly out;
    out.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        Rat scaled = acc[i] * Rat(den);
        out.c[i] = scaled.get_num();
    }
    out.trim();
    if (!out.is_zero()) {
        Int cont = out.content();
        for (auto& v : out.c) v = int_divexact(v, cont);
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (names.size() != static_cast<size_t>(nvars)) throw std::invalid_argument("name list length mismatch");
    if (is_zero()) return "0";
    std::vector<std::pair<std::vector<unsigned>, Int>> ts(terms.begin(), terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (unsigned x : a.first) ta += static_cast<int>(x);
        for (unsigned x : b.first) tb += static_cast<int>(x);
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : ts) {
        Int a = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? "-" : "+");
        }
        bool hasvar = false;
        for (unsigned x : e)
            if (x) hasvar = true;
        std::ostringstream mono;
        bool firstvar = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!firstvar) mono << "*";
            firstvar = false;
            mono << names[i];
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!hasvar) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono.str();
        }
    }
    return out.str();
}

MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return MultiPoly::zero(a.nvars);
    if (a.nvars != b.nvars) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = a;
    MultiPoly q(a.nvars);
    const auto& ltb = *b.terms.rbegin();
    std::vector<unsigned> diff(static_cast<size_t>(a.nvars));
    while (!r.is_zero()) {
        const auto& ltr = *r.terms.rbegin();
        for (size_t i = 0; i < diff.size(); ++i) {
            if (ltr.first[i] < ltb.first[i]) throw std::domain_error("inexact polynomial division");
            diff[i] = ltr.first[i] - ltb.first[i];
        }
        Int qc = int_divexact(ltr.second, ltb.second);
        MultiPoly t(a.nvars);
        t.terms[diff] = qc;
        q.insert_term(diff, qc);
        r = r - t * b;
    }
    return q;
}

namespace {

using Dense = std::vector<MultiPoly>;

int dense_deg(const Dense& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (!v[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

void dense_trim(Dense& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

bool dense_is_zero(const Dense& v) { return dense_deg(v) < 0; }

// lc(b)^(deg a - deg b + 1) * a mod b over the coefficient ring
Dense dense_prem(const Dense& a, const Dense& b) {
    Dense r = a;
    dense_trim(r);
    int db = dense_deg(b);
    const MultiPoly& d = b[static_cast<size_t>(db)];
    int e = dense_deg(r) - db + 1;
    while (!dense_is_zero(r) && dense_deg(r) >= db) {
        int dr = dense_deg(r);
        MultiPoly rl = r[static_cast<size_t>(dr)];
        size_t shift = static_cast<size_t>(dr - db);
        for (auto& ci : r) ci = ci * d;
        for (int i = 0; i <= db; ++i)
            r[shift + static_cast<size_t>(i)] =
                r[shift + static_cast<size_t>(i)] - rl * b[static_cast<size_t>(i)];
        dense_trim(r);
        --e;
    }
    if (e > 0) {
        MultiPoly f = d.pow(static_cast<unsigned>(e));
        for (auto& ci : r) ci = ci * f;
    }
    return r;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
    if (p.nvars != q.nvars) throw std::invalid_argument("variable count mismatch");
    if (var < 0 || var >= p.nvars) throw std::invalid_argument("variable index out of range");
    if (p.degree_in(var) <= 0 || q.degree_in(var) <= 0)
        throw std::invalid_argument("resultant requires positive degree in the eliminated variable");
    Dense A = p.dense_in(var);
    Dense B = q.dense_in(var);
    dense_trim(A);
    dense_trim(B);
    int s = 1;
    if (dense_deg(A) < dense_deg(B)) {
        std::swap(A, B);
        if ((dense_deg(A) * dense_deg(B)) % 2 == 1) s = -s;
    }
    MultiPoly g = MultiPoly::constant(p.nvars, 1);
    MultiPoly h = g;
    while (true) {
        int da = dense_deg(A), db = dense_deg(B);
        int delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) s = -s;
        Dense R = dense_prem(A, B);
        if (dense_is_zero(R)) {
            if (db > 0) return MultiPoly::zero(p.nvars);
            break;
        }
        A = B;
        MultiPoly div = g * h.pow(static_cast<unsigned>(delta));
        B = R;
        for (auto& ci : B) ci = divexact(ci, div);
        dense_trim(B);
        g = A[static_cast<size_t>(dense_deg(A))];
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divexact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        if (dense_deg(B) <= 0) break;
    }
    if (dense_is_zero(B)) return MultiPoly::zero(p.nvars);
    int da = dense_deg(A);
    MultiPoly res = B[0].pow(static_cast<unsigned>(da));
    if (da > 1) res = divexact(res, h.pow(static_cast<unsigned>(da - 1)));
    if (s < 0) res = -res;
    return res;
}

}  // namespace epnlab
