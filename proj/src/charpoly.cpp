#include "epnlab/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace epnlab {

namespace {

// polynomial with Gaussian-integer coefficients, stored as real/imaginary parts
struct GPoly {
    MultiPoly re, im;

    GPoly(MultiPoly r, MultiPoly i) : re(std::move(r)), im(std::move(i)) {}

    GPoly operator*(const GPoly& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GPoly operator-(const GPoly& o) const { return {re - o.re, im - o.im}; }
};

// remove a variable that no term uses
MultiPoly drop_var(const MultiPoly& p, int var) {
    MultiPoly r(p.nvars - 1);
    for (const auto& [e, v] : p.terms) {
        if (e[static_cast<size_t>(var)] != 0)
            throw std::logic_error("dropped variable still present");
        std::vector<unsigned> en;
        en.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var) en.push_back(e[i]);
        r.terms[en] = v;
    }
    return r;
}

}  // namespace

std::vector<std::string> coupling_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < coupling_count(n); ++i) {
        if (i < 26)
            names.push_back(std::string(1, static_cast<char>('A' + i)));
        else
            names.push_back("c" + std::to_string(i));
    }
    return names;
}

SecularPolynomial secular_symbolic(int n) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    const int m = coupling_count(n);
    const int nv = m + 1;  // variable 0 is E, variables 1..m are the couplings
    const MultiPoly E = MultiPoly::var(nv, 0);
    const MultiPoly zero = MultiPoly::zero(nv);
    const MultiPoly one = MultiPoly::constant(nv, 1);

    auto diag = [&](int site) -> GPoly {
        // E*I - H has diagonal E - h_kk with h_kk = -i a (first half), +i a (second)
        if (site < m) return {E, MultiPoly::var(nv, site + 1)};
        if (n - 1 - site < m) return {E, -MultiPoly::var(nv, n - site)};
        return {E, zero};
    };

    GPoly prev2(one, zero);       // empty minor
    GPoly prev = diag(0);         // 1x1 minor
    for (int k = 2; k <= n; ++k) {
        GPoly cur = diag(k - 1) * prev - prev2;
        prev2 = prev;
        prev = cur;
    }
    if (!prev.im.is_zero())
        throw std::logic_error("imaginary part of the secular determinant did not cancel");

    SecularPolynomial s;
    s.n = n;
    auto dense = prev.re.dense_in(0);
    dense.resize(static_cast<size_t>(n) + 1, MultiPoly::zero(nv));
    s.coeffs.reserve(dense.size());
    for (auto& c : dense) s.coeffs.push_back(drop_var(c, 0));
    if (!(s.coeffs.back() == MultiPoly::constant(m, 1)))
        throw std::logic_error("secular polynomial is not monic");
    return s;
}

std::vector<MultiPoly> ep_conditions(int n) {
    SecularPolynomial s = secular_symbolic(n);
    std::vector<MultiPoly> conds;
    for (int k = n - 2; k >= 0; --k) {
        const MultiPoly& c = s.coeffs[static_cast<size_t>(k)];
        if (!c.is_zero()) conds.push_back(c);
    }
    if (static_cast<int>(conds.size()) != coupling_count(n))
        throw std::logic_error("condition count does not match coupling count");
    return conds;
}

std::vector<Complex> secular_numeric(const Matrix& h) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n) throw std::invalid_argument("matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && h(i, j) != Complex(0, 0))
                throw std::invalid_argument("tridiagonal matrix required");

    std::vector<Complex> prev2 = {Complex(1, 0)};
    std::vector<Complex> prev = {-h(0, 0), Complex(1, 0)};
    for (int k = 2; k <= n; ++k) {
        std::vector<Complex> cur(static_cast<size_t>(k) + 1, Complex(0, 0));
        const Complex d = h(k - 1, k - 1);
        for (size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] += prev[i];
            cur[i] -= d * prev[i];
        }
        const Complex off = h(k - 2, k - 1) * h(k - 1, k - 2);
        for (size_t i = 0; i < prev2.size(); ++i) cur[i] -= off * prev2[i];
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

std::string SecularPolynomial::to_string() const {
    std::vector<std::string> names = coupling_names(n);
    std::ostringstream out;
    bool first = true;
    for (int k = n; k >= 0; --k) {
        const MultiPoly& c = coeffs[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) out << "+";
        first = false;
        const bool is_one = (c == MultiPoly::constant(c.nvars, 1));
        if (k == 0) {
            out << "(" << c.to_string(names) << ")";
        } else {
            if (!is_one) out << "(" << c.to_string(names) << ")*";
            out << "E";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace epnlab
