#include "ecc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecc/errors.hpp"

namespace ecc {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& coeff) {
    std::vector<mpz_class> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

double IntPolynomial::eval(double x) const {
    double acc = 0.0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[k].get_d();
    return acc;
}

mpz_class IntPolynomial::eval_exact(const mpz_class& x) const {
    mpz_class acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[k];
    return acc;
}

IntPolynomial IntPolynomial::shifted_down(int k) const {
    if (trailing_zero_coeffs() < k)
        throw Error("polynomial is not divisible by x^" + std::to_string(k));
    std::vector<mpz_class> c(coeffs_.begin() + k, coeffs_.end());
    return IntPolynomial(std::move(c));
}

int IntPolynomial::trailing_zero_coeffs() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[k] == 0) ++k;
    return k;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& k) const {
    std::vector<mpz_class> c = coeffs_;
    for (auto& v : c) v *= k;
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

double bisect(const IntPolynomial& p, double lo, double hi, double flo) {
    // invariant: sign(p(lo)) == sign(flo) != sign(p(hi)), flo != 0
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = p.eval(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0))
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double largest_root(const IntPolynomial& p) {
    if (p.degree() < 1) throw NoRootInBracket("constant polynomial has no root");
    const double lead = std::fabs(p.coeff(p.degree()).get_d());
    double sum = 0.0;
    for (int k = 0; k < p.degree(); ++k) sum += std::fabs(p.coeff(k).get_d()) / lead;
    const double upper = 1.0 + std::max(1.0, sum);

    // rightmost sign change on [0, upper]; the grid is refined until the
    // change shows up, since the bound can sit far above the roots
    for (int steps = 4096; steps <= (1 << 22); steps *= 16) {
        double hi = upper;
        double fhi = p.eval(hi);
        if (fhi == 0.0) return hi;
        for (int i = steps - 1; i >= 0; --i) {
            const double lo = upper * i / steps;
            const double flo = p.eval(lo);
            if (flo == 0.0) return lo;  // grid point happens to be the root
            if ((flo > 0) != (fhi > 0)) return bisect(p, lo, hi, flo);
            hi = lo;
            fhi = flo;
        }
    }
    throw NoRootInBracket("no sign change in [0, " + std::to_string(upper) + "]");
}

double root_in_bracket(const IntPolynomial& p, double lo, double hi) {
    const double flo = p.eval(lo);
    const double fhi = p.eval(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NoRootInBracket("no sign change on the supplied bracket");
    return bisect(p, lo, hi, flo);
}

}  // namespace ecc
