#include "gsp/count_polynomial.hpp"

#include <algorithm>
#include <limits>

#include "gsp/errors.hpp"

namespace gsp {

CountPolynomial::CountPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void CountPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CountPolynomial CountPolynomial::q_pow(int k) {
    std::vector<long long> c(k + 1, 0);
    c[k] = 1;
    return CountPolynomial(std::move(c));
}

CountPolynomial CountPolynomial::operator+(const CountPolynomial& o) const {
    std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return CountPolynomial(std::move(c));
}

CountPolynomial CountPolynomial::operator-(const CountPolynomial& o) const {
    std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return CountPolynomial(std::move(c));
}

CountPolynomial CountPolynomial::operator*(const CountPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return CountPolynomial();
    std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return CountPolynomial(std::move(c));
}

CountPolynomial CountPolynomial::shifted(int e) const {
    if (c_.empty()) return CountPolynomial();
    if (e >= 0) {
        std::vector<long long> c(c_.size() + e, 0);
        std::copy(c_.begin(), c_.end(), c.begin() + e);
        return CountPolynomial(std::move(c));
    }
    int k = -e;
    if (static_cast<int>(c_.size()) <= k) throw NonDivisible("polynomial not divisible by q^" + std::to_string(k));
    for (int i = 0; i < k; ++i)
        if (c_[i] != 0) throw NonDivisible("polynomial not divisible by q^" + std::to_string(k));
    return CountPolynomial(std::vector<long long>(c_.begin() + k, c_.end()));
}

CountPolynomial CountPolynomial::div_q_minus_1(int k) const {
    CountPolynomial r = *this;
    for (int t = 0; t < k; ++t) {
        if (r.is_zero()) throw NonDivisible("zero polynomial divided by (q-1)");
        // synthetic division by (q-1): remainder is the value at q=1
        std::vector<long long> out(r.c_.size() - 1, 0);
        long long carry = 0;
        for (int i = static_cast<int>(r.c_.size()) - 1; i >= 1; --i) {
            carry += r.c_[i];
            out[i - 1] = carry;
        }
        if (carry + r.c_[0] != 0) throw NonDivisible("(q-1) does not divide polynomial");
        r = CountPolynomial(std::move(out));
    }
    return r;
}

__int128 CountPolynomial::eval_wide(long long q) const {
    __int128 acc = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * q + c_[i];
    return acc;
}

long long CountPolynomial::eval(long long q) const {
    __int128 v = eval_wide(q);
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("polynomial evaluation overflows int64");
    return static_cast<long long>(v);
}

CountPolynomial::Factored CountPolynomial::factored() const {
    Factored f;
    if (is_zero()) return f;
    CountPolynomial r = *this;
    while (r.c_[0] == 0) {
        r = r.shifted(-1);
        ++f.a;
    }
    while (true) {
        if (r.eval_wide(1) != 0) break;
        r = r.div_q_minus_1(1);
        ++f.b;
    }
    f.rest = r;
    return f;
}

namespace {

std::string term_str(long long coeff, int power, bool first) {
    std::string s;
    long long a = coeff;
    if (first) {
        if (a < 0) {
            s += '-';
            a = -a;
        }
    } else {
        s += (a < 0) ? '-' : '+';
        if (a < 0) a = -a;
    }
    if (a != 1 || power == 0) s += std::to_string(a);
    if (power > 0) {
        s += 'q';
        if (power > 1) s += '^' + std::to_string(power);
    }
    return s;
}

}  // namespace

std::string CountPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        s += term_str(c_[i], i, first);
        first = false;
    }
    return s;
}

std::string CountPolynomial::factored_str() const {
    if (is_zero()) return "0";
    Factored f = factored();
    if (f.a == 0 && f.b == 0) return f.rest.str();
    std::string s;
    if (f.a > 0) s += (f.a == 1) ? "q" : "q^" + std::to_string(f.a);
    if (f.b > 0) {
        if (!s.empty()) s += '*';
        s += "(q-1)";
        if (f.b > 1) s += '^' + std::to_string(f.b);
    }
    if (f.rest != CountPolynomial::one()) {
        if (!s.empty()) s += '*';
        s += '(' + f.rest.str() + ')';
    }
    return s;
}

}  // namespace gsp
