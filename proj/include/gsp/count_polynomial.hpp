#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsp {

// Integer-coefficient polynomial in q used for exact point counts.
// Stored in expanded form (coeffs[k] is the coefficient of q^k); the
// factored presentation q^a (q-1)^b P(q) is derived on demand.
class CountPolynomial {
public:
    CountPolynomial() = default;  // the zero polynomial
    explicit CountPolynomial(std::vector<long long> coeffs);

    static CountPolynomial zero() { return CountPolynomial(); }
    static CountPolynomial one() { return CountPolynomial({1}); }
    static CountPolynomial q_pow(int k);

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long leading() const { return c_.empty() ? 0 : c_.back(); }
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
    }

    CountPolynomial operator+(const CountPolynomial& o) const;
    CountPolynomial operator-(const CountPolynomial& o) const;
    CountPolynomial operator*(const CountPolynomial& o) const;
    CountPolynomial& operator+=(const CountPolynomial& o) { return *this = *this + o; }

    bool operator==(const CountPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const CountPolynomial& o) const { return c_ != o.c_; }

    // Multiply by q^e. Negative e performs exact division and throws
    // NonDivisible when a low-order coefficient is nonzero.
    CountPolynomial shifted(int e) const;

    // Exact division by (q-1)^k; throws NonDivisible on any remainder.
    CountPolynomial div_q_minus_1(int k) const;

    // Exact evaluation. The wide variant never overflows for the sizes
    // this library produces; eval() additionally checks the int64 range.
    __int128 eval_wide(long long q) const;
    long long eval(long long q) const;

    // Factored presentation: *this == q^a (q-1)^b rest.
    struct Factored;
    Factored factored() const;

    // "q^2*(q-1)*(q^2+q+1)" style; expanded polynomial when a=b=0.
    std::string factored_str() const;
    std::string str() const;  // expanded, highest power first

private:
    std::vector<long long> c_;
    void trim();
};

struct CountPolynomial::Factored {
    int a = 0;
    int b = 0;
    CountPolynomial rest;
};

}  // namespace gsp
