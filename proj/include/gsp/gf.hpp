#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace gsp {

// Prime-field scalar for Eigen matrices. The modulus is a template
// parameter so field arithmetic compiles to branch-light integer code and
// matrices over different fields are distinct types.
template <int P>
class GF {
    static_assert(P >= 2, "modulus must be a prime");

public:
    constexpr GF() = default;
    constexpr GF(int x) : v_(static_cast<std::int16_t>(((x % P) + P) % P)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr GF operator+(GF a, GF b) { return GF((a.v_ + b.v_) % P); }
    friend constexpr GF operator-(GF a, GF b) { return GF((a.v_ - b.v_ + P) % P); }
    friend constexpr GF operator*(GF a, GF b) { return GF((a.v_ * b.v_) % P); }
    friend constexpr GF operator/(GF a, GF b) { return a * b.inverse(); }
    constexpr GF operator-() const { return GF(P - v_); }

    GF& operator+=(GF o) { return *this = *this + o; }
    GF& operator-=(GF o) { return *this = *this - o; }
    GF& operator*=(GF o) { return *this = *this * o; }
    GF& operator/=(GF o) { return *this = *this / o; }

    constexpr GF inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in GF");
        // Fermat: v^(P-2); P is tiny so the loop is fine.
        int acc = 1;
        for (int i = 0; i < P - 2; ++i) acc = (acc * v_) % P;
        return GF(acc);
    }

    friend constexpr bool operator==(GF a, GF b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(GF a, GF b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(GF a, GF b) { return a.v_ < b.v_; }

private:
    std::int16_t v_ = 0;
};

template <int P>
std::ostream& operator<<(std::ostream& os, GF<P> x) {
    return os << x.value();
}

template <int P>
using MatF = Eigen::Matrix<GF<P>, Eigen::Dynamic, Eigen::Dynamic>;
template <int P>
using RowF = Eigen::Matrix<GF<P>, 1, Eigen::Dynamic>;

}  // namespace gsp

namespace Eigen {

template <int P>
struct NumTraits<gsp::GF<P>> : GenericNumTraits<gsp::GF<P>> {
    using Real = gsp::GF<P>;
    using NonInteger = gsp::GF<P>;
    using Nested = gsp::GF<P>;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 2,
    };
    static inline Real epsilon() { return gsp::GF<P>(0); }
    static inline Real dummy_precision() { return gsp::GF<P>(0); }
    static inline int digits10() { return 1; }
};

}  // namespace Eigen
