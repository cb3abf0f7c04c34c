#pragma once

#include "liouville/coefficients.hpp"
#include "liouville/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <type_traits>
#include <vector>

namespace lv {

using Extended = boost::multiprecision::cpp_bin_float_50;

// Rational constant in the working number type.
template <class T>
T to_real(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>) return r;
    else if constexpr (std::is_same_v<T, double>) return r.to_double();
    else if constexpr (std::is_same_v<T, long double>) return r.to_long_double();
    else return T(r.num().get_str()) / T(r.den().get_str());
}

template <class T>
double to_double_of(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) return x.to_double();
    else return static_cast<double>(x);
}

template <class T>
T abs_of(const T& x) {
    return x < T(0) ? T(-x) : x;
}

// x^e for x > 0. Exact types only accept integer exponents.
template <class T>
T power(const T& x, const Rational& e) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (!e.is_integer()) throw DomainError("non-integer power in exact arithmetic");
        return x.pow(e.num().get_si());
    } else {
        using std::pow;
        return pow(x, to_real<T>(e));
    }
}

enum class JetMode { Free, Pde };

// Third-order jet at a point in the adapted frame: grad v = (g, 0, ..., 0).
template <class T>
struct Jet3 {
    int n = 3;
    T v, g;
    std::vector<T> H;    // n*n, symmetric
    std::vector<T> D3;   // n*n*n, fully symmetric

    T& h(int i, int j) { return H[i * n + j]; }
    const T& h(int i, int j) const { return H[i * n + j]; }
    T& d(int i, int j, int k) { return D3[(i * n + j) * n + k]; }
    const T& d(int i, int j, int k) const { return D3[(i * n + j) * n + k]; }

    T laplacian() const;
    // (Delta v)_j = sum_k v_kkj
    T laplacian_grad(int j) const;
};

std::uint64_t splitmix64(std::uint64_t& state);
// Independent stream seed for trial `index` of a run seeded with `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Entries uniform in [-1, 1], v and g in [0.5, 1.5], all on a 2^-20 grid so they are
// exact in every number type. Pde mode then solves v_nn and v_nnj so that
// Delta v = -N v^p - M g^q holds together with its first derivatives.
template <class T>
Jet3<T> sample_jet(std::uint64_t seed, int n, JetMode mode, const ProblemParams& prob);

// Jet of the rescaled function k^a v(k x), a = 2/(p-1).
template <class T>
Jet3<T> rescale_jet(const Jet3<T>& jet, const T& k, const Rational& a);

// Divergences of the weighted vector fields, expanded by the chain rule.
template <class T>
struct DivergenceBundle {
    T A;    // div(v^alpha g^gamma Delta v grad v)
    T DE;   // div(v^alpha g^gamma E grad v), E the traceless hessian
    T D1;   // div(v^(alpha-1) g^(gamma+2) grad v)
    T Dq;   // div(v^alpha g^(gamma+q) grad v)
    T Dp;   // div(v^(alpha+p) g^gamma grad v)
};

// `gq` is g^q, passed in so exact arithmetic can supply zero when M = 0.
template <class T>
DivergenceBundle<T> divergences(const Jet3<T>& jet, const Rational& alpha, const Rational& gamma, const Rational& p,
                                const Rational& q, const T& gq);

} // namespace lv
