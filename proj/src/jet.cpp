#include "liouville/jet.hpp"

#include <random>

namespace lv {

template <class T>
T Jet3<T>::laplacian() const {
    T s(0);
    for (int i = 0; i < n; ++i) s += h(i, i);
    return s;
}

template <class T>
T Jet3<T>::laplacian_grad(int j) const {
    T s(0);
    for (int k = 0; k < n; ++k) s += d(k, k, j);
    return s;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (index * 0xd1b54a32d192ed03ULL);
    splitmix64(s);
    return splitmix64(s);
}

namespace {

constexpr long kGrid = 1L << 20;

template <class T>
void set_sym3(Jet3<T>& j, int a, int b, int c, const T& x) {
    j.d(a, b, c) = x;
    j.d(a, c, b) = x;
    j.d(b, a, c) = x;
    j.d(b, c, a) = x;
    j.d(c, a, b) = x;
    j.d(c, b, a) = x;
}

} // namespace

template <class T>
Jet3<T> sample_jet(std::uint64_t seed, int n, JetMode mode, const ProblemParams& prob) {
    if (n < 2) throw DomainError("jet dimension must be at least 2");
    std::mt19937_64 rng(seed);
    // 21 random bits mapped onto the 2^-20 grid.
    auto unit = [&]() { return to_real<T>(Rational(static_cast<long>(rng() >> 43), kGrid) - Rational(1)); };
    auto half = [&]() { return to_real<T>(Rational(1, 2) + Rational(static_cast<long>(rng() >> 44), kGrid)); };

    Jet3<T> j;
    j.n = n;
    j.v = half();
    j.g = half();
    j.H.assign(static_cast<size_t>(n) * n, T(0));
    j.D3.assign(static_cast<size_t>(n) * n * n, T(0));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            T x = unit();
            j.h(a, b) = x;
            j.h(b, a) = x;
        }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) set_sym3(j, a, b, c, unit());
    if (mode == JetMode::Free) return j;

    const int l = n - 1;
    T N = to_real<T>(prob.N), M = to_real<T>(prob.M), p = to_real<T>(prob.p), q = to_real<T>(prob.q);
    T vp = power(j.v, prob.p);
    T gq = prob.M.is_zero() ? T(0) : power(j.g, prob.q);
    T rest(0);
    for (int k = 0; k < l; ++k) rest += j.h(k, k);
    j.h(l, l) = -N * vp - M * gq - rest;
    // Gradient of the equation: (Delta v)_j = -p N v^(p-1) v_j - q M g^(q-1) g_j with g_j = v_1j.
    auto target = [&](int c) {
        T t = -q * M * gq / j.g * j.h(0, c);
        if (c == 0) t -= p * N * vp / j.v * j.g;
        return t;
    };
    for (int c = 0; c < l; ++c) {
        T s(0);
        for (int k = 0; k < l; ++k) s += j.d(k, k, c);
        set_sym3(j, l, l, c, T(target(c) - s));
    }
    T s(0);
    for (int k = 0; k < l; ++k) s += j.d(k, k, l);
    j.d(l, l, l) = target(l) - s;
    return j;
}

template <class T>
Jet3<T> rescale_jet(const Jet3<T>& jet, const T& k, const Rational& a) {
    Jet3<T> r = jet;
    T ka = power(k, a);
    r.v = ka * jet.v;
    r.g = ka * k * jet.g;
    for (auto& x : r.H) x *= ka * k * k;
    for (auto& x : r.D3) x *= ka * k * k * k;
    return r;
}

template <class T>
DivergenceBundle<T> divergences(const Jet3<T>& j, const Rational& alpha_r, const Rational& gamma_r,
                                const Rational& p_r, const Rational& q_r, const T& gq) {
    const int n = j.n;
    const T alpha = to_real<T>(alpha_r), gamma = to_real<T>(gamma_r), p = to_real<T>(p_r), q = to_real<T>(q_r);
    const T& v = j.v;
    const T& g = j.g;
    const T lap = j.laplacian(), lap1 = j.laplacian_grad(0), h11 = j.h(0, 0);
    const T w = power(v, alpha_r) * power(g, gamma_r);
    const T nn = to_real<T>(Rational(n));

    // div(v^a g^b u grad v) = v^a g^b [a g^2 u / v + b u v_11 + div(u grad v)] when u is scalar.
    auto plain = [&](const T& weight, const T& a, const T& b) { return weight * (a * g * g / v + b * h11 + lap); };

    DivergenceBundle<T> d;
    d.A = w * (alpha * g * g * lap / v + gamma * h11 * lap + lap1 * g + lap * lap);

    // Y_i = E_i1 g; div Y = (1 - 1/n) (Delta v)_1 g + sum E_ij v_ij.
    T e_h(0), h1e(0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            T e = j.h(a, b);
            if (a == b) e -= lap / nn;
            e_h += e * j.h(a, b);
            if (b == 0) h1e += j.h(0, a) * e;
        }
    T e11 = h11 - lap / nn;
    d.DE = w * (alpha * g * g * e11 / v + gamma * h1e + (T(1) - T(1) / nn) * lap1 * g + e_h);

    d.D1 = plain(w * g * g / v, alpha - T(1), gamma + T(2));
    d.Dq = plain(w * gq, alpha, gamma + q);
    d.Dp = plain(w * power(v, p_r), alpha + p, gamma);
    return d;
}

#define LV_JET_INSTANTIATE(T)                                                                              \
    template struct Jet3<T>;                                                                               \
    template Jet3<T> sample_jet<T>(std::uint64_t, int, JetMode, const ProblemParams&);                     \
    template Jet3<T> rescale_jet<T>(const Jet3<T>&, const T&, const Rational&);                            \
    template DivergenceBundle<T> divergences<T>(const Jet3<T>&, const Rational&, const Rational&,          \
                                                const Rational&, const Rational&, const T&);

LV_JET_INSTANTIATE(double)
LV_JET_INSTANTIATE(long double)
LV_JET_INSTANTIATE(Extended)
LV_JET_INSTANTIATE(Rational)

} // namespace lv
