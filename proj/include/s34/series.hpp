#pragma once

// Truncated Taylor series in one variable, used for nu-derivative towers.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace s34 {

template <class T>
class Series {
public:
    Series() = default;
    explicit Series(std::size_t order, T constant = T(0)) : c_(order + 1, T(0)) { c_[0] = constant; }

    static Series variable(std::size_t order, T at)
    {
        Series s(order, at);
        if (order >= 1) s.c_[1] = T(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    T& operator[](std::size_t k) { return c_[k]; }
    const T& operator[](std::size_t k) const { return c_[k]; }
    T value() const { return c_[0]; }

    // n-th derivative at the expansion point.
    T derivative(std::size_t n) const
    {
        if (n > order()) return T(0);
        T f = T(1);
        for (std::size_t k = 2; k <= n; ++k) f *= T(static_cast<double>(k));
        return c_[n] * f;
    }

    // d/dx, losing one order.
    Series diff() const
    {
        Series r(order() == 0 ? 0 : order() - 1);
        for (std::size_t k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * T(static_cast<double>(k));
        return r;
    }

    Series truncated(std::size_t n) const
    {
        Series r(n);
        for (std::size_t k = 0; k <= std::min(n, order()); ++k) r.c_[k] = c_[k];
        return r;
    }

    Series& operator+=(const Series& o)
    {
        const std::size_t n = std::min(order(), o.order());
        c_.resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        const std::size_t n = std::min(order(), o.order());
        c_.resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series& operator/=(const Series& o) { return *this = *this / o; }
    Series& operator+=(const T& s) { c_[0] += s; return *this; }
    Series& operator-=(const T& s) { c_[0] -= s; return *this; }
    Series& operator*=(const T& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }
    Series& operator/=(const T& s)
    {
        for (auto& x : c_) x /= s;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator+(Series a, const T& s) { return a += s; }
    friend Series operator+(const T& s, Series a) { return a += s; }
    friend Series operator-(Series a, const T& s) { return a -= s; }
    friend Series operator-(const T& s, const Series& a) { return -a + s; }
    friend Series operator*(Series a, const T& s) { return a *= s; }
    friend Series operator*(const T& s, Series a) { return a *= s; }
    friend Series operator/(Series a, const T& s) { return a /= s; }
    friend Series operator-(Series a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Series operator*(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    friend Series operator/(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t k = 0; k <= n; ++k) {
            T acc = a.c_[k];
            for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * r.c_[k - j];
            r.c_[k] = acc / b.c_[0];
        }
        return r;
    }

    friend Series operator/(const T& s, const Series& b) { return Series(b.order(), s) / b; }

private:
    std::vector<T> c_{T(0)};
};

} // namespace s34
