#include "avgrecon/hilbert.hpp"

#include <string>

namespace avgrecon {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

RationalMatrix hilbert_matrix(int k) {
    RationalMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.at(i, j) = BigRat(1, i + j + 1);
    return m;
}

RationalMatrix hilbert_inverse(int k) {
    if (k < 1 || k > kMaxHilbertOrder)
        throw OrderTooLarge("hilbert_inverse: k = " + std::to_string(k) +
                            " outside [1, " + std::to_string(kMaxHilbertOrder) + "]");
    RationalMatrix m(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            BigInt e = binomial(k + i, k - j - 1) * binomial(k + j, k - i - 1);
            const BigInt c = binomial(i + j, i);
            e *= c * c;
            e *= i + j + 1;
            if ((i + j) % 2 != 0)
                e = -e;
            m.at(i, j) = BigRat(e);
        }
    }
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.order);
    for (int i = 0; i < a.order; ++i) {
        for (int j = 0; j < a.order; ++j) {
            BigRat s = 0;
            for (int l = 0; l < a.order; ++l)
                s += a.at(i, l) * b.at(l, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

bool is_identity(const RationalMatrix& m) {
    for (int i = 0; i < m.order; ++i)
        for (int j = 0; j < m.order; ++j)
            if (m.at(i, j) != BigRat(i == j ? 1 : 0))
                return false;
    return true;
}

std::vector<BigRat> apply(const RationalMatrix& m, std::span<const BigRat> v) {
    std::vector<BigRat> r(static_cast<std::size_t>(m.order));
    for (int i = 0; i < m.order; ++i) {
        BigRat s = 0;
        for (int j = 0; j < m.order; ++j)
            s += m.at(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

BigRat dot(std::span<const BigRat> a, std::span<const BigRat> b) {
    BigRat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace avgrecon
