#ifndef AVGRECON_HILBERT_HPP
#define AVGRECON_HILBERT_HPP

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "avgrecon/errors.hpp"

namespace avgrecon {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Construction cap: the closed-form inverse is exact for any k, but all
/// consumers of the plan pipeline stop at 12 (conditioning past that point
/// is useless in double precision anyway).
inline constexpr int kMaxHilbertOrder = 12;

BigInt binomial(long n, long k);

/// Dense square matrix with exact rational entries, row-major.
struct RationalMatrix {
    int order = 0;
    std::vector<BigRat> entries;

    explicit RationalMatrix(int k) : order(k), entries(static_cast<std::size_t>(k) * k) {}

    BigRat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
    const BigRat& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * order + j];
    }
};

/// H_k(i, j) = 1/(i + j + 1), 0 <= i, j < k.
RationalMatrix hilbert_matrix(int k);

/// Exact inverse from the closed-form integer entries
///   (H_k^{-1})_{ij} = (-1)^{i+j} (i+j+1) C(k+i, k-j-1) C(k+j, k-i-1) C(i+j, i)^2.
/// Every entry is an integer. Throws OrderTooLarge for k < 1 or k > 12.
RationalMatrix hilbert_inverse(int k);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
bool is_identity(const RationalMatrix& m);

std::vector<BigRat> apply(const RationalMatrix& m, std::span<const BigRat> v);
BigRat dot(std::span<const BigRat> a, std::span<const BigRat> b);

} // namespace avgrecon

#endif
