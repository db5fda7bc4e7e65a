#pragma once

#include <cstdint>
#include <vector>

#include "weilbench/gf.hpp"

namespace weilbench {

// Dense univariate polynomial, low degree first, no trailing zeros.
using UPoly = std::vector<Elem>;

namespace up {

inline int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
void trim(UPoly& a);
UPoly from_codes(std::initializer_list<std::uint32_t> codes);
UPoly x_power(const Field& F, unsigned k);
UPoly add(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
UPoly scale(const Field& F, const UPoly& a, Elem c);
void divrem(const Field& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem);
UPoly rem(const Field& F, const UPoly& a, const UPoly& b);
UPoly quo(const Field& F, const UPoly& a, const UPoly& b);
UPoly monic(const Field& F, const UPoly& a);
UPoly gcd(const Field& F, UPoly a, UPoly b);
UPoly derivative(const Field& F, const UPoly& a);
Elem eval(const Field& F, const UPoly& a, Elem x);
UPoly mulmod(const Field& F, const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const Field& F, const UPoly& a, std::uint64_t e, const UPoly& m);
// X^(Q^k) mod m where Q = |F|.
UPoly frobenius_power_x(const Field& F, unsigned k, const UPoly& m);
bool is_irreducible(const Field& F, const UPoly& g);
bool is_squarefree(const Field& F, const UPoly& a);

// Monic irreducible factors of a squarefree polynomial, sorted by degree then codes.
std::vector<UPoly> factor_squarefree(const Field& F, const UPoly& a);
// Distinct roots in F, sorted by code.
std::vector<Elem> roots(const Field& F, const UPoly& a);
// Number of distinct roots in F; a zero polynomial counts every element.
std::uint64_t count_distinct_roots(const Field& F, const UPoly& a);

}  // namespace up
}  // namespace weilbench
