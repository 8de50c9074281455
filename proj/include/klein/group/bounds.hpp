#pragma once

// Orders of GL_d over prime fields and the resulting bound on the order of
// a group acting faithfully on the 10-dimensional torsion H_1(S, Z/p).

#include "klein/arith/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace klein {

bool is_prime(const Int& n);

/// Prime factorization by trial division, primes increasing.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
std::string format_factorization(const std::vector<std::pair<Int, unsigned>>& f);

/// prod_{k=0}^{d-1} (p^d - p^k).  Throws std::invalid_argument unless p is
/// prime and d >= 1.
Int gl_order(const Int& p, unsigned d);

/// gcd of gl_order(p, 10) over p = 3, 5, 7, 11.
Int automorphism_order_bound();

inline const std::vector<long> kBoundPrimes{3, 5, 7, 11};

}  // namespace klein
