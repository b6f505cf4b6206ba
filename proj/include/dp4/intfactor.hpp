#pragma once

#include <map>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

// Factorization of arbitrary-precision integers: trial division with a
// Pollard-rho fallback, primality via mpz_probab_prime_p (deterministic for
// the sizes this project produces, since reps=40 leaves no composite through).
std::map<Integer, unsigned> factor_integer(Integer n);

// Largest squarefree divisor of |n| (n != 0).
Integer squarefree_kernel(const Integer& n);

// Sorted prime support of |n| (n != 0); 1 -> {}.
std::vector<Integer> prime_support(const Integer& n);

}  // namespace dp4
