#pragma once

#include <string>

#include "homrep/freegroup.hpp"

namespace homrep::cli {

// Small expression language naming automorphisms for the command line:
//
//   id                    identity
//   conj(i,j)             a_i -> a_j^-1 a_i a_j
//   comm(i,j,k)           a_i -> a_i [a_j, a_k]
//   ctrans(e)             a_1 -> a_1 [a_2^e, a_3^e]
//   rt(i,j) / lt(i,j)     right / left transvection a_i -> a_i a_j / a_j a_i
//   inv(i)                a_i -> a_i^-1
//   swap(i,j)             a_i <-> a_j
//   compose(f,g)          apply g first, then f
//   commutator(f,g)       f g f^-1 g^-1
//   power(f,n)            n may be negative
//   inverse(f)
//
// Whitespace is free; integers are decimal with optional sign.
freegroup::Automorphism parse_element(const std::string& text, int rank);

}  // namespace homrep::cli
