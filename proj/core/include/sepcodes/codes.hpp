#ifndef SEPCODES_CODES_HPP_
#define SEPCODES_CODES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sepcodes/finite_field.hpp"

namespace sepcodes {

using Symbol = std::uint32_t;
using Codeword = std::vector<Symbol>;

// A q-ary block code as an explicit list of distinct words of length n.
struct Code {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::vector<Codeword> words;

  std::size_t size() const { return words.size(); }
};

// Evaluation of f (deg f < k) at alpha^1, ..., alpha^{q-1}, in that order.
// Coordinate i (1-based) is f(alpha^i); 0 is never an evaluation point.
Codeword rs_codeword(const FiniteField& field, std::span<const Felem> f,
                     std::uint32_t k);

// RS_k(q): all q^k evaluations of polynomials of degree < k, including the
// zero polynomial; word j corresponds to the coefficient vector given by the
// base-q digits of j, constant coefficient least significant.
// Throws TooLarge when q^k > cap.
Code rs_code(const FiniteField& field, std::uint32_t k, std::uint64_t cap);

// Minimum pairwise Hamming distance. Throws SingleWord for M < 2 and
// TooLarge when M(M-1)/2 > pair_cap.
std::uint32_t min_distance(const Code& code, std::uint64_t pair_cap);

// Coefficients (constant first, length q-1) of the unique polynomial of
// degree < q-1 interpolating the word values at alpha^1..alpha^{q-1}.
// Inverse of the evaluation map; used for independent code-membership checks.
std::vector<Felem> rs_coefficients(const FiniteField& field,
                                   const Codeword& word);

// Whether the word lies in RS_k(q), decided by interpolation.
bool is_rs_codeword(const FiniteField& field, const Codeword& word,
                    std::uint32_t k);

std::uint32_t hamming_distance(const Codeword& a, const Codeword& b);

}  // namespace sepcodes

#endif  // SEPCODES_CODES_HPP_
