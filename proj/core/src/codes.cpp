#include "sepcodes/codes.hpp"

#include <string>

namespace sepcodes {

Codeword rs_codeword(const FiniteField& field, std::span<const Felem> f,
                     std::uint32_t k) {
  if (poly_degree(f) >= static_cast<int>(k)) {
    throw DegreeTooHigh("polynomial degree " + std::to_string(poly_degree(f)) +
                        " >= k = " + std::to_string(k));
  }
  const std::uint32_t n = field.q() - 1;
  Codeword word(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    word[i - 1] = field.eval_poly(f, field.exp_at(i));
  }
  return word;
}

Code rs_code(const FiniteField& field, std::uint32_t k, std::uint64_t cap) {
  if (k < 1 || k > field.q() - 1) {
    throw BadParameters("RS dimension k must satisfy 1 <= k <= q-1");
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (count > cap / field.q()) {
      throw TooLarge("q^k exceeds word cap " + std::to_string(cap));
    }
    count *= field.q();
  }

  Code code;
  code.q = field.q();
  code.n = field.q() - 1;
  code.words.reserve(count);
  std::vector<Felem> coeffs(k, 0);
  for (std::uint64_t j = 0; j < count; ++j) {
    std::uint64_t v = j;
    for (std::uint32_t i = 0; i < k; ++i) {
      coeffs[i] = static_cast<Felem>(v % field.q());
      v /= field.q();
    }
    code.words.push_back(rs_codeword(field, coeffs, k));
  }
  return code;
}

std::uint32_t hamming_distance(const Codeword& a, const Codeword& b) {
  if (a.size() != b.size()) throw LengthMismatch("word lengths differ");
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::uint32_t min_distance(const Code& code, std::uint64_t pair_cap) {
  const std::uint64_t M = code.words.size();
  if (M < 2) throw SingleWord("min_distance needs at least two words");
  if (M * (M - 1) / 2 > pair_cap) {
    throw TooLarge("pairwise comparison count exceeds cap");
  }
  std::uint32_t best = code.n + 1;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = i + 1; j < M; ++j) {
      const std::uint32_t d = hamming_distance(code.words[i], code.words[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

std::vector<Felem> rs_coefficients(const FiniteField& field,
                                   const Codeword& word) {
  const std::uint32_t n = field.q() - 1;
  if (word.size() != n) throw LengthMismatch("word length must be q-1");
  // c_j = -sum_i y_i alpha^{-ij}; the inverse of the evaluation transform
  // over the n-th roots of unity (n = q-1 is -1 mod p).
  std::vector<Felem> coeffs(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    Felem acc = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (word[i - 1] == 0) continue;
      const std::uint64_t e =
          (static_cast<std::uint64_t>(n) - j % n) * i % n;  // alpha^{-ij}
      acc = field.add(acc, field.mul(word[i - 1], field.exp_at(e)));
    }
    coeffs[j] = field.neg(acc);
  }
  return coeffs;
}

bool is_rs_codeword(const FiniteField& field, const Codeword& word,
                    std::uint32_t k) {
  if (word.size() != field.q() - 1) return false;
  for (const Symbol s : word) {
    if (s >= field.q()) return false;
  }
  const auto coeffs = rs_coefficients(field, word);
  return poly_degree(coeffs) < static_cast<int>(k);
}

}  // namespace sepcodes
