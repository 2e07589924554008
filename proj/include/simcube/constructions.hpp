#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simcube/simplex.hpp"

namespace simcube {

// Square +-1 matrix with H * H^T = m * I.
struct HadamardMatrix {
  std::size_t order = 0;
  std::vector<int8_t> entries;  // row-major, values +1 / -1

  int entry(std::size_t i, std::size_t j) const {
    return entries[i * order + j];
  }
};

bool is_hadamard(const HadamardMatrix& h);

// Constructs an order-m Hadamard matrix from the base cases m = 1, 2 by
// doubling (Kronecker product with the order-2 matrix) and by the
// quadratic-residue construction for m = q + 1, q prime, q = 3 (mod 4).
// Throws UnsupportedOrderError when no supported construction applies.
HadamardMatrix hadamard(std::size_t m);

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b);

// Sign-flips columns, then rows, so the first row and first column are
// all +1. The fixed order keeps the output deterministic.
HadamardMatrix normalize_hadamard(HadamardMatrix h);

// Regular simplex with vertices on cube vertices, built from the
// normalized order-(n+1) Hadamard matrix: reverse each row, read the
// first n entries as a vertex of [-1,1]^n, then map to [0,1]^n by
// x -> (x+1)/2. Requires n+1 to be a constructible Hadamard order.
Simplex regular_simplex(std::size_t n);

// Corner simplex: vertices (0,1,...,1), (1,0,1,...,1), ..., (1,...,1,0)
// and the origin. Requires n >= 2 (the vertex list degenerates at n = 1).
Simplex s_star(std::size_t n);

enum class NamedSimplex { S1, S2, Perfect5 };

Simplex named(NamedSimplex which);

// Parameterized families of simplices with constant node-matrix
// determinant: R(s,t) in R^5 (det 1), T(t) in R^7 (det 8), S9(t) in R^9
// (det 25).
struct FamilyParam {
  enum class Tag { R, T, S9 };
  Tag tag;
  Rational s;  // used by R only
  Rational t;

  // Parameter box guaranteeing the member lies in the unit cube:
  // [1/3,2/3]^2 for R, [0,1] for T and S9.
  bool in_cube_range() const;
};

Simplex family_simplex(const FamilyParam& p);

// Closed-form xi and alpha of a family member, exact. max_neg_lambda is
// the inner maximum of the xi formula where a closed form for it exists
// (family R). Throws DomainError outside the family's parameter box.
struct ClosedForm {
  Rational xi;
  Rational alpha;
  std::optional<Rational> max_neg_lambda;
};

ClosedForm closed_form(const FamilyParam& p);

// String addressing used by the CLI: "s1", "s2", "perfect5", "sstar:<n>",
// "regular:<n>", "R:<s>:<t>", "T:<t>", "S9:<t>". Throws ParseError on an
// unknown identifier.
Simplex builtin_simplex(std::string_view id);

}  // namespace simcube
