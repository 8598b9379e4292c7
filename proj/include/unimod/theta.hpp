#pragma once

// Finite windows of the degree-g theta map: tables of representation counts
// r_L(S) over all even positive semidefinite S with diagonal <= bound.
// Counts are unnormalized (no 1/|Aut(L)| factor); a positive scalar per row
// does not change linear (in)dependence. A rank deficit inside a window is
// evidence of a kernel, not a proof: more columns can only raise the rank.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unimod/enumerate.hpp"
#include "unimod/lattice.hpp"
#include "unimod/quadform.hpp"

namespace unimod {

struct ThetaTable {
  std::vector<std::string> lattices;
  std::vector<GramMatrix> columns;
  std::vector<std::vector<Int>> counts;  // counts[lattice][column]

  IntMatrix matrix() const;
  // Header "lattice\t<S>\t<S>...", then one line per lattice.
  std::string to_tsv() const;
};

// All even PSD symmetric g x g integer matrices with diagonal in
// {0, 2, ..., bound}. Order: diagonals lexicographically ascending, then the
// upper-triangle off-diagonals row by row, each ascending.
std::vector<GramMatrix> enumerate_index_matrices(std::size_t g, long bound);

// Throws std::invalid_argument when the lattices differ in rank.
ThetaTable theta_table(const std::vector<Lattice>& lattices, std::size_t g, long bound,
                       const EnumOptions& options = {});

std::size_t theta_rank(const std::vector<Lattice>& lattices, std::size_t g, long bound,
                       const EnumOptions& options = {});

struct ThetaDifference {
  GramMatrix s;
  Int first;   // r_{L1}(S)
  Int second;  // r_{L2}(S)
};

// First column (in enumerate_index_matrices order) where the two lattices'
// counts differ.
std::optional<ThetaDifference> first_difference(const Lattice& a, const Lattice& b, std::size_t g,
                                                long bound, const EnumOptions& options = {});

// Lexicographically smallest D P S P^T D over permutations P and sign
// matrices D; r_L is constant on these classes. Identity above 6 x 6.
GramMatrix signed_permutation_canonical(const GramMatrix& s);

}  // namespace unimod
