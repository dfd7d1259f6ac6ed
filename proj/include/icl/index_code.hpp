#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icl/coloring.hpp"
#include "icl/gf.hpp"
#include "icl/graph.hpp"
#include "icl/rational.hpp"

namespace icl {

/// Columns [start, start + width) of the code matrix multiply user i's message.
struct UserBlock {
  std::size_t start = 0;
  std::size_t width = 0;
};

/// A linear index code: the server broadcasts code_matrix * [x_1; ...; x_n], where each
/// x_i is `message_len` symbols of the field.
struct IndexCode {
  GfMatrix code_matrix;
  std::vector<UserBlock> user_blocks;
  std::size_t message_len = 1;

  std::string scheme;
  std::optional<std::uint64_t> seed;
  std::size_t attempts = 1;
  std::vector<std::vector<std::size_t>> coloring;  // per-user color ids / set indices

  const PrimeField& field() const { return code_matrix.field(); }
  /// Transmitted symbols per message symbol.
  Rational broadcast_rate() const { return Rational(code_matrix.rows(), message_len); }
  /// rows * log2(q) / message_len.
  double bit_rate() const;
  GfMatrix block(std::size_t user) const;
};

/// Builds uniform blocks of width r for n users.
std::vector<UserBlock> uniform_blocks(std::size_t n, std::size_t r);

struct UserReport {
  std::size_t own_rank = 0;
  std::size_t interference_rank = 0;
  std::size_t joint_rank = 0;
  bool decodable = false;
};

struct VerificationReport {
  bool valid = false;
  std::vector<UserReport> per_user;
  std::vector<std::size_t> failing_users;
};

/// Linear decodability: user i decodes iff its block has full column rank and meets the
/// span of its interferers (users outside its side information) only in zero.
VerificationReport verify(const IndexCode& code, const Digraph& side_info);

struct ScalarConstruction {
  IndexCode code;
  LocalColoring coloring;  // on the interference graph
};

/// One MDS column per color of an optimal local coloring of the interference graph.
ScalarConstruction construct_scalar_code(const Digraph& side_info, const SolverCaps& caps = {});

/// Binary code of length chi_local + ceil(2 log2 n) with random color columns; retries
/// with fresh seeds until it verifies.
IndexCode construct_binary_code(const Digraph& side_info, std::uint64_t seed,
                                std::size_t max_attempts = 64, const SolverCaps& caps = {});

/// ceil(2 * log2(n)) computed in integers.
std::size_t binary_code_overhead(std::size_t n);

/// Integer form of a fractional local coloring: `sets` lists p independent sets
/// (with repetition, sorted) such that every vertex is in exactly r of them.
struct IntegerCover {
  std::size_t r = 1;
  std::size_t s = 0;             // r * objective
  std::vector<VertexMask> sets;  // length p
  std::size_t max_load = 0;      // max over v of sets meeting N+(v)
};

/// Scales weights to integers by the lcm of denominators, then removes excess coverage one
/// step at a time until every vertex is covered exactly r times.
IntegerCover reduce_fractional_solution(const FractionalSolution& sol);

/// Multiplicities y_I, sorted by lex_less on the mask, zero entries dropped.
using SetCounts = std::vector<std::pair<VertexMask, BigInt>>;

/// Integer multiplicities r * x_I together with r = lcm of all denominators (weights and
/// objective). Throws CheckFailed if `sol` is not feasible.
std::pair<SetCounts, BigInt> scale_to_integers(const FractionalSolution& sol);

/// One excess-removal step: lowest vertex with coverage above r, lexicographically largest
/// set containing it loses that vertex. Returns false if nothing to do.
bool reduction_step(SetCounts& counts, std::size_t n, const BigInt& r);

struct FractionalConstruction {
  IndexCode code;
  FractionalSolution solution;
  IntegerCover cover;
};

/// Vector-linear code from an optimal fractional local coloring of the interference graph.
FractionalConstruction construct_fractional_code(const Digraph& side_info,
                                                 const SolverCaps& caps = {});

}  // namespace icl
