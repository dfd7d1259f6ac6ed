#include "icl/index_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "icl/errors.hpp"

namespace icl {

double IndexCode::bit_rate() const {
  return static_cast<double>(code_matrix.rows()) * std::log2(static_cast<double>(field().q())) /
         static_cast<double>(message_len);
}

GfMatrix IndexCode::block(std::size_t user) const {
  const auto& b = user_blocks.at(user);
  std::vector<std::size_t> cols(b.width);
  for (std::size_t j = 0; j < b.width; ++j) cols[j] = b.start + j;
  return code_matrix.select_columns(cols);
}

std::vector<UserBlock> uniform_blocks(std::size_t n, std::size_t r) {
  std::vector<UserBlock> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i * r, r};
  return blocks;
}

VerificationReport verify(const IndexCode& code, const Digraph& side_info) {
  const std::size_t n = side_info.size();
  if (code.user_blocks.size() != n) {
    throw InvalidInput("verify: code has " + std::to_string(code.user_blocks.size()) +
                       " user blocks, instance has " + std::to_string(n) + " users");
  }
  std::size_t total = 0;
  for (const auto& b : code.user_blocks) {
    if (b.start + b.width > code.code_matrix.cols()) throw InvalidInput("verify: block out of range");
    total += b.width;
  }
  if (total != code.code_matrix.cols()) throw InvalidInput("verify: blocks do not tile the matrix");

  VerificationReport report;
  report.per_user.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    const auto& own = code.user_blocks[i];
    std::vector<std::size_t> own_cols;
    std::vector<std::size_t> interf_cols;
    for (std::size_t j = 0; j < own.width; ++j) own_cols.push_back(own.start + j);
    for (Vertex k = 0; k < n; ++k) {
      if (k == i || side_info.has_edge(i, k)) continue;
      const auto& b = code.user_blocks[k];
      for (std::size_t j = 0; j < b.width; ++j) interf_cols.push_back(b.start + j);
    }
    auto& u = report.per_user[i];
    const GfMatrix own_m = code.code_matrix.select_columns(own_cols);
    const GfMatrix interf_m = code.code_matrix.select_columns(interf_cols);
    u.own_rank = rank(own_m);
    u.interference_rank = rank(interf_m);
    u.joint_rank = rank(own_m.hconcat(interf_m));
    u.decodable = u.own_rank == own.width && u.joint_rank == own.width + u.interference_rank;
    if (!u.decodable) report.failing_users.push_back(i);
  }
  report.valid = report.failing_users.empty();
  return report;
}

namespace {

IndexCode code_from_color_columns(const GfMatrix& generator, const std::vector<std::size_t>& color_of,
                                  std::string scheme) {
  IndexCode code{generator.select_columns(color_of), uniform_blocks(color_of.size(), 1), 1,
                 std::move(scheme), std::nullopt, 1, {}};
  for (std::size_t c : color_of) code.coloring.push_back({c});
  return code;
}

}  // namespace

ScalarConstruction construct_scalar_code(const Digraph& side_info, const SolverCaps& caps) {
  const Digraph interference = directed_complement(side_info);
  LocalColoring coloring = local_chromatic(interference, caps);
  const std::size_t colors = coloring.base.num_colors;
  const PrimeField field(smallest_prime_at_least(static_cast<std::uint32_t>(std::max<std::size_t>(colors, 2))));
  const GfMatrix generator = vandermonde_mds(colors, coloring.local_value, field);
  IndexCode code = code_from_color_columns(generator, coloring.base.color_of, "scalar");
  return {std::move(code), std::move(coloring)};
}

std::size_t binary_code_overhead(std::size_t n) {
  // smallest k with 2^k >= n^2
  if (n <= 1) return 0;
  const unsigned __int128 target = static_cast<unsigned __int128>(n) * n;
  std::size_t k = 0;
  while ((static_cast<unsigned __int128>(1) << k) < target) ++k;
  return k;
}

IndexCode construct_binary_code(const Digraph& side_info, std::uint64_t seed,
                                std::size_t max_attempts, const SolverCaps& caps) {
  if (side_info.size() < 2) throw InvalidInput("construct_binary_code: needs at least 2 users");
  const LocalColoring coloring = local_chromatic(directed_complement(side_info), caps);
  const std::size_t rows = coloring.local_value + binary_code_overhead(side_info.size());
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t attempt_seed = seed + attempt * 0x9E3779B97F4A7C15ULL;
    const GfMatrix generator = random_binary_matrix(rows, coloring.base.num_colors, attempt_seed);
    IndexCode code = code_from_color_columns(generator, coloring.base.color_of, "binary");
    code.seed = seed;
    code.attempts = attempt + 1;
    if (verify(code, side_info).valid) return code;
  }
  throw CheckFailed("construct_binary_code: no valid code after " + std::to_string(max_attempts) +
                    " attempts");
}

namespace {

BigInt coverage(const SetCounts& counts, Vertex v) {
  BigInt c = 0;
  for (const auto& [mask, y] : counts)
    if (mask >> v & 1) c += y;
  return c;
}

void add_count(SetCounts& counts, VertexMask mask, const BigInt& amount) {
  auto it = std::lower_bound(counts.begin(), counts.end(), mask,
                             [](const auto& e, VertexMask m) { return lex_less(e.first, m); });
  if (it != counts.end() && it->first == mask)
    it->second += amount;
  else
    counts.insert(it, {mask, amount});
}

}  // namespace

std::pair<SetCounts, BigInt> scale_to_integers(const FractionalSolution& sol) {
  if (!is_feasible(sol)) throw CheckFailed("reduce_fractional_solution: infeasible certificate");
  BigInt r = sol.objective.get_den();
  for (const auto& w : sol.weight_of) mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), w.get_den_mpz_t());
  SetCounts counts;
  for (std::size_t i = 0; i < sol.family.sets.size(); ++i) {
    const Rational scaled = sol.weight_of[i] * Rational(r);
    if (scaled.get_num() != 0) add_count(counts, sol.family.sets[i], scaled.get_num());
  }
  return {std::move(counts), r};
}

bool reduction_step(SetCounts& counts, std::size_t n, const BigInt& r) {
  for (Vertex v = 0; v < n; ++v) {
    if (coverage(counts, v) <= r) continue;
    for (std::size_t i = counts.size(); i-- > 0;) {
      if (!(counts[i].first >> v & 1)) continue;
      const VertexMask smaller = counts[i].first & ~(VertexMask{1} << v);
      if (--counts[i].second == 0) counts.erase(counts.begin() + static_cast<std::ptrdiff_t>(i));
      if (smaller != 0) add_count(counts, smaller, 1);
      return true;
    }
  }
  return false;
}

IntegerCover reduce_fractional_solution(const FractionalSolution& sol) {
  auto [counts, r] = scale_to_integers(sol);
  const std::size_t n = sol.family.graph.size();
  while (reduction_step(counts, n, r)) {
  }
  IntegerCover cover;
  if (!r.fits_ulong_p()) throw CheckFailed("reduce_fractional_solution: r too large");
  cover.r = r.get_ui();
  const Rational s = sol.objective * Rational(r);
  cover.s = s.get_num().get_ui();
  BigInt p = 0;
  for (const auto& e : counts) p += e.second;
  if (p > 1'000'000) throw CheckFailed("reduce_fractional_solution: too many sets (" + p.get_str() + ")");
  for (const auto& [mask, y] : counts)
    for (unsigned long k = 0; k < y.get_ui(); ++k) cover.sets.push_back(mask);
  std::vector<VertexMask> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = VertexMask{1} << v;
    if (sol.digraph)
      for (Vertex w : sol.digraph->out(v)) closed[v] |= VertexMask{1} << w;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto load = std::count_if(cover.sets.begin(), cover.sets.end(),
                                    [&](VertexMask I) { return (I & closed[v]) != 0; });
    cover.max_load = std::max<std::size_t>(cover.max_load, static_cast<std::size_t>(load));
  }
  return cover;
}

FractionalConstruction construct_fractional_code(const Digraph& side_info, const SolverCaps& caps) {
  const Digraph interference = directed_complement(side_info);
  FractionalSolution sol = fractional_local_chromatic(interference, caps);
  IntegerCover cover = reduce_fractional_solution(sol);
  const std::size_t n = side_info.size();
  const std::size_t p = cover.sets.size();
  if (cover.max_load > cover.s || cover.s > p) {
    throw CheckFailed("construct_fractional_code: load " + std::to_string(cover.max_load) +
                      " vs s=" + std::to_string(cover.s) + ", p=" + std::to_string(p));
  }
  const PrimeField field(smallest_prime_at_least(static_cast<std::uint32_t>(p + 1)));
  const GfMatrix generator = vandermonde_mds(p, cover.s, field);
  std::vector<std::size_t> columns;
  IndexCode code{GfMatrix(field, cover.s, 0), uniform_blocks(n, cover.r), cover.r, "fractional",
                 std::nullopt, 1, {}};
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> mine;
    for (std::size_t j = 0; j < p; ++j)
      if (cover.sets[j] >> v & 1) mine.push_back(j);
    if (mine.size() != cover.r) throw CheckFailed("construct_fractional_code: coverage not exact");
    columns.insert(columns.end(), mine.begin(), mine.end());
    code.coloring.push_back(std::move(mine));
  }
  code.code_matrix = generator.select_columns(columns);
  return {std::move(code), std::move(sol), std::move(cover)};
}

}  // namespace icl
