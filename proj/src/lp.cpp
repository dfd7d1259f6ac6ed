#include "icl/lp.hpp"

#include <optional>
#include <stdexcept>

#include "icl/errors.hpp"

namespace icl::lp {

namespace {

// Tableau T (rows x cols) with rhs column, basis indices and a reduced-cost row.
// Every row owns a unit column (`unit_col`): the slack for <= rows, otherwise an
// artificial. Those columns are read back to obtain the dual.
class Tableau {
 public:
  Tableau(const Problem& p) : num_vars_(p.num_vars()) {
    const std::size_t m = p.constraints.size();
    sign_.assign(m, 1);
    std::size_t slack_count = 0;
    std::size_t art_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      if (c.coeffs.size() != num_vars_) throw std::invalid_argument("lp: coefficient count");
      Sense s = c.sense;
      if (c.rhs < 0) {
        sign_[i] = -1;
        if (s == Sense::LessEqual)
          s = Sense::GreaterEqual;
        else if (s == Sense::GreaterEqual)
          s = Sense::LessEqual;
      }
      senses_.push_back(s);
      if (s != Sense::Equal) ++slack_count;
      if (s != Sense::LessEqual) ++art_count;
    }
    first_slack_ = num_vars_;
    first_art_ = first_slack_ + slack_count;
    cols_ = first_art_ + art_count;
    rows_.assign(m, std::vector<Rational>(cols_ + 1));
    basis_.assign(m, 0);
    unit_col_.assign(m, 0);
    std::size_t next_slack = first_slack_;
    std::size_t next_art = first_art_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < num_vars_; ++j) row[j] = sign_[i] * c.coeffs[j];
      row[cols_] = sign_[i] * c.rhs;
      switch (senses_[i]) {
        case Sense::LessEqual:
          row[next_slack] = 1;
          basis_[i] = unit_col_[i] = next_slack++;
          break;
        case Sense::GreaterEqual:
          row[next_slack++] = -1;
          row[next_art] = 1;
          basis_[i] = unit_col_[i] = next_art++;
          break;
        case Sense::Equal:
          row[next_art] = 1;
          basis_[i] = unit_col_[i] = next_art++;
          break;
      }
    }
  }

  bool is_artificial(std::size_t col) const { return col >= first_art_; }

  void set_costs(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j <= cols_; ++j) {
      Rational d = j < cols_ ? cost_[j] : Rational(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& cb = cost_[basis_[i]];
        if (cb != 0 && rows_[i][j] != 0) d -= cb * rows_[i][j];
      }
      reduced_[j] = d;
    }
  }

  // Runs Bland-rule pivots. Returns false if unbounded.
  bool optimize(bool allow_artificial) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][cols_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow)
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      eliminate(rows_[i], prow, Rational(rows_[i][c]));
    }
    if (reduced_[c] != 0) eliminate(reduced_, prow, Rational(reduced_[c]));
    basis_[r] = c;
  }

  // Replace artificial basics (at level zero) with structural or slack columns.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row with no admissible pivot is redundant; its artificial stays basic at zero.
    }
  }

  Rational value() const { return -reduced_[cols_]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(num_vars_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < num_vars_) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

  std::vector<Rational> dual() const {
    // unit column of row i equals B^{-1} e_i, so its reduced cost is cost - y_i.
    std::vector<Rational> y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      y[i] = cost_[unit_col_[i]] - reduced_[unit_col_[i]];
      y[i] *= sign_[i];
    }
    return y;
  }

  std::size_t cols() const { return cols_; }

 private:
  static void eliminate(std::vector<Rational>& row, const std::vector<Rational>& prow,
                        const Rational& factor) {
    for (std::size_t j = 0; j < row.size(); ++j)
      if (prow[j] != 0) row[j] -= factor * prow[j];
  }

  std::size_t num_vars_;
  std::size_t first_slack_ = 0;
  std::size_t first_art_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> sign_;
  std::vector<Sense> senses_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_col_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
};

}  // namespace

Solution solve(const Problem& problem) {
  Tableau tab(problem);
  Solution sol;

  std::vector<Rational> phase1(tab.cols());
  bool any_art = false;
  for (std::size_t j = 0; j < tab.cols(); ++j) {
    if (tab.is_artificial(j)) {
      phase1[j] = 1;
      any_art = true;
    }
  }
  if (any_art) {
    tab.set_costs(phase1);
    tab.optimize(true);
    if (tab.value() != 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    tab.drive_out_artificials();
  }

  std::vector<Rational> phase2(tab.cols());
  for (std::size_t j = 0; j < problem.num_vars(); ++j) phase2[j] = problem.objective[j];
  tab.set_costs(phase2);
  if (!tab.optimize(false)) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.objective = tab.value();
  sol.primal = tab.primal();
  sol.dual = tab.dual();
  return sol;
}

std::string check_certificate(const Problem& problem, const Solution& solution) {
  if (solution.status != Status::Optimal) return "solution is not optimal";
  const auto& x = solution.primal;
  const auto& y = solution.dual;
  if (x.size() != problem.num_vars() || y.size() != problem.constraints.size())
    return "certificate has wrong dimensions";
  Rational cx = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0) return "negative primal variable " + std::to_string(j);
    cx += problem.objective[j] * x[j];
  }
  if (cx != solution.objective) return "objective does not match c^T x";
  Rational by = 0;
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (c.coeffs[j] != 0 && x[j] != 0) lhs += c.coeffs[j] * x[j];
    bool ok = c.sense == Sense::LessEqual    ? lhs <= c.rhs
              : c.sense == Sense::GreaterEqual ? lhs >= c.rhs
                                               : lhs == c.rhs;
    if (!ok) return "primal constraint " + std::to_string(i) + " violated";
    if (c.sense == Sense::LessEqual && y[i] > 0) return "dual sign on row " + std::to_string(i);
    if (c.sense == Sense::GreaterEqual && y[i] < 0) return "dual sign on row " + std::to_string(i);
    by += c.rhs * y[i];
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational aty = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] != 0) aty += problem.constraints[i].coeffs[j] * y[i];
    if (aty > problem.objective[j]) return "dual constraint " + std::to_string(j) + " violated";
  }
  if (by != solution.objective) return "nonzero duality gap";
  return {};
}

}  // namespace icl::lp
