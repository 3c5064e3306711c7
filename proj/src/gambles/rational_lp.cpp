#include "desire/rational_lp.hpp"

#include "desire/errors.hpp"

namespace desire {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows) {}

  std::vector<std::vector<Rational>>& a() { return a_; }
  std::vector<Rational>& b() { return b_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols(); ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  // Maximizes cost over columns [0, usable). False when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable && !enter; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (a_[i][j] != 0) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][*enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const std::vector<Rational>& objective, const std::vector<LinearConstraint>& constraints) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != n) throw InputError("constraint width does not match the objective");
    if (c.relation != Relation::eq) ++slacks;
  }
  // Columns: originals, slacks, one artificial per row.
  const std::size_t art0 = n + slacks;
  Tableau t(m, art0 + m);
  std::size_t slack = n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    const int sign = c.rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.a()[i][j] = sign * c.coeffs[j];
    t.b()[i] = sign * c.rhs;
    if (c.relation != Relation::eq) t.a()[i][slack++] = (c.relation == Relation::le ? 1 : -1) * sign;
    t.a()[i][art0 + i] = 1;
    t.basis()[i] = art0 + i;
  }

  std::vector<Rational> phase1(art0 + m);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  t.optimize(phase1, art0 + m);
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] >= art0 && t.b()[i] != 0) return {};

  // Artificials left in the basis sit at zero; pivot them out or drop redundant rows.
  for (std::size_t i = t.rows(); i-- > 0;) {
    if (t.basis()[i] < art0) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art0 && !col; ++j)
      if (t.a()[i][j] != 0) col = j;
    if (col)
      t.pivot(i, *col);
    else
      t.drop_row(i);
  }

  std::vector<Rational> phase2(art0 + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = objective[j];
  LpResult r;
  if (!t.optimize(phase2, art0)) {
    r.status = LpStatus::unbounded;
    return r;
  }
  r.status = LpStatus::optimal;
  r.x.assign(n, 0);
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] < n) r.x[t.basis()[i]] = t.b()[i];
  for (std::size_t j = 0; j < n; ++j) r.value += objective[j] * r.x[j];
  return r;
}

std::optional<std::vector<Rational>> feasible_point(std::size_t variables,
                                                    const std::vector<LinearConstraint>& constraints) {
  LpResult r = maximize(std::vector<Rational>(variables), constraints);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.x;
}

}  // namespace desire
