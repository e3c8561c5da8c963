#pragma once

#include <cstdint>
#include <vector>

namespace hypermf::lp {

// maximize c.u subject to A u <= b, u free.
// Rows are sparse; variables dense and few (this solver targets problems
// with many rows and a small variable count).
struct Row {
  std::vector<std::pair<int, double>> coef;
  double rhs = 0.0;
};

struct Problem {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::Optimal;
  double value = 0.0;
  std::vector<double> u;      // primal optimum (witness)
  std::vector<double> slack;  // b - A u
  int iterations = 0;
};

// Two-phase dense simplex applied to the dual (min b.y, A^T y = c, y >= 0);
// the primal optimum is read off the simplex multipliers. Suited to
// num_vars up to ~1500 and row counts up to ~50k.
Solution maximize(const Problem& p, double feas_tol = 1e-9, int max_iters = 0);

}  // namespace hypermf::lp
