// Reproduce the Case 1 bound on sum a_i from scratch: build the density
// context, take its deficiency budget, and run the greedy optimizer.

#include <cmath>
#include <cstdio>

#include "zdcert/density.hpp"
#include "zdcert/extremal.hpp"

int main() {
  namespace density = zdcert::density;
  namespace extremal = zdcert::extremal;

  const double Lambda = 1.311, lambda0 = 0.68, x = 0.7;
  const density::DensityContext ctx(lambda0, x, Lambda, 1.0 / 3.0);
  const auto budget = density::deficiency_budget(ctx);
  std::printf("G(-lambda0/x) = %.6f  psi = %.6f  xi = %.6f  Delta = %.6f\n", ctx.transform_at_floor(), ctx.psi(),
              ctx.xi(), ctx.delta());
  std::printf("D = %.6f  D0 = %.6f\n", budget.normalized, budget.unnormalized);

  extremal::ExtremalProblem p;
  p.d0 = Lambda - lambda0;
  p.scale = zdcert::kernel::KernelScale(x);
  p.budget = budget.unnormalized;
  p.caps.assign(2, Lambda - 0.68);
  p.caps.resize(736, Lambda - 0.702);
  const auto c = extremal::greedy_optimize(p);

  for (std::size_t j = 0; j < c.crossover; ++j) std::printf("lambda_%zu = %.6f\n", j + 1, Lambda - c.values[j]);
  std::printf("S' = %.6f\n", extremal::objective_in_lambda_space(c, Lambda, p.expB));
}
