#pragma once

#include "coremotz/abacus.hpp"
#include "coremotz/partition.hpp"
#include "coremotz/paths.hpp"

namespace coremotz {

// Reads the boundary profile of an (s, s+d, ..., s+pd)-core off its
// (s+d, d)-abacus: U where f rises, F where it stays, D where it falls.
// Throws DomainError if p < 2 or lambda is not a core for every modulus.
StepWord core_to_path(const Partition& lambda, const CoreFamily& family);

// Inverse of core_to_path. Beads fill column j from its first nonnegative
// row up to (not including) the path height after j steps.
// Throws DomainError unless the path is rational of type (s+d, -d) and
// avoids U F^i U for i <= p-3.
Partition path_to_core(const StepWord& path, const CoreFamily& family);

// Motzkin path without U F^i U (i <= p-3) -> (s,p)-generalized Dyck path.
// Units: U F^{p-2} -> U_p, U F^{i-2} D -> F_i, F -> F_1, D -> D_p.
GenDyckPath phi(const StepWord& path, int p);
StepWord phi_inverse(const GenDyckPath& path);

// For d = 1: corner count of lambda against the number of U steps of its path.
struct CornerCheck {
  int corners = 0;
  int up_steps = 0;
  bool equal() const { return corners == up_steps; }
};

CornerCheck corners_and_upsteps(const Partition& lambda, const CoreFamily& family);
bool corners_equal_upsteps(const Partition& lambda, const CoreFamily& family);

}  // namespace coremotz
