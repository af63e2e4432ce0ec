#include "coremotz/bijections.hpp"

namespace coremotz {

namespace {

void require_bijection_family(const CoreFamily& family) {
  CoreFamily::make(family.s, family.d, family.p);
  if (family.p < 2) throw DomainError("core/path bijection needs p >= 2");
}

}  // namespace

StepWord core_to_path(const Partition& lambda, const CoreFamily& family) {
  require_bijection_family(family);
  const auto moduli = family.moduli();
  if (!is_simultaneous_core(lambda, moduli)) {
    throw DomainError(lambda.to_string() + " is not a " + family.to_string() + "-core");
  }
  const BoundaryProfile f = boundary_profile(lambda, family.s, family.d);
  std::vector<Step> steps;
  steps.reserve(family.s + family.d);
  for (int j = 1; j <= family.s + family.d; ++j) {
    const int delta = f(j) - f(j - 1);
    steps.push_back(delta > 0 ? Step::U : delta == 0 ? Step::F : Step::D);
  }
  return StepWord(std::move(steps));
}

Partition path_to_core(const StepWord& path, const CoreFamily& family) {
  require_bijection_family(family);
  const int s = family.s;
  const int d = family.d;
  if (!is_free_rational(path, s, d) || !is_rational(path, s, d)) {
    throw DomainError("'" + path.to_string() + "' is not a rational Motzkin path of type (" + std::to_string(s + d) +
                      ",-" + std::to_string(d) + ")");
  }
  if (has_forbidden_pattern(path, family.p, false)) {
    throw DomainError("'" + path.to_string() + "' contains a forbidden U F^i U factor for p=" +
                      std::to_string(family.p));
  }
  std::vector<int> beads;
  int height = 0;
  for (int j = 0; j < s + d; ++j) {
    for (int row = first_nonnegative_row(j, s, d); row < height; ++row) beads.push_back(label(row, j, s, d));
    const Step step = path[j];
    height += step == Step::U ? 1 : step == Step::D ? -1 : 0;
  }
  return partition_from_beta(BetaSet(std::move(beads)));
}

GenDyckPath phi(const StepWord& path, int p) {
  if (p < 2) throw DomainError("phi needs p >= 2");
  if (!is_motzkin(path)) throw DomainError("'" + path.to_string() + "' is not a Motzkin path");
  if (has_forbidden_pattern(path, p, false)) {
    throw DomainError("'" + path.to_string() + "' contains a forbidden U F^i U factor for p=" + std::to_string(p));
  }
  std::vector<GenStep> steps;
  const std::size_t n = path.size();
  std::size_t i = 0;
  while (i < n) {
    switch (path[i]) {
      case Step::F:
        steps.push_back({GenStep::Kind::Flat, 1});
        ++i;
        break;
      case Step::D:
        steps.push_back({GenStep::Kind::Down, p});
        ++i;
        break;
      case Step::U: {
        std::size_t flats = 0;
        while (i + 1 + flats < n && path[i + 1 + flats] == Step::F && flats < static_cast<std::size_t>(p - 2)) {
          ++flats;
        }
        if (flats == static_cast<std::size_t>(p - 2)) {
          steps.push_back({GenStep::Kind::Up, p});
          i += 1 + flats;
        } else if (i + 1 + flats < n && path[i + 1 + flats] == Step::D) {
          steps.push_back({GenStep::Kind::Flat, static_cast<int>(flats) + 2});
          i += 2 + flats;
        } else {
          throw DomainError("'" + path.to_string() + "' has no unit decomposition for p=" + std::to_string(p));
        }
        break;
      }
    }
  }
  return GenDyckPath(std::move(steps), p);
}

StepWord phi_inverse(const GenDyckPath& path) {
  const int p = path.p();
  std::vector<Step> steps;
  for (const GenStep& step : path.steps()) {
    switch (step.kind) {
      case GenStep::Kind::Up:
        steps.push_back(Step::U);
        steps.insert(steps.end(), p - 2, Step::F);
        break;
      case GenStep::Kind::Down:
        steps.push_back(Step::D);
        break;
      case GenStep::Kind::Flat:
        if (step.size == 1) {
          steps.push_back(Step::F);
        } else {
          steps.push_back(Step::U);
          steps.insert(steps.end(), step.size - 2, Step::F);
          steps.push_back(Step::D);
        }
        break;
    }
  }
  return StepWord(std::move(steps));
}

CornerCheck corners_and_upsteps(const Partition& lambda, const CoreFamily& family) {
  if (family.d != 1) throw DomainError("corner/up-step correspondence is stated for d = 1 only");
  return {corner_count(lambda), core_to_path(lambda, family).count(Step::U)};
}

bool corners_equal_upsteps(const Partition& lambda, const CoreFamily& family) {
  return corners_and_upsteps(lambda, family).equal();
}

}  // namespace coremotz
