#include "coremotz/paths.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace coremotz {

namespace {

Step swap_up_down(Step step) {
  switch (step) {
    case Step::U: return Step::D;
    case Step::D: return Step::U;
    default: return step;
  }
}

int height_delta(Step step) { return step == Step::U ? 1 : step == Step::D ? -1 : 0; }

void require_coprime(int s, int d) {
  if (s < 1 || d < 1 || gcd(s, d) != 1) {
    throw DomainError("path type needs positive coprime s, d; got s=" + std::to_string(s) + " d=" + std::to_string(d));
  }
}

}  // namespace

char to_char(Step step) {
  switch (step) {
    case Step::U: return 'U';
    case Step::F: return 'F';
    case Step::D: return 'D';
  }
  return '?';
}

StepWord StepWord::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::U); break;
      case 'F': steps.push_back(Step::F); break;
      case 'D': steps.push_back(Step::D); break;
      default: throw DomainError("step word may only contain U, F, D: '" + std::string(text) + "'");
    }
  }
  return StepWord(std::move(steps));
}

int StepWord::count(Step step) const { return static_cast<int>(std::count(steps_.begin(), steps_.end(), step)); }

int StepWord::height() const { return count(Step::U) - count(Step::D); }

std::string StepWord::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step step : steps_) out += to_char(step);
  return out;
}

std::string GenStep::to_string() const {
  const char letter = kind == Kind::Up ? 'U' : kind == Kind::Down ? 'D' : 'F';
  return letter + std::to_string(size);
}

GenDyckPath::GenDyckPath(std::vector<GenStep> steps, int p) : steps_(std::move(steps)), p_(p) {
  if (p < 2) throw DomainError("generalized Dyck paths need p >= 2");
  int x = 0;
  int y = 0;
  for (const GenStep& step : steps_) {
    const bool ok = step.kind == GenStep::Kind::Flat ? (step.size >= 1 && step.size <= p - 1) : step.size == p;
    if (!ok) throw DomainError("step " + step.to_string() + " not allowed for p=" + std::to_string(p));
    x += step.dx();
    y += step.dy();
    if (y < x) throw DomainError("generalized Dyck path goes below the diagonal");
  }
  if (x != y) throw DomainError("generalized Dyck path must end on the diagonal");
  s_ = x;
}

GenDyckPath GenDyckPath::parse(std::string_view text, int p) {
  std::vector<GenStep> steps;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    GenStep step;
    switch (token[0]) {
      case 'U': step.kind = GenStep::Kind::Up; break;
      case 'F': step.kind = GenStep::Kind::Flat; break;
      case 'D': step.kind = GenStep::Kind::Down; break;
      default: throw DomainError("bad generalized Dyck token '" + token + "'");
    }
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), step.size);
    if (token.size() < 2 || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("bad generalized Dyck token '" + token + "'");
    }
    steps.push_back(step);
  }
  return GenDyckPath(std::move(steps), p);
}

std::string GenDyckPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ' ';
    out += steps_[i].to_string();
  }
  return out;
}

std::vector<int> label_vector(const StepWord& path, int s, int d) {
  if (static_cast<int>(path.size()) != s + d) {
    throw DomainError("label vector needs a word of length s+d=" + std::to_string(s + d) + ", got " +
                      std::to_string(path.size()));
  }
  std::vector<int> labels{0};
  labels.reserve(path.size() + 1);
  for (Step step : path.steps()) {
    const int inc = step == Step::U ? s + 2 * d : step == Step::F ? d : -s;
    labels.push_back(labels.back() + inc);
  }
  return labels;
}

bool is_free_rational(const StepWord& path, int s, int d) {
  return static_cast<int>(path.size()) == s + d && path.height() == -d;
}

bool is_rational(const StepWord& path, int s, int d) {
  if (!is_free_rational(path, s, d)) {
    throw DomainError("'" + path.to_string() + "' is not a free rational Motzkin path of type (" +
                      std::to_string(s + d) + ",-" + std::to_string(d) + ")");
  }
  const auto labels = label_vector(path, s, d);
  return *std::min_element(labels.begin(), labels.end()) >= 0;
}

bool is_motzkin(const StepWord& path) {
  int height = 0;
  for (Step step : path.steps()) {
    height += height_delta(step);
    if (height < 0) return false;
  }
  return height == 0;
}

bool has_forbidden_pattern(const StepWord& path, int p, bool cyclic) {
  if (p <= 2 || path.empty()) return false;
  const std::size_t n = path.size();
  const std::size_t max_factor = static_cast<std::size_t>(p - 1);  // U F^{p-3} U
  const std::size_t scan_end = cyclic ? 2 * n : n;
  auto at = [&](std::size_t i) { return path[i % n]; };
  for (std::size_t start = 0; start < n; ++start) {
    if (at(start) != Step::U) continue;
    for (std::size_t len = 2; len <= max_factor && start + len <= scan_end; ++len) {
      const Step last = at(start + len - 1);
      if (last == Step::U) {
        // a wrapped factor must not reuse its own starting U
        if (len <= n) return true;
        break;
      }
      if (last != Step::F) break;
    }
  }
  return false;
}

StepWord cyclic_shift(const StepWord& path, int j) {
  if (j < 0 || j >= static_cast<int>(path.size())) {
    throw DomainError("cyclic shift index " + std::to_string(j) + " outside 0.." +
                      std::to_string(static_cast<int>(path.size()) - 1));
  }
  std::vector<Step> steps(path.steps());
  std::rotate(steps.begin(), steps.begin() + j, steps.end());
  return StepWord(std::move(steps));
}

CanonicalShift canonicalize(const StepWord& path, int s, int d) {
  require_coprime(s, d);
  if (!is_free_rational(path, s, d)) {
    throw DomainError("'" + path.to_string() + "' is not a free rational Motzkin path of type (" +
                      std::to_string(s + d) + ",-" + std::to_string(d) + ")");
  }
  const auto labels = label_vector(path, s, d);
  const auto min_it = std::min_element(labels.begin(), labels.end() - 1);
  const int shift = static_cast<int>(min_it - labels.begin());
  return {shift, cyclic_shift(path, shift)};
}

std::vector<StepWord> enumerate_rational_motzkin(int s, int d, int p) {
  require_coprime(s, d);
  if (p < 2) throw DomainError("pattern restriction needs p >= 2");
  const int n = s + d;
  std::vector<StepWord> out;
  std::vector<Step> word;
  word.reserve(n);

  // flats_since_up < 0 means no U is waiting for a matching non-flat step
  auto extend = [&](auto&& self, int label, int flats_since_up) -> void {
    const int remaining = n - static_cast<int>(word.size());
    if (remaining == 0) {
      if (label == 0) out.emplace_back(word);
      return;
    }
    for (Step step : {Step::U, Step::F, Step::D}) {
      const int next = label + (step == Step::U ? s + 2 * d : step == Step::F ? d : -s);
      if (next < 0 || next > (remaining - 1) * s) continue;
      int pending = flats_since_up;
      if (step == Step::U) {
        if (pending >= 0 && pending <= p - 3) continue;
        pending = 0;
      } else if (step == Step::F) {
        if (pending >= 0) ++pending;
      } else {
        pending = -1;
      }
      word.push_back(step);
      self(self, next, pending);
      word.pop_back();
    }
  };
  extend(extend, 0, -1);
  return out;
}

std::vector<GenDyckPath> enumerate_gen_dyck(int s, int p) {
  if (s < 0) throw DomainError("generalized Dyck paths need s >= 0");
  if (p < 2) throw DomainError("generalized Dyck paths need p >= 2");
  std::vector<GenStep> alphabet{{GenStep::Kind::Up, p}};
  for (int i = 1; i <= p - 1; ++i) alphabet.push_back({GenStep::Kind::Flat, i});
  alphabet.push_back({GenStep::Kind::Down, p});

  std::vector<GenDyckPath> out;
  std::vector<GenStep> steps;
  auto extend = [&](auto&& self, int x, int y) -> void {
    if (x == s && y == s) {
      out.emplace_back(steps, p);
      return;
    }
    for (const GenStep& step : alphabet) {
      const int nx = x + step.dx();
      const int ny = y + step.dy();
      if (nx > s || ny > s || ny < nx) continue;
      steps.push_back(step);
      self(self, nx, ny);
      steps.pop_back();
    }
  };
  extend(extend, 0, 0);
  return out;
}

bool is_symmetric_motzkin(const StepWord& path) {
  if (!is_motzkin(path)) throw DomainError("'" + path.to_string() + "' is not a Motzkin path");
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (path[i] != swap_up_down(path[n - 1 - i])) return false;
  }
  return true;
}

bool is_symmetric_gen_dyck(const GenDyckPath& path) {
  const auto& steps = path.steps();
  const std::size_t n = steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    GenStep mirrored = steps[n - 1 - i];
    if (mirrored.kind == GenStep::Kind::Up) {
      mirrored.kind = GenStep::Kind::Down;
    } else if (mirrored.kind == GenStep::Kind::Down) {
      mirrored.kind = GenStep::Kind::Up;
    }
    if (steps[i] != mirrored) return false;
  }
  return true;
}

BigInt gen_dyck_count_recurrence(int s, int p) {
  if (p < 2) throw DomainError("generalized Dyck recurrence needs p >= 2");
  if (s <= 0) return 1;

  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, BigInt> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find({p, s}); it != memo.end()) return it->second;
  }
  // Fill bottom-up so recursion depth stays bounded.
  std::vector<BigInt> values(s + 1);
  values[0] = 1;
  auto at = [&](int m) -> const BigInt& {
    static const BigInt one = 1;
    return m < 0 ? one : values[m];
  };
  for (int m = 1; m <= s; ++m) {
    BigInt total = 0;
    for (int k = 1; k <= m; ++k) total += at(k - p) * at(m - k);
    values[m] = total;
  }
  std::unique_lock lock(mutex);
  for (int m = 1; m <= s; ++m) memo.try_emplace({p, m}, values[m]);
  return values[s];
}

std::string render_path_svg(const StepWord& path, int s, int d) {
  const int n = static_cast<int>(path.size());
  int height = 0;
  int lo = std::min(0, -d);
  int hi = 0;
  std::ostringstream points;
  points << "0,0";
  for (int x = 0; x < n; ++x) {
    height += height_delta(path[x]);
    lo = std::min(lo, height);
    hi = std::max(hi, height);
    points << ' ' << x + 1 << ',' << height;
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 " << -hi - 0.5 << ' ' << n + 1 << ' '
      << hi - lo + 1 << "\" width=\"" << 40 * (n + 1) << "\" height=\"" << 40 * (hi - lo + 1) << "\">\n";
  svg << "<g transform=\"scale(1,-1)\">\n";
  for (int x = 0; x <= n; ++x) {
    svg << "<line x1=\"" << x << "\" y1=\"" << lo << "\" x2=\"" << x << "\" y2=\"" << hi
        << "\" stroke=\"#ccc\" stroke-width=\"0.02\"/>\n";
  }
  for (int y = lo; y <= hi; ++y) {
    svg << "<line x1=\"0\" y1=\"" << y << "\" x2=\"" << n << "\" y2=\"" << y
        << "\" stroke=\"#ccc\" stroke-width=\"0.02\"/>\n";
  }
  if (s + d == n) {
    svg << "<line x1=\"0\" y1=\"0\" x2=\"" << n << "\" y2=\"" << -d
        << "\" stroke=\"gray\" stroke-width=\"0.03\" stroke-dasharray=\"0.1,0.1\"/>\n";
  }
  svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.08\" points=\"" << points.str() << "\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace coremotz
