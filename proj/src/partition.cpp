#include "coremotz/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace coremotz {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> values;
  text = trim(text);
  if (text.empty()) return values;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    values.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be non-increasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw DomainError("partition must be written as [a,b,...]: '" + std::string(text) + "'");
  }
  return Partition(parse_int_list(text.substr(1, text.size() - 2), "partition part"));
}

int Partition::size() const {
  int total = 0;
  for (int part : parts_) total += part;
  return total;
}

std::string Partition::to_string() const { return "[" + join(parts_) + "]"; }

BetaSet::BetaSet(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), std::greater<>());
  if (!elements_.empty() && elements_.back() < 1) throw DomainError("beta-set elements must be positive");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw DomainError("beta-set elements must be distinct");
  }
}

BetaSet::BetaSet(std::initializer_list<int> elements) : BetaSet(std::vector<int>(elements)) {}

bool BetaSet::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x, std::greater<>());
}

std::string BetaSet::to_string() const { return "{" + join(elements_) + "}"; }

CoreFamily CoreFamily::make(int s, int d, int p) {
  if (s < 1 || d < 1 || p < 1) throw DomainError("core family needs s, d, p >= 1");
  if (gcd(s, d) != 1) {
    throw DomainError("core family needs gcd(s, d) = 1, got s=" + std::to_string(s) + " d=" + std::to_string(d));
  }
  return CoreFamily{s, d, p};
}

CoreFamily CoreFamily::parse(std::string_view text) {
  auto values = parse_int_list(text, "family parameter");
  if (values.size() != 3) throw DomainError("family must be written as s,d,p");
  return make(values[0], values[1], values[2]);
}

std::vector<int> CoreFamily::moduli() const {
  std::vector<int> out;
  for (int i = 0; i <= p; ++i) out.push_back(s + i * d);
  return out;
}

std::string CoreFamily::to_string() const {
  return "(" + join(moduli()) + ")";
}

HookMatrix hook_lengths(const Partition& lambda) {
  const Partition column_lengths = conjugate(lambda);
  HookMatrix hooks(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    hooks[i].reserve(lambda[i]);
    for (int j = 0; j < lambda[i]; ++j) {
      // arm + leg + 1 with zero-based (i, j)
      hooks[i].push_back((lambda[i] - j - 1) + (column_lengths[j] - static_cast<int>(i) - 1) + 1);
    }
  }
  return hooks;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> columns(lambda[0], 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++columns[j];
  }
  return Partition(std::move(columns));
}

BetaSet beta_set(const Partition& lambda) {
  const int len = static_cast<int>(lambda.length());
  std::vector<int> elements;
  elements.reserve(len);
  for (int i = 0; i < len; ++i) elements.push_back(lambda[i] + len - i - 1);
  return BetaSet(std::move(elements));
}

Partition partition_from_beta(const BetaSet& beta) {
  const auto& xs = beta.elements();
  const int len = static_cast<int>(xs.size());
  std::vector<int> parts;
  parts.reserve(len);
  for (int i = 0; i < len; ++i) parts.push_back(xs[i] - (len - i - 1));
  return Partition(std::move(parts));
}

bool is_t_core(const Partition& lambda, int t) {
  if (t < 1) throw DomainError("core modulus must be positive");
  const BetaSet beta = beta_set(lambda);
  if (beta.contains(t)) return false;
  for (int x : beta.elements()) {
    if (x > t && !beta.contains(x - t)) return false;
  }
  return true;
}

bool is_t_core_by_hooks(const Partition& lambda, int t) {
  if (t < 1) throw DomainError("core modulus must be positive");
  for (const auto& row : hook_lengths(lambda)) {
    if (std::find(row.begin(), row.end(), t) != row.end()) return false;
  }
  return true;
}

bool is_simultaneous_core(const Partition& lambda, std::span<const int> ts) {
  if (ts.empty()) throw DomainError("need at least one core modulus");
  return std::all_of(ts.begin(), ts.end(), [&](int t) { return is_t_core(lambda, t); });
}

int corner_count(const Partition& lambda) {
  const auto& parts = lambda.parts();
  int corners = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i] != parts[i - 1]) ++corners;
  }
  return corners;
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

}  // namespace coremotz
