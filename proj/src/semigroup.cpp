#include "qhs/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qhs/error.hpp"

namespace qhs {
namespace {

int gcd_of(std::span<const int> g) {
  int r = 0;
  for (int x : g) r = std::gcd(r, x);
  return r;
}

void enumerate(int remaining, std::size_t index, std::span<const int> g, Representation& current,
               std::vector<Representation>& out) {
  if (index + 1 == g.size()) {
    if (remaining % g[index] == 0) {
      current[index] = remaining / g[index];
      out.push_back(current);
    }
    return;
  }
  for (int a = 0; a * g[index] <= remaining; ++a) {
    current[index] = a;
    enumerate(remaining - a * g[index], index + 1, g, current, out);
  }
  current[index] = 0;
}

void require_coprime(std::span<const int> g) {
  if (g.empty()) throw InvalidWeights("empty generator list");
  for (int x : g)
    if (x <= 0) throw InvalidWeights("generators must be positive");
  if (gcd_of(g) != 1) throw InvalidWeights("generators are not coprime; Frobenius number undefined");
}

}  // namespace

Weights::Weights(std::vector<int> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw InvalidWeights("at least one weight is required");
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (lambdas_[i] <= 0) throw InvalidWeights("weights must be positive");
    if (i > 0 && lambdas_[i] <= lambdas_[i - 1]) throw InvalidWeights("weights must be strictly increasing");
  }
  if (gcd_of(lambdas_) != 1)
    throw InvalidWeights("weights " + to_string() + " are not coprime");
  for (std::size_t j = 0; j < lambdas_.size(); ++j) {
    std::vector<int> others;
    for (std::size_t i = 0; i < lambdas_.size(); ++i)
      if (i != j) others.push_back(lambdas_[i]);
    if (!others.empty() && is_representable(lambdas_[j], others))
      throw InvalidWeights("weight " + std::to_string(lambdas_[j]) +
                           " is a non-negative combination of the others");
  }
}

Weights::Normalized Weights::normalize(std::vector<int> lambdas) {
  for (int x : lambdas)
    if (x <= 0) throw InvalidWeights("weights must be positive");
  int g = gcd_of(lambdas);
  if (g == 0) throw InvalidWeights("at least one weight is required");
  for (int& x : lambdas) x /= g;
  return Normalized{Weights(std::move(lambdas)), g};
}

std::vector<int> Weights::parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw InvalidWeights("empty entry in weight list '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidWeights("bad weight '" + item + "'");
    }
    if (used != item.size()) throw InvalidWeights("bad weight '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidWeights("empty weight list");
  return out;
}

int Weights::top_sum(std::size_t p) const {
  int s = 0;
  for (std::size_t i = 0; i < p && i < lambdas_.size(); ++i) s += lambdas_[lambdas_.size() - 1 - i];
  return s;
}

std::string Weights::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambdas_[i]);
  }
  return s;
}

bool is_representable(int d, std::span<const int> generators) {
  if (d < 0) return false;
  if (d == 0) return true;
  // reachable[x]: x is a sum of generators
  std::vector<char> reachable(static_cast<std::size_t>(d) + 1, 0);
  reachable[0] = 1;
  for (int x = 1; x <= d; ++x)
    for (int g : generators)
      if (g <= x && reachable[x - g]) {
        reachable[x] = 1;
        break;
      }
  return reachable[d] != 0;
}

bool is_representable(int d, const Weights& w) { return is_representable(d, w.values()); }

std::vector<Representation> representations(int d, std::span<const int> generators) {
  std::vector<Representation> out;
  if (d < 0 || generators.empty()) return out;
  Representation current(generators.size(), 0);
  enumerate(d, 0, generators, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Representation> representations(int d, const Weights& w) {
  return representations(d, w.values());
}

std::vector<int> gaps(std::span<const int> generators) {
  require_coprime(generators);
  int lo = *std::min_element(generators.begin(), generators.end());
  int hi = *std::max_element(generators.begin(), generators.end());
  // Every integer above lo*hi is representable once the generators are
  // coprime (Schur), so the search window is finite.
  int ceiling = lo * hi;
  std::vector<int> out;
  for (int d = 1; d <= ceiling; ++d)
    if (!is_representable(d, generators)) out.push_back(d);
  return out;
}

std::vector<int> gaps(const Weights& w) { return gaps(w.values()); }

int frobenius_number(std::span<const int> generators) {
  auto g = gaps(generators);
  return g.empty() ? -1 : g.back();
}

int frobenius_number(const Weights& w) { return frobenius_number(w.values()); }

int sylvester_frobenius(int a, int b) { return a * b - a - b; }
int sylvester_gap_count(int a, int b) { return (a - 1) * (b - 1) / 2; }

}  // namespace qhs
