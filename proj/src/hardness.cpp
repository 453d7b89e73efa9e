#include "llq/hardness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "llq/element.hpp"

namespace llq {

TPartInstance validate_3part(std::span<const long long> values, long long k) {
  if (k < 1) throw invalid_instance("k must be >= 1");
  if (static_cast<long long>(values.size()) != 3 * k)
    throw invalid_instance("expected exactly 3k values");
  long long sum = 0;
  for (long long v : values) {
    if (v < 1) throw invalid_instance("values must be positive");
    sum += v;
  }
  if (sum % k != 0)
    throw invalid_instance("sum " + std::to_string(sum) + " is not divisible by k");
  const long long t = sum / k;
  for (long long v : values)
    if (!(4 * v > t && 2 * v < t))
      throw invalid_instance("value " + std::to_string(v) +
                             " violates the window T/4 < s < T/2 for T = " + std::to_string(t));
  TPartInstance inst;
  inst.values.assign(values.begin(), values.end());
  inst.k = k;
  inst.target = t;
  return inst;
}

namespace {
// c_y = prod_{i=0}^{y-1} t^i a t^-i, merged: a (t a)^{y-1} t^-(y-1)
GroupWord interval_word(long long y) {
  GroupWord w;
  w.letters.push_back(Letter::A);
  for (long long i = 1; i < y; ++i) {
    w.letters.push_back(Letter::T);
    w.letters.push_back(Letter::A);
  }
  w.append_t(-(y - 1));
  return w;
}
}  // namespace

QuadEquation encode_3part(const TPartInstance& inst) {
  QuadEquation eq;
  eq.form = EquationForm::Spherical;
  for (long long s : inst.values) eq.coeffs.push_back(interval_word(s));
  // c = k clusters of T lit lamps separated by single unlit lamps; c is an
  // involution in Y, so the word for c serves as the word for c^-1.
  LampElement c;
  for (long long j = 0; j < inst.k; ++j)
    for (long long p = 0; p < inst.target; ++p) c.lamps.toggle((inst.target + 1) * j + p);
  eq.coeffs.push_back(to_word(c));
  return eq;
}

std::optional<std::vector<std::array<long long, 3>>> brute_force_3part(
    const TPartInstance& inst) {
  const std::size_t n = inst.values.size();
  std::vector<bool> used(n, false);
  std::vector<std::array<long long, 3>> triples;
  std::function<bool()> rec = [&]() -> bool {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) return true;
    used[first] = true;
    for (std::size_t i = first + 1; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (used[j]) continue;
        if (inst.values[first] + inst.values[i] + inst.values[j] != inst.target) continue;
        used[j] = true;
        triples.push_back({inst.values[first], inst.values[i], inst.values[j]});
        if (rec()) return true;
        triples.pop_back();
        used[j] = false;
      }
      used[i] = false;
    }
    used[first] = false;
    return false;
  };
  if (rec()) return triples;
  return std::nullopt;
}

std::vector<std::array<long long, 3>> decode_3part(const TPartInstance& inst,
                                                   const ShiftCertificate& cert) {
  const std::size_t n = inst.values.size();
  if (cert.modulus != 0 || cert.shifts.size() != n + 1)
    throw tiling_error("certificate shape does not match the encoded equation");
  const long long t = inst.target;
  const long long base = cert.shifts[n];
  // positions of each interval relative to the big cluster configuration
  std::vector<std::vector<long long>> groups(static_cast<std::size_t>(inst.k));
  std::vector<std::vector<bool>> covered(
      static_cast<std::size_t>(inst.k), std::vector<bool>(static_cast<std::size_t>(t), false));
  for (std::size_t i = 0; i < n; ++i) {
    const long long p = cert.shifts[i] - base;
    const long long s = inst.values[i];
    if (p < 0) throw tiling_error("interval shifted left of the cluster region");
    const long long j = p / (t + 1);
    if (j >= inst.k || p + s - 1 > (t + 1) * j + t - 1)
      throw tiling_error("interval does not fit inside one cluster");
    for (long long q = 0; q < s; ++q) {
      const std::size_t cell = static_cast<std::size_t>(p - (t + 1) * j + q);
      if (covered[static_cast<std::size_t>(j)][cell])
        throw tiling_error("overlapping intervals in the certificate");
      covered[static_cast<std::size_t>(j)][cell] = true;
    }
    groups[static_cast<std::size_t>(j)].push_back(s);
  }
  std::vector<std::array<long long, 3>> out;
  for (auto& g : groups) {
    if (g.size() != 3) throw tiling_error("cluster not composed of exactly three intervals");
    long long sum = g[0] + g[1] + g[2];
    if (sum != t) throw tiling_error("cluster does not sum to T");
    std::sort(g.begin(), g.end());
    out.push_back({g[0], g[1], g[2]});
  }
  return out;
}

TPartInstance random_3part(long long k, long long target, std::uint64_t seed) {
  if (target < 9) throw invalid_instance("target too small for a strict window");
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  const long long lo = target / 4 + 1;
  const long long hi = (target - 1) / 2;  // strict upper bound
  std::vector<long long> values;
  for (long long j = 0; j < k; ++j) {
    for (;;) {
      const long long a = lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
      const long long b = lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
      const long long c = target - a - b;
      if (c >= lo && c <= hi) {
        values.push_back(a);
        values.push_back(b);
        values.push_back(c);
        break;
      }
    }
  }
  // deterministic shuffle
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[next() % i]);
  return validate_3part(values, k);
}

TPartInstance parse_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long long k = -1;
  std::vector<long long> values;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("k=", 0) == 0) {
      k = std::stoll(line.substr(2));
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
      values.push_back(std::stoll(tok));
    }
  }
  if (k < 0) throw invalid_instance("missing k=<int> line");
  return validate_3part(values, k);
}

std::string format_instance(const TPartInstance& inst) {
  std::string out = "k=" + std::to_string(inst.k) + "\n";
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(inst.values[i]);
  }
  out += '\n';
  return out;
}

std::string instance_marker(const TPartInstance& inst) {
  std::string m = "# 3part k=" + std::to_string(inst.k) + " s=";
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    if (i) m += ',';
    m += std::to_string(inst.values[i]);
  }
  return m;
}

std::optional<TPartInstance> find_instance_marker(std::span<const std::string> comments) {
  for (const auto& line : comments) {
    std::istringstream in(line);
    std::string hash, tag, kfield, sfield;
    in >> hash >> tag >> kfield >> sfield;
    if (hash != "#" || tag != "3part") continue;
    if (kfield.rfind("k=", 0) != 0 || sfield.rfind("s=", 0) != 0) continue;
    const long long k = std::stoll(kfield.substr(2));
    std::vector<long long> values;
    std::istringstream vs(sfield.substr(2));
    std::string tok;
    while (std::getline(vs, tok, ',')) values.push_back(std::stoll(tok));
    return validate_3part(values, k);
  }
  return std::nullopt;
}

}  // namespace llq
