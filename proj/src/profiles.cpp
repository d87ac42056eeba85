#include "symobs/profiles.hpp"

#include <cctype>
#include <stdexcept>

namespace symobs {

int GradedDims::total() const {
  int t = 0;
  for (const auto& [deg, dim] : entries) t += dim;
  return t;
}

void GradedDims::add(int degree, int count) {
  if (count == 0) return;
  entries[degree] += count;
}

std::string to_string(const GradedDims& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [deg, dim] : g.entries) {
    if (!first) out += ", ";
    out += std::to_string(deg) + ":" + std::to_string(dim);
    first = false;
  }
  return out + "}";
}

GradedDims parse_graded_dims(const std::string& text) {
  GradedDims g;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::invalid_argument("graded dims must be braced: " + text);
  s = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (start < s.size()) {
    auto comma = s.find(',', start);
    auto item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad graded entry: " + item);
    g.add(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return g;
}

GradedDims minus_theta_profile(const SimpleFactor& f) {
  GradedDims g;
  switch (f.family) {
    case Family::SlR:
      for (int d = 5; d <= 4 * ((f.p + 1) / 2) - 3; d += 4) g.add(d);
      break;
    case Family::SlH:
      for (int d = 5; d <= 4 * f.p - 3; d += 4) g.add(d);
      break;
    case Family::SO:
      if (f.p % 2 == 1 && f.q % 2 == 1) g.add(f.p + f.q - 1);
      break;
    case Family::E6_6:
    case Family::E6_m26:
      g.add(9);
      g.add(17);
      break;
    default:
      if (is_complex(f.family))
        for (int e : exponents(f)) g.add(e);
      break;
  }
  return g;
}

GradedDims minus_theta_profile(const ReductiveDescriptor& d) {
  GradedDims g;
  g.add(1, d.split_abelian);
  for (const auto& f : d.simples)
    for (const auto& [deg, dim] : minus_theta_profile(f).entries) g.add(deg, dim);
  return g;
}

int d_k(const ReductiveDescriptor& d, int k) {
  auto count = [&](auto pred) {
    int c = 0;
    for (const auto& f : d.simples)
      if (pred(f)) ++c;
    return c;
  };
  auto is = [](const SimpleFactor& f, Family fam) { return f.family == fam; };
  switch (k) {
    case 1: return d.split_abelian;
    case 2: return count([](const SimpleFactor& f) { return is_complex(f.family); });
    case 3:
      return count([&](const SimpleFactor& f) {
        return (is(f, Family::SlR) && f.p >= 3) || (is(f, Family::SlC) && f.p >= 3) ||
               (is(f, Family::SlH) && f.p >= 2);
      });
    case 4: {
      int c = count([&](const SimpleFactor& f) {
        return (is(f, Family::SO) && f.p == 7 && f.q == 1) ||
               (is(f, Family::SO) && f.p == 5 && f.q == 3) ||
               (is(f, Family::SlC) && f.p >= 4) ||
               (is(f, Family::SoC) && f.p >= 7 && f.p != 8) || (is(f, Family::SpC) && f.p >= 2);
      });
      c += 2 * count([&](const SimpleFactor& f) { return is(f, Family::SoC) && f.p == 8; });
      return c;
    }
    default: throw std::invalid_argument("d_k: k must be in 1..4");
  }
}

RankTest rank_test(const ReductiveDescriptor& g, const ReductiveDescriptor& h) {
  int gs = rank(g) - compact_rank(g);
  int hs = rank(h) - compact_rank(h);
  return {gs >= hs, gs, hs};
}

DegreeTest degree_test(const ReductiveDescriptor& g, const ReductiveDescriptor& h) {
  auto pg = minus_theta_profile(g);
  auto ph = minus_theta_profile(h);
  for (const auto& [deg, dim] : ph.entries)
    if (pg.at(deg) < dim) return {false, deg};
  return {true, std::nullopt};
}

}  // namespace symobs
