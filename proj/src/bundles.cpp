#include "csdr/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace csdr {

AbelianGroup AbelianGroup::cyclic(long order) {
  if (order < 2) return trivial();
  AbelianGroup g;
  g.torsion = {order};
  return g;
}

void AbelianGroup::normalize() {
  std::erase_if(torsion, [](long d) { return d <= 1; });
  if (torsion.size() < 2) return;
  // Pairwise gcd/lcm sweeps until every adjacent pair divides.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < torsion.size(); ++i) {
      for (size_t j = i + 1; j < torsion.size(); ++j) {
        const long g = std::gcd(torsion[i], torsion[j]);
        const long l = torsion[i] / g * torsion[j];
        if (g != torsion[i]) {
          torsion[i] = g;
          torsion[j] = l;
          changed = true;
        }
      }
    }
  }
  std::erase_if(torsion, [](long d) { return d <= 1; });
  std::sort(torsion.begin(), torsion.end());
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  AbelianGroup out;
  out.free_rank = free_rank + other.free_rank;
  out.torsion = torsion;
  out.torsion.insert(out.torsion.end(), other.torsion.begin(), other.torsion.end());
  out.normalize();
  return out;
}

AbelianGroup AbelianGroup::power(long k) const {
  AbelianGroup out;
  for (long i = 0; i < k; ++i) out = out.direct_sum(*this);
  return out;
}

AbelianGroup AbelianGroup::mod_two() const {
  AbelianGroup out;
  long count = free_rank;
  for (long d : torsion) {
    if (d % 2 == 0) ++count;
  }
  out.torsion.assign(count, 2);
  return out;
}

AbelianGroup AbelianGroup::two_torsion() const {
  AbelianGroup out;
  long count = 0;
  for (long d : torsion) {
    if (d % 2 == 0) ++count;
  }
  out.torsion.assign(count, 2);
  return out;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (long d : torsion) {
    sep();
    os << "Z" << d;
  }
  return os.str();
}

GroupDescriptor GroupDescriptor::named_group(std::string family, long rank) {
  GroupDescriptor g;
  g.kind = Kind::named;
  g.name = std::move(family);
  g.rank = rank;
  return g;
}

GroupDescriptor GroupDescriptor::discrete(AbelianGroup h) {
  GroupDescriptor g;
  g.kind = Kind::discrete;
  g.discrete_group = std::move(h);
  return g;
}

GroupDescriptor GroupDescriptor::explicit_group(AbelianGroup pi0, AbelianGroup pi1,
                                                bool pi0_abelian) {
  GroupDescriptor g;
  g.kind = Kind::explicit_pi;
  g.pi0 = std::move(pi0);
  g.pi1 = std::move(pi1);
  g.pi0_abelian = pi0_abelian;
  return g;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::named:
      return name + "(" + std::to_string(rank) + ")";
    case Kind::discrete:
      return "discrete " + discrete_group.to_string();
    case Kind::explicit_pi:
      return "explicit(pi0=" + pi0.to_string() + ", pi1=" + pi1.to_string() + ")";
  }
  return "?";
}

std::string SurfaceDescriptor::to_string() const {
  switch (kind) {
    case Kind::sphere:
      return "S^" + std::to_string(param);
    case Kind::orientable:
      return "orientable genus " + std::to_string(param);
    case Kind::nonorientable:
      return "non-orientable genus " + std::to_string(param);
  }
  return "?";
}

std::pair<AbelianGroup, AbelianGroup> pi_table(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupDescriptor::Kind::discrete:
      return {g.discrete_group, AbelianGroup::trivial()};
    case GroupDescriptor::Kind::explicit_pi:
      if (!g.pi0_abelian) {
        throw std::invalid_argument("pi_table: pi0 must be abelian");
      }
      return {g.pi0, g.pi1};
    case GroupDescriptor::Kind::named:
      break;
  }
  if (g.name == "SU" && g.rank >= 2) {
    return {AbelianGroup::trivial(), AbelianGroup::trivial()};
  }
  if (g.name == "Sp" && g.rank >= 1) {
    return {AbelianGroup::trivial(), AbelianGroup::trivial()};
  }
  if (g.name == "SO" && (g.rank == 3 || g.rank >= 5)) {
    return {AbelianGroup::trivial(), AbelianGroup::cyclic(2)};
  }
  if (g.name == "U" && g.rank >= 1) {
    return {AbelianGroup::trivial(), AbelianGroup::free(1)};
  }
  throw std::invalid_argument("pi_table: group outside the tabulated list: " +
                              g.to_string());
}

AbelianGroup surface_cohomology(const SurfaceDescriptor& m, const AbelianGroup& pi,
                                int degree) {
  if (m.kind == SurfaceDescriptor::Kind::sphere && m.param != 2) {
    throw std::invalid_argument("surface_cohomology: base is not two-dimensional");
  }
  if (degree == 2) {
    if (m.kind == SurfaceDescriptor::Kind::nonorientable) return pi.mod_two();
    return pi;
  }
  if (degree == 1) {
    switch (m.kind) {
      case SurfaceDescriptor::Kind::sphere:
        return AbelianGroup::trivial();
      case SurfaceDescriptor::Kind::orientable:
        return pi.power(2 * m.param);
      case SurfaceDescriptor::Kind::nonorientable:
        if (m.param < 1) {
          throw std::invalid_argument("surface_cohomology: crosscap count must be >= 1");
        }
        return pi.power(m.param - 1).direct_sum(pi.two_torsion());
    }
  }
  throw std::invalid_argument("surface_cohomology: unsupported degree");
}

std::string ClassificationResult::to_json() const {
  nlohmann::json j;
  j["group"] = group_label;
  j["surface"] = surface_label;
  j["method"] = method;
  j["provenance"] = method;
  j["beyond_paper_table"] = beyond_table;
  if (resolved) {
    j["result"] = result.to_string();
  } else {
    j["sequence"] = {{"h2_pi1", h2_pi1.to_string()},
                     {"set", "B"},
                     {"h1_pi0", h1_pi0.to_string()}};
  }
  return j.dump(2);
}

ClassificationResult classify(const GroupDescriptor& g, const SurfaceDescriptor& m) {
  const auto [pi0, pi1] = pi_table(g);
  ClassificationResult r;
  r.group_label = g.to_string();
  r.surface_label = m.to_string();
  r.h2_pi1 = surface_cohomology(m, pi1, 2);
  r.h1_pi0 = surface_cohomology(m, pi0, 1);
  r.beyond_table = m.kind != SurfaceDescriptor::Kind::sphere && !pi0.is_trivial();

  if (pi1.is_trivial()) {
    r.resolved = true;
    r.result = r.h1_pi0;
    r.method = g.kind == GroupDescriptor::Kind::discrete ? "B-H1a" : "B-H1";
  } else if (pi0.is_trivial()) {
    r.resolved = true;
    r.result = r.h2_pi1;
    r.method = "B-H2";
  } else if (r.h1_pi0.is_trivial()) {
    r.resolved = true;
    r.result = r.h2_pi1;
    r.method = "HBH-sequence";
  } else if (r.h2_pi1.is_trivial()) {
    r.resolved = true;
    r.result = r.h1_pi0;
    r.method = "HBH-sequence";
  } else {
    r.resolved = false;
    r.method = "HBH-sequence";
  }
  return r;
}

AbelianGroup classify_sphere(const GroupDescriptor& g, long n) {
  const auto [pi0, pi1] = pi_table(g);
  if (n == 1) return pi0;
  if (n == 2) return pi1;
  throw std::invalid_argument("classify_sphere: only S^1 and S^2 are tabulated");
}

bool witten_crosscheck(const GroupDescriptor& g_tilde, const AbelianGroup& gamma,
                       const SurfaceDescriptor& m) {
  if (m.kind == SurfaceDescriptor::Kind::nonorientable) {
    throw std::invalid_argument("witten_crosscheck: base must be compact orientable");
  }
  const auto [pi0, pi1] = pi_table(g_tilde);
  if (!pi0.is_trivial() || !pi1.is_trivial()) {
    throw std::invalid_argument("witten_crosscheck: covering group must be simply connected");
  }
  // The quotient group has pi1 isomorphic to the covering kernel.
  const GroupDescriptor quotient =
      GroupDescriptor::explicit_group(AbelianGroup::trivial(), gamma);
  const ClassificationResult r = classify(quotient, m);
  return r.resolved && r.result == gamma;
}

namespace {

AbelianGroup parse_abelian(const std::string& spec) {
  // "Z2", "Z2xZ4", "Z" (infinite cyclic), "ZxZ3", "0"
  AbelianGroup g;
  if (spec == "0" || spec.empty()) return g;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, 'x')) {
    if (token == "Z") {
      ++g.free_rank;
    } else if (token.size() > 1 && token[0] == 'Z') {
      g.torsion.push_back(std::stol(token.substr(1)));
    } else {
      throw std::invalid_argument("parse_abelian: bad token '" + token + "'");
    }
  }
  g.normalize();
  return g;
}

}  // namespace

GroupDescriptor parse_group(const std::string& spec) {
  if (spec.starts_with("discrete:")) {
    return GroupDescriptor::discrete(parse_abelian(spec.substr(9)));
  }
  if (spec.starts_with("explicit:")) {
    // explicit:pi0=Z2,pi1=Z
    const std::string body = spec.substr(9);
    const auto comma = body.find(',');
    if (comma == std::string::npos || !body.starts_with("pi0=") ||
        body.substr(comma + 1).substr(0, 4) != "pi1=") {
      throw std::invalid_argument("parse_group: expected explicit:pi0=...,pi1=...");
    }
    return GroupDescriptor::explicit_group(parse_abelian(body.substr(4, comma - 4)),
                                           parse_abelian(body.substr(comma + 5)));
  }
  const auto open = spec.find('(');
  const auto close = spec.find(')');
  if (open == std::string::npos || close != spec.size() - 1 || close <= open + 1) {
    throw std::invalid_argument("parse_group: unknown group spec '" + spec + "'");
  }
  const std::string family = spec.substr(0, open);
  const long rank = std::stol(spec.substr(open + 1, close - open - 1));
  return GroupDescriptor::named_group(family, rank);
}

SurfaceDescriptor parse_surface(const std::string& spec) {
  if (spec.starts_with("sphere")) {
    return SurfaceDescriptor::sphere(std::stol(spec.substr(6)));
  }
  if (spec.starts_with("orientable:")) {
    return SurfaceDescriptor::orientable(std::stol(spec.substr(11)));
  }
  if (spec.starts_with("nonorientable:")) {
    return SurfaceDescriptor::nonorientable(std::stol(spec.substr(14)));
  }
  throw std::invalid_argument("parse_surface: unknown surface spec '" + spec + "'");
}

}  // namespace csdr
