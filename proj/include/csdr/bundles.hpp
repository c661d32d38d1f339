#ifndef CSDR_BUNDLES_HPP
#define CSDR_BUNDLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csdr {

/// Finitely generated abelian group Z^r + Z_{d1} + ... + Z_{dk} with the
/// invariant factors in divisibility chain order (d1 | d2 | ...). The
/// trivial group is (0, {}).
struct AbelianGroup {
  long free_rank = 0;
  std::vector<long> torsion;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(long rank) { return {rank, {}}; }
  static AbelianGroup cyclic(long order);

  /// Rewrites an arbitrary torsion list into invariant factors.
  void normalize();

  AbelianGroup direct_sum(const AbelianGroup& other) const;
  AbelianGroup power(long k) const;

  /// Quotient by doubling: Z -> Z_2, Z_d -> Z_2 for even d, else 0.
  AbelianGroup mod_two() const;

  /// 2-torsion subgroup: Z_2 per even invariant factor.
  AbelianGroup two_torsion() const;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Structure group input: either a named Lie group resolved through the
/// homotopy table, a discrete abelian group, or explicit homotopy data.
struct GroupDescriptor {
  enum class Kind { named, discrete, explicit_pi };
  Kind kind = Kind::named;

  std::string name;       // named: "SU", "Sp", "SO", "U" plus rank
  long rank = 0;
  AbelianGroup discrete_group;
  AbelianGroup pi0;
  AbelianGroup pi1;
  bool pi0_abelian = true;  // caller-asserted hypothesis for explicit data

  static GroupDescriptor named_group(std::string family, long rank);
  static GroupDescriptor discrete(AbelianGroup h);
  static GroupDescriptor explicit_group(AbelianGroup pi0, AbelianGroup pi1,
                                        bool pi0_abelian = true);
  std::string to_string() const;
};

/// Base space: a sphere S^n, or a compact surface given by genus.
struct SurfaceDescriptor {
  enum class Kind { sphere, orientable, nonorientable };
  Kind kind = Kind::sphere;
  long param = 2;  // sphere dimension n, orientable genus g, or crosscap count k

  static SurfaceDescriptor sphere(long n) { return {Kind::sphere, n}; }
  static SurfaceDescriptor orientable(long genus) { return {Kind::orientable, genus}; }
  static SurfaceDescriptor nonorientable(long k) { return {Kind::nonorientable, k}; }
  std::string to_string() const;
};

/// (pi0, pi1) of a group descriptor. Named entries come from the table of
/// low homotopy groups: SU(n), Sp(n) simply connected; SO(3) and SO(n >= 5)
/// have pi1 = Z_2; U(n) has pi1 = Z. SO(4) and anything else off the table
/// is rejected with std::invalid_argument.
std::pair<AbelianGroup, AbelianGroup> pi_table(const GroupDescriptor& g);

/// H^1 or H^2 of a two-dimensional surface with coefficients in pi.
/// Degree 2: pi for compact orientable, pi/2pi for non-orientable.
/// Degree 1: 0 for the sphere, pi^{2g} for orientable genus g, and
/// pi^{k-1} + pi[2] for non-orientable genus k (cellular cochain complex
/// with one 2-cell attached along the product of squared generators).
/// The non-sphere degree-1 entries go beyond the tabulated results and are
/// flagged as such by classify().
AbelianGroup surface_cohomology(const SurfaceDescriptor& m, const AbelianGroup& pi,
                                int degree);

struct ClassificationResult {
  bool resolved = false;
  AbelianGroup result;           // valid when resolved
  AbelianGroup h2_pi1;           // H^2(M; pi1 G)
  AbelianGroup h1_pi0;           // H^1(M; pi0 G)
  std::string method;            // "B-H1" | "B-H1a" | "B-H2" | "B-Sn" | "HBH-sequence"
  bool beyond_table = false;     // used a degree-1 group outside the tabulated list
  std::string to_json() const;

  std::string group_label;
  std::string surface_label;
};

/// Bundle classification over a two-dimensional base. Resolves to a group
/// exactly when one of the two flanking cohomology groups is trivial;
/// otherwise reports the unresolved short exact sequence. Throws when the
/// surface is not two-dimensional or an explicit descriptor violates the
/// abelian-pi0 hypothesis.
ClassificationResult classify(const GroupDescriptor& g, const SurfaceDescriptor& m);

/// Bundles over S^n via the classifying-space ladder: pi_{n-1}(G).
/// Only n in {1, 2} is backed by the homotopy table.
AbelianGroup classify_sphere(const GroupDescriptor& g, long n);

/// For G = G~/Gamma with G~ simply connected, checks that classification
/// over a compact orientable surface reproduces Gamma.
bool witten_crosscheck(const GroupDescriptor& g_tilde, const AbelianGroup& gamma,
                       const SurfaceDescriptor& m);

/// Parsers for the CLI specs, e.g. "SU(2)", "discrete:Z2xZ4",
/// "sphere2", "orientable:1", "nonorientable:2".
GroupDescriptor parse_group(const std::string& spec);
SurfaceDescriptor parse_surface(const std::string& spec);

}  // namespace csdr

#endif
