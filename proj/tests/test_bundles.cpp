#include <doctest.h>

#include <stdexcept>

#include "csdr/bundles.hpp"

using namespace csdr;

TEST_CASE("abelian group normalization to invariant factors") {
  AbelianGroup g;
  g.torsion = {4, 6};
  g.normalize();
  CHECK(g.torsion == std::vector<long>{2, 12});

  AbelianGroup h;
  h.torsion = {2, 3};
  h.normalize();
  CHECK(h.torsion == std::vector<long>{6});

  AbelianGroup trivial;
  trivial.torsion = {1, 1};
  trivial.normalize();
  CHECK(trivial.is_trivial());
}

TEST_CASE("direct sum and power") {
  const AbelianGroup z = AbelianGroup::free(1);
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const AbelianGroup sum = z.direct_sum(z2);
  CHECK(sum.free_rank == 1);
  CHECK(sum.torsion == std::vector<long>{2});
  CHECK(z.power(3).free_rank == 3);
  CHECK(z2.power(2).torsion == std::vector<long>{2, 2});
  CHECK(z.power(0).is_trivial());
}

TEST_CASE("mod two and two-torsion") {
  AbelianGroup g;
  g.free_rank = 1;
  g.torsion = {2, 3, 4};
  g.normalize();
  CHECK(g.mod_two().torsion == std::vector<long>{2, 2, 2});
  CHECK(g.two_torsion().torsion == std::vector<long>{2, 2});
  CHECK(AbelianGroup::cyclic(3).mod_two().is_trivial());
  CHECK(AbelianGroup::free(1).mod_two() == AbelianGroup::cyclic(2));
}

TEST_CASE("group rendering") {
  CHECK(AbelianGroup::trivial().to_string() == "0");
  CHECK(AbelianGroup::free(1).to_string() == "Z");
  CHECK(AbelianGroup::free(2).to_string() == "Z^2");
  AbelianGroup g;
  g.free_rank = 1;
  g.torsion = {2};
  CHECK(g.to_string() == "Z + Z2");
}

TEST_CASE("homotopy table entries") {
  auto [pi0_su, pi1_su] = pi_table(GroupDescriptor::named_group("SU", 2));
  CHECK(pi0_su.is_trivial());
  CHECK(pi1_su.is_trivial());

  auto [pi0_so, pi1_so] = pi_table(GroupDescriptor::named_group("SO", 3));
  CHECK(pi0_so.is_trivial());
  CHECK(pi1_so == AbelianGroup::cyclic(2));

  auto [pi0_u, pi1_u] = pi_table(GroupDescriptor::named_group("U", 1));
  CHECK(pi0_u.is_trivial());
  CHECK(pi1_u == AbelianGroup::free(1));

  CHECK_THROWS_AS((void)pi_table(GroupDescriptor::named_group("SO", 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pi_table(GroupDescriptor::named_group("G", 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pi_table(GroupDescriptor::explicit_group(
                      AbelianGroup::cyclic(2), AbelianGroup::trivial(), false)),
                  std::invalid_argument);
}

TEST_CASE("surface cohomology in degree two") {
  const AbelianGroup z = AbelianGroup::free(1);
  CHECK(surface_cohomology(SurfaceDescriptor::sphere(2), z, 2) == z);
  CHECK(surface_cohomology(SurfaceDescriptor::orientable(3), z, 2) == z);
  CHECK(surface_cohomology(SurfaceDescriptor::nonorientable(1), z, 2) ==
        AbelianGroup::cyclic(2));
  CHECK(surface_cohomology(SurfaceDescriptor::nonorientable(2), AbelianGroup::cyclic(3),
                           2)
            .is_trivial());
}

TEST_CASE("surface cohomology in degree one") {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  CHECK(surface_cohomology(SurfaceDescriptor::sphere(2), z2, 1).is_trivial());
  CHECK(surface_cohomology(SurfaceDescriptor::orientable(2), z2, 1) == z2.power(4));
  // Klein bottle with Z2 coefficients: one free generator plus the 2-torsion.
  CHECK(surface_cohomology(SurfaceDescriptor::nonorientable(2), z2, 1) == z2.power(2));
  // Projective plane with Z coefficients: only the 2-torsion of Z, which is 0.
  CHECK(surface_cohomology(SurfaceDescriptor::nonorientable(1), AbelianGroup::free(1), 1)
            .is_trivial());
  CHECK_THROWS_AS(
      (void)surface_cohomology(SurfaceDescriptor::sphere(3), z2, 2),
      std::invalid_argument);
  CHECK_THROWS_AS((void)surface_cohomology(SurfaceDescriptor::sphere(2), z2, 3),
                  std::invalid_argument);
}

TEST_CASE("classification golden cases") {
  const auto su2 = GroupDescriptor::named_group("SU", 2);
  const auto u1 = GroupDescriptor::named_group("U", 1);
  const auto so3 = GroupDescriptor::named_group("SO", 3);

  const ClassificationResult a = classify(su2, SurfaceDescriptor::sphere(2));
  CHECK(a.resolved);
  CHECK(a.result.is_trivial());
  CHECK(a.method == "B-H1");

  const ClassificationResult b = classify(u1, SurfaceDescriptor::sphere(2));
  CHECK(b.resolved);
  CHECK(b.result == AbelianGroup::free(1));
  CHECK(b.method == "B-H2");

  for (long genus : {0L, 1L, 2L}) {
    const ClassificationResult c = classify(u1, SurfaceDescriptor::orientable(genus));
    CHECK(c.resolved);
    CHECK(c.result == AbelianGroup::free(1));
    CHECK(c.method == "B-H2");
  }

  const ClassificationResult d = classify(so3, SurfaceDescriptor::orientable(1));
  CHECK(d.resolved);
  CHECK(d.result == AbelianGroup::cyclic(2));

  const ClassificationResult e = classify(so3, SurfaceDescriptor::nonorientable(2));
  CHECK(e.resolved);
  CHECK(e.result == AbelianGroup::cyclic(2));

  const ClassificationResult f =
      classify(GroupDescriptor::named_group("Sp", 1), SurfaceDescriptor::orientable(2));
  CHECK(f.resolved);
  CHECK(f.result.is_trivial());
}

TEST_CASE("discrete structure groups") {
  const auto z2 = GroupDescriptor::discrete(AbelianGroup::cyclic(2));
  const ClassificationResult sphere = classify(z2, SurfaceDescriptor::sphere(2));
  CHECK(sphere.resolved);
  CHECK(sphere.result.is_trivial());
  CHECK(sphere.method == "B-H1a");

  const ClassificationResult torus = classify(z2, SurfaceDescriptor::orientable(1));
  CHECK(torus.resolved);
  CHECK(torus.result == AbelianGroup::cyclic(2).power(2));
  CHECK(torus.method == "B-H1a");
  CHECK(torus.beyond_table);
}

TEST_CASE("mixed homotopy yields the unresolved sequence record") {
  const auto mixed = GroupDescriptor::explicit_group(AbelianGroup::cyclic(2),
                                                     AbelianGroup::free(1));
  const ClassificationResult r = classify(mixed, SurfaceDescriptor::orientable(1));
  CHECK(!r.resolved);
  CHECK(r.method == "HBH-sequence");
  CHECK(r.h2_pi1 == AbelianGroup::free(1));
  CHECK(r.h1_pi0 == AbelianGroup::cyclic(2).power(2));
  const std::string json = r.to_json();
  CHECK(json.find("sequence") != std::string::npos);
  CHECK(json.find("HBH-sequence") != std::string::npos);
}

TEST_CASE("sphere classification through the ladder") {
  const auto u1 = GroupDescriptor::named_group("U", 1);
  CHECK(classify_sphere(u1, 2) == AbelianGroup::free(1));
  CHECK(classify_sphere(u1, 1).is_trivial());
  CHECK(classify_sphere(GroupDescriptor::discrete(AbelianGroup::cyclic(3)), 1) ==
        AbelianGroup::cyclic(3));
  CHECK_THROWS_AS((void)classify_sphere(u1, 3), std::invalid_argument);
}

TEST_CASE("witten crosscheck for quotients of simply connected groups") {
  const auto su2 = GroupDescriptor::named_group("SU", 2);
  CHECK(witten_crosscheck(su2, AbelianGroup::cyclic(2), SurfaceDescriptor::orientable(1)));
  CHECK(witten_crosscheck(su2, AbelianGroup::cyclic(2), SurfaceDescriptor::sphere(2)));
  CHECK_THROWS_AS((void)witten_crosscheck(su2, AbelianGroup::cyclic(2),
                                          SurfaceDescriptor::nonorientable(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)witten_crosscheck(GroupDescriptor::named_group("SO", 3),
                              AbelianGroup::cyclic(2), SurfaceDescriptor::sphere(2)),
      std::invalid_argument);
}

TEST_CASE("parsers") {
  const GroupDescriptor g = parse_group("SU(2)");
  CHECK(g.kind == GroupDescriptor::Kind::named);
  CHECK(g.name == "SU");
  CHECK(g.rank == 2);

  const GroupDescriptor d = parse_group("discrete:Z2xZ4");
  CHECK(d.kind == GroupDescriptor::Kind::discrete);
  CHECK(d.discrete_group.torsion == std::vector<long>{2, 4});

  const GroupDescriptor e = parse_group("explicit:pi0=Z2,pi1=Z");
  CHECK(e.pi0 == AbelianGroup::cyclic(2));
  CHECK(e.pi1 == AbelianGroup::free(1));

  CHECK(parse_surface("sphere2").kind == SurfaceDescriptor::Kind::sphere);
  CHECK(parse_surface("orientable:3").param == 3);
  CHECK(parse_surface("nonorientable:2").kind == SurfaceDescriptor::Kind::nonorientable);

  CHECK_THROWS_AS((void)parse_group("Spin16"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_group("discrete:W5"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_surface("mobius"), std::invalid_argument);
}

TEST_CASE("classification json carries the method tag") {
  const ClassificationResult r =
      classify(GroupDescriptor::named_group("SO", 3), SurfaceDescriptor::orientable(1));
  const std::string json = r.to_json();
  CHECK(json.find("\"method\": \"B-H2\"") != std::string::npos);
  CHECK(json.find("\"result\": \"Z2\"") != std::string::npos);
}
