#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "extrema/errors.hpp"
#include "extrema/lfunc.hpp"
#include "extrema/spec_io.hpp"

using namespace extrema;

TEST(SpecIo, ZetaAndCharacter) {
  const auto z = parse_spec("name=zeta\nkind=zeta\n", ".");
  EXPECT_EQ(z.kind(), CoeffKind::zeta);
  EXPECT_EQ(z.name(), "zeta");
  const auto chi = parse_spec("# comment\nkind = dirichlet\nq=4\nchar_index=1\n", ".");
  EXPECT_EQ(chi.kind(), CoeffKind::dirichlet_character);
  EXPECT_EQ(coeff(chi, 3), Complex(-1.0, 0.0));
  EXPECT_EQ(chi.period(), 4u);
}

TEST(SpecIo, Errors) {
  EXPECT_THROW(parse_spec("kind=zeta\ncolour=red\n", "."), ParseError);
  EXPECT_THROW(parse_spec("kind=zeta\nkind=zeta\n", "."), ParseError);
  EXPECT_THROW(parse_spec("kind=mystery\n", "."), ParseError);
  EXPECT_THROW(parse_spec("kind=dirichlet\nq=abc\n", "."), ParseError);
  EXPECT_THROW(parse_spec("kind=zeta\nkappa=2\n", "."), RangeError);
  EXPECT_THROW(load_spec("/nonexistent/zeta.spec"), ParseError);
}

TEST(SpecIo, EulerRootsFromFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "extrema_spec_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "roots.csv");
    csv << "p,re_alpha_1,im_alpha_1,re_alpha_2,im_alpha_2\n"
           "2,1,0,1,0\n3,1,0,1,0\n5,0,1,0,-1\n7,1,0,-1,0\n";
    std::ofstream spec(dir / "l.spec");
    spec << "name=test\nkind=euler-roots\nm=2\ndL=2\nkappa=2\nroots=roots.csv\nroot_bound=7\ndelta=0.1\n";
  }
  const auto spec = load_spec(dir / "l.spec");
  EXPECT_EQ(spec.m(), 2);
  EXPECT_EQ(spec.degree(), 2.0);
  EXPECT_EQ(spec.kappa(), 2.0);
  EXPECT_EQ(spec.axiom_delta(), 0.1);
  EXPECT_EQ(coeff(spec, 4).real(), 3.0);
  EXPECT_EQ(coeff(spec, 5), Complex(0.0, 0.0));
  EXPECT_NEAR(coeff(spec, 25).real(), -1.0, 1e-15);
  EXPECT_THROW(coeff(spec, 11), InsufficientEulerData);
  std::filesystem::remove_all(dir);
}

TEST(SpecIo, RootsCsvErrors) {
  EXPECT_THROW(parse_roots_csv("2,1\n"), ParseError);
  EXPECT_THROW(parse_roots_csv("2,1,0\n2,1,0\n"), ParseError);
  EXPECT_EQ(parse_roots_csv("p,re,im\n2,1,0\n").size(), 1u);
}

TEST(SpecIo, Instance) {
  const auto inst = parse_instance("M=3,T1=0,T2=1e4\nlambda,beta,delta\n0.5,0.1,1\n0.25,0.2,0.5\n");
  EXPECT_EQ(inst.M(), 3);
  EXPECT_EQ(inst.T2(), 1e4);
  EXPECT_EQ(inst.n(), 2u);
  EXPECT_EQ(inst.delta_big(), 1.5);
  EXPECT_THROW(parse_instance("0.5,0.1,1\n"), ParseError);
  EXPECT_THROW(parse_instance("M=3,T1=0\n0.5,0.1,1\n"), ParseError);
}
