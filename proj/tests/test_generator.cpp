#include <cmath>

#include <gtest/gtest.h>

#include "statemap/errors.hpp"
#include "statemap/generator.hpp"
#include "support/random_states.hpp"

namespace statemap {
namespace {

using testing::orthogonal_to;
using testing::random_complex;
using testing::random_nonreal;
using testing::random_real_multiplier;
using testing::random_state;
using testing::Rng;

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void expect_vec_near(const StateVector& x, const StateVector& y, double tol) {
  ASSERT_EQ(x.dimension(), y.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    EXPECT_NEAR(x[i].real(), y[i].real(), tol) << "component " << i;
    EXPECT_NEAR(x[i].imag(), y[i].imag(), tol) << "component " << i;
  }
}

TEST(MakeGenerator, Cases) {
  const auto orth = make_generator({1.0, 0.0}, {0.0, 1.0});
  EXPECT_EQ(orth.case_tag(), CaseTag::GenericPair);
  EXPECT_DOUBLE_EQ(orth.invariants().Gamma, 1.0);

  const auto phase = make_generator({1.0, 0.0}, {kI, 0.0});
  EXPECT_EQ(phase.case_tag(), CaseTag::PhaseCollinear);
  EXPECT_EQ(phase.invariants().sigma, -1.0);

  EXPECT_EQ(make_generator({1.0, 0.0}, {3.0, 0.0}).case_tag(), CaseTag::RealCollinear);
}

TEST(MakeGenerator, Errors) {
  EXPECT_THROW(make_generator({0.0, 0.0}, {1.0, 0.0}), InputError);
  EXPECT_THROW(make_generator({1.0, 0.0}, {0.0, 0.0}), InputError);
  EXPECT_THROW(make_generator({1.0}, {1.0, 0.0}), InputError);
  const auto gen = make_generator({1.0, 0.0}, {0.0, 1.0});
  EXPECT_THROW(apply_generator(gen, StateVector{1.0}), InputError);
}

TEST(ApplyGenerator, Examples) {
  const StateVector a{1.0, 0.0};
  const StateVector b{0.0, 1.0};
  const auto gen = make_generator(a, b);
  expect_vec_near(apply_generator(gen, a), b, 0.0);
  expect_vec_near(apply_generator(gen, b), StateVector{-1.0, 0.0}, 0.0);

  // <a,a> b - <b,a> a = b - (1/sqrt2) a
  const auto diag = make_generator(a, {kInvSqrt2, kInvSqrt2});
  expect_vec_near(apply_generator(diag, a), StateVector{0.0, kInvSqrt2}, 1e-16);
}

TEST(GeneratorMatrix, Examples) {
  const auto rot = generator_matrix(make_generator({1.0, 0.0}, {0.0, 1.0}));
  EXPECT_EQ(rot(0, 0), Complex{});
  EXPECT_EQ(rot(0, 1), Complex(-1.0));
  EXPECT_EQ(rot(1, 0), Complex(1.0));
  EXPECT_EQ(rot(1, 1), Complex{});

  // Columns T(e_k): T(e_0) = <a,e0> b - <b,e0> a = i a - (-i) a = 2i a.
  const auto phase = generator_matrix(make_generator({1.0, 0.0}, {kI, 0.0}));
  EXPECT_EQ(phase(0, 0), 2.0 * kI);
  EXPECT_EQ(phase(0, 1), Complex{});
  EXPECT_EQ(phase(1, 0), Complex{});
  EXPECT_EQ(phase(1, 1), Complex{});
}

TEST(GeneratorMatrix, AntiHermitianAndMatchesApply) {
  Rng rng(3);
  for (std::size_t d : {2u, 3u, 7u, 16u}) {
    const auto gen = make_generator(random_state(d, rng), random_state(d, rng));
    const auto m = generator_matrix(gen);
    EXPECT_LE(frobenius_norm(matrix_add(m, m.adjoint())), 1e-13 * frobenius_norm(m));
    for (std::size_t k = 0; k < d; ++k) {
      const auto e = StateVector::basis(d, k);
      EXPECT_LE(vec_norm(matrix_apply(m, e) - apply_generator(gen, e)), 1e-13 * frobenius_norm(m));
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({0.0, 0.0, 1.0, 1.0}, 1.0), CaseTag::GenericPair);
  EXPECT_EQ(classify({0.0, -1.0, 0.0, 1.0}, 1.0), CaseTag::PhaseCollinear);
  EXPECT_EQ(classify({3.0, 0.0, 0.0, 0.0}, 9.0), CaseTag::RealCollinear);
  EXPECT_EQ(classify({0.0, 0.0, 1e-19, 1e-9}, 1.0), CaseTag::GenericPair);
  EXPECT_EQ(classify({0.0, 0.0, 1e-21, 0.0}, 1.0), CaseTag::RealCollinear);
  EXPECT_EQ(classify({0.0, 0.0, 1e-19, 1e-9}, 1.0, 1e-18), CaseTag::RealCollinear);
}

TEST(Classify, TenthDecimalDifferencesStayDistinct) {
  // G^2 / scale = (5e-10)^2 / (1 + 2.5e-19) > 1e-20.
  const StateVector a{1.0, 0.0, 0.0};
  EXPECT_EQ(make_generator(a, {1.0, 5e-10, 0.0}).case_tag(), CaseTag::GenericPair);
  EXPECT_EQ(make_generator(a, {1.0, Complex(0.0, 5e-10), 0.0}).case_tag(), CaseTag::GenericPair);
  EXPECT_EQ(make_generator(a, {1.0, 5e-11, 0.0}).case_tag(), CaseTag::RealCollinear);
}

TEST(CommutatorResidual, Examples) {
  Rng rng(5);
  const auto p = make_generator(random_state(3, rng), random_state(3, rng));
  const auto v = random_state(3, rng);
  EXPECT_LE(commutator_residual(p, p, v), 1e-12 * vec_norm(v) * norm_squared(p.a()) * norm_squared(p.b()));

  // Orthonormal a, b, c, d in dimension 4.
  const auto e = [](std::size_t k) { return StateVector::basis(4, k); };
  const auto v4 = random_state(4, rng);
  EXPECT_LE(commutator_residual(make_generator(e(0), e(1)), make_generator(e(2), e(3)), v4),
            1e-12 * vec_norm(v4));
  EXPECT_LE(commutator_residual(make_generator(e(0), kI * e(1)), make_generator(e(1), e(2)), v4),
            1e-12 * vec_norm(v4));

  // c = a, d = b in dimension 2.
  const StateVector a = random_state(2, rng);
  const StateVector b = random_state(2, rng);
  const auto v2 = random_state(2, rng);
  const double scale = vec_norm(v2) * norm_squared(a) * norm_squared(b);
  EXPECT_LE(commutator_residual(make_generator(a, b), make_generator(a, b), v2), 1e-12 * scale);
}

class GeneratorProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(GeneratorProperties, AntisymmetryAndMiddleConjugateLinearity) {
  const std::size_t d = GetParam();
  Rng rng(100 + d);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_state(d, rng);
    const auto b = random_state(d, rng);
    const auto c = random_state(d, rng);
    const double scale = vec_norm(a) * vec_norm(b) * vec_norm(c);

    const auto sum = generator_action(a, b, c) + generator_action(b, a, c);
    EXPECT_LE(vec_norm(sum) / scale, 1e-13);

    const Complex alpha = random_complex(rng);
    const auto left = generator_action(alpha * a, b, c);
    const auto right = generator_action(a, std::conj(alpha) * b, c);
    EXPECT_LE(vec_norm(left - right) / (std::abs(alpha) * scale), 1e-12);
  }
}

TEST_P(GeneratorProperties, AntiHermiticity) {
  const std::size_t d = GetParam();
  Rng rng(200 + d);
  for (int t = 0; t < 200; ++t) {
    const auto gen = make_generator(random_state(d, rng), random_state(d, rng));
    const auto x = random_state(d, rng);
    const auto y = random_state(d, rng);
    const Complex lhs = inner_product(gen.apply(x), y) + inner_product(x, gen.apply(y));
    const double scale = vec_norm(gen.a()) * vec_norm(gen.b()) * vec_norm(x) * vec_norm(y);
    EXPECT_LE(std::abs(lhs) / scale, 1e-12);
  }
}

TEST_P(GeneratorProperties, ZeroExactlyForRealMultiples) {
  const std::size_t d = GetParam();
  Rng rng(300 + d);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_state(d, rng);
    const auto real = make_generator(a, random_real_multiplier(rng) * a);
    EXPECT_EQ(real.case_tag(), CaseTag::RealCollinear);
    const auto phase = make_generator(a, random_nonreal(rng) * a);
    EXPECT_EQ(phase.case_tag(), CaseTag::PhaseCollinear);
    const auto c = random_state(d, rng);
    const double scale = vec_norm(a) * vec_norm(real.b()) * vec_norm(c);
    EXPECT_LE(vec_norm(real.apply(c)) / scale, 1e-12);
    EXPECT_GT(vec_norm(phase.apply(c)), 1e-6 * scale);
  }
}

TEST_P(GeneratorProperties, RangeConfinement) {
  const std::size_t d = GetParam();
  if (d < 3) GTEST_SKIP() << "no complement of span{a,b}";
  Rng rng(400 + d);
  for (int t = 0; t < 100; ++t) {
    const auto gen = make_generator(random_state(d, rng), random_state(d, rng));
    const auto c = orthogonal_to(gen.a(), gen.b(), rng);
    const double scale = vec_norm(gen.a()) * vec_norm(gen.b()) * vec_norm(c);
    EXPECT_LE(vec_norm(gen.apply(c)) / scale, 1e-13);
  }
}

TEST_P(GeneratorProperties, QuadraticMatchesNestedApplication) {
  const std::size_t d = GetParam();
  Rng rng(500 + d);
  for (int t = 0; t < 100; ++t) {
    const auto gen = make_generator(random_state(d, rng), random_state(d, rng));
    const auto c = random_state(d, rng);
    const Complex k0 = random_complex(rng), k1 = random_complex(rng), k2 = random_complex(rng);
    const auto nested = k0 * c + k1 * gen.apply(c) + k2 * gen.apply(gen.apply(c));
    const auto fused = gen.apply_quadratic(k0, k1, k2, c);
    EXPECT_LE(vec_norm(nested - fused), 1e-12 * vec_norm(nested));
  }
}

TEST_P(GeneratorProperties, CommutatorClosure) {
  const std::size_t d = GetParam();
  Rng rng(600 + d);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_state(d, rng), b = random_state(d, rng);
    const auto c = random_state(d, rng), e = random_state(d, rng);
    const auto v = random_state(d, rng);
    const double scale =
        vec_norm(a) * vec_norm(b) * vec_norm(c) * vec_norm(e) * vec_norm(v);
    EXPECT_LE(commutator_residual(make_generator(a, b), make_generator(c, e), v) / scale, 1e-12);
  }
}

TEST(ApplyGenerator, NearlyRealCollinearMatchesItsInvariants) {
  // T(T^2 + 2i sigma T + G^2) must vanish to rounding relative to Gamma^3,
  // even when Gamma is far below |a| |b|.
  Rng rng(91);
  for (std::size_t d : {2u, 5u, 16u}) {
    for (double delta : {1e-3, 1e-4, 1e-6}) {
      const auto a = random_state(d, rng);
      const auto b = random_real_multiplier(rng) * a + delta * orthogonal_to(a, a, rng);
      const auto gen = make_generator(a, b);
      ASSERT_EQ(gen.case_tag(), CaseTag::GenericPair);
      const InvariantSet& inv = gen.invariants();
      const auto c = random_state(d, rng);
      const auto tc = gen.apply(c);
      const auto inner = gen.apply(tc) + Complex(0.0, 2.0 * inv.sigma) * tc + Complex(inv.G_sq) * c;
      const double gamma3 = inv.Gamma * inv.Gamma * inv.Gamma;
      EXPECT_LE(vec_norm(gen.apply(inner)) / (gamma3 * vec_norm(c)), 1e-12)
          << "d=" << d << " delta=" << delta;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, GeneratorProperties, ::testing::Values(2, 3, 4, 8, 32));

} // namespace
} // namespace statemap
