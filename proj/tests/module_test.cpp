#include <gtest/gtest.h>

#include "gorlab/errors.hpp"
#include "gorlab/module.hpp"
#include "gorlab/module_ops.hpp"
#include "module_support.hpp"

using namespace gorlab;
using namespace gorlab::testing;

namespace {

std::vector<std::int64_t> hf(const PresentedModule& m, int lo, int hi) {
  return m.hilbertSeries().hilbertFunction(lo, hi);
}

bool hasUnitEntry(const PresentedModule& m) {
  for (const auto& c : m.relations().columns())
    for (const auto& e : c)
      if (m.ctx().ring().isConstant(e.value)) return true;
  return false;
}

}  // namespace

TEST(Presentation, HilbertFunctionMatchesLinearAlgebra) {
  std::mt19937_64 rng(11);
  for (auto ctx : {ringR1(), ringR2(), ringR3()}) {
    for (int trial = 0; trial < 15; ++trial) {
      PresentedModule m = randomPresentation(ctx, rng);
      EXPECT_EQ(hf(m, 0, 4), moduleHilbertOracle(m, 0, 4)) << m.toString();
    }
  }
}

TEST(Presentation, RejectsInhomogeneousRelations) {
  auto ctx = ringR2();
  Matrix m({0}, {1});
  m.setColumn(0, FreeVector{Entry{0, ctx->ring().parse("x + x*y")}});
  EXPECT_THROW(PresentedModule(ctx, m), InhomogeneousError);
}

TEST(ModuleMapCheck, RejectsIllDefinedMap) {
  auto ctx = ringR2();
  // k -> R sending 1 to 1 does not kill x.
  PresentedModule k = PresentedModule::residueField(ctx);
  PresentedModule R = PresentedModule::free(ctx, {0});
  EXPECT_THROW(ModuleMap(k, R, ctx->identity({0})), MismatchError);
  // k -> R(-2)... 1 |-> xy is well defined (xy is the socle).
  PresentedModule R2 = PresentedModule::free(ctx, {-2});
  Matrix m({-2}, {0});
  m.setColumn(0, FreeVector{Entry{0, ctx->ring().parse("x*y")}});
  EXPECT_NO_THROW(ModuleMap(k, R2, m));
}

TEST(Kernel, IdentityHasZeroKernel) {
  std::mt19937_64 rng(5);
  auto ctx = ringR3();
  for (int t = 0; t < 5; ++t) {
    PresentedModule m = randomPresentation(ctx, rng);
    EXPECT_TRUE(isZero(kernel(ModuleMap::identity(m))));
  }
}

TEST(Kernel, MultiplicationByX) {
  // Over k[x,y]/(x^2) the annihilator of x is (x) = x*R, i.e. (R/(x))(-1).
  auto ctx = makeCtx({"x", "y"}, {"x^2"});
  PresentedModule R = PresentedModule::free(ctx, {0});
  PresentedModule R1 = PresentedModule::free(ctx, {-1});
  Matrix mx({-1}, {0});
  mx.setColumn(0, FreeVector{Entry{0, ctx->ring().parse("x")}});
  ModuleMap inc = kernelInclusion(ModuleMap(R, R1, mx));
  ASSERT_EQ(inc.source().numGenerators(), 1u);
  EXPECT_EQ(inc.matrix().at(0, 0), ctx->ring().parse("x"));
  PresentedModule oracle = PresentedModule::cyclic(ctx, {ctx->ring().parse("x")}, 1);
  EXPECT_EQ(hf(inc.source(), 0, 6), moduleHilbertOracle(oracle, 0, 6));
}

TEST(Cokernel, ExampleModuleN) {
  auto ctx = ringR1();
  PresentedModule R = PresentedModule::free(ctx, {0, 0, 0, 0});
  PresentedModule S = PresentedModule::free(ctx, {1});
  Matrix col = makeMatrix(ctx->ring(), {0, 0, 0, 0}, {{"w"}, {"x"}, {"y"}, {"z"}});
  PresentedModule n = cokernel(ModuleMap(S, R, col));
  PresentedModule direct(ctx, col);
  EXPECT_EQ(hf(n, 0, 5), moduleHilbertOracle(direct, 0, 5));
  EXPECT_EQ(n.numGenerators(), 4u);
  EXPECT_EQ(n.numRelations(), 1u);
  EXPECT_FALSE(isFree(n));
  EXPECT_EQ(dimModule(n), 3);
}

// A random degree-0 map from a free module into a random module.
ModuleMap randomMapFromFree(const CtxPtr& ctx, std::mt19937_64& rng, const PresentedModule& n) {
  std::uniform_int_distribution<int> ncols(1, 3), deg(0, 2);
  const int top = *std::max_element(n.generatorTwists().begin(), n.generatorTwists().end());
  Matrix m(n.generatorTwists(), {});
  const int k = ncols(rng);
  for (int c = 0; c < k; ++c) {
    int b = top + deg(rng);
    FreeVector col;
    for (std::size_t j = 0; j < n.numGenerators(); ++j) {
      Polynomial p = ctx->reduce(randomPoly(ctx->ring(), rng, 2, b - n.generatorTwists()[j]));
      if (!p.isZero()) col.push_back(Entry{static_cast<std::uint32_t>(j), std::move(p)});
    }
    m.appendColumn(std::move(col), b);
  }
  return ModuleMap(PresentedModule::free(ctx, m.colDegrees()), n, m);
}

TEST(KernelImageCokernel, RankNullity) {
  std::mt19937_64 rng(8);
  for (auto ctx : {ringR2(), ringR3(), ringR1()}) {
    for (int t = 0; t < 8; ++t) {
      PresentedModule n = randomPresentation(ctx, rng);
      ModuleMap f = randomMapFromFree(ctx, rng, n);
      auto src = moduleHilbertOracle(f.source(), 0, 5);
      auto tgt = moduleHilbertOracle(n, 0, 5);
      auto cok = moduleHilbertOracle(
          PresentedModule(ctx, Matrix::hconcat(n.relations(), f.matrix())), 0, 5);
      auto ker = hf(kernel(f), 0, 5);
      auto im = hf(image(f), 0, 5);
      EXPECT_EQ(hf(cokernel(f), 0, 5), cok);
      for (int d = 0; d <= 5; ++d) {
        EXPECT_EQ(ker[d] + im[d], src[d]);
        EXPECT_EQ(im[d] + cok[d], tgt[d]);
      }
      // F -> N -> coker is exact in the middle.
      PresentedModule c(ctx, Matrix::hconcat(n.relations(), f.matrix()));
      ModuleMap g(n, c, ctx->identity(n.generatorTwists()));
      EXPECT_TRUE(isZeroMap(compose(g, f)));
      EXPECT_TRUE(homologySeries(f, g).size().isZero());
    }
  }
}

TEST(MinimalPresentation, Examples) {
  auto ctx = makeCtx({"x", "y"}, {});
  // The unit kills the first generator, leaving coker(y).
  PresentedModule m = coker(ctx, {0, 0}, {{"1", "x"}, {"0", "y"}});
  MinimalPresentation mp = minimize(m);
  EXPECT_EQ(mp.module.numGenerators(), 1u);
  EXPECT_EQ(mp.module.numRelations(), 1u);
  EXPECT_EQ(mp.module.relations().at(0, 0), ctx->ring().parse("y"));
  EXPECT_EQ(hf(mp.module, 0, 6), moduleHilbertOracle(m, 0, 6));

  auto R2 = ringR2();
  PresentedModule split = directSum(PresentedModule::free(R2, {0}), coker(R2, {0}, {{"1"}}));
  PresentedModule ms = minimalPresentation(split);
  EXPECT_EQ(ms.numGenerators(), 1u);
  EXPECT_EQ(ms.numRelations(), 0u);
  EXPECT_EQ(ms.generatorTwists(), std::vector<int>{0});
}

TEST(MinimalPresentation, PropertiesOnRandomModules) {
  std::mt19937_64 rng(21);
  for (auto ctx : {ringR1(), ringR2(), ringR3()}) {
    for (int t = 0; t < 12; ++t) {
      PresentedModule base = randomPresentation(ctx, rng);
      // Add a split unit summand and a redundant relation to force work.
      PresentedModule m = directSum(base, coker(ctx, {1}, {{"1"}}));
      Matrix rel = m.relations();
      if (base.numRelations() > 0) {
        FreeVector dup = rel.column(0);
        rel.appendColumn(dup, rel.colDegrees()[0]);
      }
      m = PresentedModule(ctx, rel);
      MinimalPresentation mp = minimize(m);
      EXPECT_FALSE(hasUnitEntry(mp.module));
      EXPECT_EQ(hf(mp.module, 0, 5), moduleHilbertOracle(m, 0, 5));
      // toNew and fromNew are well-defined maps; fromNew then toNew is the identity.
      ModuleMap to(m, mp.module, mp.toNew);
      ModuleMap from(mp.module, m, mp.fromNew);
      ModuleMap round = compose(to, from);
      for (std::size_t j = 0; j < mp.module.numGenerators(); ++j) {
        FreeVector diff = round.matrix().column(j);
        EXPECT_EQ(diff.size(), 1u);
        EXPECT_EQ(diff[0].row, j);
      }
      PresentedModule again = minimalPresentation(mp.module);
      EXPECT_EQ(again.numGenerators(), mp.module.numGenerators());
      EXPECT_EQ(again.numRelations(), mp.module.numRelations());
    }
  }
}

TEST(Predicates, ZeroFreeDimLength) {
  auto R1 = ringR1();
  auto R3 = ringR3();
  auto ctx = ringR2();
  EXPECT_TRUE(isZero(coker(ctx, {0, 0}, {{"1", "0"}, {"0", "1"}})));
  EXPECT_TRUE(isFree(PresentedModule::free(ctx, {2, 2, 2})));
  EXPECT_TRUE(isZero(PresentedModule::zero(ctx)));
  PresentedModule k1 = PresentedModule::residueField(R1);
  EXPECT_EQ(dimModule(k1), 0);
  EXPECT_EQ(lengthModule(k1), 1);
  PresentedModule r1 = PresentedModule::free(R1, {0});
  EXPECT_EQ(dimModule(r1), 3);
  EXPECT_FALSE(lengthModule(r1).has_value());
  EXPECT_EQ(lengthModule(PresentedModule::free(R3, {0})), 5);
  EXPECT_FALSE(isFree(PresentedModule::residueField(R3)));
}
