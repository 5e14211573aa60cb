#include <gtest/gtest.h>

#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"
#include "gorlab/resolution.hpp"
#include "module_support.hpp"

using namespace gorlab;
using namespace gorlab::testing;

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::int64_t> lengths(const ExtTorResult& r) {
  std::vector<std::int64_t> out;
  for (int i = r.lo; i <= r.hi; ++i) out.push_back(r.length(i).value_or(-1));
  return out;
}

PresentedModule moduleN() {
  auto ctx = ringR1();
  return coker(ctx, {0, 0, 0, 0}, {{"w"}, {"x"}, {"y"}, {"z"}});
}

}  // namespace

TEST(Resolution, KoszulBetti) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
    auto ctx = makeCtx(vars, {});
    auto res = minimalFreeResolution(PresentedModule::residueField(ctx), n + 2);
    EXPECT_TRUE(res->finite);
    EXPECT_EQ(res->projectiveDimension(), n);
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(res->betti().total(i), binom(n, i));
      EXPECT_EQ(res->betti().entries.at(i).at(i), binom(n, i));
    }
    EXPECT_TRUE(res->complex.composesToZero(*ctx));
    EXPECT_TRUE(res->complex.isMinimal(*ctx));
  }
}

TEST(Resolution, HypersurfacePeriodicity) {
  auto ctx = makeCtx({"x"}, {"x^2"});
  auto res = minimalFreeResolution(PresentedModule::residueField(ctx), 6);
  EXPECT_FALSE(res->finite);
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(res->complex.rank(i), 1u);
    EXPECT_EQ(res->complex.d(i).at(0, 0), ctx->ring().parse("x"));
  }
}

TEST(Resolution, ExampleModuleHasProjectiveDimensionOne) {
  auto res = minimalFreeResolution(moduleN(), 5);
  EXPECT_TRUE(res->finite);
  EXPECT_EQ(res->projectiveDimension(), 1);
  EXPECT_FALSE(isFree(moduleN()));
}

TEST(Resolution, CacheExtendsShorterResolution) {
  auto ctx = ringR2();
  PresentedModule k = PresentedModule::residueField(ctx);
  auto a = minimalFreeResolution(k, 2);
  auto b = minimalFreeResolution(k, 5);
  EXPECT_GE(b->length(), 5);
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(a->complex.twists(i), b->complex.twists(i));
  EXPECT_EQ(minimalFreeResolution(k, 3).get(), b.get());
  // Complete intersection of codim 2: b_i = i + 1.
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(b->betti().total(i), i + 1);
}

TEST(Resolution, RandomComplexesAreExactAndMinimal) {
  std::mt19937_64 rng(31);
  for (auto ctx : {ringR1(), ringR2(), ringR3()}) {
    for (int t = 0; t < 5; ++t) {
      PresentedModule m = randomPresentation(ctx, rng, 2, 2);
      auto res = minimalFreeResolution(m, 3);
      EXPECT_TRUE(res->complex.composesToZero(*ctx));
      EXPECT_TRUE(res->complex.isMinimal(*ctx));
      EXPECT_EQ(m.hilbertSeries().hilbertFunction(0, 4),
                res->module.hilbertSeries().hilbertFunction(0, 4));
      // Exactness: Tor_i(M, R) = 0 for i >= 1.
      ExtTorResult tr = tor(m, PresentedModule::free(ctx, {0}), 1, 2);
      EXPECT_TRUE(tr.isZero(1));
      EXPECT_TRUE(tr.isZero(2));
    }
  }
}

TEST(Syzygy, Examples) {
  auto ctx = makeCtx({"x", "y"}, {});
  PresentedModule k = PresentedModule::residueField(ctx);
  PresentedModule m1 = syzygy(k, 1);
  // The maximal ideal: two generators in degree 1, one relation in degree 2.
  EXPECT_EQ(m1.hilbertSeries().hilbertFunction(0, 4), (std::vector<std::int64_t>{0, 2, 3, 4, 5}));
  EXPECT_TRUE(isZero(syzygy(PresentedModule::free(ctx, {0, 3}), 1)));
  EXPECT_TRUE(isZero(syzygy(PresentedModule::free(ctx, {0}), 2)));
}

TEST(Syzygy, DthSyzygyIsMaximalCohenMacaulay) {
  std::mt19937_64 rng(32);
  auto ctx = ringR1();
  for (int t = 0; t < 3; ++t) {
    PresentedModule m = randomPresentation(ctx, rng, 2, 2);
    EXPECT_TRUE(isMCM(syzygy(m, 3)));
  }
}

TEST(ExtTor, Examples) {
  auto ctx = makeCtx({"x", "y"}, {});
  PresentedModule k = PresentedModule::residueField(ctx);
  EXPECT_EQ(lengths(ext(k, k, 0, 3)), (std::vector<std::int64_t>{1, 2, 1, 0}));
  EXPECT_EQ(lengths(tor(k, k, 0, 3)), (std::vector<std::int64_t>{1, 2, 1, 0}));
  ExtTorResult e = ext(k, k, 0, 2, true);
  EXPECT_EQ(e.modules[1]->numGenerators(), 2u);
  // Ext^0 = Hom and Tor_0 = tensor.
  std::mt19937_64 rng(33);
  for (auto c : {ringR2(), ringR3()}) {
    PresentedModule m = randomPresentation(c, rng, 2, 2);
    PresentedModule n = randomPresentation(c, rng, 2, 2);
    EXPECT_EQ(ext(m, n, 0, 0).series[0].hilbertFunction(-4, 4),
              homModule(m, n).hilbertSeries().hilbertFunction(-4, 4));
    EXPECT_EQ(tor(m, n, 0, 0).series[0].hilbertFunction(-1, 6),
              tensorModule(m, n).hilbertSeries().hilbertFunction(-1, 6));
    ExtTorResult withMods = ext(m, n, 0, 2, true);
    for (int i = 0; i <= 2; ++i)
      EXPECT_EQ(withMods.series[i].hilbertFunction(-4, 6),
                withMods.modules[i]->hilbertSeries().hilbertFunction(-4, 6));
  }
}

TEST(ExtTor, ExampleModuleDualHasNonzeroExtFour) {
  PresentedModule n = moduleN();
  PresentedModule k = PresentedModule::residueField(n.ctxPtr());
  PresentedModule nd = dualModule(n);
  EXPECT_FALSE(ext(k, nd, 4, 4).isZero(4));
  ExtTorResult t = tor(k, n, 2, 6);
  for (int i = 2; i <= 6; ++i) EXPECT_TRUE(t.isZero(i));
}

TEST(Depth, Examples) {
  auto R1 = ringR1();
  EXPECT_EQ(depth(PresentedModule::residueField(R1)), 0);
  EXPECT_EQ(depth(moduleN()), 2);
  EXPECT_EQ(depth(PresentedModule::free(R1, {0})), 3);
  EXPECT_TRUE(isMCM(coker(R1, {0, 0}, {{"w", "y"}, {"z", "x"}})));
  EXPECT_FALSE(isMCM(moduleN()));
  EXPECT_TRUE(isMCM(PresentedModule::zero(R1)));
  EXPECT_THROW(depth(PresentedModule::zero(R1)), HypothesisError);
  EXPECT_TRUE(gorensteinCheck(R1));
  EXPECT_TRUE(gorensteinCheck(ringR3()));
  EXPECT_TRUE(gorensteinCheck(ringR2()));
  EXPECT_FALSE(gorensteinCheck(makeCtx({"x", "y"}, {"x^2", "x*y", "y^2"})));
  EXPECT_FALSE(gorensteinCheck(makeCtx({"x", "y", "z"}, {"x*y", "x*z", "y*z"})));
}

namespace {

PresentedModule syz(const PresentedModule& m, int i) {
  return i >= 0 ? syzygy(m, i) : negativeSyzygy(m, i);
}

BettiTable bettiOf(const PresentedModule& m, int len) { return minimalFreeResolution(m, len)->betti(); }

}  // namespace

TEST(CompleteResolution, ResidueFieldOverDualNumbers) {
  auto ctx = makeCtx({"x"}, {"x^2"});
  PresentedModule k = PresentedModule::residueField(ctx);
  for (int t = 1; t <= 4; ++t) {
    PresentedModule s = negativeSyzygy(k, -t);
    EXPECT_EQ(s.numGenerators(), 1u);
    EXPECT_EQ(lengthModule(s), 1);
  }
  CompleteResolution c = completeResolution(k, 3, 3);
  EXPECT_TRUE(c.complex.composesToZero(*ctx));
  EXPECT_TRUE(c.complex.isMinimal(*ctx));
  for (int i = -3; i <= 3; ++i) EXPECT_EQ(c.complex.rank(i), 1u);
}

TEST(CompleteResolution, RejectsNonMaximalCohenMacaulay) {
  auto R1 = ringR1();
  EXPECT_THROW(completeResolution(PresentedModule::residueField(R1), 2, 2), HypothesisError);
  auto notGor = makeCtx({"x", "y"}, {"x^2", "x*y", "y^2"});
  EXPECT_THROW(completeResolution(PresentedModule::residueField(notGor), 2, 2), HypothesisError);
}

TEST(CompleteResolution, ExactInWindowAndDualShape) {
  std::mt19937_64 rng(41);
  for (auto ctx : {ringR2(), ringR3()}) {
    PresentedModule R = PresentedModule::free(ctx, {0});
    for (int trial = 0; trial < 4; ++trial) {
      PresentedModule m = randomPresentation(ctx, rng, 2, 2);
      CompleteResolution c = completeResolution(m, 3, 3);
      EXPECT_TRUE(c.complex.composesToZero(*ctx));
      // The splice is minimal once free summands are gone.
      EXPECT_TRUE(completeResolution(syzygy(m, 1), 2, 2).complex.isMinimal(*ctx));
      // Interior homology vanishes.
      for (int i = -2; i <= 2; ++i) {
        PresentedModule Ci = PresentedModule::free(ctx, c.complex.twists(i));
        PresentedModule Cl = PresentedModule::free(ctx, c.complex.twists(i - 1));
        PresentedModule Cu = PresentedModule::free(ctx, c.complex.twists(i + 1));
        ModuleMap in(Cu, Ci, c.complex.d(i + 1));
        ModuleMap out(Ci, Cl, c.complex.d(i));
        EXPECT_TRUE(homologySeries(in, out).size().isZero()) << "index " << i;
      }
      // C(M)* has the graded shape of C(M*).
      PresentedModule md = dualModule(m);
      CompleteResolution cd = completeResolution(md, 4, 2);
      EXPECT_EQ(BettiTable::of(c.complex.dual()), BettiTable::of(cd.complex));
      // (M_i)* and (M*)_{-i} have the same graded Betti numbers.
      for (int i = -2; i <= 2; ++i)
        EXPECT_EQ(bettiOf(dualModule(syz(m, i)), 2), bettiOf(syz(md, -i), 2)) << "i = " << i;
    }
  }
}

TEST(CrossPath, ExtAndTorAgreeThroughCompleteResolution) {
  std::mt19937_64 rng(42);
  const int t = 5;
  for (auto ctx : {ringR2(), ringR3()}) {
    for (int trial = 0; trial < 3; ++trial) {
      PresentedModule m = randomPresentation(ctx, rng, 2, 2);
      PresentedModule n = randomPresentation(ctx, rng, 2, 2);
      ExtTorResult a = ext(m, n, 1, t - 2);
      ExtTorResult b = extViaComplete(m, n, 1, t - 2, t);
      ExtTorResult c = tor(m, n, 1, t - 2);
      ExtTorResult d = torViaComplete(m, n, 1, t - 2, t);
      for (int i = 1; i <= t - 2; ++i) {
        EXPECT_EQ(a.length(i), b.length(i)) << "ext " << i;
        EXPECT_EQ(c.length(i), d.length(i)) << "tor " << i;
      }
      // Tor_i(M_{-t}, N) = Ext^{t-i-1}(M*, N).
      PresentedModule mt = negativeSyzygy(m, -t);
      PresentedModule md = dualModule(m);
      for (int i = 1; i <= t - 2; ++i)
        EXPECT_EQ(tor(mt, n, i, i).length(i), ext(md, n, t - i - 1, t - i - 1).length(t - i - 1));
    }
  }
  EXPECT_THROW(extViaComplete(PresentedModule::free(ringR2(), {0}), PresentedModule::free(ringR2(), {0}), 1, 4, 5),
               Error);
  PresentedModule f = PresentedModule::free(ringR3(), {0, 1});
  PresentedModule k = PresentedModule::residueField(ringR3());
  ExtTorResult e = extViaComplete(f, k, 1, 3, 5);
  ExtTorResult tt = torViaComplete(f, k, 1, 3, 5);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(e.isZero(i));
    EXPECT_TRUE(tt.isZero(i));
  }
}

TEST(StableHom, ShiftsAndExt) {
  std::mt19937_64 rng(43);
  auto ctx = ringR3();
  PresentedModule R = PresentedModule::free(ctx, {0});
  for (int trial = 0; trial < 3; ++trial) {
    PresentedModule m = randomPresentation(ctx, rng, 2, 2);
    PresentedModule n = randomPresentation(ctx, rng, 2, 2);
    EXPECT_TRUE(isZero(stableHom(R, n)));
    // Ext^i(M, N) = stable Hom(M_i, N) for i >= 1.
    ExtTorResult e = ext(m, n, 1, 2);
    for (int i = 1; i <= 2; ++i) EXPECT_EQ(lengthModule(stableHom(syzygy(m, i), n)), e.length(i));
    auto s = lengthModule(stableHom(m, n));
    EXPECT_EQ(lengthModule(stableHom(syzygy(m, 1), syzygy(n, 1))), s);
    EXPECT_EQ(lengthModule(stableHom(dualModule(n), dualModule(m))), s);
  }
}
