#include <gtest/gtest.h>

#include "fundseq/io.hpp"
#include "fundseq/random.hpp"

using namespace fundseq;

namespace {

const RingDesc Z = RingDesc::integers();

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParsesCyclicModule) {
  FPModule M = parse_module(R"({"ring":{"kind":"Z"},"gens":1,"relations":[[2]]})");
  EXPECT_EQ(M.ring(), Z);
  EXPECT_EQ(M.describe(), "Z/2");
  EXPECT_EQ(invariants_string(M), "[2]");
}

TEST(Io, EntriesAreDecimalStringsOrIntegers) {
  FPModule M = parse_module(R"({"ring":{"kind":"Z"},"gens":2,"relations":[["123456789012345678901234567890", 0], ["0", 3]]})");
  EXPECT_EQ(M.relations()(0, 0), Int("123456789012345678901234567890"));
  EXPECT_EQ(M.relations()(1, 1), 3);
}

TEST(Io, EntriesAreReducedModN) {
  FPModule M = parse_module(R"({"ring":{"kind":"ZmodN","n":"4"},"gens":1,"relations":[["-6"]]})");
  EXPECT_EQ(M.relations()(0, 0), 2);
  EXPECT_EQ(M.describe(), "Z/2");
}

TEST(Io, MissingRelationsMeansFree) {
  FPModule M = parse_module(R"({"ring":{"kind":"ZmodN","n":6},"gens":2})");
  EXPECT_EQ(M.describe(), "Z/6 + Z/6");
}

TEST(Io, ZeroGeneratorsKeepTheirRelationCount) {
  FPModule M(Z, 0, IntMat(0, 3));
  EXPECT_EQ(parse_module(serialize(M)).relations().cols(), 3u);
  EXPECT_EQ(parse_module(serialize(FPModule::zero(Z))).relations().cols(), 0u);
  EXPECT_THROW(parse_module(R"({"ring":{"kind":"Z"},"gens":1,"relations":[[1, 2]],"relation_count":3})"), Error);
}

TEST(Io, MorphismNotWellDefined) {
  const char* doc = R"({"ring":{"kind":"Z"},
    "source":{"gens":1,"relations":[[2]]},"target":{"gens":1,"relations":[[4]]},"G":[[1]]})";
  EXPECT_EQ(kind_of([&] { parse_morphism(doc); }), ErrorKind::NotWellDefined);
  EXPECT_NE(message_of([&] { parse_morphism(doc); }).find("/G"), std::string::npos);
}

TEST(Io, WellDefinedMorphism) {
  Morphism f = parse_morphism(R"({"ring":{"kind":"Z"},
    "source":{"gens":1,"relations":[[2]]},"target":{"gens":1,"relations":[[4]]},"matrix":[[2]]})");
  EXPECT_TRUE(is_mono(f));
}

TEST(Io, ComplexWithNonzeroCompositeIsRejected) {
  const char* doc = R"({"ring":{"kind":"Z"},"support":[0,2],
    "terms":[{"gens":1},{"gens":1},{"gens":1}],"differentials":[[[1]],[[1]]]})";
  EXPECT_EQ(kind_of([&] { parse_complex(doc); }), ErrorKind::NotAComplex);
  EXPECT_NE(message_of([&] { parse_complex(doc); }).find("/differentials/1"), std::string::npos);
}

TEST(Io, ComplexDegrees) {
  Complex C = parse_complex(R"({"ring":{"kind":"Z"},"support":[1,2],
    "terms":[{"gens":1},{"gens":2}],"differentials":[[[2, 0]]]})");
  EXPECT_EQ(C.lo(), 1);
  EXPECT_EQ(C.hi(), 2);
  EXPECT_EQ(C.term(2).gens(), 2u);
  EXPECT_EQ(C.differential(2).matrix()(0, 0), 2);
}

TEST(Io, SchemaErrorsCarryLocations) {
  struct Case {
    const char* doc;
    const char* where;
  };
  for (const Case& c : {
           Case{R"({"gens":1})", "/: missing field \"ring\""},
           Case{R"({"ring":{"kind":"Q"},"gens":1})", "/ring/kind"},
           Case{R"({"ring":{"kind":"ZmodN","n":1},"gens":1})", "/ring/n"},
           Case{R"({"ring":{"kind":"Z"},"gens":2,"relations":[[1]]})", "/relations"},
           Case{R"({"ring":{"kind":"Z"},"gens":1,"relations":[["x"]]})", "/relations/0/0"},
           Case{R"({"ring":{"kind":"Z"},"gens":-1})", "/gens"},
           Case{R"({"ring":{"kind":"Z"},"source":{"gens":1},"target":{"gens":1,"ring":{"kind":"ZmodN","n":2}},"matrix":[[1]]})",
                "/target/ring"},
           Case{R"({"ring":{"kind":"Z"},"support":[0,1],"terms":[{"gens":1}],"differentials":[]})", "/terms"},
           Case{"[1, 2", "not valid JSON"},
       }) {
    std::string msg = message_of([&] { parse_input(c.doc); });
    EXPECT_NE(msg.find("SchemaError"), std::string::npos) << c.doc << " -> " << msg;
    EXPECT_NE(msg.find(c.where), std::string::npos) << c.doc << " -> " << msg;
  }
}

TEST(Io, DefaultRingAppliesToRinglessDocuments) {
  FPModule M = parse_module(R"({"gens":1,"relations":[[2]]})", RingDesc::mod(4));
  EXPECT_EQ(M.ring(), RingDesc::mod(4));
  EXPECT_EQ(kind_of([] { parse_module(R"({"ring":{"kind":"Z"},"gens":1})", RingDesc::mod(4)); }),
            ErrorKind::SchemaError);
}

TEST(Io, TypeFieldAndInference) {
  EXPECT_TRUE(std::holds_alternative<FPModule>(parse_input(R"({"ring":{"kind":"Z"},"gens":0})")));
  EXPECT_TRUE(std::holds_alternative<Morphism>(
      parse_input(R"({"ring":{"kind":"Z"},"source":{"gens":0},"target":{"gens":0},"matrix":[]})")));
  EXPECT_EQ(kind_of([] { parse_input(R"({"type":"sheaf","ring":{"kind":"Z"}})"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_module(R"({"ring":{"kind":"Z"},"support":[0,0],"terms":[{"gens":1}],"differentials":[]})"); }),
            ErrorKind::SchemaError);
}

TEST(Io, RingNames) {
  EXPECT_EQ(parse_ring_name("Z"), Z);
  EXPECT_EQ(parse_ring_name("Z/12"), RingDesc::mod(12));
  EXPECT_EQ(parse_ring_name(R"({"kind":"ZmodN","n":9})"), RingDesc::mod(9));
  EXPECT_EQ(kind_of([] { parse_ring_name("Q"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_ring_name("Z/1"); }), ErrorKind::SchemaError);
  for (const RingDesc& R : {Z, RingDesc::mod(4), RingDesc::mod(12)}) EXPECT_EQ(parse_ring_name(R.name()), R);
}

// parse(serialize(x)) reproduces the presentation matrices exactly.
class IoRoundTrip : public ::testing::TestWithParam<long> {};

TEST_P(IoRoundTrip, RandomObjects) {
  for (RingDesc R : {Z, RingDesc::mod(4), RingDesc::mod(12)}) {
    InstanceSpec spec;
    spec.ring = R;
    spec.seed = static_cast<std::uint64_t>(GetParam());
    spec.min_gens = 0;
    InstanceGenerator gen(spec);
    for (int k = 0; k < 10; ++k) {
      FPModule M = gen.module();
      FPModule M2 = parse_module(serialize(M));
      EXPECT_EQ(M2.ring(), M.ring());
      EXPECT_EQ(M2.gens(), M.gens());
      EXPECT_EQ(M2.relations(), M.relations());
      EXPECT_EQ(serialize(M2), serialize(M));

      Morphism f = gen.morphism(M, gen.module());
      Morphism f2 = parse_morphism(serialize(f));
      EXPECT_EQ(f2.matrix(), f.matrix());
      EXPECT_EQ(f2.source().relations(), f.source().relations());
      EXPECT_EQ(f2.target().relations(), f.target().relations());

      Complex C = gen.complex();
      Complex C2 = parse_complex(serialize(C));
      ASSERT_EQ(C2.lo(), C.lo());
      ASSERT_EQ(C2.hi(), C.hi());
      for (int n = C.lo(); n <= C.hi(); ++n) {
        EXPECT_EQ(C2.term(n).relations(), C.term(n).relations());
        EXPECT_EQ(C2.differential(n).matrix(), C.differential(n).matrix());
      }
      EXPECT_EQ(serialize(C2), serialize(C));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IoRoundTrip, ::testing::Values(1, 2, 3, 42));
