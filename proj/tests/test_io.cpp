#include <gtest/gtest.h>

#include "crossed/double.hpp"
#include "crossed/io.hpp"
#include "crossed/library.hpp"

using namespace crossed;
using Q = Rational;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Document<Q> reparse(const Document<Q>& d) { return parse_document<Q>(parse_json_text(serialize(d))); }

std::string data_file(const std::string& name) { return read_file(std::string(CROSSED_DATA_DIR) + "/" + name); }

}  // namespace

TEST(Io, BuiltinsRoundTrip) {
  for (const auto& n : builtin_names()) {
    auto ex = builtin<Q>(n, kQ);
    auto d = make_document(ex.H, ex.name);
    if (ex.R) d.rmatrix = ex.R->r;
    auto back = reparse(d);
    EXPECT_EQ(back, d) << n;
    EXPECT_EQ(serialize(back), serialize(d)) << n;
  }
}

TEST(Io, OtherPayloadsRoundTrip) {
  auto H = builtin<Q>("sweedler-z2", kQ).H;
  Document<Q> a;
  a.field = kQ;
  a.payload = outer_dual(H);
  EXPECT_EQ(reparse(a), a);
  EXPECT_EQ(a.kind(), "talgebra");
  Document<Q> g;
  g.field = kQ;
  g.payload = pack_tcoalgebra(H);
  EXPECT_EQ(reparse(g), g);
  EXPECT_EQ(g.kind(), "graded-hopf");
}

TEST(Io, DoubleWithRMatrixAndTwist) {
  auto Dq = quantum_double(builtin<Q>("function-tcoalg", kQ).H);
  auto d = make_document(Dq.D, "D");
  d.rmatrix = Dq.R.r;
  d.twist = drinfeld_elements(Dq.D, Dq.R).uinv;
  auto back = reparse(d);
  EXPECT_EQ(back, d);
  EXPECT_EQ(document_rmatrix(back), Dq.R);
}

TEST(Io, CanonicalText) {
  auto d = make_document(builtin<Q>("sweedler-z2", kQ).H, "sweedler-z2");
  auto text = serialize(d);
  EXPECT_EQ(text.back(), '\n');
  // keys come out sorted at the top level
  auto pos = [&](const char* k) { return text.find(std::string("\n  \"") + k + "\":"); };
  EXPECT_LT(pos("field"), pos("group"));
  EXPECT_LT(pos("group"), pos("kind"));
  EXPECT_LT(pos("kind"), pos("metadata"));
  EXPECT_LT(pos("metadata"), pos("schema_version"));
  EXPECT_LT(pos("schema_version"), pos("tcoalgebra"));
  EXPECT_NE(pos("tcoalgebra"), std::string::npos);
  // rationals are strings
  EXPECT_NE(text.find("\"-1\""), std::string::npos);
}

TEST(Io, SampleDataFilesAreCanonical) {
  for (auto f : {"function-s3.json", "sweedler-z2.json", "sweedler-h4.json", "group-hopf-z3.json"}) {
    auto text = data_file(f);
    auto d = parse_document<Q>(parse_json_text(text));
    EXPECT_EQ(serialize(d), text) << f;
    EXPECT_TRUE(validate(d.tcoalgebra()).passed()) << f;
  }
}

TEST(Io, ReducesRationalsModP) {
  auto j = parse_json_text(data_file("sweedler-h4.json"));
  auto d = parse_document<ModP>(j, FieldSpec::prime(5));
  EXPECT_EQ(d.field, FieldSpec::prime(5));
  EXPECT_TRUE(validate(d.tcoalgebra()).passed());
  ASSERT_TRUE(d.rmatrix);
  // 1/2 = 3 mod 5
  EXPECT_EQ((*d.rmatrix)[0][0].reduced(5).value(), 3u);
  EXPECT_TRUE(check_qt(d.tcoalgebra(), document_rmatrix(d)).passed());
  // a GF document cannot be reread over another field
  auto text = serialize(d);
  EXPECT_THROW(parse_document<ModP>(parse_json_text(text), FieldSpec::prime(7)), ParseError);
  EXPECT_THROW(parse_document<Q>(parse_json_text(text)), ParseError);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_json_text("{\"field\": "), ParseError);
  EXPECT_THROW(parse_document<Q>(parse_json_text("[]")), ParseError);
  auto j = parse_json_text(data_file("sweedler-z2.json"));
  auto bad = j;
  bad["schema_version"] = 2;
  EXPECT_THROW(parse_document<Q>(bad), ParseError);
  bad = j;
  bad["kind"] = "hopf";
  EXPECT_THROW(parse_document<Q>(bad), ParseError);
  bad = j;
  bad.erase("group");
  EXPECT_THROW(parse_document<Q>(bad), ParseError);
  bad = j;
  bad["tcoalgebra"]["counit"] = Json::array({"1", "1"});
  EXPECT_THROW(parse_document<Q>(bad), ParseError);
  bad = j;
  bad["tcoalgebra"]["counit"][0] = "1/0";
  EXPECT_THROW(parse_document<Q>(bad), Error);
  bad = j;
  bad["group"]["table"][0][0] = 1;
  EXPECT_THROW(parse_document<Q>(bad), Error);
}

TEST(Io, MissingRMatrixSection) {
  auto d = make_document(builtin<Q>("sweedler-z2", kQ).H);
  EXPECT_THROW(document_rmatrix(d), PreconditionFailed);
}
