#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "duval/catalog.hpp"

using namespace duval;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const CatalogRow& row_named(const std::vector<CatalogRow>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return r;
  throw std::runtime_error("no row " + name);
}

}  // namespace

TEST(LoadCatalog, EmbeddedDatasetHasNineteenRows) {
  const auto rows = embedded_catalog();
  ASSERT_EQ(rows.size(), 19u);
  int codim2 = 0;
  for (const auto& r : rows) codim2 += r.codim() == 2;
  EXPECT_EQ(codim2, 1);
  EXPECT_EQ(row_named(rows, "F_{4,4} ⊂ P(1,1,2,2,2)").codim(), 2);
}

TEST(LoadCatalog, ShippedFileMatchesEmbeddedText) {
  EXPECT_EQ(read_file(std::string(DUVAL_SOURCE_DIR) + "/data/k3_signatures.cat"), std::string(kEmbeddedCatalog));
}

TEST(LoadCatalog, EmptyInput) {
  EXPECT_TRUE(load_catalog("").empty());
  EXPECT_TRUE(load_catalog("# only a comment\n\n   \n").empty());
}

TEST(LoadCatalog, SignatureInvariantIsEnforced) {
  EXPECT_THROW(load_catalog("F_5 | 1 1 1 2 | 5 | A_1 | -14\n"), InvariantViolation);
}

TEST(LoadCatalog, ParseErrorsCarryLineNumbers) {
  try {
    load_catalog("# header\nF_4 | 1 1 1 1 | 4 | - | -16\nbad | 1 1 | 4 | - | -16\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_catalog("F | 1 1 1 1 | 4 | -\n"), ParseError);
  EXPECT_THROW(load_catalog("F | 1 1 1 x | 4 | - | -16\n"), ParseError);
  EXPECT_THROW(load_catalog("F | 1 1 1 1 | 4 | B_2 | -14\n"), ParseError);
  EXPECT_THROW(load_catalog("F | 1 1 1 1 | 4 | - | minus\n"), ParseError);
  EXPECT_THROW(load_catalog(" | 1 1 1 1 | 4 | - | -16\n"), ParseError);
  EXPECT_THROW(load_catalog("F | 1 1 1 0 | 4 | - | -16\n"), ParseError);
}

TEST(LoadCatalog, FormatRowRoundTrips) {
  for (const auto& r : embedded_catalog()) {
    const auto back = load_catalog(format_row(r));
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].name, r.name);
    EXPECT_EQ(back[0].weights, r.weights);
    EXPECT_EQ(back[0].degrees, r.degrees);
    EXPECT_EQ(back[0].basket, r.basket);
    EXPECT_EQ(back[0].sigma, r.sigma);
  }
}

TEST(LoadCatalog, MissingFile) { EXPECT_THROW(load_catalog_file("/nonexistent/duval.cat"), CannotOpen); }

TEST(VerifyRow, EveryEmbeddedRowPasses) {
  for (const auto& r : embedded_catalog()) {
    const RowReport rep = verify_row(r);
    EXPECT_TRUE(rep.ok()) << r.name;
    for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << r.name << " " << c.field << ": " << c.computed;
  }
}

TEST(VerifyRow, Examples) {
  const auto rows = embedded_catalog();
  const RowReport f16 = verify_row(row_named(rows, "F_16 ⊂ P(1,3,4,8)"));
  EXPECT_TRUE(f16.ok());
  bool saw_basket = false;
  for (const auto& c : f16.checks)
    if (c.field == "basket") {
      saw_basket = true;
      EXPECT_EQ(c.computed, "A_2 2A_3");
    }
  EXPECT_TRUE(saw_basket);

  const RowReport f44 = verify_row(row_named(rows, "F_{4,4} ⊂ P(1,1,2,2,2)"));
  EXPECT_TRUE(f44.ok());
  for (const auto& c : f44.checks) EXPECT_NE(c.field, "basket");
}

TEST(VerifyRow, CorruptedRowIsReported) {
  CatalogRow r = row_named(embedded_catalog(), "F_5 ⊂ P(1,1,1,2)");
  r.basket = parse_basket("A_2");
  r.sigma = -14;
  const RowReport rep = verify_row(r);
  EXPECT_FALSE(rep.ok());
  int failures = 0;
  for (const auto& c : rep.checks) failures += !c.ok;
  EXPECT_EQ(failures, 2);  // basket and sigma

  CatalogRow bad = r;
  bad.weights = {2, 2, 2, 3};
  bad.degrees = {9};
  EXPECT_FALSE(verify_row(bad).ok());
}

TEST(RealizedSignatures, FullAndCodimOne) {
  const auto rows = embedded_catalog();
  std::set<int> all;
  for (int s = -16; s <= 2; ++s) all.insert(s);
  EXPECT_EQ(realized_signatures(rows), all);
  std::set<int> codim1 = all;
  codim1.erase(-12);
  EXPECT_EQ(realized_signatures(rows, 1), codim1);
  EXPECT_EQ(realized_signatures(rows, 2), std::set<int>{-12});
  EXPECT_FALSE(realized_signatures(rows).contains(3));
}

TEST(CatalogRows, HypersurfaceRowsPassFiltersAndAreCanonicallyTrivial) {
  for (const auto& r : embedded_catalog()) {
    std::int64_t w = 0, d = 0;
    for (auto x : r.weights) w += x;
    for (auto x : r.degrees) d += x;
    EXPECT_EQ(w, d) << r.name;
    if (r.codim() != 1) continue;
    EXPECT_TRUE(well_formed(r.family().weights)) << r.name;
    EXPECT_TRUE(quasismooth(r.family())) << r.name;
  }
}
