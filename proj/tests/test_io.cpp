#include <sstream>

#include "doctest.h"
#include "g2alg/decomp.hpp"
#include "g2alg/io.hpp"

using namespace g2alg;

TEST_CASE("documents round-trip bit exactly in both number formats") {
  SplitMix64 rng(51);
  const Form2 x = random_g2_element(rng);
  const AssociativePlane p = random_associative_plane(rng);

  for (NumberFormat fmt : {NumberFormat::Dec17, NumberFormat::HexFloat}) {
    std::stringstream ss;
    write_document(ss, MatrixDocument::skew7(x, "sample"), fmt);
    write_document(ss, MatrixDocument::plane3(p), fmt);
    write_document(ss, MatrixDocument::vector7(p.u), fmt);
    write_document(ss, MatrixDocument::frame7(Frame::standard()), fmt);

    const std::vector<MatrixDocument> docs = read_documents(ss);
    REQUIRE(docs.size() == 4);
    CHECK(docs[0].label == "sample");
    CHECK((docs[0].as_skew7() - x).norm() == 0.0);
    const auto rows = docs[1].as_plane3();
    CHECK((rows[0] - p.u).norm() == 0.0);
    CHECK((rows[1] - p.v).norm() == 0.0);
    CHECK((rows[2] - p.w).norm() == 0.0);
    CHECK((docs[2].as_vector7() - p.u).norm() == 0.0);
    CHECK(docs[3].as_frame7().g2_adapted);
  }
}

TEST_CASE("seed metadata survives the round trip") {
  MatrixDocument d = MatrixDocument::vector7(basis_vector(2));
  d.seed = 123456789012345ull;
  std::stringstream ss;
  write_document(ss, d);
  const MatrixDocument back = read_document(ss, DocKind::Vector7);
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 123456789012345ull);
}

TEST_CASE("validation rejects malformed payloads") {
  SplitMix64 rng(52);
  // Corrupt a skew matrix beyond the tolerance.
  MatrixDocument d = MatrixDocument::skew7(random_g2_element(rng));
  d.data[1] += 0.5;
  CHECK_THROWS_AS(d.as_skew7(), std::invalid_argument);

  // Dependent plane rows.
  MatrixDocument p;
  p.kind = DocKind::Plane3;
  p.rows = 3;
  p.cols = 7;
  p.data.assign(21, 0.0);
  for (int c = 0; c < 7; ++c) {
    p.data[(size_t)c] = 1.0;
    p.data[(size_t)(7 + c)] = 1.0;
    p.data[(size_t)(14 + c)] = 0.5;
  }
  CHECK_THROWS_AS(p.as_plane3(), std::invalid_argument);

  std::stringstream bad("g2doc v1\nkind: skew7\nshape: 7 6\ndata:\nend\n");
  CHECK_THROWS_AS(read_documents(bad), std::invalid_argument);

  std::stringstream unknown("g2doc v1\nkind: tensor9\nshape: 7 7\ndata:\nend\n");
  CHECK_THROWS_AS(read_documents(unknown), std::invalid_argument);
}

TEST_CASE("wrong-kind lookups fail loudly") {
  std::stringstream ss;
  write_document(ss, MatrixDocument::vector7(basis_vector(1)));
  CHECK_THROWS_AS(read_document(ss, DocKind::Skew7), std::invalid_argument);
}
