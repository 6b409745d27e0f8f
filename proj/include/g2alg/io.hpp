#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "g2alg/cross.hpp"
#include "g2alg/form2.hpp"
#include "g2alg/types.hpp"

namespace g2alg {

enum class DocKind { Vector7, Skew7, Plane3, Frame7 };

const char* to_string(DocKind k);
std::optional<DocKind> doc_kind_from_string(const std::string& s);

enum class NumberFormat { Dec17, HexFloat };

/// A self-describing text document holding one vector, matrix, plane basis
/// or frame.  The default number format keeps 17 significant decimal
/// digits, which round-trips IEEE doubles exactly; hex floats are available
/// for bit-level readability.  Several documents may be concatenated in one
/// stream.
///
/// Layout:
///   g2doc v1
///   kind: skew7
///   label: <optional free text>
///   seed: <optional u64>
///   shape: 7 7
///   data:
///   <row-major numbers, one row per line>
///   end
struct MatrixDocument {
  DocKind kind = DocKind::Skew7;
  std::string label;
  std::optional<std::uint64_t> seed;
  int rows = 0, cols = 0;
  std::vector<double> data;  ///< row-major

  double at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }

  /// Validated accessors; each throws std::invalid_argument when the kind,
  /// shape, or payload invariants do not hold (skew7 payloads must be skew
  /// to 1e-9 of their own norm, plane3 payloads must have independent rows).
  Vec7 as_vector7() const;
  Form2 as_skew7() const;
  std::array<Vec7, 3> as_plane3() const;
  Frame as_frame7() const;

  static MatrixDocument vector7(const Vec7& v, std::string label = {});
  static MatrixDocument skew7(const Form2& x, std::string label = {});
  static MatrixDocument plane3(const AssociativePlane& p, std::string label = {});
  static MatrixDocument frame7(const Frame& f, std::string label = {});
};

void write_document(std::ostream& os, const MatrixDocument& doc,
                    NumberFormat fmt = NumberFormat::Dec17);

/// Reads every document in the stream; throws std::invalid_argument on
/// malformed input.
std::vector<MatrixDocument> read_documents(std::istream& is);

/// First document of the wanted kind; throws when none is present.
MatrixDocument read_document(std::istream& is, DocKind want);

}  // namespace g2alg
