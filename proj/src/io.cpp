#include "g2alg/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "g2alg/linalg.hpp"

namespace g2alg {

const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::Vector7: return "vector7";
    case DocKind::Skew7: return "skew7";
    case DocKind::Plane3: return "plane3";
    case DocKind::Frame7: return "frame7";
  }
  return "?";
}

std::optional<DocKind> doc_kind_from_string(const std::string& s) {
  if (s == "vector7") return DocKind::Vector7;
  if (s == "skew7") return DocKind::Skew7;
  if (s == "plane3") return DocKind::Plane3;
  if (s == "frame7") return DocKind::Frame7;
  return std::nullopt;
}

namespace {

std::pair<int, int> shape_for(DocKind k) {
  switch (k) {
    case DocKind::Vector7: return {1, 7};
    case DocKind::Skew7: return {7, 7};
    case DocKind::Plane3: return {3, 7};
    case DocKind::Frame7: return {7, 7};
  }
  return {0, 0};
}

}  // namespace

Vec7 MatrixDocument::as_vector7() const {
  if (kind != DocKind::Vector7) throw std::invalid_argument("document is not a vector7");
  Vec7 v;
  for (int i = 0; i < 7; ++i) v(i) = at(0, i);
  return v;
}

Form2 MatrixDocument::as_skew7() const {
  if (kind != DocKind::Skew7) throw std::invalid_argument("document is not a skew7");
  Mat7 m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = at(i, j);
  return Form2::from_matrix(m, 1e-9);
}

std::array<Vec7, 3> MatrixDocument::as_plane3() const {
  if (kind != DocKind::Plane3) throw std::invalid_argument("document is not a plane3");
  std::array<Vec7, 3> rows;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) rows[static_cast<std::size_t>(r)](c) = at(r, c);
  Eigen::Matrix<double, 7, 3> m;
  for (int r = 0; r < 3; ++r) m.col(r) = rows[static_cast<std::size_t>(r)];
  if (orthonormal_columns(m, 1e-10).cols() != 3)
    throw std::invalid_argument("plane3 rows are linearly dependent");
  return rows;
}

Frame MatrixDocument::as_frame7() const {
  if (kind != DocKind::Frame7) throw std::invalid_argument("document is not a frame7");
  Frame f;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) f.e[static_cast<std::size_t>(r)](c) = at(r, c);
  if (f.orthonormality_residual() > 1e-8)
    throw std::invalid_argument("frame7 rows are not orthonormal");
  f.g2_adapted = f.adapted_relations_residual() < 1e-8;
  return f;
}

MatrixDocument MatrixDocument::vector7(const Vec7& v, std::string label) {
  MatrixDocument d;
  d.kind = DocKind::Vector7;
  d.label = std::move(label);
  d.rows = 1;
  d.cols = 7;
  d.data.assign(v.data(), v.data() + 7);
  return d;
}

MatrixDocument MatrixDocument::skew7(const Form2& x, std::string label) {
  MatrixDocument d;
  d.kind = DocKind::Skew7;
  d.label = std::move(label);
  d.rows = 7;
  d.cols = 7;
  d.data.resize(49);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) d.data[static_cast<std::size_t>(i * 7 + j)] = x.matrix()(i, j);
  return d;
}

MatrixDocument MatrixDocument::plane3(const AssociativePlane& p, std::string label) {
  MatrixDocument d;
  d.kind = DocKind::Plane3;
  d.label = std::move(label);
  d.rows = 3;
  d.cols = 7;
  d.data.resize(21);
  const Vec7* rows[3] = {&p.u, &p.v, &p.w};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) d.data[static_cast<std::size_t>(r * 7 + c)] = (*rows[r])(c);
  return d;
}

MatrixDocument MatrixDocument::frame7(const Frame& f, std::string label) {
  MatrixDocument d;
  d.kind = DocKind::Frame7;
  d.label = std::move(label);
  d.rows = 7;
  d.cols = 7;
  d.data.resize(49);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c)
      d.data[static_cast<std::size_t>(r * 7 + c)] = f.e[static_cast<std::size_t>(r)](c);
  return d;
}

void write_document(std::ostream& os, const MatrixDocument& doc, NumberFormat fmt) {
  os << "g2doc v1\n";
  os << "kind: " << to_string(doc.kind) << "\n";
  if (!doc.label.empty()) os << "label: " << doc.label << "\n";
  if (doc.seed) os << "seed: " << *doc.seed << "\n";
  os << "shape: " << doc.rows << " " << doc.cols << "\n";
  os << "data:\n";
  char buf[48];
  for (int r = 0; r < doc.rows; ++r) {
    for (int c = 0; c < doc.cols; ++c) {
      const double v = doc.data[static_cast<std::size_t>(r * doc.cols + c)];
      if (fmt == NumberFormat::Dec17)
        std::snprintf(buf, sizeof buf, "%.17g", v);
      else
        std::snprintf(buf, sizeof buf, "%a", v);
      os << buf << (c + 1 < doc.cols ? " " : "");
    }
    os << "\n";
  }
  os << "end\n";
}

namespace {

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<MatrixDocument> read_documents(std::istream& is) {
  std::vector<MatrixDocument> docs;
  std::string line;
  while (std::getline(is, line)) {
    if (trimmed(line).empty()) continue;
    if (trimmed(line) != "g2doc v1")
      throw std::invalid_argument("expected 'g2doc v1' header, got: " + trimmed(line));
    MatrixDocument d;
    bool have_kind = false, have_shape = false;
    while (std::getline(is, line)) {
      const std::string t = trimmed(line);
      if (t == "data:") break;
      const auto colon = t.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("malformed header line: " + t);
      const std::string key = trimmed(t.substr(0, colon));
      const std::string val = trimmed(t.substr(colon + 1));
      if (key == "kind") {
        const auto k = doc_kind_from_string(val);
        if (!k) throw std::invalid_argument("unknown document kind: " + val);
        d.kind = *k;
        have_kind = true;
      } else if (key == "label") {
        d.label = val;
      } else if (key == "seed") {
        d.seed = std::strtoull(val.c_str(), nullptr, 10);
      } else if (key == "shape") {
        std::istringstream ss(val);
        ss >> d.rows >> d.cols;
        if (!ss) throw std::invalid_argument("malformed shape: " + val);
        have_shape = true;
      } else {
        throw std::invalid_argument("unknown header key: " + key);
      }
    }
    if (!have_kind) throw std::invalid_argument("document is missing its kind");
    if (!have_shape) throw std::invalid_argument("document is missing its shape");
    const auto expect = shape_for(d.kind);
    if (d.rows != expect.first || d.cols != expect.second)
      throw std::invalid_argument("shape does not match document kind");
    d.data.reserve(static_cast<std::size_t>(d.rows * d.cols));
    while (static_cast<int>(d.data.size()) < d.rows * d.cols && std::getline(is, line)) {
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) {
        char* endp = nullptr;
        const double v = std::strtod(tok.c_str(), &endp);
        if (endp == tok.c_str() || *endp != '\0')
          throw std::invalid_argument("malformed number: " + tok);
        d.data.push_back(v);
      }
    }
    if (static_cast<int>(d.data.size()) != d.rows * d.cols)
      throw std::invalid_argument("truncated data block");
    if (std::getline(is, line) && trimmed(line) != "end")
      throw std::invalid_argument("expected 'end' terminator");
    docs.push_back(std::move(d));
  }
  return docs;
}

MatrixDocument read_document(std::istream& is, DocKind want) {
  for (auto& d : read_documents(is))
    if (d.kind == want) return d;
  throw std::invalid_argument(std::string("no document of kind ") + to_string(want) +
                              " in input");
}

}  // namespace g2alg
