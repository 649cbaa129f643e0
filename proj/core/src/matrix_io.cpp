#include "permsum/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permsum/errors.hpp"

namespace permsum {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("matrix document: malformed JSON");
  return doc;
}

double require_finite(const json& v, const char* where) {
  if (!v.is_number()) throw ParseError(std::string("matrix document: ") + where + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d))
    throw ParseError(std::string("matrix document: non-finite number in ") + where);
  return d;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

DenseMatrix parse_matrix(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("matrix document: top level must be an object");
  if (!doc.contains("n")) throw ParseError("matrix document: missing field \"n\"");
  if (!doc.contains("entries")) throw ParseError("matrix document: missing field \"entries\"");
  if (!doc["n"].is_number_integer()) throw ParseError("matrix document: \"n\" must be an integer");
  const auto n_signed = doc["n"].get<long long>();
  if (n_signed <= 0) throw ParseError("matrix document: \"n\" must be positive");
  const auto n = static_cast<std::size_t>(n_signed);

  const json& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != n)
    throw ParseError("matrix document: \"entries\" must hold exactly n rows");
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("matrix document: ragged row in \"entries\"");
    for (const json& pair : row) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("matrix document: entry is not an [re, im] pair");
      entries.emplace_back(require_finite(pair[0], "entry"), require_finite(pair[1], "entry"));
    }
  }
  return DenseMatrix::from_entries(n, std::move(entries));
}

std::string serialize_matrix(const DenseMatrix& m) {
  const std::size_t n = m.size();
  std::ostringstream out;
  out << "{\n  \"n\": " << n << ",\n  \"entries\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < n; ++j) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("serialize_matrix: non-finite entry");
      out << '[' << format_double(z.real()) << ", " << format_double(z.imag()) << ']';
      if (j + 1 < n) out << ", ";
    }
    out << ']' << (i + 1 < n ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << serialize_matrix(m);
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace permsum
