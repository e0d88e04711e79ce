#include "radiuslab/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_detail.hpp"
#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void append_rows(std::string& out, const ComplexMatrix& m, bool imag) {
  out += '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      append_number(out, imag ? m(i, j).imag() : m(i, j).real());
    }
    out += ']';
  }
  out += ']';
}

void read_part(const detail::Json& rows, std::size_t n, ComplexMatrix& m, bool imag) {
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " must have " +
                                             std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) throw Error(ErrorCode::ParseError, "matrix entries must be numbers");
      const double v = row[j].get<double>();
      if (!std::isfinite(v)) throw Error(ErrorCode::ParseError, "matrix entries must be finite");
      if (imag) m(i, j).imag(v);
      else m(i, j).real(v);
    }
  }
}

}  // namespace

namespace detail {

Json matrix_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array(), c = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  Json j;
  j["n"] = m.rows();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

}  // namespace detail

std::string matrix_to_json(const ComplexMatrix& m) {
  std::string out = "{\"n\": " + std::to_string(m.rows()) + ", \"re\": ";
  append_rows(out, m, false);
  out += ", \"im\": ";
  append_rows(out, m, true);
  out += "}\n";
  return out;
}

ComplexMatrix matrix_from_json(std::string_view text) {
  detail::Json j;
  try {
    j = detail::Json::parse(text);
  } catch (const detail::Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "matrix JSON needs an integer \"n\"");
  }
  const auto n_signed = j["n"].get<long long>();
  if (n_signed < 1) throw Error(ErrorCode::ParseError, "\"n\" must be >= 1");
  const auto n = static_cast<std::size_t>(n_signed);
  if (!j.contains("re")) throw Error(ErrorCode::ParseError, "matrix JSON needs \"re\"");
  ComplexMatrix m(n);
  read_part(j["re"], n, m, false);
  if (j.contains("im")) read_part(j["im"], n, m, true);
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_json(buf.str());
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << matrix_to_json(m);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace radiuslab
