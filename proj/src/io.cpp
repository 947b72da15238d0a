#include "framekz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace framekz {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void store_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write " + path);
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw ParseError("write failed: " + path);
  }
}

Complex parse_entry(const json& e, const std::string& path) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError(path + ": complex entries must be [re, im] number pairs");
  }
  const Complex z(e[0].get<double>(), e[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ParseError(path + ": non-finite entry");
  }
  return z;
}

json dump_entry(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

SequenceDoc read_sequence(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors")) {
    throw ParseError(path + ": expected an object with dim and vectors");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1) {
    throw ParseError(path + ": dim must be a positive integer");
  }
  const auto dim = j["dim"].get<Eigen::Index>();
  if (!j["vectors"].is_array() || j["vectors"].empty()) {
    throw ParseError(path + ": vectors must be a nonempty array");
  }

  SequenceDoc doc;
  for (const json& row : j["vectors"]) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError(path + ": every vector must have dim entries");
    }
    Vec v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      v(k) = parse_entry(row[static_cast<std::size_t>(k)], path);
    }
    doc.vectors.push_back(std::move(v));
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) {
      throw ParseError(path + ": metadata must be an object of strings");
    }
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string()) {
        throw ParseError(path + ": metadata must be an object of strings");
      }
      doc.metadata[key] = value.get<std::string>();
    }
  }
  return doc;
}

void write_sequence(const std::string& path, const VecList& vectors,
                    const std::map<std::string, std::string>& metadata) {
  if (vectors.empty()) {
    throw std::invalid_argument("write_sequence: empty sequence");
  }
  json rows = json::array();
  for (const Vec& v : vectors) {
    if (v.size() != vectors[0].size()) {
      throw std::invalid_argument("write_sequence: vectors of mixed dimension");
    }
    json row = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      row.push_back(dump_entry(v(k)));
    }
    rows.push_back(std::move(row));
  }
  json j{{"dim", vectors[0].size()}, {"vectors", std::move(rows)}};
  if (!metadata.empty()) {
    j["metadata"] = metadata;
  }
  store_json(path, j);
}

Mat read_matrix(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries")) {
    throw ParseError(path + ": expected an object with rows, cols, entries");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
      j["rows"].get<int>() < 1 || j["cols"].get<int>() < 1) {
    throw ParseError(path + ": rows/cols must be positive integers");
  }
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  if (!j["entries"].is_array() || static_cast<Eigen::Index>(j["entries"].size()) != rows) {
    throw ParseError(path + ": entries must have `rows` rows");
  }
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j["entries"][static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(path + ": every row must have `cols` entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = parse_entry(row[static_cast<std::size_t>(c)], path);
    }
  }
  return m;
}

void write_matrix(const std::string& path, const Mat& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw std::invalid_argument("write_matrix: empty matrix");
  }
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(dump_entry(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  store_json(path, json{{"rows", m.rows()}, {"cols", m.cols()},
                        {"entries", std::move(rows)}});
}

void write_trace_csv(const std::string& path, const KaczmarzTrace& trace,
                     const Vec& x) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write " + path);
  }
  out << "n,residual,coef_abs,energy_residual\n";
  const double x2 = x.squaredNorm();
  double coef_energy = 0.0;
  char buf[256];
  for (std::size_t n = 0; n < trace.residual_norms.size(); ++n) {
    coef_energy += std::norm(trace.coefficients[n]);
    const double res = trace.residual_norms[n];
    const double energy_residual = std::abs(res * res - (x2 - coef_energy));
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", n, res,
                  std::abs(trace.coefficients[n]), energy_residual);
    out << buf;
  }
  if (!out) {
    throw ParseError("write failed: " + path);
  }
}

}  // namespace framekz
