#include "twistrep/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistrep/linalg.hpp"

namespace twistrep {

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols, entries");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& e = j.at("entries");
  if (!e.is_array() || e.size() != rows)
    throw std::invalid_argument("matrix JSON has wrong row count");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = e.at(i);
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix JSON row " + std::to_string(i) +
                                  " has wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = scalar_from_string(row.at(c).get<std::string>());
  }
  return m;
}

Json sig_to_json(const SurfaceSig& sig) {
  return Json{{"g", sig.g}, {"p", sig.p}, {"r", sig.r}};
}

SurfaceSig sig_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g"))
    throw std::invalid_argument("surface JSON needs at least the genus g");
  SurfaceSig sig;
  sig.g = j.at("g").get<int>();
  sig.p = j.value("p", 0);
  sig.r = j.value("r", 0);
  validate_sig(sig);
  return sig;
}

Json cocycle_to_json(const CrossedHomData& c) {
  Json j;
  j["sig"] = sig_to_json(c.sig);
  Json values;
  for (const auto& gen : generator_set(c.sig)) {
    Json arr = Json::array();
    for (const auto& x : c.values.at(gen)) arr.push_back(to_string(x));
    values[to_key(gen)] = std::move(arr);
  }
  j["values"] = std::move(values);
  return j;
}

CrossedHomData cocycle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sig") || !j.contains("values"))
    throw std::invalid_argument("cocycle JSON needs sig and values");
  CrossedHomData c{sig_from_json(j.at("sig")), {}};
  const std::size_t n = 2 * static_cast<std::size_t>(c.sig.g);
  for (const auto& gen : generator_set(c.sig)) {
    const std::string key = to_key(gen);
    if (!j.at("values").contains(key))
      throw std::invalid_argument("cocycle JSON is missing " + key);
    const Json& arr = j.at("values").at(key);
    if (!arr.is_array() || arr.size() != n)
      throw std::invalid_argument("cocycle value for " + key +
                                  " must have length 2g");
    VecS v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = scalar_from_string(arr.at(i).get<std::string>());
    c.values[gen] = std::move(v);
  }
  return c;
}

Json rep_to_json(const GeneratorRep& rep) {
  Json j;
  j["sig"] = sig_to_json(rep.sig);
  j["dim"] = rep.dim;
  Json images;
  for (const auto& gen : generator_set(rep.sig))
    images[to_key(gen)] = matrix_to_json(rep.images.at(gen));
  j["images"] = std::move(images);
  return j;
}

GeneratorRep rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sig") || !j.contains("dim") ||
      !j.contains("images"))
    throw std::invalid_argument("representation JSON needs sig, dim, images");
  GeneratorRep rep{sig_from_json(j.at("sig")), j.at("dim").get<std::size_t>(),
                   {}};
  for (const auto& gen : generator_set(rep.sig)) {
    const std::string key = to_key(gen);
    if (!j.at("images").contains(key))
      throw std::invalid_argument("representation JSON is missing " + key);
    Matrix m = matrix_from_json(j.at("images").at(key));
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw std::invalid_argument("image of " + key + " has shape " +
                                  m.shape_str() + ", expected dim " +
                                  std::to_string(rep.dim));
    if (rank(m) != rep.dim)
      throw std::invalid_argument("image of " + key + " is singular");
    rep.images[gen] = std::move(m);
  }
  return rep;
}

Json witness_to_json(const SolveWitness& w) {
  Json j;
  j["stage"] = w.stage;
  j["detail"] = w.detail;
  j["witness"] = Json{{"lhs", matrix_to_json(w.lhs)},
                      {"rhs", matrix_to_json(w.rhs)}};
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
  if (text.empty() || text.back() != '\n') f << "\n";
}

}  // namespace twistrep
