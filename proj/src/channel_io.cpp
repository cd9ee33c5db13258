#include "qdpi/channel_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qdpi/errors.hpp"

namespace qdpi {
namespace {

using nlohmann::json;

Complex parse_entry(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(where + ": entry must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw ValidationError(where + ": expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ValidationError(where + ": row " + std::to_string(r) + " must have " +
                            std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_entry(row[c], where + ", row " + std::to_string(r));
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::size_t positive_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_unsigned() ||
      doc[key].get<std::size_t>() == 0) {
    throw ValidationError(std::string("field \"") + key +
                          "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

KrausChannel kraus_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const std::size_t din = positive_field(doc, "dimIn");
  const std::size_t dout = positive_field(doc, "dimOut");
  if (!doc.contains("ops") || !doc["ops"].is_array() || doc["ops"].empty()) {
    throw ValidationError("field \"ops\" must be a nonempty array");
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < doc["ops"].size(); ++i) {
    ops.push_back(parse_matrix(doc["ops"][i], dout, din,
                               "Kraus operator " + std::to_string(i)));
  }
  return KrausChannel(std::move(ops));
}

std::string kraus_to_json(const KrausChannel& s) {
  json doc;
  doc["dimIn"] = s.dim_in();
  doc["dimOut"] = s.dim_out();
  doc["ops"] = json::array();
  for (const auto& a : s.ops()) doc["ops"].push_back(matrix_to_json(a));
  return doc.dump();
}

KrausChannel load_kraus_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return kraus_from_json(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  }
}

DensityMatrix state_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const std::size_t d = positive_field(doc, "dim");
  if (!doc.contains("matrix")) throw ValidationError("field \"matrix\" is missing");
  return DensityMatrix(parse_matrix(doc["matrix"], d, d, "state matrix"));
}

std::string state_to_json(const DensityMatrix& rho) {
  json doc;
  doc["dim"] = rho.dim();
  doc["matrix"] = matrix_to_json(rho.matrix());
  return doc.dump();
}

DensityMatrix load_state_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return state_from_json(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

Ensemble ensemble_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("probs") || !doc.contains("states") ||
      !doc["probs"].is_array() || !doc["states"].is_array()) {
    throw ValidationError("ensemble needs \"probs\" and \"states\" arrays");
  }
  std::vector<double> probs;
  for (const auto& p : doc["probs"]) {
    if (!p.is_number()) throw ValidationError("ensemble probabilities must be numbers");
    probs.push_back(p.get<double>());
  }
  std::vector<ComplexVector> states;
  for (std::size_t i = 0; i < doc["states"].size(); ++i) {
    const json& sv = doc["states"][i];
    const std::string where = "ensemble state " + std::to_string(i);
    if (!sv.is_array() || sv.empty()) throw ValidationError(where + " must be a nonempty array");
    ComplexVector v(static_cast<Eigen::Index>(sv.size()));
    for (std::size_t k = 0; k < sv.size(); ++k) {
      v(static_cast<Eigen::Index>(k)) = parse_entry(sv[k], where);
    }
    states.push_back(std::move(v));
  }
  return Ensemble(std::move(probs), std::move(states));
}

Ensemble load_ensemble_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return ensemble_from_json(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace qdpi
