#include "qsep/state_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

// 1-based line:column of a byte offset in text
std::pair<size_t, size_t> locate(const std::string& text, size_t byte) {
  size_t line = 1;
  size_t col = 1;
  size_t end = std::min(byte, text.size());
  for (size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& origin,
                               const std::string& message) {
  throw ParseError(origin + ": " + message);
}

double number_at(const nlohmann::json& j, const std::string& origin,
                 const std::string& what) {
  if (!j.is_number()) schema_error(origin, what + " must be a number");
  return j.get<double>();
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

StateFile parse_state_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(origin + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + e.what());
  }
  if (!j.is_object()) schema_error(origin, "top level must be an object");
  if (!j.contains("dims")) schema_error(origin, "missing field \"dims\"");
  if (!j.contains("entries")) schema_error(origin, "missing field \"entries\"");
  const auto& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 2) {
    schema_error(origin, "\"dims\" must be an array of two integers");
  }
  for (const auto& d : dims) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      schema_error(origin, "\"dims\" entries must be positive integers");
    }
  }
  StateFile sf;
  sf.dim_a = dims[0].get<int>();
  sf.dim_b = dims[1].get<int>();
  size_t side = static_cast<size_t>(sf.dim_a) * static_cast<size_t>(sf.dim_b);
  const auto& entries = j["entries"];
  if (!entries.is_array()) schema_error(origin, "\"entries\" must be an array");
  if (entries.size() != side * side) {
    schema_error(origin, "\"entries\" has " + std::to_string(entries.size()) +
                             " elements, expected " +
                             std::to_string(side * side));
  }
  sf.matrix.resize(static_cast<Eigen::Index>(side),
                   static_cast<Eigen::Index>(side));
  for (size_t k = 0; k < entries.size(); ++k) {
    const auto& pair = entries[k];
    std::string slot = "\"entries\"[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      schema_error(origin, slot + " must be an array [re, im]");
    }
    double re = number_at(pair[0], origin, slot + "[0]");
    double im = number_at(pair[1], origin, slot + "[1]");
    if (!std::isfinite(re) || !std::isfinite(im)) {
      schema_error(origin, slot + " must be finite");
    }
    sf.matrix(static_cast<Eigen::Index>(k / side),
              static_cast<Eigen::Index>(k % side)) =
        std::complex<double>(re, im);
  }
  return sf;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileNotFound("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str(), path);
}

DensityMatrix to_density_matrix(const StateFile& sf) {
  return DensityMatrix(sf.matrix, sf.dim_a, sf.dim_b);
}

std::string state_to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dims"] = {rho.dim_a(), rho.dim_b()};
  nlohmann::json entries = nlohmann::json::array();
  const Eigen::MatrixXcd& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      entries.push_back({m(i, k).real(), m(i, k).imag()});
  j["entries"] = std::move(entries);
  return j.dump(2);
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  out << state_to_json(rho) << '\n';
  if (!out) {
    throw IoError("write to " + path + " failed");
  }
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << "q,x_star,s_at_one_third\n";
  for (const CurveRow& r : rows) {
    out << format_double(r.q) << ',' << format_double(r.x_star) << ','
        << format_double(r.s_at_one_third) << '\n';
  }
}

void write_curve_csv(const std::string& path,
                     const std::vector<CurveRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  write_curve_csv(out, rows);
  if (!out) {
    throw IoError("write to " + path + " failed");
  }
}

}  // namespace qsep
