#pragma once

#include <cctype>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pl2/dirichlet.hpp"
#include "pl2/errors.hpp"
#include "pl2/hilbert.hpp"
#include "pl2/toeplitz.hpp"

namespace pl2 {

// 17 significant digits: enough for exact double round trips.
inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string format_complex(Cplx z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string s = format_real(z.real());
  s += (z.imag() < 0.0 || std::signbit(z.imag())) ? "-" : "+";
  s += format_real(std::abs(z.imag()));
  s += "i";
  return s;
}

// Parses "a", "bi", "a+bi", "a-bi", "i", "-i"; whitespace is ignored.
inline Cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw PreconditionError("parse_complex: empty string");

  auto to_double = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw PreconditionError("parse_complex: cannot parse '" + part + "'");
    }
    if (used != part.size()) {
      throw PreconditionError("parse_complex: trailing characters in '" + part + "'");
    }
    return v;
  };

  if (s.back() != 'i') return {to_double(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last +/- that is not an exponent sign and not leading.
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      return {to_double(body.substr(0, pos)), to_double(body.substr(pos))};
    }
  }
  return {0.0, to_double(body)};
}

// ---- JSON -----------------------------------------------------------------

inline nlohmann::json coeffs_to_json(const std::vector<Cplx>& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cplx& c : coeffs) arr.push_back({c.real(), c.imag()});
  return arr;
}

inline std::vector<Cplx> coeffs_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw PreconditionError("expected a coefficient array");
  std::vector<Cplx> out;
  out.reserve(arr.size());
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) {
      throw PreconditionError("coefficient entries must be [re, im] pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

inline nlohmann::json to_json(const PL2Element& f) {
  return {{"coeffs", coeffs_to_json(f.series.coeffs)}};
}

inline nlohmann::json to_json(const H2Element& g) {
  return {{"coeffs", coeffs_to_json(g.coeffs)}};
}

inline PL2Element pl2_element_from_json(const nlohmann::json& j) {
  return PL2Element(coeffs_from_json(j.at("coeffs")));
}

inline H2Element h2_element_from_json(const nlohmann::json& j) {
  return H2Element(coeffs_from_json(j.at("coeffs")));
}

// Entries are coefficient lists per degree.  Lists start at degree 0; when
// any entry carries the Laurent z^{-1} exception, a "min_degrees" array
// records the per-entry starting degree instead.
inline nlohmann::json to_json(const PolySeries& p) {
  bool laurent = false;
  for (const Polynomial& e : p.entries) {
    if (!e.is_zero() && e.min_degree < 0) laurent = true;
  }
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json mins = nlohmann::json::array();
  for (const Polynomial& e : p.entries) {
    const int lo = laurent ? (e.is_zero() ? 0 : e.min_degree)
                           : 0;
    const int hi = e.is_zero() ? lo - 1 : e.highest_degree();
    nlohmann::json entry = nlohmann::json::array();
    for (int d = lo; d <= hi; ++d) {
      const Cplx c = e.coefficient(d);
      entry.push_back({c.real(), c.imag()});
    }
    entries.push_back(std::move(entry));
    mins.push_back(lo);
  }
  nlohmann::json j{{"entries", std::move(entries)}};
  if (laurent) j["min_degrees"] = std::move(mins);
  return j;
}

inline PolySeries poly_series_from_json(const nlohmann::json& j) {
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw PreconditionError("PolySeries: entries must be an array");
  PolySeries out;
  out.entries.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int min_degree = 0;
    if (j.contains("min_degrees")) min_degree = j["min_degrees"].at(i).get<int>();
    out.entries.emplace_back(min_degree, coeffs_from_json(entries[i]));
  }
  return out;
}

inline nlohmann::json to_json(const SparseOperator& op) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [rc, w] : op.entries) {
    entries.push_back({rc.first, rc.second, w.real(), w.imag()});
  }
  return {{"rows", op.rows}, {"cols", op.cols}, {"entries", std::move(entries)}};
}

inline SparseOperator sparse_operator_from_json(const nlohmann::json& j) {
  SparseOperator op(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4) {
      throw PreconditionError("SparseOperator: entries must be [r, c, re, im]");
    }
    op.add_at(e[0].get<int>(), e[1].get<int>(),
              Cplx(e[2].get<double>(), e[3].get<double>()));
  }
  return op;
}

// ---- CSV ------------------------------------------------------------------

// Dense CSV of the operator window, row per line.
inline void write_csv(const SparseOperator& op, std::ostream& out) {
  for (int r = 1; r <= op.rows; ++r) {
    for (int c = 1; c <= op.cols; ++c) {
      if (c > 1) out << ',';
      out << format_complex(op.at(r, c));
    }
    out << '\n';
  }
}

}  // namespace pl2
