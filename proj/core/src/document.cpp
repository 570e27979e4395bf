#include "leibniz/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace leibniz {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // carries line-less byte position info
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(where + " is missing the field \"" + key + "\"");
  return *it;
}

std::size_t index_in(const json& j, std::size_t dim, const char* key,
                     const std::string& where) {
  if (!j.is_number_unsigned())
    throw ParseError(where + ": \"" + key + "\" must be a nonnegative integer");
  std::size_t v = j.get<std::size_t>();
  if (v >= dim)
    throw ParseError(where + ": \"" + key + "\" = " + std::to_string(v) +
                     " is out of range for dimension " + std::to_string(dim));
  return v;
}

Field parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw ParseError("field must be \"Q\" or {\"p\": odd prime}");
  }
  if (j.is_object() && j.contains("p") && j.size() == 1) {
    const json& p = *j.find("p");
    if (!p.is_number_unsigned())
      throw ParseError("field characteristic \"p\" must be a positive integer");
    try {
      return Field::prime(p.get<unsigned long>());
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field must be \"Q\" or {\"p\": odd prime}");
}

json field_json(const Field& f) {
  if (f.is_prime_field()) return json{{"p", f.modulus()}};
  return json("Q");
}

Scalar parse_coefficient(const Field& f, const json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where + ": \"c\" must be a scalar string");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

AlgebraDocument algebra_from_json(const json& doc) {
  Field f = parse_field(member(doc, "field", "algebra document"));
  const json& jdim = member(doc, "dim", "algebra document");
  if (!jdim.is_number_unsigned())
    throw ParseError("\"dim\" must be a nonnegative integer");
  std::size_t dim = jdim.get<std::size_t>();

  const json& jbasis = member(doc, "basis", "algebra document");
  if (!jbasis.is_array() || jbasis.size() != dim)
    throw ParseError("\"basis\" must list exactly " + std::to_string(dim) +
                     " names");
  std::vector<std::string> names;
  for (const json& name : jbasis) {
    if (!name.is_string()) throw ParseError("basis names must be strings");
    names.push_back(name.get<std::string>());
  }

  std::vector<std::vector<Vector>> table(
      dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  const json& jbr = member(doc, "brackets", "algebra document");
  if (!jbr.is_array()) throw ParseError("\"brackets\" must be an array");
  for (std::size_t e = 0; e < jbr.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const json& entry = jbr[e];
    std::size_t i = index_in(member(entry, "left", where), dim, "left", where);
    std::size_t j = index_in(member(entry, "right", where), dim, "right", where);
    const json& value = member(entry, "value", where);
    if (!value.is_array()) throw ParseError(where + ": \"value\" must be an array");
    for (std::size_t t = 0; t < value.size(); ++t) {
      const std::string term = where + ".value[" + std::to_string(t) + "]";
      std::size_t k = index_in(member(value[t], "k", term), dim, "k", term);
      Scalar c = parse_coefficient(f, member(value[t], "c", term), term);
      table[i][j][k] = table[i][j][k] + c;
    }
  }
  return AlgebraDocument{f, dim, std::move(names), std::move(table)};
}

json algebra_to_json(const LeibnizAlgebra& a) {
  json basis = json::array();
  for (const std::string& name : a.names()) basis.push_back(name);
  json brackets = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& v = a.sc(i, j);
      json value = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!v[k].is_zero()) value.push_back({{"c", v[k].str()}, {"k", k}});
      if (!value.empty())
        brackets.push_back({{"left", i}, {"right", j}, {"value", value}});
    }
  return json{{"basis", basis},
              {"brackets", brackets},
              {"dim", a.dim()},
              {"field", field_json(a.field())}};
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows,
                        std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + " must be an array of " + std::to_string(rows) +
                     " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + " row " + std::to_string(r) + " must hold " +
                       std::to_string(cols) + " scalar strings");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string())
        throw ParseError(where + " entries must be scalar strings");
      try {
        m.at(r, c) = Scalar::parse(f, row[c].get<std::string>());
      } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

LeibnizAlgebra AlgebraDocument::build() const {
  std::vector<std::vector<Vector>> sc = table;
  return LeibnizAlgebra(field, dim, names, std::move(sc));
}

AlgebraDocument parse_algebra_document(const std::string& text) {
  return algebra_from_json(parse_json(text));
}

AlgebraDocument read_algebra_document(const std::string& path) {
  return parse_algebra_document(read_file(path));
}

LeibnizAlgebra parse_algebra(const std::string& text) {
  return parse_algebra_document(text).build();
}

LeibnizAlgebra load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::string format_algebra(const LeibnizAlgebra& a) {
  return dump(algebra_to_json(a));
}

void save_algebra(const std::string& path, const LeibnizAlgebra& a) {
  write_file(path, format_algebra(a));
}

IsoclinismWitness parse_witness(const std::string& text) {
  json doc = parse_json(text);
  const json& jn = member(doc, "n", "witness document");
  if (!jn.is_number_unsigned())
    throw ParseError("witness \"n\" must be a nonnegative integer");
  std::size_t n = jn.get<std::size_t>();
  LeibnizAlgebra a1 =
      algebra_from_json(member(doc, "algebra1", "witness document")).build();
  LeibnizAlgebra a2 =
      algebra_from_json(member(doc, "algebra2", "witness document")).build();
  if (a1.field() != a2.field())
    throw ParseError("witness algebras must share one field");

  LevelContext c1 = level_context(a1, n);
  LevelContext c2 = level_context(a2, n);
  Matrix eta = matrix_from_json(a1.field(), member(doc, "eta_matrix", "witness"),
                                c2.quotient.algebra.dim(),
                                c1.quotient.algebra.dim(), "eta_matrix");
  Matrix xi = matrix_from_json(a1.field(), member(doc, "xi_matrix", "witness"),
                               c2.gamma_res.algebra.dim(),
                               c1.gamma_res.algebra.dim(), "xi_matrix");
  return IsoclinismWitness{
      n, a1, a2,
      Homomorphism(c1.quotient.algebra, c2.quotient.algebra, std::move(eta)),
      Homomorphism(c1.gamma_res.algebra, c2.gamma_res.algebra, std::move(xi))};
}

IsoclinismWitness load_witness(const std::string& path) {
  return parse_witness(read_file(path));
}

std::string format_witness(const IsoclinismWitness& w) {
  return dump(json{{"algebra1", algebra_to_json(w.a1)},
                   {"algebra2", algebra_to_json(w.a2)},
                   {"eta_matrix", matrix_to_json(w.eta.matrix())},
                   {"n", w.n},
                   {"xi_matrix", matrix_to_json(w.xi.matrix())}});
}

void save_witness(const std::string& path, const IsoclinismWitness& w) {
  write_file(path, format_witness(w));
}

}  // namespace leibniz
