#include "qtoric/json_io.hpp"

#include <limits>
#include <string>

namespace qtoric {

namespace {

std::vector<std::int64_t> int_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InvalidInput(std::string("CharPair field '") + key + "' must be an integer array");
  }
  std::vector<std::int64_t> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_number_integer()) throw InvalidInput(std::string("CharPair field '") + key + "' holds a non-integer");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

int dimension(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidInput(std::string("CharPair field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  std::vector<IntVector> rows;
  std::size_t cols = 0;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput("matrix rows must be arrays");
    IntVector v;
    for (const auto& e : row) {
      if (e.is_number_integer()) v.emplace_back(e.get<std::int64_t>());
      else if (e.is_string()) v.emplace_back(e.get<std::string>());
      else throw InvalidInput("matrix entries must be integers");
    }
    if (!rows.empty() && v.size() != cols) throw InvalidInput("matrix rows differ in length");
    cols = v.size();
    rows.push_back(std::move(v));
  }
  return IntMatrix::from_rows(rows, cols);
}

Json char_pair_to_json(const CharPair& cp) { return Json{{"n", cp.n}, {"m", cp.m}, {"a", cp.a}, {"b", cp.b}}; }

CharPair char_pair_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("CharPair must be a JSON object");
  CharPair cp{dimension(j, "n"), dimension(j, "m"), int_array(j, "a"), int_array(j, "b")};
  check_shape(cp);
  return cp;
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Bott: return "bott";
    case Orientation::TwoOnA: return "two-on-m-side";
    case Orientation::TwoOnB: return "two-on-n-side";
  }
  return "unknown";
}

Json class_to_json(const HomeoClass& c) {
  Json params = Json::object();
  switch (c.family) {
    case Family::BottBaseN: params = {{"a", c.twist}, {"ell", c.twist_order()}}; break;
    case Family::BottBaseM: params = {{"b", c.twist}, {"ell", c.twist_order()}}; break;
    case Family::NonBott:
      params = {{"s", c.s}, {"r", c.r}, {"orientation", orientation_name(c.orientation)}};
      break;
    default: break;
  }
  return Json{{"family", family_name(c.family)},
              {"n", c.n},
              {"m", c.m},
              {"params", params},
              {"representative", char_pair_to_json(c.representative)}};
}

Json verdict_to_json(const IsoVerdict& v) {
  if (const auto* found = std::get_if<IsoFound>(&v)) {
    return Json{{"result", "found"}, {"substitution", matrix_to_json(found->substitution)}};
  }
  return Json{{"result", "none-within-bound"}, {"bound", std::get<IsoNoneWithinBound>(v).bound}};
}

Json presentation_to_json(const Presentation& p) {
  return Json{{"n", p.n},
              {"m", p.m},
              {"gen1", {{"degree", p.gen1.degree()}, {"coeffs", vector_to_json(p.gen1.coeffs())},
                        {"text", p.gen1.to_string()}}},
              {"gen2", {{"degree", p.gen2.degree()}, {"coeffs", vector_to_json(p.gen2.coeffs())},
                        {"text", p.gen2.to_string()}}}};
}

Json lattice_to_json(const LatticeBasis& l) {
  return Json{{"ambient_dim", l.ambient_dim()}, {"rank", l.rank()}, {"basis", matrix_to_json(l.basis())}};
}

}  // namespace qtoric
