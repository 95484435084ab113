#include "commvar/serialize.hpp"

#include <string>

namespace commvar {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "bad JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("complex scalar must be [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j) {
  return guarded([&] {
    const std::size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
    const json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows * cols)
      throw Error(ErrorCode::ShapeMismatch, "matrix data length differs from rows * cols");
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) m(k / cols, k % cols) = complex_from_json(data[k]);
    return m;
  });
}

json universe_to_json(const UniverseBasis& u) { return {{"n", u.n()}, {"D", u.max_degree()}}; }

UniverseBasis universe_from_json(const json& j) {
  return guarded([&] {
    return UniverseBasis(static_cast<int>(size_field(j, "n")), static_cast<int>(size_field(j, "D")));
  });
}

json tuple_to_json(const CommutingTuple& t) {
  json mats = json::array();
  for (const auto& m : t.mats) mats.push_back(matrix_to_json(m));
  json j = {{"n", t.n()}, {"s", t.s()}, {"kind", to_string(t.kind)}, {"mats", mats}};
  if (t.ambient) j["universe"] = universe_to_json(*t.ambient);
  if (t.kind == TupleKind::real_symmetric) j["field"] = "real";
  return j;
}

CommutingTuple tuple_from_json(const json& j) {
  return guarded([&] {
    CommutingTuple t;
    const json& kind = field(j, "kind");
    if (!kind.is_string()) bad("'kind' must be a string");
    t.kind = tuple_kind_from_string(kind.get<std::string>());
    const json& mats = field(j, "mats");
    if (!mats.is_array()) bad("'mats' must be an array");
    for (const auto& m : mats) t.mats.push_back(matrix_from_json(m));
    if (j.contains("universe")) t.ambient = universe_from_json(j.at("universe"));
    if (j.contains("n") && size_field(j, "n") != t.n()) throw Error(ErrorCode::ShapeMismatch, "'n' differs from mats");
    if (j.contains("s")) {
      const std::size_t s = size_field(j, "s");
      for (const auto& m : t.mats)
        if (m.rows() != s || m.cols() != s) throw Error(ErrorCode::ShapeMismatch, "matrix size differs from 's'");
      if (t.mats.empty() && !t.ambient && s != 0) bad("an empty tuple with s > 0 needs a universe");
    }
    if (t.ambient)
      for (const auto& m : t.mats)
        if (m.rows() != t.ambient->dim()) throw Error(ErrorCode::ShapeMismatch, "matrix size differs from the universe");
    return t;
  });
}

json point_to_json(const SpherePoint& p) {
  if (p.is_basepoint_symbol()) return "basepoint";
  json coords = json::array();
  for (cplx z : p.coords()) coords.push_back(complex_to_json(z));
  return {{"coords", coords}};
}

SpherePoint point_from_json(const json& j) {
  return guarded([&] {
    if (j.is_string()) {
      if (j.get<std::string>() != "basepoint") bad("a point is {coords} or \"basepoint\"");
      return SpherePoint::basepoint();
    }
    const json& coords = field(j, "coords");
    if (!coords.is_array()) bad("'coords' must be an array");
    std::vector<cplx> c;
    for (const auto& z : coords) c.push_back(complex_from_json(z));
    return SpherePoint(std::move(c));
  });
}

json config_to_json(const Configuration& c) {
  json labels = json::array();
  for (const auto& l : c.labels) labels.push_back({{"frame", matrix_to_json(l.frame.basis())}, {"point", point_to_json(l.point)}});
  return {{"universe", universe_to_json(c.universe)}, {"labels", labels}};
}

Configuration config_from_json(const json& j, const Tolerances& tol) {
  return guarded([&] {
    Configuration c;
    c.universe = universe_from_json(field(j, "universe"));
    const json& labels = field(j, "labels");
    if (!labels.is_array()) bad("'labels' must be an array");
    for (const auto& l : labels) {
      Matrix f = matrix_from_json(field(l, "frame"));
      if (f.rows() != c.universe.dim()) throw Error(ErrorCode::ShapeMismatch, "frame rows differ from the universe dimension");
      SpherePoint p = point_from_json(field(l, "point"));
      if (!p.is_basepoint_symbol() && p.dim() != static_cast<std::size_t>(c.universe.n()))
        throw Error(ErrorCode::ShapeMismatch, "point dimension differs from n");
      c.labels.push_back(Label{Frame(std::move(f), tol.eps_struct), std::move(p)});
    }
    check_orthogonal(c, tol.eps_struct);
    return c;
  });
}

json poly_to_json(const IntPolynomial& p) {
  json j = json::object();
  for (const auto& [d, c] : p.coefficients()) j[std::to_string(d)] = c;
  return j;
}

IntPolynomial poly_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object()) bad("a polynomial is an object {degree: coefficient}");
    std::map<int, std::int64_t> c;
    for (const auto& [k, v] : j.items()) {
      if (k.empty() || k.size() > 9 || k.find_first_not_of("0123456789") != std::string::npos)
        bad("degree keys must be non-negative integers");
      const int d = std::stoi(k);
      if (!v.is_number_integer()) bad("coefficients must be integers");
      c[d] += v.get<std::int64_t>();
    }
    return IntPolynomial::from_map(c);
  });
}

json type_to_json(const DecompType& d) { return {{"parts", d.parts}, {"s", d.s()}, {"k", d.k()}}; }

}  // namespace commvar
