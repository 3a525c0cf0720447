#include "leavitt/io.hpp"

#include "leavitt/error.hpp"
#include "leavitt/expr.hpp"

namespace leavitt {

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(std::string("witness document lacks \"") + key + "\"");
  return j.at(key);
}

template <class T> T unsigned_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_number_unsigned())
    throw DomainError(std::string("\"") + key +
                      "\" must be a non-negative integer");
  return v.get<T>();
}

} // namespace

Json matrix_to_json(const LeavittMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

LeavittMatrix matrix_from_json(const Json &j, FieldSpec spec, std::uint32_t n) {
  if (!j.is_array() || j.empty())
    throw DomainError("matrix must be a non-empty array of rows");
  const std::size_t d = j.size();
  LeavittMatrix m(d, spec, n);
  for (std::size_t r = 0; r < d; ++r) {
    const Json &row = j[r];
    if (!row.is_array() || row.size() != d)
      throw DomainError("matrix row " + std::to_string(r + 1) +
                        " must have " + std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c) {
      if (!row[c].is_string())
        throw DomainError("matrix entries must be element strings");
      m.set(r, c, parse_leavitt(row[c].get<std::string>(), spec, n));
    }
  }
  return m;
}

Json witness_to_json(const BracketWitness &w) {
  Json j;
  j["field"] = w.spec.name();
  j["characteristic"] = w.spec.characteristic();
  j["n"] = w.n;
  j["d"] = w.d;
  j["case"] = std::string(case_name(w.kind));
  Json pairs = Json::array();
  for (const auto &[a, b] : w.pairs) {
    Json p;
    p["left"] = matrix_to_json(a);
    p["right"] = matrix_to_json(b);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

BracketWitness witness_from_json(const Json &j) {
  FieldSpec spec(unsigned_field<std::uint64_t>(j, "characteristic"));
  auto n = unsigned_field<std::uint32_t>(j, "n");
  auto d = unsigned_field<std::size_t>(j, "d");
  if (j.contains("field") && field(j, "field") != spec.name())
    throw DomainError("\"field\" disagrees with \"characteristic\"");

  BracketWitness w{spec, n, d, WitnessCase::InvertibleNMinus1, {}};
  const Json &kind = field(j, "case");
  if (kind == case_name(WitnessCase::CharDividesD))
    w.kind = WitnessCase::CharDividesD;
  else if (kind != case_name(WitnessCase::InvertibleNMinus1))
    throw DomainError("unknown witness case");

  const Json &pairs = field(j, "pairs");
  if (!pairs.is_array())
    throw DomainError("\"pairs\" must be an array");
  for (const Json &p : pairs) {
    LeavittMatrix a = matrix_from_json(field(p, "left"), spec, n);
    LeavittMatrix b = matrix_from_json(field(p, "right"), spec, n);
    if (a.size() != d || b.size() != d)
      throw DomainError("witness matrix size disagrees with \"d\"");
    w.pairs.emplace_back(std::move(a), std::move(b));
  }
  return w;
}

} // namespace leavitt
