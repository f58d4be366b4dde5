#include "fockpath/json_io.hpp"

#include <string>

namespace fockpath {

Json to_json(const LaurentPolynomial& p) {
  Json j = Json::object();
  for (auto [k, c] : p.terms()) j[std::to_string(k)] = c;
  return j;
}

LaurentPolynomial poly_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  LaurentPolynomial::Terms terms;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t used = 0;
    const int k = std::stoi(it.key(), &used);
    if (used != it.key().size()) throw std::invalid_argument("bad exponent key '" + it.key() + "'");
    terms[k] = it.value().get<LaurentPolynomial::Coeff>();
  }
  return LaurentPolynomial(std::move(terms));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const SignSequence& t) { return Json{{"plus", t.plus()}, {"minus", t.minus()}}; }

SignSequence sign_sequence_from_json(const Json& j) {
  return SignSequence(j.at("plus").get<std::vector<int>>(), j.at("minus").get<std::vector<int>>());
}

Json to_json(const LatticedPath& p) {
  return Json{{"lo", p.lo}, {"hi", p.hi}, {"positions", p.positions}, {"flat", p.flat},
              {"heights", p.heights()}, {"norm", p.norm()}};
}

Json to_json(const WellNestedCollection& w) {
  Json paths = Json::array();
  for (const auto& p : w.paths) paths.push_back(to_json(p));
  return Json{{"norm", w.norm}, {"paths", paths}};
}

Json canonical_record(const Partition& mu, const FockVector& g) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : g.terms()) terms.push_back(Json{{"lambda", to_json(lambda)}, {"poly", to_json(c)}});
  return Json{{"mu", to_json(mu)}, {"terms", terms}};
}

std::pair<Partition, FockVector> canonical_record_from_json(const Json& j) {
  auto mu = partition_from_json(j.at("mu"));
  FockVector g;
  for (const auto& t : j.at("terms")) g.add(partition_from_json(t.at("lambda")), poly_from_json(t.at("poly")));
  return {std::move(mu), std::move(g)};
}

}  // namespace fockpath
