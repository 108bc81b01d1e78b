#ifndef WEYL_JSON_IO_HPP
#define WEYL_JSON_IO_HPP

// Canonical JSON forms:
//   WeylElement  {"d": 2, "terms": [{"beta": [..], "alpha": [..], "re": "p/q", "im": "r/s"}]}
//   CPolynomial  {"d": 2, "terms": [{"alpha": [..], "beta": [..], "re": .., "im": ..}]}
//   UniPoly      {"coefficients": [{"re": .., "im": ..}, ...]}   (index = degree)
// Terms are listed in ascending (total degree, first index, second index).

#include <json.hpp>

#include <string>

#include "weyl/cpolynomial.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json scalar_json(const GaussRational& c) {
  return Json{{"re", to_string(c.re())}, {"im", to_string(c.im())}};
}

inline GaussRational scalar_from_json(const Json& j) {
  if (!j.contains("re") || !j.contains("im")) throw InvalidInput("scalar needs \"re\" and \"im\"");
  return {parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>())};
}

inline MultiIndex index_from_json(const Json& j, std::size_t d) {
  auto v = j.get<MultiIndex>();
  if (v.size() != d) throw InvalidInput("multi-index length does not match d");
  return v;
}

inline std::size_t modes_from_json(const Json& j) {
  if (!j.contains("d") || !j.at("d").is_number_unsigned()) throw InvalidInput("missing mode count \"d\"");
  return j.at("d").get<std::size_t>();
}

}  // namespace detail

inline Json to_json(const WeylElement& w) {
  Json terms = Json::array();
  for (const auto& [m, c] : w.terms()) {
    Json t{{"beta", creation_part(m)}, {"alpha", annihilation_part(m)}};
    t.update(detail::scalar_json(c));
    terms.push_back(std::move(t));
  }
  return Json{{"d", w.d()}, {"terms", std::move(terms)}};
}

inline Json to_json(const CPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t{{"alpha", m.first}, {"beta", m.second}};
    t.update(detail::scalar_json(c));
    terms.push_back(std::move(t));
  }
  return Json{{"d", p.d()}, {"terms", std::move(terms)}};
}

inline Json to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(detail::scalar_json(c));
  return Json{{"coefficients", std::move(coeffs)}};
}

inline WeylElement weyl_from_json(const Json& j) {
  const std::size_t d = detail::modes_from_json(j);
  WeylElement w(d);
  for (const auto& t : j.at("terms"))
    w.add_term({detail::index_from_json(t.at("beta"), d), detail::index_from_json(t.at("alpha"), d)},
               detail::scalar_from_json(t));
  return w;
}

inline CPolynomial poly_from_json(const Json& j) {
  const std::size_t d = detail::modes_from_json(j);
  CPolynomial p(d);
  for (const auto& t : j.at("terms"))
    p.add_term({detail::index_from_json(t.at("alpha"), d), detail::index_from_json(t.at("beta"), d)},
               detail::scalar_from_json(t));
  return p;
}

inline UniPoly unipoly_from_json(const Json& j) {
  std::vector<GaussRational> c;
  for (const auto& s : j.at("coefficients")) c.push_back(detail::scalar_from_json(s));
  return UniPoly(std::move(c));
}

}  // namespace weyl

#endif  // WEYL_JSON_IO_HPP
