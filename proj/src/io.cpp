#include "hilb/io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hilb {

using nlohmann::json;

json series_to_json(const Series& g) {
  json numer = json::array();
  for (const auto& c : g.numer().coeffs()) numer.push_back(c.str());
  return json{{"den_exp", g.den_exp()}, {"numer", numer}};
}

Series series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("den_exp") || !j.contains("numer"))
    throw std::invalid_argument("series JSON needs \"den_exp\" and \"numer\"");
  int den = j.at("den_exp").get<int>();
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("numer")) {
    if (c.is_number_integer())
      coeffs.push_back(Rat(c.get<long>()));
    else
      coeffs.push_back(Rat::parse(c.get<std::string>()));
  }
  return Series(Poly(std::move(coeffs)), den);
}

json certificate_to_json(const Certificate& c) {
  json out{{"member", c.member}};
  if (!c.member) {
    json v;
    switch (c.kind) {
      case Certificate::Kind::Coefficient:
        v = json{{"kind", "coefficient"}, {"index", c.index}};
        break;
      case Certificate::Kind::Facet:
        v = json{{"kind", "facet"}, {"index", c.index}};
        break;
      case Certificate::Kind::Infinity:
        v = json{{"kind", "infinity"}};
        break;
      case Certificate::Kind::None:
        throw std::logic_error("certificate_to_json: non-member without violation");
    }
    out["violation"] = v;
  }
  return out;
}

Certificate certificate_from_json(const json& j) {
  bool member = j.at("member").get<bool>();
  if (member) return Certificate::ok();
  const json& v = j.at("violation");
  std::string kind = v.at("kind").get<std::string>();
  if (kind == "coefficient") return Certificate::coefficient(v.at("index").get<long>());
  if (kind == "facet") return Certificate::facet(v.at("index").get<long>());
  if (kind == "infinity") return Certificate::infinity();
  throw std::invalid_argument("certificate JSON has unknown violation kind \"" + kind + "\"");
}

json betti_to_json(const BettiTable& b) {
  json rows = json::object();
  for (const auto& [k, v] : b.entries()) {
    auto [i, j] = k;
    rows[std::to_string(j)][std::to_string(i)] = v.str();
  }
  return json{{"rows", rows}};
}

BettiTable betti_from_json(const json& j) {
  BettiTable out;
  for (const auto& [row, cols] : j.at("rows").items())
    for (const auto& [col, val] : cols.items())
      out.set(std::stoi(col), std::stol(row), Rat::parse(val.get<std::string>()));
  return out;
}

json ideal_to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(g);
  return json{{"nvars", I.nvars}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
  return MonomialIdeal(j.at("nvars").get<int>(),
                       j.at("gens").get<std::vector<std::vector<int>>>());
}

json realization_to_json(const Realization& r) {
  json summands = json::array();
  for (const auto& [m, mult] : r.modules.summands)
    summands.push_back(json{{"ell", m.ell}, {"power", m.power}, {"mult", mult.str()}});
  return json{{"scalar", r.scalar.str()},
              {"summands", summands},
              {"working_a", r.working_a}};
}

std::string series_to_text(const Series& g) {
  if (g.is_zero()) return "0";
  std::string numer = g.numer().str("t");
  if (g.den_exp() == 0) return numer;
  std::ostringstream os;
  os << "(" << numer << ")/(1-t)";
  if (g.den_exp() > 1) os << "^" << g.den_exp();
  return os.str();
}

std::string betti_to_text(const BettiTable& b) {
  if (b.empty()) return "(empty table)\n";
  int cols = b.max_col();
  long rows = b.max_row();
  size_t w = 1;
  for (const auto& [k, v] : b.entries()) w = std::max(w, v.str().size());
  for (int i = 0; i <= cols; ++i) w = std::max(w, std::to_string(i).size());
  size_t label_w = std::to_string(rows).size() + 1;
  std::ostringstream os;
  os << std::string(label_w, ' ');
  for (int i = 0; i <= cols; ++i) os << "  " << std::setw(static_cast<int>(w)) << i;
  os << "\n";
  for (long j = 0; j <= rows; ++j) {
    std::string label = std::to_string(j) + ":";
    os << std::setw(static_cast<int>(label_w)) << label;
    for (int i = 0; i <= cols; ++i) {
      Rat v = b.entry(i, j);
      os << "  " << std::setw(static_cast<int>(w)) << (v.is_zero() ? "." : v.str());
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Rat> rats_from_csv(const std::string& s) {
  std::vector<Rat> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in rational list");
    out.push_back(Rat::parse(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace hilb
