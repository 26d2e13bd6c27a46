#include <nlohmann/json.hpp>

#include "zlab/quotient.hpp"

namespace zlab {

using nlohmann::json;

std::string Quotient::to_json_string(bool include_mul_table) const {
  json doc;
  doc["format"] = "zlab-quotient";
  doc["k"] = k_;
  doc["p"] = p_;
  doc["m"] = m_;
  doc["order"] = order();
  doc["identity"] = identity();
  doc["generators"] = gens_;
  json wit = json::array();
  for (const auto& w : witness_) wit.push_back(w.str());
  doc["witnesses"] = std::move(wit);
  doc["inverse"] = inv_;
  if (include_mul_table && has_table()) doc["mul"] = table_.mul;
  return doc.dump();
}

Quotient Quotient::from_json_string(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.is_object() || doc.value("format", "") != "zlab-quotient")
    throw parse_error("quotient JSON: missing zlab-quotient format tag");
  std::uint32_t k = doc.at("k").get<std::uint32_t>();
  std::uint32_t p = doc.at("p").get<std::uint32_t>();
  std::uint32_t m = doc.at("m").get<std::uint32_t>();
  Quotient Q = Quotient::build(k, p, m);
  if (doc.at("order").get<int>() != Q.order())
    throw parse_error("quotient JSON: order does not match the rebuilt closure");
  const auto& wit = doc.at("witnesses");
  if (static_cast<int>(wit.size()) != Q.order())
    throw parse_error("quotient JSON: witness list length mismatch");
  for (int e = 0; e < Q.order(); ++e) {
    GroupWord w = GroupWord::parse(wit[static_cast<std::size_t>(e)].get<std::string>());
    if (Q.evaluate(w) != e)
      throw parse_error("quotient JSON: witness does not evaluate to its element");
  }
  if (doc.contains("mul") && Q.has_table()) {
    const auto& mul = doc.at("mul");
    if (mul.size() != Q.table().mul.size())
      throw parse_error("quotient JSON: multiplication table size mismatch");
    for (std::size_t i = 0; i < Q.table().mul.size(); ++i)
      if (mul[i].get<int>() != Q.table().mul[i])
        throw parse_error("quotient JSON: multiplication table mismatch");
  }
  return Q;
}

}  // namespace zlab
