#include "cfevt/cf/serialize.hpp"

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

Status parse_status(const std::string& s) {
  if (s == "terminated") return Status::terminated;
  if (s == "ongoing") return Status::ongoing;
  throw InvalidArgument("unknown expansion status '" + s + "'");
}

nlohmann::json gaussian_json(const GaussianInt& g) { return nlohmann::json::array({g.re, g.im}); }

GaussianInt gaussian_from(const nlohmann::json& j) {
  return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

}  // namespace

nlohmann::json expansion_to_json(const Expansion& e, const ExpansionInput& input) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = std::string(to_string(family_of(e)));
  j["input"] = {{"value", input.value}, {"precision", input.precision}};
  j["status"] = std::string(to_string(status_of(e)));
  if (const auto* r = std::get_if<RcfExpansion>(&e)) {
    j["a0"] = r->a0;
    j["digits"] = r->digits;
  } else if (const auto* n = std::get_if<NicfExpansion>(&e)) {
    j["a0"] = n->a0;
    j["digits"] = n->b;
    j["eps"] = n->eps;
  } else {
    const auto& h = std::get<HccfExpansion>(e);
    j["a0"] = gaussian_json(h.a0);
    auto digits = nlohmann::json::array();
    for (const auto& g : h.digits) digits.push_back(gaussian_json(g));
    j["digits"] = std::move(digits);
  }
  return j;
}

Expansion expansion_from_json(const nlohmann::json& j) {
  try {
    const Family f = parse_family(j.at("family").get<std::string>());
    const Status s = parse_status(j.at("status").get<std::string>());
    switch (f) {
      case Family::rcf:
        return RcfExpansion{j.at("a0").get<std::int64_t>(),
                            j.at("digits").get<std::vector<std::int64_t>>(), s};
      case Family::nicf: {
        NicfExpansion n;
        n.a0 = j.at("a0").get<std::int64_t>();
        n.b = j.at("digits").get<std::vector<std::int64_t>>();
        n.eps = j.at("eps").get<std::vector<int>>();
        n.status = s;
        if (n.b.size() != n.eps.size()) throw InvalidArgument("NICF digits and eps differ in length");
        return n;
      }
      case Family::hccf: {
        HccfExpansion h;
        h.a0 = gaussian_from(j.at("a0"));
        for (const auto& d : j.at("digits")) h.digits.push_back(gaussian_from(d));
        h.status = s;
        return h;
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed expansion JSON: ") + ex.what());
  }
  throw InvalidArgument("malformed expansion JSON");
}

}  // namespace cfevt
