#include "openbook/json_io.hpp"

#include <cstdint>
#include <limits>

#include "json.hpp"

namespace openbook {

namespace {

using json = nlohmann::ordered_json;

// Exact integers become JSON numbers while they fit in 64 bits and decimal
// strings beyond that, so no output path ever rounds.
json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

json coefficients_object(const Cycle& d) {
  json obj = json::object();
  for (int i = 0; i < d.size(); ++i) obj[d.graph().name(i)] = json_int(d[i]);
  return obj;
}

json cycle_element(const Cycle& d) {
  json obj = json::object();
  obj["coefficients"] = coefficients_object(d);
  obj["antinef"] = true;
  return obj;
}

}  // namespace

std::string validation_json(const GraphValidation& v) {
  json obj = json::object();
  obj["tree"] = v.tree;
  obj["negative_definite"] = v.definiteness.negative_definite;
  if (!v.definiteness.negative_definite) {
    obj["failing_minor_order"] = v.definiteness.failing_order;
    obj["failing_minor"] = json_int(v.definiteness.failing_minor);
  }
  obj["valid"] = v.ok();
  return obj.dump();
}

std::string zmin_json(const Cycle& zmin) {
  json obj = json::object();
  obj["zmin"] = coefficients_object(zmin);
  return obj.dump();
}

std::string canonical_json(const RationalCycle& k) {
  json coeffs = json::object();
  for (int i = 0; i < k.size(); ++i) coeffs[k.graph().name(i)] = to_string(k[i]);
  json obj = json::object();
  obj["canonical"] = coeffs;
  return obj.dump();
}

std::string chi_json(const Cycle& d, const Int& chi) {
  json obj = json::object();
  obj["cycle"] = coefficients_object(d);
  obj["chi"] = json_int(chi);
  return obj.dump();
}

std::string open_book_json(const OpenBookReport& r) {
  json obj = json::object();
  obj["cycle"] = coefficients_object(r.cycle);
  obj["antinef"] = r.antinef;
  obj["beta"] = json_int(r.beta);
  obj["genus"] = json_int(r.genus);
  obj["milnor"] = json_int(r.milnor);
  obj["chi_minus"] = json_int(r.chi_minus);
  json binding = json::object();
  for (int i = 0; i < r.cycle.size(); ++i)
    binding[r.cycle.graph().name(i)] = json_int(r.binding[i]);
  obj["binding_vector"] = binding;
  return obj.dump();
}

std::string contact_json(const ContactReport& r) {
  json obj = json::object();
  obj["sg"] = json_int(r.sg);
  obj["bn"] = json_int(r.bn);
  obj["norm"] = json_int(r.norm);
  obj["rational"] = r.rational;
  obj["minimal"] = r.minimal;
  obj["zmin"] = coefficients_object(r.zmin);
  return obj.dump();
}

std::string enumeration_json(const ConeEnumeration& e) {
  json arr = json::array();
  for (const Cycle& d : e.elements) arr.push_back(cycle_element(d));
  return arr.dump();
}

std::string stratum_json(int bound, const Int& genus, const std::vector<Cycle>& elements) {
  json arr = json::array();
  for (const Cycle& d : elements) arr.push_back(cycle_element(d));
  json obj = json::object();
  obj["bound"] = bound;
  obj["genus"] = json_int(genus);
  obj["elements"] = arr;
  return obj.dump();
}

std::string verification_json(const VerificationReport& r) {
  json props = json::array();
  for (const PropertyRecord& p : r.properties) {
    json rec = json::object();
    rec["name"] = p.name;
    rec["instances"] = p.instances;
    rec["ok"] = p.ok;
    if (p.counterexample) {
      json cyc = json::array();
      for (const Cycle& c : p.counterexample->cycles) cyc.push_back(coefficients_object(c));
      json ce = json::object();
      ce["cycles"] = cyc;
      ce["relation"] = p.counterexample->relation;
      ce["lhs"] = p.counterexample->lhs;
      ce["rhs"] = p.counterexample->rhs;
      rec["counterexample"] = ce;
    }
    props.push_back(rec);
  }
  json obj = json::object();
  obj["graph"] = r.graph;
  obj["bound"] = r.bound;
  obj["properties"] = props;
  obj["seconds"] = r.seconds;
  return obj.dump();
}

}  // namespace openbook
