#include "critnum/json_io.hpp"

#include "critnum/error.hpp"
#include "critnum/sumset.hpp"

namespace critnum {

namespace {

template <typename T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("key '") + key + "': " + e.what());
  }
}

GroupSubset subset_from_json_or_hex(const Group& g, const nlohmann::json& j) {
  if (j.contains("set_hex") && !j.contains("set")) return GroupSubset::from_hex(g, required<std::string>(j, "set_hex"));
  return subset_from_json(g, required<nlohmann::json>(j, "set"));
}

}  // namespace

nlohmann::json subset_to_json(const GroupSubset& a) {
  auto out = nlohmann::json::array();
  for (const auto& e : a.elements()) out.push_back(e.coords);
  return out;
}

GroupSubset subset_from_json(const Group& g, const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "subset must be a JSON array of coordinate vectors");
  GroupSubset out(g);
  for (const auto& item : j) {
    Element e;
    try {
      e.coords = item.get<std::vector<std::uint64_t>>();
    } catch (const nlohmann::json::exception& ex) {
      fail(ErrorCode::ParseError, std::string("subset element: ") + ex.what());
    }
    out.insert(g.encode(e));
  }
  return out;
}

nlohmann::json to_json(const WitnessCertificate& c) {
  nlohmann::json j;
  j["kind"] = "witness";
  j["group"] = c.group.to_string();
  j["n"] = c.group.order();
  j["mode"] = c.mode == WitnessMode::HFold ? "hfold" : "interval";
  j[c.mode == WitnessMode::HFold ? "h" : "s"] = c.parameter;
  j["set"] = subset_to_json(c.set);
  j["set_hex"] = c.set.to_hex();
  j["size"] = c.set.size();
  j["claimed_size"] = c.claimed_size;
  j["generates"] = c.generates;
  j["incomplete"] = c.incomplete;
  j["branch"] = c.branch;
  return j;
}

nlohmann::json to_json(const BoundCertificate& c) {
  nlohmann::json j;
  j["kind"] = "bound";
  j["group"] = c.group.to_string();
  j["n"] = c.group.order();
  j["s"] = c.s;
  j["quotient_type"] = c.quotient_type;
  j["c_vector"] = c.c_vector;
  j["index_d"] = c.trivial ? 1 : c.index_d();
  j["bound"] = c.bound;
  j["witness"] = subset_to_json(c.witness);
  j["witness_hex"] = c.witness.to_hex();
  j["generates"] = c.generates;
  j["incomplete"] = c.incomplete;
  j["trivial"] = c.trivial;
  return j;
}

WitnessCertificate witness_from_json(const nlohmann::json& j) {
  const auto type = GroupType::parse(required<std::string>(j, "group"));
  const Group g(type);
  const auto mode_name = required<std::string>(j, "mode");
  if (mode_name != "hfold" && mode_name != "interval") fail(ErrorCode::ParseError, "unknown mode " + mode_name);
  const auto mode = mode_name == "hfold" ? WitnessMode::HFold : WitnessMode::Interval;
  const int parameter = required<int>(j, mode == WitnessMode::HFold ? "h" : "s");
  auto set = subset_from_json_or_hex(g, j);
  const bool generates = is_generating(set);
  const bool incomplete =
      !set.empty() && !is_complete(mode == WitnessMode::HFold ? hfold_sumset(set, parameter)
                                                             : interval_sumset(set, parameter));
  return WitnessCertificate{type,
                            mode,
                            parameter,
                            std::move(set),
                            required<std::int64_t>(j, "claimed_size"),
                            generates,
                            incomplete,
                            j.value("branch", std::string())};
}

BoundCertificate bound_from_json(const nlohmann::json& j) {
  const auto type = GroupType::parse(required<std::string>(j, "group"));
  const Group g(type);
  const int s = required<int>(j, "s");
  auto witness = subset_from_json(g, required<nlohmann::json>(j, "witness"));
  const auto bound = required<std::int64_t>(j, "bound");
  // A trivial certificate claims nothing beyond the bound 1.
  const bool trivial = required<bool>(j, "trivial") && witness.empty() && bound == 1;
  const bool generates = !witness.empty() && is_generating(witness);
  const bool incomplete = !witness.empty() && !is_complete(interval_sumset(witness, s));
  return BoundCertificate{type,
                          s,
                          required<std::vector<std::int64_t>>(j, "quotient_type"),
                          required<std::vector<std::int64_t>>(j, "c_vector"),
                          bound,
                          std::move(witness),
                          generates,
                          incomplete,
                          trivial};
}

namespace {

bool contains_object(const nlohmann::json& j) {
  if (j.is_object()) return true;
  if (!j.is_array()) return false;
  for (const auto& item : j)
    if (contains_object(item)) return true;
  return false;
}

void write_inline(const nlohmann::json& j, std::string& out) {
  if (!j.is_array()) {
    out += j.dump();
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    write_inline(j[i], out);
  }
  out += ']';
}

void write_readable(const nlohmann::json& j, int indent, int depth, std::string& out) {
  if (!contains_object(j)) {
    write_inline(j, out);
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (j.empty()) {
    out += j.is_object() ? "{}" : "[]";
    return;
  }
  out += j.is_object() ? "{\n" : "[\n";
  std::size_t i = 0;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out += pad + nlohmann::json(key).dump() + ": ";
      write_readable(value, indent, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
  } else {
    for (const auto& value : j) {
      out += pad;
      write_readable(value, indent, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
  }
  out += close + (j.is_object() ? "}" : "]");
}

}  // namespace

std::string dump_readable(const nlohmann::json& j, int indent) {
  std::string out;
  write_readable(j, indent, 0, out);
  return out;
}

}  // namespace critnum
