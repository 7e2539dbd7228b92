#include "netprice/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netprice/errors.hpp"

namespace netprice {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidArgument(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InvalidArgument(where + ": non-finite value");
  return x;
}

Vector read_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw InvalidArgument(where + ": expected an array");
  Vector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Index>(i)) = finite_number(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Matrix read_matrix(const json& v, Index n, const std::string& where) {
  if (!v.is_array() || static_cast<Index>(v.size()) != n)
    throw InvalidArgument(where + ": expected " + std::to_string(n) + " rows");
  Matrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    const Vector row = read_vector(v[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    if (row.size() != n) throw InvalidArgument(where + ": row " + std::to_string(i) + " has wrong length");
    out.row(i) = row.transpose();
  }
  return out;
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidArgument(std::string("instance: missing field '") + key + "'");
  return *it;
}

json to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

MarketInstance parse_instance(const std::string& json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw InvalidArgument("instance: expected a JSON object");
  Vector a = read_vector(field(doc, "a"), "a");
  const Index n = a.size();
  if (auto it = doc.find("n"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long long>() != static_cast<long long>(n))
      throw InvalidArgument("instance: n does not match the length of a");
  }
  Matrix G = read_matrix(field(doc, "G"), n, "G");
  Vector b = read_vector(field(doc, "b"), "b");
  if (b.size() != n) throw InvalidArgument("instance: b has wrong length");
  const double c = finite_number(field(doc, "c"), "c");
  MarketInstance instance(std::move(G), std::move(a), std::move(b), c);
  require_structural(instance);
  return instance;
}

MarketInstance load_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

std::string instance_to_json(const MarketInstance& instance) {
  json doc;
  doc["n"] = instance.n();
  json rows = json::array();
  for (Index i = 0; i < instance.n(); ++i) rows.push_back(to_json(instance.G().row(i).transpose()));
  doc["G"] = std::move(rows);
  doc["a"] = to_json(instance.a());
  doc["b"] = to_json(instance.b());
  doc["c"] = instance.c();
  return doc.dump(2) + "\n";
}

void save_instance(const std::filesystem::path& path, const MarketInstance& instance) {
  write_text_file(path, instance_to_json(instance));
}

PriceVector parse_prices(const std::string& json_text) {
  const json doc = parse_json(json_text);
  if (doc.is_array()) return PriceVector(read_vector(doc, "p"));
  if (doc.is_object() && doc.contains("p")) return PriceVector(read_vector(doc["p"], "p"));
  throw InvalidArgument("prices: expected an array or an object with field 'p'");
}

PriceVector load_prices(const std::filesystem::path& path) { return parse_prices(read_text_file(path)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write " + path.string());
  out << text;
  if (!out) throw FileError("write failed for " + path.string());
}

}  // namespace netprice
