#include "qflag/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace qflag {

namespace {

std::string where(const std::string& origin, const std::string& field) { return origin + ": field '" + field + "'"; }

const json& require(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(ctx + ": missing field '" + key + "'");
  return j.at(key);
}

mpq_class parse_entry(const json& e, const std::string& ctx) {
  if (e.is_number_integer()) return mpq_class(e.get<long>());
  if (e.is_string()) {
    try {
      mpq_class q(e.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::exception&) {
    }
  }
  throw ParseError(ctx + ": matrix entries must be integers or rational strings");
}

json entry_json(const mpq_class& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

template <class K>
void fill_maps(Rep<K>& m, const json& maps, const std::string& ctx, const std::function<typename K::Elem(const mpq_class&)>& conv) {
  const Quiver& q = *m.q;
  if (!maps.is_object()) throw ParseError(where(ctx, "maps") + " must be an object");
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    bool known = false;
    for (const auto& a : q.arrows()) known = known || a.id == it.key();
    if (!known) throw ParseError(where(ctx, "maps." + it.key()) + ": unknown arrow");
  }
  for (size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    size_t r = (size_t)m.dims[ar.tgt], c = (size_t)m.dims[ar.src];
    m.maps.emplace_back(m.k, r, c);
    std::string f = "maps." + ar.id;
    if (!maps.contains(ar.id)) {
      if (r * c == 0) continue;
      throw ParseError(where(ctx, f) + ": missing matrix");
    }
    const json& rows = maps.at(ar.id);
    if (!rows.is_array() || rows.size() != r) throw ParseError(where(ctx, f) + ": expected " + std::to_string(r) + " rows");
    for (size_t i = 0; i < r; ++i) {
      if (!rows[i].is_array() || rows[i].size() != c)
        throw ParseError(where(ctx, f + "[" + std::to_string(i) + "]") + ": expected " + std::to_string(c) + " entries");
      for (size_t jj = 0; jj < c; ++jj) m.maps[a](i, jj) = conv(parse_entry(rows[i][jj], where(ctx, f)));
    }
  }
}

DimVec dims_from_json(const json& d, const Quiver& q, const std::string& ctx) {
  DimVec out(q.num_vertices(), 0);
  if (d.is_array()) {
    if (d.size() != q.num_vertices()) throw ParseError(where(ctx, "dims") + ": wrong length");
    for (size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_number_integer() || d[i].get<long>() < 0) throw ParseError(where(ctx, "dims") + ": entries must be nonnegative integers");
      out[i] = d[i].get<long>();
    }
  } else if (d.is_object()) {
    for (auto it = d.begin(); it != d.end(); ++it) {
      size_t v;
      try {
        v = q.vertex_index(it.key());
      } catch (const std::exception&) {
        throw ParseError(where(ctx, "dims." + it.key()) + ": unknown vertex");
      }
      if (!it->is_number_integer() || it->get<long>() < 0) throw ParseError(where(ctx, "dims." + it.key()) + ": must be a nonnegative integer");
      out[v] = it->get<long>();
    }
  } else {
    throw ParseError(where(ctx, "dims") + " must be an array or an object");
  }
  return out;
}

template <class K>
json maps_json(const Rep<K>& m, const std::function<json(const typename K::Elem&)>& conv) {
  json maps = json::object();
  for (size_t a = 0; a < m.q->num_arrows(); ++a) {
    json rows = json::array();
    const auto& x = m.maps[a];
    for (size_t i = 0; i < x.rows(); ++i) {
      json row = json::array();
      for (size_t jj = 0; jj < x.cols(); ++jj) row.push_back(conv(x(i, jj)));
      rows.push_back(row);
    }
    maps[m.q->arrow(a).id] = rows;
  }
  return maps;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Quiver quiver_from_json(const json& j) {
  const std::string ctx = "quiver";
  const json& vs = require(j, "vertices", ctx);
  const json& as = require(j, "arrows", ctx);
  if (!vs.is_array()) throw ParseError(where(ctx, "vertices") + " must be an array");
  if (!as.is_array()) throw ParseError(where(ctx, "arrows") + " must be an array");
  std::vector<std::string> vertices;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw ParseError(where(ctx, "vertices[" + std::to_string(i) + "]") + " must be a string");
    vertices.push_back(vs[i].get<std::string>());
  }
  auto index = [&](const std::string& id, const std::string& field) {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    if (it == vertices.end()) throw ParseError(where(ctx, field) + ": unknown vertex '" + id + "'");
    return (size_t)(it - vertices.begin());
  };
  std::vector<Arrow> arrows;
  for (size_t i = 0; i < as.size(); ++i) {
    std::string f = "arrows[" + std::to_string(i) + "]";
    const json& a = as[i];
    for (const char* key : {"id", "from", "to"})
      if (!a.is_object() || !a.contains(key) || !a.at(key).is_string())
        throw ParseError(where(ctx, f + "." + key) + ": missing or not a string");
    arrows.push_back({a.at("id").get<std::string>(), index(a.at("from").get<std::string>(), f + ".from"),
                      index(a.at("to").get<std::string>(), f + ".to")});
  }
  try {
    return Quiver(vertices, arrows);
  } catch (const std::exception& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

json quiver_to_json(const Quiver& q) {
  json j;
  j["vertices"] = q.vertices();
  j["arrows"] = json::array();
  for (const auto& a : q.arrows()) j["arrows"].push_back({{"id", a.id}, {"from", q.vertex(a.src)}, {"to", q.vertex(a.tgt)}});
  return j;
}

QuiverPtr load_quiver(const std::string& path) {
  try {
    return std::make_shared<const Quiver>(quiver_from_json(read_json_file(path)));
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + msg);
  }
}

QRep rep_from_json(const json& j, const QuiverPtr& q) {
  const std::string ctx = "representation";
  QRep m{q, Rationals{}, dims_from_json(require(j, "dims", ctx), *q, ctx), {}};
  fill_maps<Rationals>(m, j.contains("maps") ? j.at("maps") : json::object(), ctx, [](const mpq_class& x) { return x; });
  return m;
}

json rep_to_json(const QRep& m) {
  json j;
  j["dims"] = m.dims;
  j["maps"] = maps_json<Rationals>(m, [](const mpq_class& x) { return entry_json(x); });
  return j;
}

FRep frep_from_json(const json& j, const QuiverPtr& q) {
  const std::string ctx = "representation";
  const json& mod = require(j, "modulus", ctx);
  if (!mod.is_number_integer() || mod.get<long long>() <= 0 || mod.get<long long>() > UINT32_MAX) throw ParseError(where(ctx, "modulus") + " must be a prime");
  PrimeField k;
  try {
    k = PrimeField(mod.get<uint32_t>());
  } catch (const std::exception& e) {
    throw ParseError(where(ctx, "modulus") + ": " + e.what());
  }
  FRep m{q, k, dims_from_json(require(j, "dims", ctx), *q, ctx), {}};
  fill_maps<PrimeField>(m, j.contains("maps") ? j.at("maps") : json::object(), ctx, [&](const mpq_class& x) {
    uint32_t r;
    if (!reduce_mod(x, k, r)) throw ParseError(where(ctx, "maps") + ": denominator divisible by the modulus");
    return r;
  });
  return m;
}

json frep_to_json(const FRep& m) {
  json j;
  j["dims"] = m.dims;
  j["modulus"] = m.k.p;
  j["maps"] = maps_json<PrimeField>(m, [](const uint32_t& x) { return json(x); });
  return j;
}

json bound_module_to_json(const QRep& t, const ExtendedQuiver& eq) {
  json j;
  j["d"] = eq.d;
  j["strict"] = eq.strict;
  json dims = json::object();
  for (size_t v = 0; v < eq.quiver->num_vertices(); ++v) dims[eq.quiver->vertex(v)] = t.dims[v];
  j["dims"] = dims;
  j["maps"] = maps_json<Rationals>(t, [](const mpq_class& x) { return entry_json(x); });
  return j;
}

QRep bound_module_from_json(const json& j, const ExtendedQuiver& eq) {
  const std::string ctx = "bound module";
  if (j.contains("d") && j.at("d") != eq.d) throw ParseError(where(ctx, "d") + ": does not match the extended quiver");
  if (j.contains("strict") && j.at("strict") != eq.strict)
    throw ParseError(where(ctx, "strict") + ": does not match the extended quiver");
  QRep t{eq.quiver, Rationals{}, dims_from_json(require(j, "dims", ctx), *eq.quiver, ctx), {}};
  fill_maps<Rationals>(t, j.contains("maps") ? j.at("maps") : json::object(), ctx, [](const mpq_class& x) { return x; });
  auto bad = validate(t, eq);
  if (!bad.empty()) throw ParseError(ctx + ": relation of virtual arrow '" + bad[0] + "' fails");
  return t;
}

json dimvec_to_json(const DimVec& v) { return json(v); }

json cells_to_json(const CellMultiset& c) {
  json j = json::object();
  for (const auto& [d, m] : c) j[std::to_string(d)] = m.get_str();
  return j;
}

CellMultiset cells_from_json(const json& j) {
  CellMultiset c;
  for (auto it = j.begin(); it != j.end(); ++it) c[std::stol(it.key())] = mpz_class(it->get<std::string>());
  return c;
}

json record_to_json(const CountingRecord& r) {
  json j;
  j["quiver"] = r.quiver;
  j["rep"] = r.rep;
  j["d"] = r.d;
  j["strict"] = r.strict;
  j["f"] = r.f;
  j["p"] = r.p;
  j["count"] = r.count.get_str();
  if (!r.polynomial.empty()) {
    json p = json::array();
    for (const auto& c : r.polynomial) p.push_back(c.get_str());
    j["polynomial"] = p;
  }
  return j;
}

CountingRecord record_from_json(const json& j) {
  CountingRecord r;
  r.quiver = j.at("quiver").get<std::string>();
  r.rep = j.at("rep").get<std::string>();
  r.d = j.at("d").get<int>();
  r.strict = j.at("strict").get<bool>();
  r.f = j.at("f").get<DimVec>();
  r.p = j.at("p").get<uint32_t>();
  r.count = mpz_class(j.at("count").get<std::string>());
  if (j.contains("polynomial"))
    for (const auto& c : j.at("polynomial")) r.polynomial.push_back(mpz_class(c.get<std::string>()));
  return r;
}

}  // namespace qflag
