#include "blockgraph/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"

namespace blockgraph {

using nlohmann::json;
using u64 = std::uint64_t;

std::uint64_t CharacterTable::exponent() const {
  u64 e = 1;
  for (const auto& c : classes) e = nt::lcm(e, c.element_order);
  return e;
}

std::uint64_t CharacterTable::value_conductor() const {
  u64 n = 1;
  for (const auto& row : irr) {
    for (const auto& v : row) n = nt::lcm(n, v.conductor());
  }
  return n;
}

namespace {

Integer json_integer(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), ::isdigit) &&
                        s != "-";
    if (digits) return Integer(s);
  }
  throw SyntaxError(what + ": expected an integer");
}

std::string json_number(const Integer& v) {
  // Values beyond 64 bits are written as strings so that standard JSON readers keep them exact.
  if (v <= Integer(std::numeric_limits<std::int64_t>::max()) && v >= Integer(std::numeric_limits<std::int64_t>::min())) {
    return v.str();
  }
  return json(v.str()).dump();
}

bool is_trivial_row(const std::vector<Cyclotomic>& row) {
  return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

bool shape_ok(const CharacterTable& t) {
  if (t.classes.empty() || t.irr.size() != t.classes.size()) return false;
  for (const auto& row : t.irr) {
    if (row.size() != t.classes.size()) return false;
  }
  for (const auto& c : t.classes) {
    if (c.size <= 0 || c.element_order == 0) return false;
  }
  return t.order > 0;
}

CharacterTable from_json(const json& doc) {
  if (!doc.is_object()) throw SyntaxError("table document must be a JSON object");
  for (const char* key : {"name", "order", "classes", "irr"}) {
    if (!doc.contains(key)) throw SyntaxError(std::string("missing key '") + key + "'");
  }
  CharacterTable t;
  if (!doc["name"].is_string()) throw SyntaxError("'name' must be a string");
  t.name = doc["name"].get<std::string>();
  t.order = json_integer(doc["order"], "'order'");
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_string()) throw SyntaxError("'provenance' must be a string");
    t.provenance = doc["provenance"].get<std::string>();
  }
  if (!doc["classes"].is_array()) throw SyntaxError("'classes' must be an array");
  for (const auto& c : doc["classes"]) {
    if (!c.is_object() || !c.contains("size") || !c.contains("order")) {
      throw SyntaxError("each class needs 'size' and 'order'");
    }
    ConjClass cls;
    cls.size = json_integer(c["size"], "class size");
    const Integer ord = json_integer(c["order"], "element order");
    if (ord <= 0 || ord > Integer(std::numeric_limits<std::uint32_t>::max())) {
      throw SyntaxError("element order out of range");
    }
    cls.element_order = static_cast<u64>(ord);
    if (c.contains("label")) {
      if (!c["label"].is_string()) throw SyntaxError("class label must be a string");
      cls.label = c["label"].get<std::string>();
    }
    t.classes.push_back(std::move(cls));
  }
  if (!doc["irr"].is_array()) throw SyntaxError("'irr' must be an array of rows");
  for (const auto& row : doc["irr"]) {
    if (!row.is_array()) throw SyntaxError("each character must be an array");
    std::vector<Cyclotomic> values;
    values.reserve(row.size());
    for (const auto& entry : row) {
      if (entry.is_string()) {
        values.push_back(Cyclotomic::parse(entry.get_ref<const std::string&>()));
      } else if (entry.is_number_integer()) {
        values.emplace_back(json_integer(entry, "character value"));
      } else {
        throw SyntaxError("character values must be integers or cyclotomic expressions");
      }
    }
    t.irr.push_back(std::move(values));
  }
  return t;
}

// Sum over classes of |K| a(K) conj(b(K)), grouped by element order: each group sum is a
// Galois-stable quantity and hence rational, which keeps intermediate conductors small.
Integer inner_sum(const CharacterTable& t, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b_conj,
                  const std::map<u64, std::vector<std::size_t>>& by_order, bool& rational) {
  Integer total = 0;
  for (const auto& [ord, cols] : by_order) {
    Cyclotomic s;
    for (std::size_t k : cols) {
      if (a[k].is_zero() || b_conj[k].is_zero()) continue;
      s += Cyclotomic(t.classes[k].size) * (a[k] * b_conj[k]);
    }
    if (!s.is_rational()) {
      rational = false;
      return 0;
    }
    total += s.rational();
  }
  return total;
}

}  // namespace

std::vector<std::string> validate(const CharacterTable& t) {
  if (!shape_ok(t)) return {"shape"};
  std::vector<std::string> out;
  const std::size_t n = t.size();

  std::size_t identity = n;
  bool ambiguous = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (t.classes[k].element_order != 1) continue;
    if (identity != n || t.classes[k].size != 1) ambiguous = true;
    identity = k;
  }
  if (ambiguous || identity == n) return {"identity-class"};
  if (std::none_of(t.irr.begin(), t.irr.end(), is_trivial_row)) out.emplace_back("trivial-character");

  Integer size_sum = 0;
  for (const auto& c : t.classes) size_sum += c.size;
  if (size_sum != t.order) out.emplace_back("size-sum");

  bool degrees_ok = true;
  Integer degree_sum = 0;
  for (const auto& row : t.irr) {
    const Cyclotomic& d = row[identity];
    if (!d.is_rational() || d.rational() <= 0) {
      degrees_ok = false;
      continue;
    }
    degree_sum += d.rational() * d.rational();
  }
  if (!degrees_ok || degree_sum != t.order) out.emplace_back("degree-sum");

  bool conductor_ok = true;
  for (const auto& row : t.irr) {
    for (std::size_t k = 0; k < n; ++k) {
      if (t.classes[k].element_order % row[k].conductor() != 0) conductor_ok = false;
    }
  }

  std::map<u64, std::vector<std::size_t>> by_order;
  for (std::size_t k = 0; k < n; ++k) by_order[t.classes[k].element_order].push_back(k);

  std::vector<std::vector<Cyclotomic>> conj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : t.irr[i]) conj[i].push_back(v.conj());
  }

  bool rows_ok = conductor_ok;
  for (std::size_t i = 0; i < n && rows_ok; ++i) {
    for (std::size_t j = i; j < n && rows_ok; ++j) {
      bool rational = true;
      const Integer s = inner_sum(t, t.irr[i], conj[j], by_order, rational);
      if (!rational || s != (i == j ? t.order : Integer(0))) rows_ok = false;
    }
  }
  if (!rows_ok) out.emplace_back("row-orthogonality");

  bool cols_ok = true;
  for (std::size_t k = 0; k < n && cols_ok; ++k) {
    for (std::size_t l = k; l < n && cols_ok; ++l) {
      Cyclotomic s;
      for (std::size_t i = 0; i < n; ++i) s += t.irr[i][k] * conj[i][l];
      if (k == l) {
        if (t.order % t.classes[k].size != 0 || s != Cyclotomic(Integer(t.order / t.classes[k].size))) cols_ok = false;
      } else if (!s.is_zero()) {
        cols_ok = false;
      }
    }
  }
  if (!cols_ok) out.emplace_back("column-orthogonality");

  bool integral = true;
  for (const auto& row : t.irr) {
    const Cyclotomic& d = row[identity];
    if (!d.is_rational() || d.rational() <= 0) continue;
    for (std::size_t k = 0; k < n && integral; ++k) {
      try {
        (Cyclotomic(t.classes[k].size) * row[k]).div_exact(d.rational());
      } catch (const NotAlgebraicInteger&) {
        integral = false;
      }
    }
  }
  if (!integral) out.emplace_back("central-character-integrality");
  if (!conductor_ok) out.emplace_back("conductor");
  return out;
}

CharacterTable permuted(const CharacterTable& t, const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm) {
  CharacterTable out;
  out.name = t.name;
  out.order = t.order;
  out.provenance = t.provenance;
  for (std::size_t k : col_perm) out.classes.push_back(t.classes.at(k));
  for (std::size_t i : row_perm) {
    std::vector<Cyclotomic> row;
    for (std::size_t k : col_perm) row.push_back(t.irr.at(i).at(k));
    out.irr.push_back(std::move(row));
  }
  return out;
}

CharacterTable canonicalize(CharacterTable t) {
  if (!shape_ok(t)) throw ValidationError({"shape"});
  const std::size_t n = t.size();
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = t.classes[a];
    const auto& y = t.classes[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    return x.size < y.size;
  });
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  auto key_less = [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial_row(t.irr[a]);
    const bool tb = is_trivial_row(t.irr[b]);
    if (ta != tb) return ta;
    for (std::size_t k : cols) {
      const auto c = t.irr[a][k] <=> t.irr[b][k];
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::stable_sort(rows.begin(), rows.end(), key_less);
  CharacterTable out = permuted(t, rows, cols);

  std::map<u64, int> used;
  for (auto& c : out.classes) {
    const int index = used[c.element_order]++;
    if (!c.label.empty()) continue;
    std::string suffix;
    for (int i = index;; i = i / 26 - 1) {
      suffix.insert(suffix.begin(), static_cast<char>('a' + i % 26));
      if (i < 26) break;
    }
    c.label = std::to_string(c.element_order) + suffix;
  }
  return out;
}

CharacterTable parse_table(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
  CharacterTable t = from_json(doc);
  if (!shape_ok(t)) throw ValidationError({"shape"});
  if (auto v = validate(t); !v.empty()) throw ValidationError(std::move(v));
  return canonicalize(std::move(t));
}

CharacterTable parse_table(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

CharacterTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return parse_table(in);
}

std::string print_table(const CharacterTable& t) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << json(t.name).dump() << ",\n";
  out << "  \"order\": " << json_number(t.order) << ",\n";
  if (t.provenance) out << "  \"provenance\": " << json(*t.provenance).dump() << ",\n";
  out << "  \"classes\": [\n";
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    const auto& c = t.classes[k];
    out << "    {\"size\": " << json_number(c.size) << ", \"order\": " << c.element_order;
    if (!c.label.empty()) out << ", \"label\": " << json(c.label).dump();
    out << "}" << (k + 1 < t.classes.size() ? "," : "") << "\n";
  }
  out << "  ],\n";
  out << "  \"irr\": [\n";
  for (std::size_t i = 0; i < t.irr.size(); ++i) {
    out << "    [";
    for (std::size_t k = 0; k < t.irr[i].size(); ++k) {
      const auto& v = t.irr[i][k];
      if (k > 0) out << ", ";
      out << (v.is_rational() ? json_number(v.rational()) : json(v.to_string()).dump());
    }
    out << "]" << (i + 1 < t.irr.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

std::vector<std::uint64_t> prime_divisors(const CharacterTable& t) {
  std::vector<u64> out;
  for (const auto& [p, e] : nt::factorize(t.order)) out.push_back(static_cast<u64>(p));
  return out;
}

namespace {

struct Matcher {
  const CharacterTable& a;
  const CharacterTable& b;
  std::vector<std::size_t> map;  // column of a -> column of b
  std::vector<bool> used;
  std::vector<std::vector<Cyclotomic>> a_cols, b_cols;  // sorted column multisets

  bool rows_match() const {
    std::vector<std::vector<Cyclotomic>> ra, rb = b.irr;
    for (const auto& row : a.irr) {
      std::vector<Cyclotomic> r(row.size());
      for (std::size_t k = 0; k < row.size(); ++k) r[map[k]] = row[k];
      ra.push_back(std::move(r));
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  }

  bool search(std::size_t k) {
    if (k == map.size()) return rows_match();
    for (std::size_t l = 0; l < map.size(); ++l) {
      if (used[l]) continue;
      if (a.classes[k].size != b.classes[l].size || a.classes[k].element_order != b.classes[l].element_order) continue;
      if (a_cols[k] != b_cols[l]) continue;
      used[l] = true;
      map[k] = l;
      if (search(k + 1)) return true;
      used[l] = false;
    }
    return false;
  }
};

std::vector<std::vector<Cyclotomic>> sorted_columns(const CharacterTable& t) {
  std::vector<std::vector<Cyclotomic>> cols(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (const auto& row : t.irr) cols[k].push_back(row[k]);
    std::sort(cols[k].begin(), cols[k].end());
  }
  return cols;
}

}  // namespace

bool tables_equivalent(const CharacterTable& a, const CharacterTable& b) {
  if (a.order != b.order || a.size() != b.size() || a.irr.size() != b.irr.size()) return false;
  Matcher m{a, b, std::vector<std::size_t>(a.size()), std::vector<bool>(a.size(), false), sorted_columns(a),
            sorted_columns(b)};
  return m.search(0);
}

}  // namespace blockgraph
