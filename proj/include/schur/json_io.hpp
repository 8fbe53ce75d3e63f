#ifndef SCHUR_JSON_IO_HPP
#define SCHUR_JSON_IO_HPP

#include <fstream>
#include <string>

#include "json.hpp"
#include "schur/algebroid.hpp"
#include "schur/demazure.hpp"

namespace schur {

using nlohmann::json;
// ordered_json keeps insertion order so CLI output stays byte-stable in the
// documented field order
using ojson = nlohmann::ordered_json;

inline ojson laurent_to_json(const Laurent& f) {
  ojson j = ojson::object();
  for (const auto& [e, c] : f.terms()) {
    if (c.fits_slong_p())
      j[std::to_string(e)] = c.get_si();
    else
      j[std::to_string(e)] = c.get_str();
  }
  return j;
}

inline Laurent laurent_from_json(const json& j) {
  Laurent f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = std::stoi(it.key());
    if (it.value().is_string())
      f += Laurent(mpz_class(it.value().get<std::string>()), e);
    else
      f += Laurent(mpz_class(it.value().get<long>()), e);
  }
  return f;
}

inline ojson hecke_to_json(const CoxeterSystem& sys, const HeckeElt& h) {
  ojson j = ojson::object();
  for (const auto& [w, c] : h.terms()) j[sys.word_str(w)] = laurent_to_json(c);
  return j;
}

inline ojson coset_to_json(const CoxeterSystem& sys, const CosetData& p) {
  ojson j;
  j["I"] = sys.gen_labels(p.I);
  j["J"] = sys.gen_labels(p.J);
  j["p_min"] = sys.word_str(p.pmin);
  j["p_max"] = sys.word_str(p.pmax);
  j["size"] = p.size();
  return j;
}

inline ojson schur_to_json(const CoxeterSystem& sys, const SchurElt& f) {
  ojson j;
  j["I"] = sys.gen_labels(f.left());
  j["J"] = sys.gen_labels(f.right());
  ojson terms = ojson::array();
  for (const auto& [pmin, c] : f.terms()) {
    ojson t;
    t["p_min"] = sys.word_str(pmin);
    t["coeff"] = laurent_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline ojson rx_to_json(const CoxeterSystem& sys, const RXElt& f) {
  ojson j = ojson::object();
  for (size_t i = 0; i < f.X().size(); ++i)
    j[sys.word_str(f.X()[i])] = f.components()[i].str();
  return j;
}

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

/* ----- persistent KL cache: header + "(x|w)" -> Laurent text ----- */

inline constexpr int kCacheFormatVersion = 1;

struct CacheStatus {
  bool loaded = false;
  bool version_mismatch = false;
  bool spec_mismatch = false;
  long entries = 0;
};

inline CacheStatus load_kl_cache(const std::string& path, const CoxeterSystem& sys,
                                 const HeckeAlgebra& hecke) {
  CacheStatus st;
  std::ifstream in(path);
  if (!in) return st;
  json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    st.version_mismatch = true;  // unreadable counts as a format mismatch
    return st;
  }
  if (!j.contains("header") || j["header"].value("format_version", -1) != kCacheFormatVersion) {
    st.version_mismatch = true;
    return st;
  }
  if (j["header"].value("spec_hash", "") != fnv1a_hex(sys.spec().canonical())) {
    st.spec_mismatch = true;
    return st;
  }
  std::map<Element, HeckeElt> rows;
  for (auto it = j["entries"].begin(); it != j["entries"].end(); ++it) {
    const std::string key = it.key();
    auto bar = key.find('|');
    if (bar == std::string::npos) continue;
    Element x = sys.parse(key.substr(0, bar));
    Element w = sys.parse(key.substr(bar + 1));
    auto [slot, fresh] = rows.try_emplace(w, HeckeElt(&sys));
    slot->second.add(x, Laurent::parse(it.value().get<std::string>()));
    ++st.entries;
  }
  for (const auto& [w, h] : rows) hecke.preload_kl(w, h);
  st.loaded = true;
  return st;
}

inline void save_kl_cache(const std::string& path, const CoxeterSystem& sys,
                          const HeckeAlgebra& hecke) {
  ojson entries = ojson::object();
  for (const auto& [w, h] : hecke.kl_cache_snapshot()) {
    std::string wword = sys.word_str(w);
    for (const auto& [x, c] : h.terms())
      entries[sys.word_str(x) + "|" + wword] = c.str();
  }
  ojson j;
  j["header"] = {{"format_version", kCacheFormatVersion},
                 {"spec_hash", fnv1a_hex(sys.spec().canonical())}};
  j["entries"] = std::move(entries);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace schur

#endif
