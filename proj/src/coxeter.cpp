#include "schur/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

namespace schur {

using json = nlohmann::json;

/* ---------------- CoxeterSpec ---------------- */

CoxeterSpec CoxeterSpec::type_a(int n) {
  CoxeterSpec s;
  s.kind = Kind::A;
  s.rank = n;
  return s;
}

CoxeterSpec CoxeterSpec::type_b(int n) {
  CoxeterSpec s;
  s.kind = Kind::B;
  s.rank = n;
  return s;
}

CoxeterSpec CoxeterSpec::dihedral(int m) {
  CoxeterSpec s;
  s.kind = Kind::I2;
  s.m = m;
  return s;
}

CoxeterSpec CoxeterSpec::product(std::vector<CoxeterSpec> fs) {
  CoxeterSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(fs);
  return s;
}

int CoxeterSpec::gen_count() const {
  switch (kind) {
    case Kind::A: return rank;
    case Kind::B: return rank;
    case Kind::I2: return 2;
    case Kind::Product: {
      int n = 0;
      for (const auto& f : factors) n += f.gen_count();
      return n;
    }
  }
  return 0;
}

void CoxeterSpec::validate(int gen_cap) const {
  switch (kind) {
    case Kind::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      break;
    case Kind::B:
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      break;
    case Kind::I2:
      if (m < 2) throw std::invalid_argument("dihedral type requires m >= 2");
      break;
    case Kind::Product:
      if (factors.empty()) throw std::invalid_argument("empty product");
      for (const auto& f : factors) {
        if (!f.labels.empty()) throw std::invalid_argument("labels belong on the top-level spec");
        f.validate(gen_cap);
      }
      break;
  }
  int n = gen_count();
  if (n > gen_cap) throw std::invalid_argument("generator count exceeds cap");
  if (!labels.empty()) {
    if ((int)labels.size() != n) throw std::invalid_argument("label count mismatch");
    std::set<std::string> uniq(labels.begin(), labels.end());
    if ((int)uniq.size() != n) throw std::invalid_argument("duplicate generator labels");
  }
}

static json spec_to_json(const CoxeterSpec& s) {
  json j;
  switch (s.kind) {
    case CoxeterSpec::Kind::A: j["type"] = "A"; j["rank"] = s.rank; break;
    case CoxeterSpec::Kind::B: j["type"] = "B"; j["rank"] = s.rank; break;
    case CoxeterSpec::Kind::I2: j["type"] = "I2"; j["m"] = s.m; break;
    case CoxeterSpec::Kind::Product: {
      j["type"] = "product";
      j["factors"] = json::array();
      for (const auto& f : s.factors) j["factors"].push_back(spec_to_json(f));
      break;
    }
  }
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

static CoxeterSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("coxeter spec must be an object with a \"type\" field");
  std::string t = j.at("type").get<std::string>();
  CoxeterSpec s;
  if (t == "A") {
    s = CoxeterSpec::type_a(j.at("rank").get<int>());
  } else if (t == "B") {
    s = CoxeterSpec::type_b(j.at("rank").get<int>());
  } else if (t == "I2") {
    s = CoxeterSpec::dihedral(j.at("m").get<int>());
  } else if (t == "product") {
    std::vector<CoxeterSpec> fs;
    for (const auto& f : j.at("factors")) fs.push_back(spec_from_json(f));
    s = CoxeterSpec::product(std::move(fs));
  } else {
    throw std::invalid_argument("unknown coxeter type: " + t);
  }
  if (j.contains("labels")) s.labels = j.at("labels").get<std::vector<std::string>>();
  return s;
}

std::string CoxeterSpec::to_json() const { return spec_to_json(*this).dump(); }

CoxeterSpec CoxeterSpec::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad spec JSON: ") + e.what());
  }
  return spec_from_json(j);
}

CoxeterSpec CoxeterSpec::parse_shorthand(const std::string& text) {
  std::vector<CoxeterSpec> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nx = text.find('x', pos);
    std::string tok = text.substr(pos, nx == std::string::npos ? nx : nx - pos);
    if (tok.empty()) throw std::invalid_argument("bad type shorthand: " + text);
    char k = tok[0];
    if (k == 'A' || k == 'a') {
      parts.push_back(type_a(std::stoi(tok.substr(1))));
    } else if (k == 'B' || k == 'b') {
      parts.push_back(type_b(std::stoi(tok.substr(1))));
    } else if (k == 'I' || k == 'i') {
      std::string rest = tok.substr(1);
      if (!rest.empty() && rest[0] == '2' && rest.size() > 1 &&
          (rest[1] == ':' || rest[1] == '(')) {
        rest = rest.substr(2);
        if (!rest.empty() && rest.back() == ')') rest.pop_back();
      }
      parts.push_back(dihedral(std::stoi(rest)));
    } else {
      throw std::invalid_argument("bad type shorthand: " + tok);
    }
    if (nx == std::string::npos) break;
    pos = nx + 1;
  }
  if (parts.size() == 1) return parts[0];
  return product(std::move(parts));
}

/* ---------------- CoxeterSystem ---------------- */

void CoxeterSystem::flatten(const CoxeterSpec& s) {
  if (s.kind == CoxeterSpec::Kind::Product) {
    for (const auto& f : s.factors) flatten(f);
    return;
  }
  Factor fa;
  fa.kind = s.kind;
  fa.gen_off = factors_.empty() ? 0 : factors_.back().gen_off + factors_.back().gen_cnt;
  fa.pay_off = factors_.empty() ? 0 : factors_.back().pay_off + factors_.back().pay_cnt;
  switch (s.kind) {
    case CoxeterSpec::Kind::A:
      fa.n = s.rank;
      fa.gen_cnt = s.rank;
      fa.pay_cnt = s.rank + 1;
      break;
    case CoxeterSpec::Kind::B:
      fa.n = s.rank;
      fa.gen_cnt = s.rank;
      fa.pay_cnt = s.rank;
      break;
    case CoxeterSpec::Kind::I2:
      fa.n = s.m;
      fa.gen_cnt = 2;
      fa.pay_cnt = 2;
      break;
    default: break;
  }
  factors_.push_back(fa);
}

CoxeterSystem::CoxeterSystem(CoxeterSpec spec, int gen_cap) : spec_(std::move(spec)) {
  spec_.validate(gen_cap);
  flatten(spec_);
  int ngens = 0, npay = 0;
  for (const auto& f : factors_) {
    ngens += f.gen_cnt;
    npay += f.pay_cnt;
  }
  if (spec_.labels.empty()) {
    for (int i = 0; i < ngens; ++i) labels_.push_back("s" + std::to_string(i + 1));
  } else {
    labels_ = spec_.labels;
  }
  id_pay_.assign(npay, 0);
  for (const auto& f : factors_) {
    switch (f.kind) {
      case CoxeterSpec::Kind::A:
        for (int i = 0; i <= f.n; ++i) id_pay_[f.pay_off + i] = i;
        break;
      case CoxeterSpec::Kind::B:
        for (int i = 0; i < f.n; ++i) id_pay_[f.pay_off + i] = i + 1;
        break;
      case CoxeterSpec::Kind::I2:
        id_pay_[f.pay_off] = 0;       // rotation count
        id_pay_[f.pay_off + 1] = 0;   // reflection flag
        break;
      default: break;
    }
  }
}

int CoxeterSystem::gen_index(const std::string& label) const {
  for (int i = 0; i < (int)labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

const CoxeterSystem::Factor& CoxeterSystem::factor_of_gen(int s) const {
  for (const auto& f : factors_)
    if (s >= f.gen_off && s < f.gen_off + f.gen_cnt) return f;
  throw std::invalid_argument("generator index out of range");
}

/* --- dihedral closed forms: payload (k, flag), flag 0 = rotation by k,
   flag 1 = reflection across the line at angle pi*k/m. --- */

static int i2_len(int m, int k, int flag) {
  if (flag == 0) return std::min(2 * k, 2 * (m - k));
  int a = 2 * (((m - k) % m)) + 1;
  int b = 2 * (((k - 1 + m) % m)) + 1;
  return std::min(a, b);
}

// (k1,f1) * (k2,f2) in O(2).
static void i2_mult(int m, int k1, int f1, int k2, int f2, int& k, int& f) {
  if (f1 == 0 && f2 == 0) { k = (k1 + k2) % m; f = 0; }
  else if (f1 == 0 && f2 == 1) { k = (k1 + k2) % m; f = 1; }
  else if (f1 == 1 && f2 == 0) { k = ((k1 - k2) % m + m) % m; f = 1; }
  else { k = ((k1 - k2) % m + m) % m; f = 0; }
}

void CoxeterSystem::apply_gen_right(std::vector<std::int32_t>& pay, int s) const {
  const Factor& f = factor_of_gen(s);
  int ls = s - f.gen_off;
  switch (f.kind) {
    case CoxeterSpec::Kind::A:
      std::swap(pay[f.pay_off + ls], pay[f.pay_off + ls + 1]);
      break;
    case CoxeterSpec::Kind::B:
      if (ls == 0) pay[f.pay_off] = -pay[f.pay_off];
      else std::swap(pay[f.pay_off + ls - 1], pay[f.pay_off + ls]);
      break;
    case CoxeterSpec::Kind::I2: {
      int k, fl;
      i2_mult(f.n, pay[f.pay_off], pay[f.pay_off + 1], ls, 1, k, fl);
      pay[f.pay_off] = k;
      pay[f.pay_off + 1] = fl;
      break;
    }
    default: break;
  }
}

void CoxeterSystem::apply_gen_left(std::vector<std::int32_t>& pay, int s) const {
  const Factor& f = factor_of_gen(s);
  int ls = s - f.gen_off;
  switch (f.kind) {
    case CoxeterSpec::Kind::A:
      for (int i = 0; i <= f.n; ++i) {
        std::int32_t& v = pay[f.pay_off + i];
        if (v == ls) v = ls + 1;
        else if (v == ls + 1) v = ls;
      }
      break;
    case CoxeterSpec::Kind::B:
      for (int i = 0; i < f.n; ++i) {
        std::int32_t& v = pay[f.pay_off + i];
        if (ls == 0) {
          if (v == 1) v = -1;
          else if (v == -1) v = 1;
        } else {
          if (v == ls) v = ls + 1;
          else if (v == -ls) v = -(ls + 1);
          else if (v == ls + 1) v = ls;
          else if (v == -(ls + 1)) v = -ls;
        }
      }
      break;
    case CoxeterSpec::Kind::I2: {
      int k, fl;
      i2_mult(f.n, ls, 1, pay[f.pay_off], pay[f.pay_off + 1], k, fl);
      pay[f.pay_off] = k;
      pay[f.pay_off + 1] = fl;
      break;
    }
    default: break;
  }
}

std::vector<std::int32_t> CoxeterSystem::payload_mult(
    const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) const {
  std::vector<std::int32_t> r(a.size());
  for (const auto& f : factors_) {
    switch (f.kind) {
      case CoxeterSpec::Kind::A:
        for (int i = 0; i <= f.n; ++i)
          r[f.pay_off + i] = a[f.pay_off + b[f.pay_off + i]];
        break;
      case CoxeterSpec::Kind::B:
        for (int i = 0; i < f.n; ++i) {
          std::int32_t v = b[f.pay_off + i];
          r[f.pay_off + i] = v > 0 ? a[f.pay_off + v - 1] : -a[f.pay_off - v - 1];
        }
        break;
      case CoxeterSpec::Kind::I2: {
        int k, fl;
        i2_mult(f.n, a[f.pay_off], a[f.pay_off + 1], b[f.pay_off], b[f.pay_off + 1], k, fl);
        r[f.pay_off] = k;
        r[f.pay_off + 1] = fl;
        break;
      }
      default: break;
    }
  }
  return r;
}

std::vector<std::int32_t> CoxeterSystem::payload_inverse(
    const std::vector<std::int32_t>& a) const {
  std::vector<std::int32_t> r(a.size());
  for (const auto& f : factors_) {
    switch (f.kind) {
      case CoxeterSpec::Kind::A:
        for (int i = 0; i <= f.n; ++i) r[f.pay_off + a[f.pay_off + i]] = i;
        break;
      case CoxeterSpec::Kind::B:
        for (int i = 0; i < f.n; ++i) {
          std::int32_t v = a[f.pay_off + i];
          if (v > 0) r[f.pay_off + v - 1] = i + 1;
          else r[f.pay_off - v - 1] = -(i + 1);
        }
        break;
      case CoxeterSpec::Kind::I2:
        if (a[f.pay_off + 1] == 1) {
          r[f.pay_off] = a[f.pay_off];
          r[f.pay_off + 1] = 1;
        } else {
          r[f.pay_off] = (f.n - a[f.pay_off]) % f.n;
          r[f.pay_off + 1] = 0;
        }
        break;
      default: break;
    }
  }
  return r;
}

bool CoxeterSystem::payload_right_descent(const std::vector<std::int32_t>& pay, int s) const {
  const Factor& f = factor_of_gen(s);
  int ls = s - f.gen_off;
  switch (f.kind) {
    case CoxeterSpec::Kind::A:
      return pay[f.pay_off + ls] > pay[f.pay_off + ls + 1];
    case CoxeterSpec::Kind::B:
      if (ls == 0) return pay[f.pay_off] < 0;
      return pay[f.pay_off + ls - 1] > pay[f.pay_off + ls];
    case CoxeterSpec::Kind::I2: {
      int k, fl;
      i2_mult(f.n, pay[f.pay_off], pay[f.pay_off + 1], ls, 1, k, fl);
      return i2_len(f.n, k, fl) < i2_len(f.n, pay[f.pay_off], pay[f.pay_off + 1]);
    }
    default: return false;
  }
}

bool CoxeterSystem::payload_left_descent(const std::vector<std::int32_t>& pay, int s) const {
  const Factor& f = factor_of_gen(s);
  switch (f.kind) {
    case CoxeterSpec::Kind::A: {
      // position of value ls after position of value ls+1
      int ls = s - f.gen_off, pi = -1, pj = -1;
      for (int i = 0; i <= f.n; ++i) {
        if (pay[f.pay_off + i] == ls) pi = i;
        else if (pay[f.pay_off + i] == ls + 1) pj = i;
      }
      return pi > pj;
    }
    case CoxeterSpec::Kind::B: {
      int ls = s - f.gen_off;
      if (ls == 0) {
        for (int i = 0; i < f.n; ++i)
          if (pay[f.pay_off + i] == 1 || pay[f.pay_off + i] == -1)
            return pay[f.pay_off + i] < 0;
        return false;
      }
      // w^{-1}(ls) > w^{-1}(ls+1) as signed integers
      int wi = 0, wj = 0;
      for (int i = 0; i < f.n; ++i) {
        std::int32_t v = pay[f.pay_off + i];
        if (v == ls) wi = i + 1;
        else if (v == -ls) wi = -(i + 1);
        else if (v == ls + 1) wj = i + 1;
        else if (v == -(ls + 1)) wj = -(i + 1);
      }
      return wi > wj;
    }
    case CoxeterSpec::Kind::I2: {
      int ls = s - f.gen_off;
      int k, fl;
      i2_mult(f.n, ls, 1, pay[f.pay_off], pay[f.pay_off + 1], k, fl);
      return i2_len(f.n, k, fl) < i2_len(f.n, pay[f.pay_off], pay[f.pay_off + 1]);
    }
    default: return false;
  }
}

Element CoxeterSystem::seal(std::vector<std::int32_t> pay) const {
  Element e;
  e.pay_ = std::move(pay);
  // ShortLex word: repeatedly strip the smallest left descent.
  std::vector<std::int32_t> cur = e.pay_;
  const int n = num_gens();
  while (true) {
    int s = -1;
    for (int i = 0; i < n; ++i)
      if (payload_left_descent(cur, i)) { s = i; break; }
    if (s < 0) break;
    e.word_.push_back(s);
    apply_gen_left(cur, s);
  }
  if (cur != id_pay_)
    throw std::logic_error("descent stripping did not reach the identity");
  e.len_ = (int)e.word_.size();
  return e;
}

Element CoxeterSystem::identity() const { return seal(id_pay_); }

Element CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= num_gens()) throw std::invalid_argument("generator index out of range");
  auto pay = id_pay_;
  apply_gen_right(pay, s);
  return seal(std::move(pay));
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
  if (a.payload().size() != id_pay_.size() || b.payload().size() != id_pay_.size())
    throw std::invalid_argument("element does not belong to this system");
  return seal(payload_mult(a.payload(), b.payload()));
}

Element CoxeterSystem::multiply_gen_right(const Element& a, int s) const {
  auto pay = a.payload();
  apply_gen_right(pay, s);
  return seal(std::move(pay));
}

Element CoxeterSystem::multiply_gen_left(int s, const Element& a) const {
  auto pay = a.payload();
  apply_gen_left(pay, s);
  return seal(std::move(pay));
}

Element CoxeterSystem::inverse(const Element& a) const {
  return seal(payload_inverse(a.payload()));
}

bool CoxeterSystem::right_descent(const Element& a, int s) const {
  return payload_right_descent(a.payload(), s);
}

bool CoxeterSystem::left_descent(const Element& a, int s) const {
  return payload_left_descent(a.payload(), s);
}

GenSet CoxeterSystem::right_descents(const Element& a) const {
  GenSet r;
  for (int s = 0; s < num_gens(); ++s)
    if (payload_right_descent(a.payload(), s)) r = r.with(s);
  return r;
}

GenSet CoxeterSystem::left_descents(const Element& a) const {
  GenSet r;
  for (int s = 0; s < num_gens(); ++s)
    if (payload_left_descent(a.payload(), s)) r = r.with(s);
  return r;
}

bool CoxeterSystem::bruhat_leq(const Element& x0, const Element& w0) const {
  // lifting: for ws < w, x <= w iff min(x, xs) <= ws
  Element x = x0, w = w0;
  while (true) {
    if (x.length() > w.length()) return false;
    if (x == w) return true;
    if (w.is_identity()) return false;
    int s = -1;
    for (int i = 0; i < num_gens(); ++i)
      if (payload_right_descent(w.payload(), i)) { s = i; break; }
    w = multiply_gen_right(w, s);
    if (payload_right_descent(x.payload(), s)) x = multiply_gen_right(x, s);
  }
}

mpz_class CoxeterSystem::group_order() const {
  mpz_class n = 1;
  for (const auto& f : factors_) {
    switch (f.kind) {
      case CoxeterSpec::Kind::A: {
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), f.n + 1);
        n *= fac;
        break;
      }
      case CoxeterSpec::Kind::B: {
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), f.n);
        mpz_class two = 1;
        two <<= f.n;
        n *= fac * two;
        break;
      }
      case CoxeterSpec::Kind::I2:
        n *= 2 * f.n;
        break;
      default: break;
    }
  }
  return n;
}

static constexpr long kEnumerationGuard = 2000000;

const std::vector<Element>& CoxeterSystem::all_elements() const {
  std::call_once(elems_once_, [&] {
    if (group_order() > kEnumerationGuard)
      throw std::invalid_argument("group too large to enumerate");
    std::set<Element> seen;
    std::deque<Element> queue;
    Element e = identity();
    seen.insert(e);
    queue.push_back(e);
    while (!queue.empty()) {
      Element cur = queue.front();
      queue.pop_front();
      for (int s = 0; s < num_gens(); ++s) {
        Element nxt = multiply_gen_right(cur, s);
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
    elems_.assign(seen.begin(), seen.end());
  });
  return elems_;
}

const std::vector<Element>& CoxeterSystem::reflections() const {
  std::call_once(refl_once_, [&] {
    std::set<Element> seen;
    std::deque<Element> queue;
    for (int s = 0; s < num_gens(); ++s) {
      Element g = generator(s);
      if (seen.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
      Element t = queue.front();
      queue.pop_front();
      for (int s = 0; s < num_gens(); ++s) {
        Element c = multiply_gen_left(s, multiply_gen_right(t, s));
        if (seen.insert(c).second) queue.push_back(c);
      }
    }
    refl_.assign(seen.begin(), seen.end());
  });
  return refl_;
}

Element CoxeterSystem::longest_element(GenSet I) const {
  Element w = identity();
  while (true) {
    int up = -1;
    for (int s = 0; s < num_gens(); ++s)
      if (I.contains(s) && !payload_right_descent(w.payload(), s)) { up = s; break; }
    if (up < 0) return w;
    w = multiply_gen_right(w, up);
  }
}

bool CoxeterSystem::in_parabolic(const Element& a, GenSet I) const {
  for (int s : a.word())
    if (!I.contains(s)) return false;
  return true;
}

const std::vector<Element>& CoxeterSystem::parabolic_elements(GenSet I) const {
  std::lock_guard<std::mutex> lock(parab_mu_);
  auto it = parab_.find(I);
  if (it != parab_.end()) return it->second;
  std::set<Element> seen;
  std::deque<Element> queue;
  Element e = identity();
  seen.insert(e);
  queue.push_back(e);
  long guard = 0;
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    for (int s : I.members()) {
      Element nxt = multiply_gen_right(cur, s);
      if (seen.insert(nxt).second) {
        queue.push_back(nxt);
        if (++guard > kEnumerationGuard)
          throw std::invalid_argument("parabolic subgroup too large to enumerate");
      }
    }
  }
  auto& slot = parab_[I];
  slot.assign(seen.begin(), seen.end());
  return slot;
}

std::pair<Laurent, Laurent> CoxeterSystem::poincare_parabolic(GenSet I) const {
  const auto& elems = parabolic_elements(I);
  Laurent pt;
  int top = 0;
  for (const auto& x : elems) {
    pt += Laurent::v(-2 * x.length());
    top = std::max(top, x.length());
  }
  return {pt, pt.shifted(top)};
}

int CoxeterSystem::model_length(const Element& a) const {
  int len = 0;
  const auto& pay = a.payload();
  for (const auto& f : factors_) {
    switch (f.kind) {
      case CoxeterSpec::Kind::A:
        for (int i = 0; i <= f.n; ++i)
          for (int j = i + 1; j <= f.n; ++j)
            if (pay[f.pay_off + i] > pay[f.pay_off + j]) ++len;
        break;
      case CoxeterSpec::Kind::B: {
        // inversions plus the negative-entry statistic
        for (int i = 0; i < f.n; ++i)
          for (int j = i + 1; j < f.n; ++j)
            if (pay[f.pay_off + i] > pay[f.pay_off + j]) ++len;
        for (int i = 0; i < f.n; ++i)
          if (pay[f.pay_off + i] < 0) len += -pay[f.pay_off + i];
        break;
      }
      case CoxeterSpec::Kind::I2:
        len += i2_len(f.n, pay[f.pay_off], pay[f.pay_off + 1]);
        break;
      default: break;
    }
  }
  return len;
}

std::string CoxeterSystem::word_str(const Element& a) const {
  if (a.is_identity()) return "e";
  std::string r;
  for (size_t i = 0; i < a.word().size(); ++i) {
    if (i) r += '.';
    r += labels_[a.word()[i]];
  }
  return r;
}

Element CoxeterSystem::from_word(const std::vector<int>& word) const {
  auto pay = id_pay_;
  for (int s : word) {
    if (s < 0 || s >= num_gens()) throw std::invalid_argument("generator index out of range");
    apply_gen_right(pay, s);
  }
  return seal(std::move(pay));
}

Element CoxeterSystem::parse(const std::string& word) const {
  if (word.empty() || word == "e") return identity();
  std::vector<int> idx;
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    int i = gen_index(tok);
    if (i < 0) throw std::invalid_argument("unknown generator label: " + tok);
    idx.push_back(i);
  }
  return from_word(idx);
}

std::string CoxeterSystem::gens_str(GenSet I) const {
  std::string r;
  for (int s : I.members()) {
    if (!r.empty()) r += ',';
    r += labels_[s];
  }
  return r;
}

GenSet CoxeterSystem::parse_gens(const std::string& csv) const {
  GenSet r;
  if (csv.empty() || csv == "e") return r;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    int i = gen_index(tok);
    if (i < 0) throw std::invalid_argument("unknown generator label: " + tok);
    r = r.with(i);
  }
  return r;
}

std::vector<std::string> CoxeterSystem::gen_labels(GenSet I) const {
  std::vector<std::string> r;
  for (int s : I.members()) r.push_back(labels_[s]);
  return r;
}

}  // namespace schur
