#include "typlab/cantor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "typlab/error.hpp"

namespace typlab {

namespace {

bool is_bits(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Shortest period of the purely periodic tail p p p ...: the least divisor d
// of |p| with p = (p[0..d))^(|p|/d).
std::string minimal_period(const std::string& p) {
  for (std::size_t d = 1; d <= p.size(); ++d) {
    if (p.size() % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p.size() && ok; ++i) ok = p[i] == p[i - d];
    if (ok) return p.substr(0, d);
  }
  return p;
}

}  // namespace

EPStream::EPStream() : pre_(""), per_("0") {}

EPStream EPStream::from_words(std::string preperiod, std::string period) {
  if (period.empty()) throw Error("stream period must be nonempty");
  if (!is_bits(preperiod) || !is_bits(period)) throw Error("stream words must be over 0/1");
  std::string per = minimal_period(period);
  std::string pre = std::move(preperiod);
  // absorbing the last preperiod bit into a rotated period preserves the
  // stream; repeat while possible to minimize the preperiod
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per = per.back() + per.substr(0, per.size() - 1);
  }
  EPStream out;
  out.pre_ = std::move(pre);
  out.per_ = std::move(per);
  return out;
}

EPStream EPStream::from_finite_set(const std::vector<std::uint64_t>& elems) {
  if (elems.empty()) return EPStream();
  std::uint64_t top = *std::max_element(elems.begin(), elems.end());
  if (top > 1 << 20) throw Error("finite-set stream element too large");
  std::string pre(top + 1, '0');
  for (std::uint64_t e : elems) pre[e] = '1';
  return from_words(std::move(pre), "0");
}

EPStream EPStream::all_ones() { return from_words("", "1"); }

EPStream EPStream::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (!t.empty() && t.front() == '{') {
    if (t.back() != '}') throw Error("unterminated finite-set literal");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<std::uint64_t> elems;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw Error("empty element in finite-set literal");
      elems.push_back(std::stoull(cur));
      cur.clear();
    };
    for (char c : body) {
      if (c == ',') flush();
      else if (c >= '0' && c <= '9') cur += c;
      else throw Error(std::string("bad character '") + c + "' in finite-set literal");
    }
    if (!cur.empty()) flush();
    else if (!body.empty()) throw Error("trailing comma in finite-set literal");
    return from_finite_set(elems);
  }
  std::string pre, per;
  bool have_per = false;
  std::string cur;
  auto handle = [&](const std::string& field) {
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw Error("expected pre=... or per=...");
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "pre") pre = val;
    else if (key == "per") per = val, have_per = true;
    else throw Error("unknown stream field '" + key + "'");
  };
  for (char c : t) {
    if (c == ',') {
      handle(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) handle(cur);
  if (!have_per) throw Error("stream literal needs per=...");
  return from_words(pre, per);
}

bool EPStream::bit(std::uint64_t i) const {
  if (i < pre_.size()) return pre_[i] == '1';
  return per_[(i - pre_.size()) % per_.size()] == '1';
}

std::vector<std::uint64_t> EPStream::as_finite_set() const {
  if (!is_finite_set()) throw Error("stream does not denote a finite set");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < pre_.size(); ++i)
    if (pre_[i] == '1') out.push_back(i);
  return out;
}

std::string EPStream::to_text() const {
  if (is_finite_set()) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t e : as_finite_set()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }
  return "pre=" + pre_ + ",per=" + per_;
}

EPStream join(const EPStream& a, const EPStream& b) {
  std::uint64_t pre_len =
      2 * std::max<std::uint64_t>(a.preperiod().size(), b.preperiod().size());
  std::uint64_t per_len =
      2 * std::lcm<std::uint64_t>(a.period().size(), b.period().size());
  auto bit_at = [&](std::uint64_t i) {
    return (i % 2 == 0 ? a.bit(i / 2) : b.bit(i / 2)) ? '1' : '0';
  };
  std::string pre(pre_len, '0'), per(per_len, '0');
  for (std::uint64_t i = 0; i < pre_len; ++i) pre[i] = bit_at(i);
  for (std::uint64_t i = 0; i < per_len; ++i) per[i] = bit_at(pre_len + i);
  return EPStream::from_words(std::move(pre), std::move(per));
}

std::pair<EPStream, EPStream> split(const EPStream& x) {
  // positions 2m (resp. 2m+1) for m >= |pre| repeat with period |per|
  std::uint64_t pre_len = x.preperiod().size();
  std::uint64_t per_len = x.period().size();
  auto half = [&](int offset) {
    std::string pre(pre_len, '0'), per(per_len, '0');
    for (std::uint64_t i = 0; i < pre_len; ++i)
      pre[i] = x.bit(2 * i + offset) ? '1' : '0';
    for (std::uint64_t i = 0; i < per_len; ++i)
      per[i] = x.bit(2 * (pre_len + i) + offset) ? '1' : '0';
    return EPStream::from_words(std::move(pre), std::move(per));
  };
  return {half(0), half(1)};
}

EPStream symmetric_difference(const EPStream& a, const EPStream& b) {
  std::uint64_t pre_len = std::max(a.preperiod().size(), b.preperiod().size());
  std::uint64_t per_len = std::lcm(a.period().size(), b.period().size());
  std::string pre(pre_len, '0'), per(per_len, '0');
  for (std::uint64_t i = 0; i < pre_len; ++i)
    pre[i] = a.bit(i) != b.bit(i) ? '1' : '0';
  for (std::uint64_t i = 0; i < per_len; ++i)
    per[i] = a.bit(pre_len + i) != b.bit(pre_len + i) ? '1' : '0';
  return EPStream::from_words(std::move(pre), std::move(per));
}

bool approx_eq(const EPStream& a, const EPStream& b) {
  return symmetric_difference(a, b).is_finite_set();
}

std::vector<EPStream> tailset_closure(const std::vector<EPStream>& xs, int bound) {
  if (bound < 0 || bound > 20) throw Error("tailset closure bound must be in 0..20");
  std::set<EPStream> out;
  for (const EPStream& x : xs) {
    std::uint64_t count = 1ULL << bound;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::uint64_t len = std::max<std::uint64_t>(bound, x.preperiod().size());
      std::string pre(len, '0');
      for (std::uint64_t i = 0; i < len; ++i)
        pre[i] = (i < static_cast<std::uint64_t>(bound) ? ((mask >> i) & 1) != 0 : x.bit(i))
                     ? '1'
                     : '0';
      std::string per = x.period();
      // rotate the period so it lines up after position len
      std::uint64_t shift = (len - x.preperiod().size()) % per.size();
      per = per.substr(shift) + per.substr(0, shift);
      out.insert(EPStream::from_words(std::move(pre), std::move(per)));
    }
  }
  return {out.begin(), out.end()};
}

std::uint64_t pair_code(std::uint64_t i, std::uint64_t m) {
  std::uint64_t s = i + m;
  return s * (s + 1) / 2 + m;
}

std::pair<std::uint64_t, std::uint64_t> unpair_code(std::uint64_t c) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 2) / 2 <= c) ++s;
  std::uint64_t m = c - s * (s + 1) / 2;
  return {s - m, m};
}

std::vector<std::uint64_t> code_family(const std::vector<std::vector<std::uint64_t>>& sets) {
  std::set<std::uint64_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::uint64_t m : sets[i]) out.insert(pair_code(i, m));
  return {out.begin(), out.end()};
}

std::vector<std::uint64_t> project(const std::vector<std::uint64_t>& code, std::uint64_t i) {
  std::set<std::uint64_t> out;
  for (std::uint64_t c : code) {
    auto [ci, cm] = unpair_code(c);
    if (ci == i) out.insert(cm);
  }
  return {out.begin(), out.end()};
}

Dyadic::Dyadic(std::uint64_t num, int log2_den) : num_(num), k_(log2_den) {
  if (k_ < 0 || k_ > 62) throw Error("dyadic exponent out of range");
  reduce();
}

void Dyadic::reduce() {
  while (k_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --k_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int k = std::max(k_, o.k_);
  if (k > 62) throw Error("dyadic exponent out of range");
  std::uint64_t a = num_ << (k - k_);
  std::uint64_t b = o.num_ << (k - o.k_);
  return Dyadic(a + b, k);
}

std::string Dyadic::to_text() const {
  if (num_ == 0) return "0";
  if (k_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(1ULL << k_);
}

CylinderFamily::CylinderFamily(std::vector<std::string> words) {
  for (const std::string& w : words) {
    if (w.empty()) {
      // [empty word] is the whole space and covers everything
      words_ = {""};
      return;
    }
    if (!is_bits(w)) throw Error("cylinder word must be over 0/1");
    if (w.size() > 62) throw Error("cylinder word too long");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const std::string& w : words) {
    bool covered = false;
    for (const std::string& shorter : words_) {
      if (shorter.size() < w.size() && w.compare(0, shorter.size(), shorter) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) words_.push_back(w);
  }
  std::sort(words_.begin(), words_.end());
}

CylinderFamily schnorr_test_level(int n) {
  if (n < 0 || n > 30) throw Error("schnorr level must be in 0..30");
  std::vector<std::string> words;
  std::uint64_t count = 1ULL << (n + 1);
  for (std::uint64_t m = 0; m < count; ++m) {
    std::string w(2 * n + 2, '0');
    for (int i = 0; i <= n; ++i)
      w[2 * i] = ((m >> (n - i)) & 1) ? '1' : '0';  // odd positions stay 0
    words.push_back(std::move(w));
  }
  return CylinderFamily(std::move(words));
}

Dyadic measure_of(const CylinderFamily& f) {
  Dyadic total;
  for (const std::string& w : f.words()) total = total + Dyadic(1, static_cast<int>(w.size()));
  return total;
}

bool member(const EPStream& x, const CylinderFamily& f) {
  for (const std::string& w : f.words()) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = x.bit(i) == (w[i] == '1');
    if (ok) return true;
  }
  return false;
}

bool capture_check(const EPStream& a, int depth) {
  EPStream joined = join(a, EPStream());
  for (int n = 0; n <= depth; ++n)
    if (!member(joined, schnorr_test_level(n))) return false;
  return true;
}

}  // namespace typlab
