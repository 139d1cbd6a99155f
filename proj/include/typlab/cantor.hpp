#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace typlab {

// An infinite 0/1 stream u . p p p ... in canonical form: the period is the
// shortest possible and the preperiod the shortest for that period. Finite
// subsets of the naturals are the streams with period "0". Equality on
// canonical forms is stream equality.
class EPStream {
 public:
  EPStream();  // the empty set (all zeros)

  // Words over '0'/'1'; canonicalizes. The period must be nonempty.
  static EPStream from_words(std::string preperiod, std::string period);
  static EPStream from_finite_set(const std::vector<std::uint64_t>& elems);
  static EPStream all_ones();

  // "pre=101,per=0", "per=10", or finite-set form "{0,3,4}" / "{}".
  static EPStream parse(const std::string& text);

  bool bit(std::uint64_t i) const;
  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return per_; }

  bool is_finite_set() const { return per_ == "0"; }
  std::vector<std::uint64_t> as_finite_set() const;  // Error unless finite

  std::string to_text() const;

  bool operator==(const EPStream&) const = default;
  // Lexicographic on (preperiod, period); a deterministic total order.
  bool operator<(const EPStream& o) const {
    return pre_ != o.pre_ ? pre_ < o.pre_ : per_ < o.per_;
  }

 private:
  std::string pre_, per_;
};

// a(+)b: bit a(n) at position 2n, bit b(n) at position 2n+1. The canonical
// period length divides 2*lcm(|per a|, |per b|).
EPStream join(const EPStream& a, const EPStream& b);

// Unique decomposition x = (x)_0 (+) (x)_1; inverse of join.
std::pair<EPStream, EPStream> split(const EPStream& x);

EPStream symmetric_difference(const EPStream& a, const EPStream& b);

// True iff a and b differ at finitely many positions.
bool approx_eq(const EPStream& a, const EPStream& b);

// All streams differing from a member of xs only at positions < bound,
// canonical, deduplicated, sorted. bound <= 20.
std::vector<EPStream> tailset_closure(const std::vector<EPStream>& xs, int bound);

// Cantor pairing (i+m)(i+m+1)/2 + m, 0-based.
std::uint64_t pair_code(std::uint64_t i, std::uint64_t m);
std::pair<std::uint64_t, std::uint64_t> unpair_code(std::uint64_t c);

// c = { <i,m> : m in sets[i] } and its projections (c)_i.
std::vector<std::uint64_t> code_family(const std::vector<std::vector<std::uint64_t>>& sets);
std::vector<std::uint64_t> project(const std::vector<std::uint64_t>& code, std::uint64_t i);

// Exact dyadic rational p/2^k, reduced.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::uint64_t num, int log2_den);

  std::uint64_t num() const { return num_; }
  int log2_den() const { return k_; }

  Dyadic operator+(const Dyadic& o) const;
  bool operator==(const Dyadic&) const = default;

  std::string to_text() const;  // "1/16", "3/4", "0", "1"

 private:
  void reduce();
  std::uint64_t num_ = 0;
  int k_ = 0;
};

// Finite union of basic clopen sets [w], stored canonical: duplicate words
// removed and any word with a proper prefix in the family dropped (its
// cylinder is covered), leaving a prefix-free family sorted lexicographically.
class CylinderFamily {
 public:
  CylinderFamily() = default;
  explicit CylinderFamily(std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }
  bool empty() const { return words_.empty(); }

 private:
  std::vector<std::string> words_;
};

// Level n of the test capturing streams that vanish on odd positions:
// the 2^(n+1) disjoint words i_0 0 i_1 0 ... i_n 0 of length 2n+2.
CylinderFamily schnorr_test_level(int n);

// Exact measure: sum of 2^-|w| over the prefix-free family.
Dyadic measure_of(const CylinderFamily& f);

// True iff some word of the family is a prefix of x.
bool member(const EPStream& x, const CylinderFamily& f);

// member(join(a, empty), schnorr_test_level(n)) for every n <= depth.
bool capture_check(const EPStream& a, int depth);

}  // namespace typlab
