#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgt/word.hpp"

namespace cgt {

// Canonical normal form: equal group elements always produce identical
// values. `word` is the canonical representative; the remaining fields are a
// shape certificate for the oracle kind that produced it.
struct NormalForm {
  Word word;
  std::string kind;
  // Central/edge power c^t for amalgam kinds; 0 otherwise.
  Int central = 0;
  // Alternating syllable count (amalgams) or stable-letter count (bs).
  long alternating = 0;

  bool trivial() const { return word.empty(); }
};

// A word-problem solver for one group. nf is pure and idempotent:
// nf(nf(w).word) == nf(w).
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual NormalForm nf(const Word& w) const = 0;
  virtual std::vector<Gen> generators() const = 0;
  virtual std::string describe() const = 0;

  bool is_trivial(const Word& w) const { return nf(w).trivial(); }
  bool equal(const Word& a, const Word& b) const {
    return is_trivial(a * b.inv());
  }
};

using OraclePtr = std::shared_ptr<const Oracle>;

class FreeOracle final : public Oracle {
 public:
  explicit FreeOracle(std::vector<Gen> gens);
  NormalForm nf(const Word& w) const override;
  std::vector<Gen> generators() const override { return gens_; }
  std::string describe() const override;

 private:
  std::vector<Gen> gens_;
};

// Word problem of <stable, base | stable base^m stable^-1 = base^n> via
// Britton reduction to the canonical form
//   base^a0 stable^e1 base^a1 ... stable^ek base^ak
// where 0 <= ai < m after stable^{+1} and 0 <= ai < n after stable^{-1}
// (the trailing exponent included; the leading one is unconstrained).
class BsOracle final : public Oracle {
 public:
  BsOracle(long m, long n, Gen stable = Gen("x"), Gen base = Gen("y"));
  NormalForm nf(const Word& w) const override;
  std::vector<Gen> generators() const override { return {stable_, base_}; }
  std::string describe() const override;

  long m() const { return m_; }
  long n() const { return n_; }
  const Gen& stable() const { return stable_; }
  const Gen& base() const { return base_; }

 private:
  long m_, n_;
  Gen stable_, base_;
};

// Word problem of <a, b | a^m = b^n>. Normal form: c^t s1 s2 ... sk with
// c = a^m = b^n central and the si alternating between a^r (0 < r < |m|)
// and b^s (0 < s < |n|); rendered as a word with c^t written as b^(nt).
// Negative m or n is normalized at construction by inverting the generator.
class CyclicAmalgamOracle final : public Oracle {
 public:
  CyclicAmalgamOracle(Gen a, Gen b, long m, long n);
  NormalForm nf(const Word& w) const override;
  std::vector<Gen> generators() const override { return {a_, b_}; }
  std::string describe() const override;

  const Gen& a() const { return a_; }
  const Gen& b() const { return b_; }
  long m() const { return m_; }  // normalized, positive
  long n() const { return n_; }
  long signed_m() const { return inv_a_ ? -m_ : m_; }  // as constructed
  long signed_n() const { return inv_b_ ? -n_ : n_; }

 private:
  Gen a_, b_;
  long m_, n_;
  bool inv_a_ = false, inv_b_ = false;
};

// Word problem of the chain of amalgams <u_i | u_{i+1}^q = u_i^p> over the
// finite index window [lo, hi], computed by recursive splitting
//   G[lo, h] = G[lo, h-1] *_C <u_h>,   C = <u_{h-1}^p> = <u_h^q>.
// Words mentioning indices outside the window raise a window-exceeded error.
class ChainAmalgamOracle final : public Oracle {
 public:
  ChainAmalgamOracle(std::string family, long p, long q, long lo, long hi);
  NormalForm nf(const Word& w) const override;
  std::vector<Gen> generators() const override;
  std::string describe() const override;

  const std::string& family() const { return family_; }
  long p() const { return p_; }
  long q() const { return q_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  Gen gen_at(long i) const { return Gen(family_, i); }

  struct Form;  // recursive normal form, defined in the implementation

 private:
  std::string family_;
  long p_, q_, lo_, hi_;
};

// Views words over `gens` as elements of the inner oracle's group by
// substituting `images`; normal forms are the inner oracle's.
class ImageOracle final : public Oracle {
 public:
  ImageOracle(OraclePtr inner, std::vector<Gen> gens,
              std::map<Gen, Word> images);
  NormalForm nf(const Word& w) const override;
  std::vector<Gen> generators() const override { return gens_; }
  std::string describe() const override;

  const OraclePtr& inner() const { return inner_; }
  const std::map<Gen, Word>& images() const { return images_; }

 private:
  OraclePtr inner_;
  std::vector<Gen> gens_;
  std::map<Gen, Word> images_;
};

// Returns t with w = g^(k t) in the group, or nullopt when w is not in the
// cyclic subgroup generated by g^k. g must be a single designated generator
// of the oracle (vertex generator of an amalgam, or either BS generator);
// k must be positive.
std::optional<Int> in_cyclic_subgroup(const Oracle& o, const Word& w,
                                      const Word& g, const Int& k);

// Checks a subgroup-membership witness: the witness word is written in
// abstract letters; its distinct letters, in order of first appearance, are
// mapped to sub_gens[0], sub_gens[1], ... and the substituted word is
// compared with target under the oracle. More distinct letters than
// sub_gens entries is an arity-mismatch error.
bool witness_generation(const Oracle& o, const Word& target,
                        const std::vector<Word>& sub_gens,
                        const Word& witness);

// Descriptors: "free:x,y", "bs:2,3[:x,y]", "amalgam:3,2[:a,b]",
// "chain:3,2:0..4[:u]".
OraclePtr parse_group_descriptor(const std::string& desc);

}  // namespace cgt
