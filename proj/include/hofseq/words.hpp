#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hofseq/numeration.hpp"

namespace hofseq {

/// Word over the alphabet {1..k}.
using Word = std::vector<std::uint32_t>;

/// The substitution k -> k 1, i -> i+1 (i < k).
class Substitution {
 public:
  explicit Substitution(unsigned k);
  unsigned k() const { return k_; }

  /// Letterwise image, concatenated. Rejects out-of-alphabet letters.
  Word apply(const Word& w) const;

  /// q-fold application.
  Word apply_power(unsigned q, Word w) const;

 private:
  unsigned k_;
};

/// Lazily materialized prefix of the fixed point x_k (seed letter k).
/// Growth is single-writer; reads of an already materialized range are safe.
class MorphicWord {
 public:
  explicit MorphicWord(unsigned k);
  unsigned k() const { return sub_.k(); }

  /// x_k[n]
  std::uint32_t letter(std::size_t n);

  /// First n letters; the span is invalidated by later growth.
  std::span<const std::uint32_t> prefix(std::size_t n);

 private:
  Substitution sub_;
  Word buf_;
};

/// Cache of the images tau_k^j(k), extended on demand.
class SubstImageCache {
 public:
  explicit SubstImageCache(unsigned k);
  unsigned k() const { return sub_.k(); }
  const Word& image(std::size_t j);

 private:
  Substitution sub_;
  std::vector<Word> images_;
};

/// W_k(D) = tau^{p_m}(k) ... tau^{p_0}(k), highest position first;
/// its length equals the decomposition's sum.
Word word_of_decomp(const Decomp& d, SubstImageCache& cache);
Word word_of_decomp(const Decomp& d);

/// |tau_k(x_k[0:n))|, which equals L_k(n): each letter contributes one,
/// plus one more per occurrence of the letter k.
std::uint64_t substituted_prefix_length(MorphicWord& w, std::uint64_t n);

/// Letters joined as decimal digit characters (letters above 9 rejected;
/// the library itself puts no cap on k, this is display-only).
std::string render_word(std::span<const std::uint32_t> w);

}  // namespace hofseq
